#include "synthkit/fingerprint.hpp"

#include <algorithm>
#include <cmath>

#include "synthkit/hash.hpp"

namespace synthkit {

Fingerprint morgan_fingerprint(const Molecule& m, int radius, int nbits) {
  if (radius < 0) throw DimensionError("fingerprint radius must be >= 0");
  if (nbits < 64 || (nbits & (nbits - 1)) != 0)
    throw DimensionError("fingerprint length must be a power of two >= 64");
  int n = m.atom_count();
  Fingerprint fp{BitVec(static_cast<size_t>(nbits)), radius};

  auto base_hasher = [&](int a) {
    const Atom& atom = m.atoms()[a];
    Hasher h;
    h.str(atom.element)
        .i64(atom.charge)
        .i64(m.degree(a))
        .i64(atom.explicit_h)
        .u8(atom.aromatic ? 1 : 0);
    return h;
  };

  std::vector<uint64_t> ids(n), next(n);
  for (int a = 0; a < n; ++a) {
    ids[a] = base_hasher(a).digest();
    fp.bits.set(ids[a] & (nbits - 1));
  }
  for (int r = 1; r <= radius; ++r) {
    for (int a = 0; a < n; ++a) {
      std::vector<std::pair<uint64_t, uint64_t>> nbrs;
      for (const auto& [nbr, bi] : m.neighbors(a))
        nbrs.emplace_back(static_cast<uint64_t>(m.bonds()[bi].order), ids[nbr]);
      std::sort(nbrs.begin(), nbrs.end());
      Hasher h = base_hasher(a);
      h.i64(r);
      for (const auto& [tag, id] : nbrs) h.u64(tag).u64(id);
      next[a] = h.digest();
      fp.bits.set(next[a] & (nbits - 1));
    }
    ids.swap(next);
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.length() != b.length() || a.radius != b.radius)
    throw DimensionError("fingerprint shape mismatch");
  size_t n_and = 0, n_or = 0;
  BitVec::and_or_counts(a.bits, b.bits, &n_and, &n_or);
  if (n_or == 0) return 0.0;
  return static_cast<double>(n_and) / static_cast<double>(n_or);
}

namespace {

template <typename T>
double cosine_impl(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

double cosine(const std::vector<float>& a, const std::vector<float>& b) {
  return cosine_impl(a, b);
}
double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  return cosine_impl(a, b);
}

}  // namespace synthkit
