#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "synthkit/hash.hpp"

namespace synthkit {

// Deterministic random source. std::mt19937_64 has a standard-pinned output
// sequence; the distribution functions below are hand-rolled because the
// standard library distributions are implementation-defined and would break
// the byte-identical-output guarantees.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n) via bitmask rejection.
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t mask = ~0ull >> std::countl_zero(n - 1);
    uint64_t v;
    do {
      v = engine_() & mask;
    } while (v >= n);
    return v;
  }

  size_t index(size_t n) { return static_cast<size_t>(below(n)); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; consumes two uniforms per pair, caches the second.
  double normal(double mean = 0.0, double stddev = 1.0) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + stddev * spare_;
    }
    double u1, u2;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return mean + stddev * r * std::cos(theta);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n), order unspecified but deterministic.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    std::vector<size_t> out;
    out.reserve(k);
    if (k >= n) {
      for (size_t i = 0; i < n; ++i) out.push_back(i);
      return out;
    }
    if (k > n / 16) {  // dense case: partial Fisher-Yates
      std::vector<size_t> idx(n);
      for (size_t i = 0; i < n; ++i) idx[i] = i;
      for (size_t i = 0; i < k; ++i) {
        size_t j = i + index(n - i);
        std::swap(idx[i], idx[j]);
        out.push_back(idx[i]);
      }
      return out;
    }
    std::vector<bool> seen(n, false);  // sparse case: rejection
    while (out.size() < k) {
      size_t v = index(n);
      if (!seen[v]) {
        seen[v] = true;
        out.push_back(v);
      }
    }
    return out;
  }

  // Weighted pick; weights must be nonnegative with positive sum.
  size_t weighted(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double r = uniform() * total;
    double acc = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Derives a subsystem seed from a master seed, so that independent parts of a
// run draw from disjoint streams.
inline uint64_t seed_for(uint64_t master, std::string_view tag,
                         uint64_t index = 0) {
  Hasher h;
  h.u64(master).str(tag).u64(index);
  return h.digest();
}

}  // namespace synthkit
