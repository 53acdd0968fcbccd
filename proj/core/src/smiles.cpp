#include "synthkit/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace synthkit {

namespace {

bool is_aromatic_symbol(char c) {
  return c == 'c' || c == 'n' || c == 'o' || c == 's';
}

struct RingOpening {
  int atom;
  std::optional<BondOrder> order;
  size_t position;
};

BondOrder default_order(const Atom& a, const Atom& b) {
  return (a.aromatic && b.aromatic) ? BondOrder::Aromatic : BondOrder::Single;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Molecule run() {
    if (text_.empty()) throw SyntaxError("empty SMILES", 0);
    while (i_ < text_.size()) step();
    if (!open_rings_.empty())
      throw SyntaxError("unclosed ring bond", open_rings_.begin()->second.position);
    if (!branch_stack_.empty())
      throw SyntaxError("unclosed branch", text_.size());
    if (pending_order_)
      throw SyntaxError("dangling bond symbol", text_.size());
    if (atoms_.empty()) throw SyntaxError("no atoms", 0);
    Molecule m(std::move(atoms_), std::move(bonds_));
    m.validate(true);
    return m;
  }

 private:
  void step() {
    char c = text_[i_];
    switch (c) {
      case '-': set_bond(BondOrder::Single); ++i_; return;
      case '=': set_bond(BondOrder::Double); ++i_; return;
      case '#': set_bond(BondOrder::Triple); ++i_; return;
      case ':': set_bond(BondOrder::Aromatic); ++i_; return;
      case '(':
        if (prev_ < 0) throw SyntaxError("branch before any atom", i_);
        branch_stack_.push_back(prev_);
        ++i_;
        return;
      case ')':
        if (branch_stack_.empty()) throw SyntaxError("unmatched ')'", i_);
        if (pending_order_) throw SyntaxError("bond before ')'", i_);
        prev_ = branch_stack_.back();
        branch_stack_.pop_back();
        ++i_;
        return;
      case '.':
        throw UnsupportedFeature("multi-fragment SMILES ('.') is not supported");
      case '/':
      case '\\':
        throw UnsupportedFeature("stereo bond marks are not supported");
      case '*':
        throw UnsupportedFeature("wildcard atoms are not supported");
      case '%': {
        ++i_;
        if (i_ + 1 >= text_.size() || !std::isdigit(text_[i_]) ||
            !std::isdigit(text_[i_ + 1]))
          throw SyntaxError("'%' needs two digits", i_);
        int num = (text_[i_] - '0') * 10 + (text_[i_ + 1] - '0');
        i_ += 2;
        ring_bond(num);
        return;
      }
      case '[':
        add_atom(parse_bracket_atom());
        return;
      default:
        if (std::isdigit(c)) {
          ++i_;
          ring_bond(c - '0');
          return;
        }
        add_atom(parse_organic_atom());
        return;
    }
  }

  Atom parse_organic_atom() {
    size_t start = i_;
    char c = text_[i_];
    Atom atom;
    if (c == 'C' && i_ + 1 < text_.size() && text_[i_ + 1] == 'l') {
      atom.element = "Cl";
      i_ += 2;
      return atom;
    }
    if (c == 'B' && i_ + 1 < text_.size() && text_[i_ + 1] == 'r') {
      atom.element = "Br";
      i_ += 2;
      return atom;
    }
    if (is_aromatic_symbol(c)) {
      atom.element = std::string(1, std::toupper(c));
      atom.aromatic = true;
      ++i_;
      return atom;
    }
    std::string sym(1, c);
    if (is_supported_element(sym) && std::isupper(c)) {
      atom.element = sym;
      ++i_;
      return atom;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

  Atom parse_bracket_atom() {
    size_t start = i_;
    ++i_;  // '['
    Atom atom;
    if (i_ < text_.size() && std::isdigit(text_[i_]))
      throw UnsupportedFeature("isotope labels are not supported");
    if (i_ >= text_.size()) throw SyntaxError("unterminated bracket atom", start);
    char c = text_[i_];
    if (is_aromatic_symbol(c)) {
      atom.element = std::string(1, std::toupper(c));
      atom.aromatic = true;
      ++i_;
    } else if (std::isupper(c)) {
      std::string sym(1, c);
      if (i_ + 1 < text_.size() && std::islower(text_[i_ + 1]) &&
          is_supported_element(sym + text_[i_ + 1])) {
        sym += text_[i_ + 1];
        ++i_;
      }
      if (!is_supported_element(sym))
        throw SyntaxError("unsupported element '" + sym + "'", start + 1);
      atom.element = sym;
      ++i_;
    } else {
      throw SyntaxError("expected element symbol in bracket", i_);
    }
    if (i_ < text_.size() && text_[i_] == '@')
      throw UnsupportedFeature("stereo centers are not supported");
    if (i_ < text_.size() && text_[i_] == 'H') {
      ++i_;
      int h = 1;
      if (i_ < text_.size() && std::isdigit(text_[i_])) {
        h = 0;
        while (i_ < text_.size() && std::isdigit(text_[i_]))
          h = h * 10 + (text_[i_++] - '0');
      }
      atom.explicit_h = static_cast<uint8_t>(h);
    }
    if (i_ < text_.size() && (text_[i_] == '+' || text_[i_] == '-')) {
      char sign_char = text_[i_];
      int sign = sign_char == '+' ? 1 : -1;
      int magnitude = 1;
      ++i_;
      if (i_ < text_.size() && std::isdigit(text_[i_])) {
        magnitude = 0;
        while (i_ < text_.size() && std::isdigit(text_[i_]))
          magnitude = magnitude * 10 + (text_[i_++] - '0');
      } else {
        while (i_ < text_.size() && text_[i_] == sign_char) {
          ++magnitude;
          ++i_;
        }
      }
      atom.charge = static_cast<int8_t>(sign * magnitude);
    }
    if (i_ < text_.size() && text_[i_] == ':') {
      ++i_;
      if (i_ >= text_.size() || !std::isdigit(text_[i_]))
        throw SyntaxError("expected map number after ':'", i_);
      int map = 0;
      while (i_ < text_.size() && std::isdigit(text_[i_]))
        map = map * 10 + (text_[i_++] - '0');
      if (map <= 0) throw SyntaxError("map index must be positive", start);
      atom.map_index = map;
    }
    if (i_ >= text_.size() || text_[i_] != ']')
      throw SyntaxError("expected ']'", i_);
    ++i_;
    return atom;
  }

  void set_bond(BondOrder o) {
    if (pending_order_) throw SyntaxError("two bond symbols in a row", i_);
    if (prev_ < 0) throw SyntaxError("bond before any atom", i_);
    pending_order_ = o;
  }

  void add_atom(Atom atom) {
    int idx = static_cast<int>(atoms_.size());
    atoms_.push_back(std::move(atom));
    if (prev_ >= 0) {
      BondOrder o = pending_order_ ? *pending_order_
                                   : default_order(atoms_[prev_], atoms_[idx]);
      bonds_.push_back({prev_, idx, o});
    }
    pending_order_.reset();
    prev_ = idx;
  }

  void ring_bond(int num) {
    if (prev_ < 0) throw SyntaxError("ring closure before any atom", i_);
    auto it = open_rings_.find(num);
    if (it == open_rings_.end()) {
      open_rings_[num] = {prev_, pending_order_, i_};
      pending_order_.reset();
      return;
    }
    RingOpening open = it->second;
    open_rings_.erase(it);
    if (open.atom == prev_) throw SyntaxError("ring bond to same atom", i_);
    if (open.order && pending_order_ && *open.order != *pending_order_)
      throw SyntaxError("conflicting ring bond orders", i_);
    BondOrder o = open.order ? *open.order
                 : pending_order_
                     ? *pending_order_
                     : default_order(atoms_[open.atom], atoms_[prev_]);
    pending_order_.reset();
    for (const Bond& b : bonds_) {
      if ((b.a == open.atom && b.b == prev_) || (b.a == prev_ && b.b == open.atom))
        throw SyntaxError("ring closure duplicates an existing bond", i_);
    }
    bonds_.push_back({open.atom, prev_, o});
  }

  const std::string& text_;
  size_t i_ = 0;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  int prev_ = -1;
  std::optional<BondOrder> pending_order_;
  std::vector<int> branch_stack_;
  std::map<int, RingOpening> open_rings_;
};

}  // namespace

Molecule parse_smiles(const std::string& text) { return Parser(text).run(); }

namespace {

// Dense re-ranking of arbitrary sortable keys. Returns the number of
// distinct keys.
template <typename Key>
int densify(const std::vector<Key>& keys, std::vector<int>* ranks) {
  int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  int rank = 0;
  (*ranks)[order[0]] = 0;
  for (int k = 1; k < n; ++k) {
    if (keys[order[k - 1]] < keys[order[k]]) ++rank;
    (*ranks)[order[k]] = rank;
  }
  return rank + 1;
}

// One refinement sweep to a fixed point: each atom's key is its current rank
// plus the sorted multiset of (bond order, neighbor rank).
int refine(const Molecule& m, std::vector<int>* ranks) {
  int n = m.atom_count();
  int classes = 0;
  {
    std::vector<int> seen(*ranks);
    std::sort(seen.begin(), seen.end());
    classes = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
  }
  for (;;) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> keys(n);
    for (int a = 0; a < n; ++a) {
      keys[a].first = (*ranks)[a];
      for (const auto& [nbr, bi] : m.neighbors(a))
        keys[a].second.emplace_back(static_cast<int>(m.bonds()[bi].order),
                                    (*ranks)[nbr]);
      std::sort(keys[a].second.begin(), keys[a].second.end());
    }
    int next = densify(keys, ranks);
    if (next == classes) return classes;
    classes = next;
  }
}

}  // namespace

std::vector<int> canonical_ranks(const Molecule& m) {
  int n = m.atom_count();
  if (n == 0) return {};
  std::vector<int> ranks(n, 0);
  {
    std::vector<std::tuple<std::string, bool, int, int, int>> keys(n);
    for (int a = 0; a < n; ++a) {
      const Atom& atom = m.atoms()[a];
      keys[a] = {atom.element, atom.aromatic, atom.charge, atom.explicit_h,
                 m.degree(a)};
    }
    densify(keys, &ranks);
  }
  int classes = refine(m, &ranks);
  while (classes < n) {
    // Promote the first atom of the lowest tied class, then refine again.
    int tied_rank = -1;
    std::vector<int> counts(n, 0);
    for (int r : ranks) counts[r]++;
    for (int r = 0; r < n; ++r) {
      if (counts[r] > 1) {
        tied_rank = r;
        break;
      }
    }
    int chosen = -1;
    for (int a = 0; a < n; ++a) {
      if (ranks[a] == tied_rank) {
        chosen = a;
        break;
      }
    }
    std::vector<std::pair<int, int>> keys(n);
    for (int a = 0; a < n; ++a)
      keys[a] = {ranks[a], (a == chosen) ? 0 : 1};
    densify(keys, &ranks);
    classes = refine(m, &ranks);
  }
  return ranks;
}

namespace {

std::string atom_token(const Atom& a) {
  std::string sym = a.element;
  if (a.aromatic) sym[0] = static_cast<char>(std::tolower(sym[0]));
  if (a.charge == 0 && a.explicit_h == 0) return sym;
  std::string out = "[" + sym;
  if (a.explicit_h > 0) {
    out += 'H';
    if (a.explicit_h > 1) out += std::to_string(static_cast<int>(a.explicit_h));
  }
  if (a.charge != 0) {
    out += a.charge > 0 ? '+' : '-';
    int mag = std::abs(static_cast<int>(a.charge));
    if (mag > 1) out += std::to_string(mag);
  }
  out += ']';
  return out;
}

// Bond token preceding an atom or ring-closure digit. Empty when the default
// order can be inferred back by the parser.
std::string bond_token(const Molecule& m, const Bond& b) {
  bool both_aromatic = m.atoms()[b.a].aromatic && m.atoms()[b.b].aromatic;
  switch (b.order) {
    case BondOrder::Single: return both_aromatic ? "-" : "";
    case BondOrder::Aromatic: return both_aromatic ? "" : ":";
    case BondOrder::Double: return "=";
    case BondOrder::Triple: return "#";
  }
  return "";
}

std::string ring_digit(int num) {
  if (num < 10) return std::to_string(num);
  if (num < 100) return "%" + std::to_string(num);
  throw Error("more than 99 simultaneous ring closures");
}

struct Writer {
  const Molecule& m;
  const std::vector<int>& ranks;
  std::vector<bool> visited;
  std::vector<bool> bond_done;
  // bond index -> ring closure number (in canonical discovery order)
  std::map<int, int> ring_numbers;
  int next_ring = 1;
  std::string out;

  Writer(const Molecule& mol, const std::vector<int>& r)
      : m(mol), ranks(r), visited(mol.atom_count(), false),
        bond_done(mol.bond_count(), false) {}

  std::vector<std::pair<int, int>> ordered_neighbors(int a) const {
    auto nbrs = m.neighbors(a);
    std::sort(nbrs.begin(), nbrs.end(), [&](const auto& x, const auto& y) {
      return ranks[x.first] < ranks[y.first];
    });
    return nbrs;
  }

  // First pass: identify ring-closure bonds and number them in the order the
  // closure is opened during the canonical traversal.
  void discover(int a) {
    visited[a] = true;
    for (const auto& [nbr, bi] : ordered_neighbors(a)) {
      if (bond_done[bi]) continue;
      if (visited[nbr]) {
        bond_done[bi] = true;  // back edge: ring closure opened at nbr earlier
        ring_numbers[bi] = next_ring++;
        continue;
      }
      bond_done[bi] = true;
      discover(nbr);
    }
  }

  // Ring closures attached to atom a, ordered by closure number.
  std::vector<std::pair<int, int>> ring_bonds_at(int a) const {
    std::vector<std::pair<int, int>> out;  // (number, bond index)
    for (const auto& [nbr, bi] : m.neighbors(a)) {
      auto it = ring_numbers.find(bi);
      if (it != ring_numbers.end()) out.emplace_back(it->second, bi);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void emit(int a) {
    visited[a] = true;
    out += atom_token(m.atoms()[a]);
    for (const auto& [num, bi] : ring_bonds_at(a)) {
      out += bond_token(m, m.bonds()[bi]);
      out += ring_digit(num);
    }
    std::vector<std::pair<int, int>> children;
    for (const auto& [nbr, bi] : ordered_neighbors(a)) {
      if (!visited[nbr] && !ring_numbers.count(bi)) children.emplace_back(nbr, bi);
    }
    for (size_t k = 0; k < children.size(); ++k) {
      const auto& [child, bi] = children[k];
      bool last = (k + 1 == children.size());
      if (!last) out += '(';
      out += bond_token(m, m.bonds()[bi]);
      emit(child);
      if (!last) out += ')';
    }
  }
};

}  // namespace

std::string write_canonical_smiles(const Molecule& m) {
  if (m.atom_count() == 0) throw Error("cannot write empty molecule");
  std::vector<int> ranks = canonical_ranks(m);
  int start = 0;
  for (int a = 0; a < m.atom_count(); ++a)
    if (ranks[a] == 0) start = a;
  Writer w(m, ranks);
  w.discover(start);
  std::fill(w.visited.begin(), w.visited.end(), false);
  w.emit(start);
  return w.out;
}

}  // namespace synthkit
