#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synthkit/errors.hpp"

namespace synthkit {

enum class BondOrder : uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

// Numeric weight of a bond when summing valences. Aromatic counts as 1.5;
// totals are floored afterwards (see Molecule::validate).
inline int bond_valence_halves(BondOrder o) {
  switch (o) {
    case BondOrder::Single: return 2;
    case BondOrder::Double: return 4;
    case BondOrder::Triple: return 6;
    case BondOrder::Aromatic: return 3;
  }
  return 2;
}

struct Atom {
  std::string element;   // B, C, N, O, P, S, F, Cl, Br, I
  int8_t charge = 0;
  bool aromatic = false;
  uint8_t explicit_h = 0;
  int map_index = 0;     // 0 = unmapped; used by reaction rewriting only
};

struct Bond {
  int a = -1;
  int b = -1;
  BondOrder order = BondOrder::Single;
};

bool is_supported_element(const std::string& symbol);
double atomic_mass(const std::string& symbol);  // fixed table, amu

// Maximum allowed valence for an element/charge/aromaticity combination.
// Base maxima: B 3, C 4, N 3, O 2, P 5, S 6, halogens 1. A positive charge
// raises the maximum for lone-pair donors (N, O, P, S, halogens) and lowers
// it for B and C; a negative charge always lowers it. Aromatic N and O get
// one extra unit because a ring lone pair shows up in the 1.5-per-aromatic-
// bond accounting (pyrrole-type N-H, furan O).
int max_valence(const std::string& element, int charge, bool aromatic);

// Attributed molecular graph: undirected, simple, single component.
// Immutable by convention once validated; all operations that derive new
// structures build a fresh Molecule.
class Molecule {
 public:
  Molecule() = default;
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }

  // Neighbor list as (neighbor atom index, bond index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int atom) const {
    return adj_[atom];
  }
  int degree(int atom) const { return static_cast<int>(adj_[atom].size()); }
  const Bond& bond_between(int a, int b) const;  // throws if absent
  bool has_bond(int a, int b) const;

  // Total valence of an atom: explicit hydrogens plus bond orders with
  // aromatic as 1.5, floored to an integer.
  int valence(int atom) const;

  // Checks all type invariants; throws ValenceError or Error on violation.
  // require_connected also rejects multi-fragment graphs.
  void validate(bool require_connected = true) const;
  bool is_connected() const;

  Molecule without_maps() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

}  // namespace synthkit
