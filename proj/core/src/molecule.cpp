#include "synthkit/molecule.hpp"

#include <algorithm>
#include <map>

namespace synthkit {

namespace {

struct ElementInfo {
  int base_valence;
  double mass;
};

const std::map<std::string, ElementInfo>& element_table() {
  static const std::map<std::string, ElementInfo> table = {
      {"B", {3, 10.811}},  {"C", {4, 12.011}},   {"N", {3, 14.007}},
      {"O", {2, 15.999}},  {"P", {5, 30.974}},   {"S", {6, 32.06}},
      {"F", {1, 18.998}},  {"Cl", {1, 35.45}},   {"Br", {1, 79.904}},
      {"I", {1, 126.904}},
  };
  return table;
}

constexpr double kHydrogenMass = 1.008;

}  // namespace

bool is_supported_element(const std::string& symbol) {
  return element_table().count(symbol) > 0;
}

double atomic_mass(const std::string& symbol) {
  auto it = element_table().find(symbol);
  if (it == element_table().end())
    throw Error("unknown element: " + symbol);
  return it->second.mass;
}

int max_valence(const std::string& element, int charge, bool aromatic) {
  auto it = element_table().find(element);
  if (it == element_table().end())
    throw Error("unknown element: " + element);
  int v = it->second.base_valence;
  if (charge > 0 && (element == "B" || element == "C"))
    v -= charge;
  else
    v += charge;
  if (aromatic && (element == "N" || element == "O")) v += 1;
  return std::max(v, 0);
}

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)) {
  adj_.resize(atoms_.size());
  for (int bi = 0; bi < static_cast<int>(bonds_.size()); ++bi) {
    const Bond& b = bonds_[bi];
    if (b.a < 0 || b.b < 0 || b.a >= atom_count() || b.b >= atom_count())
      throw Error("bond endpoint out of range");
    adj_[b.a].emplace_back(b.b, bi);
    adj_[b.b].emplace_back(b.a, bi);
  }
}

const Bond& Molecule::bond_between(int a, int b) const {
  for (const auto& [nbr, bi] : adj_[a])
    if (nbr == b) return bonds_[bi];
  throw Error("no bond between atoms");
}

bool Molecule::has_bond(int a, int b) const {
  for (const auto& [nbr, bi] : adj_[a])
    if (nbr == b) return true;
  return false;
}

int Molecule::valence(int atom) const {
  int halves = 2 * atoms_[atom].explicit_h;
  for (const auto& [nbr, bi] : adj_[atom])
    halves += bond_valence_halves(bonds_[bi].order);
  return halves / 2;  // floor: 4.5 from three aromatic bonds counts as 4
}

bool Molecule::is_connected() const {
  if (atoms_.empty()) return true;
  std::vector<bool> seen(atoms_.size(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  size_t visited = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (const auto& [nbr, bi] : adj_[a]) {
      if (!seen[nbr]) {
        seen[nbr] = true;
        ++visited;
        stack.push_back(nbr);
      }
    }
  }
  return visited == atoms_.size();
}

void Molecule::validate(bool require_connected) const {
  for (const Bond& b : bonds_) {
    if (b.a == b.b) throw Error("self-loop bond");
  }
  for (int a = 0; a < atom_count(); ++a) {
    std::vector<int> nbrs;
    for (const auto& [nbr, bi] : adj_[a]) nbrs.push_back(nbr);
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw Error("duplicate bond");
  }
  for (int a = 0; a < atom_count(); ++a) {
    const Atom& atom = atoms_[a];
    if (!is_supported_element(atom.element))
      throw Error("unknown element: " + atom.element);
    int allowed = max_valence(atom.element, atom.charge, atom.aromatic);
    int v = valence(a);
    if (v > allowed)
      throw ValenceError("valence " + std::to_string(v) + " exceeds " +
                         std::to_string(allowed) + " for " + atom.element +
                         (atom.charge ? (atom.charge > 0 ? "+" : "-") : ""));
  }
  if (require_connected && !is_connected())
    throw Error("molecule has multiple fragments");
}

Molecule Molecule::without_maps() const {
  std::vector<Atom> atoms = atoms_;
  for (Atom& a : atoms) a.map_index = 0;
  return Molecule(std::move(atoms), bonds_);
}

}  // namespace synthkit
