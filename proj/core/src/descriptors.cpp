#include "synthkit/descriptors.hpp"

namespace synthkit {

Descriptors descriptors(const Molecule& m) {
  Descriptors d;
  d.heavy_atoms = m.atom_count();
  d.rings = m.bond_count() - m.atom_count() + 1;
  int hetero = 0;
  double mass = 0;
  for (const Atom& a : m.atoms()) {
    if (a.element != "C") ++hetero;
    mass += atomic_mass(a.element) + 1.008 * a.explicit_h;
  }
  d.hetero_fraction =
      d.heavy_atoms == 0 ? 0.0 : static_cast<double>(hetero) / d.heavy_atoms;
  d.mol_weight = mass;
  return d;
}

}  // namespace synthkit
