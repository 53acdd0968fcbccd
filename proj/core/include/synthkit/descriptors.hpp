#pragma once

#include "synthkit/molecule.hpp"

namespace synthkit {

struct Descriptors {
  int heavy_atoms = 0;
  int rings = 0;             // cycle rank: bonds - atoms + 1
  double hetero_fraction = 0;  // non-carbon heavy atoms / heavy atoms
  double mol_weight = 0;       // amu, explicit hydrogens included
};

Descriptors descriptors(const Molecule& m);

}  // namespace synthkit
