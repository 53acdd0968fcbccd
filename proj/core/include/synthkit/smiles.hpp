#pragma once

#include <string>
#include <vector>

#include "synthkit/molecule.hpp"

namespace synthkit {

// Parses the supported SMILES subset: organic-subset atoms B C N O P S F Cl
// Br I, aromatic c n o s, bracket atoms with H-count / charge / map index,
// bonds - = # :, branches, ring closures (digits and %nn). Stereo marks,
// isotopes, wildcards and multi-fragment input ('.') raise
// UnsupportedFeature; malformed text raises SyntaxError; impossible valences
// raise ValenceError.
Molecule parse_smiles(const std::string& text);

// Permutation-invariant atom ordering: iterative neighborhood refinement,
// ties broken by promoting one atom of the lowest tied class and refining
// again until all ranks are distinct. Output is a permutation of 0..n-1.
std::vector<int> canonical_ranks(const Molecule& m);

// Deterministic canonical SMILES. Isomorphic inputs produce identical
// strings; parse(write(m)) is graph-isomorphic to m. Map indices are
// metadata and are not written.
std::string write_canonical_smiles(const Molecule& m);

inline std::string canonical_smiles(const std::string& smiles) {
  return write_canonical_smiles(parse_smiles(smiles));
}

}  // namespace synthkit
