#pragma once

#include <vector>

#include "synthkit/bitvec.hpp"
#include "synthkit/molecule.hpp"

namespace synthkit {

// Boolean circular fingerprint. Length and radius travel with the bits;
// comparisons are only defined between fingerprints of equal shape.
struct Fingerprint {
  BitVec bits;
  int radius = 0;

  size_t length() const { return bits.size(); }
  size_t count() const { return bits.count(); }
};

// Circular (Morgan-style) fingerprint. For every atom and every r in
// [0, radius], the r-neighborhood invariant tuple (element, charge, degree,
// explicit hydrogens, aromatic flag, sorted bond-tagged neighbor identifiers
// from round r-1) is serialized and hashed with FNV-1a 64; bit index is the
// hash modulo nbits. nbits must be a power of two >= 64.
Fingerprint morgan_fingerprint(const Molecule& m, int radius, int nbits);

// |a AND b| / |a OR b|; 0 when both are empty. Throws DimensionError when
// shapes differ.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

// Cosine similarity of real vectors; 0 when either norm is 0.
double cosine(const std::vector<float>& a, const std::vector<float>& b);
double cosine(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace synthkit
