#pragma once

#include <vector>

#include "addlaw/bihom.hpp"
#include "addlaw/field.hpp"

namespace addlaw {

// A Galois-conjugate family of hyperplanes in P^r0 over F_q: the i-th plane
// has coefficient vector (1, a_i, ..., a_i^r0) where a_0 generates the
// degree-d extension and a_i runs over its conjugates. Because d > r0 the
// powers of each a_i are linearly independent over the base field, so no
// plane contains a rational point; their union is Galois-stable, and the
// product of the linear forms is a degree-d form with base-field
// coefficients.
struct HyperplaneFamily {
  FieldRef base;  // F_q
  FieldRef ext;   // F_{q^d}
  unsigned d = 0;
  unsigned r0 = 0;
  Element alpha0;  // generator of the extension over the base
  // d coefficient vectors over the extension, each of length r0 + 1.
  std::vector<std::vector<Element>> hyperplanes;
  // Dense product form: exponent vectors (degree d in r0 + 1 variables, the
  // canonical monomial order) and matching base-field coefficients.
  std::vector<ExpVec> product_monomials;
  std::vector<Element> product_coeffs;
  // Rational-point scan: every projective point over the base field was
  // checked against every plane when q^(r0+1) is small enough to enumerate.
  uint64_t points_scanned = 0;
  bool emptiness_verified = false;

  Json to_json() const;
};

// Builds the family for the given base field, extension degree d, and
// ambient dimension r0 (requires d > r0 >= 1). Verifies that the conjugates
// are distinct, that the product form descends, and — when the projective
// space is enumerable — that no plane has a base-field rational point.
HyperplaneFamily build_family(FieldRef base, unsigned d, unsigned r0);

// Ambient dimension of the symmetrized embedding for a genus-g abelian
// variety built from the degree-d family in P^r0: (2d)^g * (r0 + 1) - 1.
// Dimension arithmetic only; the d > r0 constraint belongs to build_family.
uint64_t embedding_dimension(unsigned g, unsigned d, unsigned r0);

// Canonical representatives of P^n(F_q): leading coordinate 1, earlier
// coordinates 0, later coordinates arbitrary. Requires enumerability.
std::vector<std::vector<Element>> projective_points(FieldRef f, unsigned n);

}  // namespace addlaw
