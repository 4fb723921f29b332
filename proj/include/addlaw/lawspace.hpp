#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addlaw/addlaws.hpp"

namespace addlaw {

// The linear space of addition-law tuples of a fixed bidegree on a model,
// found by interpolation: tuple coefficients are the unknowns, every sampled
// point pair (P, Q) contributes the proportionality constraints
// p_i(P,Q) R_j - p_j(P,Q) R_i = 0 against the oracle sum R. The raw solution
// space also contains tuples all of whose coordinates vanish identically on
// E x E (they satisfy the constraints vacuously); those are detected with a
// second, evaluation-only system and quotiented out. Sampling runs over an
// extension field large enough for generic position; because the solution
// spaces are Galois-stable, the canonical reduced bases automatically have
// coefficients in the base field once the systems saturate.
struct LawSpaceResult {
  CurvePtr curve;  // base curve
  unsigned dx = 0, dy = 0;
  size_t raw_dimension = 0;         // includes identically-vanishing tuples
  size_t degenerate_dimension = 0;  // identically-vanishing tuples only
  size_t law_dimension = 0;         // raw_dimension - degenerate_dimension
  std::vector<AdditionLaw> laws;    // canonical representatives, base field
  // Canonical basis of the identically-vanishing subspace, flattened to one
  // coefficient-index vector per tuple (blocks in coordinate order); together
  // with `laws` it spans the raw solution space.
  std::vector<std::vector<uint64_t>> degenerate_tuples;
  uint64_t pairs_sampled = 0;
  std::string lift_field;  // the field the interpolation ran over

  Json to_json() const;
};

LawSpaceResult discover_laws(CurvePtr curve, unsigned dx, unsigned dy, Rng& rng);

// Cuts the law space further by prescribing vanishing: the tuple must vanish
// at every pair whose difference is a Frobenius conjugate of p0 (a point on
// the curve over an extension of its field). Prescribing the full orbit keeps
// the conditions Galois-stable, so the surviving representatives again
// descend to the base field.
struct PrescribedVanishingResult {
  size_t orbit_size = 0;
  size_t raw_dimension = 0;
  size_t degenerate_dimension = 0;
  size_t solution_dimension = 0;  // law-like solutions after the quotient
  std::vector<AdditionLaw> laws;  // canonical representatives, base field
  std::vector<std::vector<uint64_t>> degenerate_tuples;
  uint64_t pairs_sampled = 0;
  std::string lift_field;

  Json to_json() const;
};

PrescribedVanishingResult prescribed_vanishing_law(CurvePtr curve, unsigned dx, unsigned dy,
                                                   const Point& p0, Rng& rng);

// Smallest-degree extension of `above` (possibly `above` itself) whose order
// reaches `min_order`; every returned field keeps `above` in its chain.
FieldRef lift_field(FieldRef above, uint64_t min_order);

}  // namespace addlaw
