#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "addlaw/bihom.hpp"
#include "addlaw/poly.hpp"

namespace addlaw {

// A genus-2 hyperelliptic curve y^2 = f(x) with deg f in {5, 6}, f
// squarefree, over a finite field of odd characteristic.
class HyperellipticCurve {
 public:
  HyperellipticCurve(FieldRef f, Poly fx);
  static std::shared_ptr<const HyperellipticCurve> make(
      FieldRef f, const std::vector<int64_t>& coeffs);

  FieldRef field() const { return f_; }
  const Poly& fx() const { return fx_; }
  int degree() const { return fx_.degree(); }
  std::shared_ptr<const HyperellipticCurve> base_change(FieldRef to) const;

  // Exhaustive point count over the degree-e extension: one x-scan plus the
  // points at infinity (one for deg 5; two or zero for deg 6 depending on
  // whether the leading coefficient is a square there).
  uint64_t count_points(unsigned e) const;

  // "hyper:<field>:c0,...,cd" with coefficients as canonical element indices.
  std::string to_string() const;

 private:
  FieldRef f_;
  Poly fx_;
};

using HyperPtr = std::shared_ptr<const HyperellipticCurve>;

// Parses "hyper:<field>:c0,...,cd".
HyperPtr parse_hyperelliptic(const std::string& s);

// Order of the degree-e extension's Jacobian group, from the zeta function:
// the numerator coefficients come from the point counts over the first two
// extensions, and Newton's identities turn them into the product of
// (1 - w_i^e) over the four Frobenius eigenvalues.
uint64_t jacobian_order(const HyperellipticCurve& c, unsigned e);

// A curve point over the quartic extension whose Galois orbit has size four
// and whose double-Frobenius image is its hyperelliptic conjugate: x0 lies in
// the quadratic extension, f(x0) is a nonsquare there, and y0 generates the
// quartic step. All claimed properties are stored as checked bits.
struct Orbit4Point {
  FieldRef quadratic;  // F_{q^2}, as a step of the quartic tower
  FieldRef quartic;    // F_{q^4}
  Element x0;          // element of the quartic field, lying in the quadratic
  Element y0;          // element of the quartic field, outside the quadratic
  bool orbit_size_four = false;
  bool sigma2_is_conjugate = false;
  bool on_curve = false;

  bool ok() const { return orbit_size_four && sigma2_is_conjugate && on_curve; }
  Json to_json() const;
};

// Deterministic search in canonical element order over the quadratic
// extension; absence (no x0 with f(x0) a nonsquare) is a meaningful result.
std::optional<Orbit4Point> find_orbit4_point(const HyperellipticCurve& c);

// Mumford representation of a divisor class on a degree-5 model: u monic of
// degree <= 2, deg v < deg u, u | v^2 - f. Weight 0 is the identity class.
struct MumfordDivisor {
  Poly u, v;

  unsigned weight() const { return static_cast<unsigned>(u.degree()); }
  bool is_identity() const { return u.degree() == 0; }
  bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
  bool operator<(const MumfordDivisor& o) const;
  std::string to_string() const;
  Json to_json() const;
};

MumfordDivisor mumford_identity(FieldRef f);
// The class (P) - P_inf for an affine point P = (x, y) with y^2 = f(x).
MumfordDivisor mumford_from_point(const HyperellipticCurve& c, const Element& x,
                                  const Element& y);
// The class (P1) + (P2) - 2 P_inf for affine points with distinct x.
MumfordDivisor mumford_from_pair(const HyperellipticCurve& c, const Element& x1,
                                 const Element& y1, const Element& x2,
                                 const Element& y2);
bool on_jacobian(const HyperellipticCurve& c, const MumfordDivisor& d);

// Cantor composition and reduction on a degree-5 model.
MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a,
                          const MumfordDivisor& b);
MumfordDivisor cantor_neg(const MumfordDivisor& d);
MumfordDivisor cantor_sub(const HyperellipticCurve& c, const MumfordDivisor& a,
                          const MumfordDivisor& b);
// Coefficient-wise q0-power Frobenius on both polynomials.
MumfordDivisor frobenius_divisor(const MumfordDivisor& d, uint64_t q0);

// All classes of the Jacobian over the curve's own field (degree-5 model):
// identity, one class per affine point, and the weight-2 classes found by
// solving for the v-line over each monic quadratic u. O(n^3) scan.
std::vector<MumfordDivisor> enumerate_jacobian(const HyperellipticCurve& c);

// Classes c with weight(c - z1) <= 1 and weight(c - z2) <= 1, by exhaustive
// Jacobian enumeration: the theta divisor is the weight <= 1 locus, so this
// is the intersection of the two theta translates.
std::vector<MumfordDivisor> theta_intersection(const HyperellipticCurve& c,
                                               const MumfordDivisor& z1,
                                               const MumfordDivisor& z2);

// The four theta-translate classes built from an orbit-4 point over the
// quartic extension, with every property the construction promises recorded
// as a checked bit. When the quartic field is tiny the translate
// intersections are additionally enumerated exhaustively; otherwise the
// predicted members are verified and the four-fold intersection is excluded
// by direct weight checks on the only candidates.
struct ThetaIntersectionReport {
  HyperPtr curve;      // base curve (degree 5)
  HyperPtr curve_ext;  // over the quartic extension
  Orbit4Point p0;
  std::vector<MumfordDivisor> alphas;  // alpha_0 .. alpha_3
  bool sum_is_identity = false;
  bool frobenius_permutes = false;  // sigma(alpha_i) == alpha_{i+1 mod 4}
  MumfordDivisor c01, c03;          // predicted pairwise-intersection members
  bool predicted_in_pairwise = false;
  bool predicted_distinct = false;
  bool fourfold_excluded = false;  // candidates fail the remaining translates
  bool exhaustive = false;
  uint64_t jacobian_size = 0;  // exhaustive mode only
  // Exhaustive mode: all six pairwise intersections, ordered
  // (0,1),(0,2),(0,3),(1,2),(1,3),(2,3), then the four-fold intersection.
  std::vector<std::vector<MumfordDivisor>> pairwise;
  std::vector<MumfordDivisor> fourfold;
  bool theta_symmetric = false;  // weight(c)<=1 <=> weight(-c)<=1, exhaustive
  bool negation_swaps_translates = false;  // -Theta_{a0} = Theta_{a2} etc.

  bool ok() const;
  Json to_json() const;
};

// Message of the error thrown by build_theta_classes when the exhaustive
// orbit search finds no suitable point. Callers match on it to distinguish
// this verified-negative outcome from usage errors.
inline constexpr const char* kNoOrbit4Message = "curve has no orbit-4 point";

// Requires a degree-5 model with an orbit-4 point; throws otherwise.
ThetaIntersectionReport build_theta_classes(HyperPtr c);

// Squarefree f of degree 5 or 6 over the given tiny odd field whose curve
// has no orbit-4 point (equivalently: f maps the quadratic extension into
// its squares). Nonempty for orders 3 and 5; empty from 7 on. `jobs` bounds
// the worker threads; the polynomial space is split into contiguous chunks
// of its canonical order and merged in chunk order, so the output is
// identical for every job count.
std::vector<HyperPtr> scan_genus2_counterexamples(FieldRef field,
                                                  unsigned jobs = 1);

}  // namespace addlaw
