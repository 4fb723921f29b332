#pragma once

#include <memory>
#include <vector>

#include "addlaw/complete.hpp"
#include "addlaw/lawspace.hpp"
#include "addlaw/models.hpp"

namespace addlaw {

// A size-three Galois orbit on a plane cubic: a point over the cubic
// extension of the curve's field whose three Frobenius conjugates are
// distinct and sum to the identity. Such a point lies in the kernel of the
// norm map P -> P + P^sigma + P^(sigma^2) but outside the base-field group.
struct OrbitCertificate {
  CurvePtr curve;      // curve over the base field
  CurvePtr curve_ext;  // the same curve over the cubic extension
  Point p0;            // kernel point, not rational over the base field
  std::vector<Point> conjugates;  // p0 and its two Frobenius conjugates
  bool orbit_size_three = false;
  bool sum_is_identity = false;
  bool not_rational = false;
  // Number of random samples drawn before success; equals the sampling cap
  // when the point came from the exhaustive fallback.
  uint64_t retries = 0;

  bool ok() const { return orbit_size_three && sum_is_identity && not_rational; }
  Json to_json() const;
};

// The projective line through the three conjugates (they are collinear
// because they sum to the identity). The line is Galois-stable, so its
// normalized coefficients lie in the base field; no base-field point of the
// curve lies on it.
struct ChordLine {
  FieldRef field;               // base field of the curve
  std::vector<Element> coeffs;  // (c0, c1, c2), first nonzero scaled to 1

  Json to_json() const;
};

// Samples R over the cubic extension and takes p0 = R - R^sigma, which lies
// in the norm kernel automatically; retries while p0 is rational, then falls
// back to exhaustively enumerating the kernel on tiny fields. Throws when no
// suitable point exists (possible only over very small base fields).
// Message of the error thrown when the search below is exhaustive and every
// kernel point is rational (so no size-three orbit exists). Callers match on
// it to distinguish this verified-negative outcome from usage errors.
inline constexpr const char* kNoKernelOrbitMessage =
    "the norm kernel of this curve has no point outside the base field";

OrbitCertificate find_norm_kernel_point(CurvePtr curve, Rng& rng);

// Builds the chord line through the certificate's orbit, checks the third
// conjugate and the absence of rational curve points on it, and descends the
// normalized coefficients to the base field.
ChordLine orbit_chord_line(const OrbitCertificate& cert);

// A base-field-complete addition law produced from a norm-kernel orbit: the
// unique bidegree-(2,2) law vanishing on the pairs whose difference is an
// orbit point. Its exceptional differences over the cubic extension are
// exactly the three conjugates, which lie on the chord line.
struct CompleteConstruction {
  OrbitCertificate orbit;
  ChordLine line;
  AdditionLaw law;              // coefficients over the base field
  ExceptionalReport base_scan;  // over the base field: no exceptional pairs
  ExceptionalReport ext_scan;   // over the cubic extension: orbit fibers only

  Json to_json() const;
};

// Full pipeline: orbit search, chord line, prescribed-vanishing
// interpolation, then exhaustive certification over the base field and the
// cubic extension. Every claimed property is checked before returning.
CompleteConstruction build_k_complete_law(CurvePtr curve, Rng& rng);

// One curve from the small-field degeneracy scan: its norm kernel is no
// larger than its rational part, so no orbit of size three exists.
struct SmallQCurve {
  std::shared_ptr<const WeierstrassCurve> curve;
  uint64_t kernel_size = 0;
  uint64_t rational_kernel_size = 0;

  Json to_json() const;
};

// Scans every nonsingular general-Weierstrass coefficient tuple over the
// given tiny field and returns the curves whose norm kernel lies entirely in
// the base-field group. Nonempty for field orders 2, 3, 4; empty from 5 on.
// Also asserts, per curve, that the rational kernel has at most 9 elements
// and that the kernel size times the base group order equals the extension
// group order. `jobs` bounds the worker threads; the coefficient space is
// split into contiguous chunks of its canonical order and the per-chunk
// results are merged in chunk order, so the output is identical for every
// job count.
std::vector<SmallQCurve> scan_small_q(FieldRef field, unsigned jobs = 1);

}  // namespace addlaw
