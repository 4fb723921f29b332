#include "addlaw/construct.hpp"

#include <set>
#include <utility>

namespace addlaw {

namespace {

constexpr uint64_t kSampleRetries = 256;
constexpr uint64_t kExhaustiveCap = 1ULL << 12;

Point norm_map(const CurveModel& ext, const Point& p, uint64_t q0) {
  Point s1 = frobenius_point(p, q0);
  Point s2 = frobenius_point(s1, q0);
  return ext.add(ext.add(p, s1), s2);
}

}  // namespace

Json OrbitCertificate::to_json() const {
  Json j;
  j["curve"] = curve->to_string();
  j["extension_field"] = curve_ext->field()->to_string();
  j["point"] = p0.to_string();
  Json cs = Json::array();
  for (const Point& c : conjugates) cs.push_back(c.to_string());
  j["conjugates"] = std::move(cs);
  j["orbit_size_three"] = orbit_size_three;
  j["sum_is_identity"] = sum_is_identity;
  j["not_rational"] = not_rational;
  j["retries"] = retries;
  return j;
}

Json ChordLine::to_json() const {
  Json j;
  j["field"] = field->to_string();
  Json cs = Json::array();
  for (const Element& c : coeffs) cs.push_back(c.to_string());
  j["coefficients"] = std::move(cs);
  return j;
}

Json CompleteConstruction::to_json() const {
  Json j;
  j["orbit"] = orbit.to_json();
  j["chord_line"] = line.to_json();
  j["law"] = law.to_json();
  j["base_scan"] = base_scan.to_json();
  j["extension_scan"] = ext_scan.to_json();
  return j;
}

OrbitCertificate find_norm_kernel_point(CurvePtr curve, Rng& rng) {
  FieldRef base = curve->field();
  uint64_t q0 = base->order();
  FieldRef ext = Field::extension(base, 3);
  CurvePtr curve_ext = curve->base_change(ext);

  OrbitCertificate cert;
  cert.curve = curve;
  cert.curve_ext = curve_ext;

  auto finish = [&](const Point& p0, uint64_t tries) {
    Point s1 = frobenius_point(p0, q0);
    Point s2 = frobenius_point(s1, q0);
    cert.p0 = p0;
    cert.conjugates = {p0, s1, s2};
    cert.orbit_size_three = !(p0 == s1) && !(p0 == s2) && !(s1 == s2);
    cert.sum_is_identity =
        curve_ext->add(curve_ext->add(p0, s1), s2) == curve_ext->identity();
    cert.not_rational = !(s1 == p0);
    cert.retries = tries;
    ADDLAW_CHECK(cert.ok(), "norm-kernel point failed its certificate checks");
    return cert;
  };

  for (uint64_t t = 0; t < kSampleRetries; ++t) {
    Point r = curve_ext->random_point(rng);
    Point p0 = curve_ext->sub(r, frobenius_point(r, q0));
    if (frobenius_point(p0, q0) == p0) continue;  // rational, try again
    return finish(p0, t + 1);
  }
  // Rational points dominated the samples: either the kernel really has no
  // point outside the base field (tiny q) or we were extremely unlucky.
  // Settle it exhaustively when the extension group is small enough.
  ADDLAW_CHECK(ext->order() <= kExhaustiveCap,
               "no norm-kernel point found by sampling and the extension is "
               "too large to enumerate");
  for (const Point& p : curve_ext->enumerate()) {
    if (frobenius_point(p, q0) == p) continue;
    if (!(norm_map(*curve_ext, p, q0) == curve_ext->identity())) continue;
    return finish(p, kSampleRetries);
  }
  throw error(kNoKernelOrbitMessage);
}

ChordLine orbit_chord_line(const OrbitCertificate& cert) {
  ADDLAW_CHECK(cert.ok(), "orbit certificate is not valid");
  FieldRef base = cert.curve->field();
  FieldRef ext = cert.curve_ext->field();
  uint64_t q0 = base->order();
  const Point& a = cert.conjugates[0];
  const Point& b = cert.conjugates[1];
  // Cross product of the coordinate vectors: the line through a and b.
  std::vector<Element> c = {a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]};
  ADDLAW_CHECK(!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero()),
               "conjugate points are projectively equal");
  // The orbit sums to the identity, so the third intersection of the chord
  // with the curve is exactly the remaining conjugate.
  const Point& d = cert.conjugates[2];
  Element at_d = c[0] * d[0] + c[1] * d[1] + c[2] * d[2];
  ADDLAW_CHECK(at_d.is_zero(), "third conjugate is not on the chord");

  // Scale the first nonzero coefficient to 1. The Galois action permutes the
  // three points, hence fixes the line; the normalized coefficients are
  // therefore Frobenius-fixed and live in the base field.
  Element lead = !c[0].is_zero() ? c[0] : (!c[1].is_zero() ? c[1] : c[2]);
  Element lead_inv = lead.inv();
  ChordLine line;
  line.field = base;
  for (const Element& ci : c) {
    Element n = ci * lead_inv;
    ADDLAW_CHECK(ext->frobenius(n, q0) == n,
                 "normalized chord coefficients are not Galois-fixed");
    auto down = ext->descend(n, base);
    ADDLAW_CHECK(down.has_value(), "chord coefficients do not descend");
    line.coeffs.push_back(*down);
  }
  // No base-field point of the curve may lie on the chord: the only curve
  // points on it are the three conjugates, none of which is rational.
  for (const Point& p : cert.curve->enumerate()) {
    Element v = line.coeffs[0] * p[0] + line.coeffs[1] * p[1] + line.coeffs[2] * p[2];
    ADDLAW_CHECK(!v.is_zero(), "a rational curve point lies on the orbit chord");
  }
  return line;
}

CompleteConstruction build_k_complete_law(CurvePtr curve, Rng& rng) {
  CompleteConstruction out;
  out.orbit = find_norm_kernel_point(curve, rng);
  out.line = orbit_chord_line(out.orbit);

  PrescribedVanishingResult pv =
      prescribed_vanishing_law(curve, 2, 2, out.orbit.p0, rng);
  ADDLAW_CHECK(pv.solution_dimension == 1,
               "prescribed vanishing did not cut the law space to one law");
  out.law = pv.laws[0];
  out.law.label = "orbit-chord-complete";

  out.base_scan = certify_k_complete(out.law);
  ADDLAW_CHECK(out.base_scan.complete(),
               "constructed law is not complete over the base field");

  FieldRef ext = out.orbit.curve_ext->field();
  AdditionLaw lifted = out.law.base_change(ext);
  out.ext_scan = certify_k_complete(lifted);
  std::set<Point> want(out.orbit.conjugates.begin(), out.orbit.conjugates.end());
  std::set<Point> got(out.ext_scan.differences.begin(), out.ext_scan.differences.end());
  ADDLAW_CHECK(want == got,
               "extension-scan differences are not the conjugate orbit");
  // Tie the two constructions together: every exceptional difference lies on
  // the chord line.
  for (const Point& dpt : out.ext_scan.differences) {
    Element v = ext->zero();
    for (size_t i = 0; i < 3; ++i) v = v + ext->embed(out.line.coeffs[i]) * dpt[i];
    ADDLAW_CHECK(v.is_zero(), "an exceptional difference misses the chord line");
  }
  return out;
}

Json SmallQCurve::to_json() const {
  Json j;
  j["curve"] = curve->to_string();
  j["kernel_size"] = kernel_size;
  j["rational_kernel_size"] = rational_kernel_size;
  return j;
}

std::vector<SmallQCurve> scan_small_q(FieldRef field, unsigned jobs) {
  uint64_t q = field->order();
  ADDLAW_CHECK(q <= 16, "degeneracy scan is designed for tiny fields");
  FieldRef ext = Field::extension(field, 3);
  if (field->characteristic() == 2) {
    // Warm the lazily built root-solver caches on the shared fields before
    // any worker threads touch them.
    field->solve_artin_schreier(field->zero());
    ext->solve_artin_schreier(ext->zero());
  }
  uint64_t total = q * q * q * q * q;
  // Coefficient tuples (a1, a2, a3, a4, a6) in canonical order: a6 fastest.
  auto scan_chunk = [&](size_t lo, size_t hi) {
    std::vector<SmallQCurve> hits;
    for (uint64_t t = lo; t < hi; ++t) {
      uint64_t rest = t;
      uint64_t i6 = rest % q;
      rest /= q;
      uint64_t i4 = rest % q;
      rest /= q;
      uint64_t i3 = rest % q;
      rest /= q;
      uint64_t i2 = rest % q;
      uint64_t i1 = rest / q;
      std::shared_ptr<WeierstrassCurve> w;
      try {
        w = std::make_shared<WeierstrassCurve>(
            field, field->element_at(i1), field->element_at(i2),
            field->element_at(i3), field->element_at(i4),
            field->element_at(i6));
      } catch (const error&) {
        continue;  // singular coefficient tuple
      }
      CurvePtr we = w->base_change(ext);
      uint64_t kernel = 0;
      uint64_t rational = 0;
      for (const Point& p : we->enumerate()) {
        Point s1 = frobenius_point(p, q);
        Point s2 = frobenius_point(s1, q);
        if (!(we->add(we->add(p, s1), s2) == we->identity())) continue;
        ++kernel;
        if (s1 == p) ++rational;
      }
      ADDLAW_CHECK(rational <= 9,
                   "rational norm kernel exceeds the 3-torsion bound");
      // The norm map is onto the base-field group, so the kernel size
      // times the base group order is the extension group order.
      ADDLAW_CHECK(kernel * w->enumerate().size() == we->enumerate().size(),
                   "norm kernel size is inconsistent with surjectivity");
      if (q >= 5)
        ADDLAW_CHECK(kernel > 9, "norm kernel too small for this field size");
      if (kernel == rational) hits.push_back({w, kernel, rational});
    }
    return hits;
  };
  return parallel_reduce(
      total, jobs, std::vector<SmallQCurve>{}, scan_chunk,
      [](std::vector<SmallQCurve> acc, std::vector<SmallQCurve> part) {
        for (SmallQCurve& h : part) acc.push_back(std::move(h));
        return acc;
      });
}

}  // namespace addlaw
