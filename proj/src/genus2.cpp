#include "addlaw/genus2.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace addlaw {

namespace {

using int128 = __int128;

// f with coefficients pushed up into an extension of its field.
Poly embed_poly(const Poly& p, FieldRef up) {
  std::vector<Element> cs;
  cs.reserve(p.coeffs().size());
  for (const Element& c : p.coeffs()) cs.push_back(up->embed(c));
  return Poly(up, std::move(cs));
}

Poly frobenius_poly(const Poly& p, uint64_t q0) {
  FieldRef f = p.field();
  std::vector<Element> cs;
  cs.reserve(p.coeffs().size());
  for (const Element& c : p.coeffs()) cs.push_back(f->frobenius(c, q0));
  return Poly(f, std::move(cs));
}

}  // namespace

HyperellipticCurve::HyperellipticCurve(FieldRef f, Poly fx)
    : f_(f), fx_(std::move(fx)) {
  ADDLAW_CHECK(f_->characteristic() != 2,
               "hyperelliptic model needs odd characteristic");
  ADDLAW_CHECK(fx_.degree() == 5 || fx_.degree() == 6,
               "right-hand side must have degree 5 or 6");
  ADDLAW_CHECK(fx_.is_squarefree(), "right-hand side must be squarefree");
}

std::shared_ptr<const HyperellipticCurve> HyperellipticCurve::make(
    FieldRef f, const std::vector<int64_t>& coeffs) {
  std::vector<Element> cs;
  cs.reserve(coeffs.size());
  for (int64_t c : coeffs) cs.push_back(f->from_int(c));
  return std::make_shared<HyperellipticCurve>(f, Poly(f, std::move(cs)));
}

std::shared_ptr<const HyperellipticCurve> HyperellipticCurve::base_change(
    FieldRef to) const {
  return std::make_shared<HyperellipticCurve>(to, embed_poly(fx_, to));
}

uint64_t HyperellipticCurve::count_points(unsigned e) const {
  ADDLAW_CHECK(e >= 1, "extension degree must be positive");
  FieldRef K = e == 1 ? f_ : Field::extension(f_, e);
  K->require_enumerable("hyperelliptic point count");
  Poly fK = embed_poly(fx_, K);
  uint64_t n = K->order();
  uint64_t count = 0;
  for (uint64_t i = 0; i < n; ++i) {
    Element val = fK.eval(K->element_at(i));
    if (val.is_zero())
      count += 1;
    else if (K->is_square(val))
      count += 2;
  }
  if (fx_.degree() == 5) {
    count += 1;  // single ramified point at infinity
  } else {
    Element lc = K->embed(fx_.lc());
    if (K->is_square(lc)) count += 2;  // split at infinity, else inert: zero
  }
  return count;
}

std::string HyperellipticCurve::to_string() const {
  std::string out = "hyper:" + f_->short_string() + ":";
  for (size_t i = 0; i < fx_.coeffs().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(fx_.coeffs()[i].index());
  }
  return out;
}

HyperPtr parse_hyperelliptic(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  ADDLAW_CHECK(parts.size() >= 3, "curve string needs hyper:field:coefficients");
  ADDLAW_CHECK(parts[0] == "hyper", "not a hyperelliptic curve string");
  std::string field_str = parts[1];
  for (size_t i = 2; i + 1 < parts.size(); ++i) field_str += ":" + parts[i];
  FieldRef f = Field::parse(field_str);
  std::vector<Element> coeffs;
  std::string tok;
  for (char ch : parts.back() + ",") {
    if (ch == ',') {
      ADDLAW_CHECK(!tok.empty(), "empty curve coefficient");
      coeffs.push_back(f->elem_parse(tok));
      tok.clear();
    } else {
      tok.push_back(ch);
    }
  }
  return std::make_shared<HyperellipticCurve>(f, Poly(f, std::move(coeffs)));
}

uint64_t jacobian_order(const HyperellipticCurve& c, unsigned e) {
  ADDLAW_CHECK(e >= 1, "extension degree must be positive");
  int128 q = c.field()->order();
  int128 n1 = c.count_points(1);
  int128 n2 = c.count_points(2);
  int128 c1 = n1 - (q + 1);
  int128 c2num = n2 - (q * q + 1) + c1 * c1;
  ADDLAW_CHECK(c2num % 2 == 0, "zeta coefficient is not an integer");
  int128 c2 = c2num / 2;
  // Numerator 1 + c1 T + c2 T^2 + q c1 T^3 + q^2 T^4 = prod (1 - w_i T):
  // elementary symmetric functions of the eigenvalues.
  int128 e1 = -c1, e2 = c2, e3 = -q * c1, e4 = q * q;
  // Power sums p_k = sum w_i^k by Newton's identities.
  std::vector<int128> p(4 * e + 1, 0);
  for (unsigned k = 1; k <= 4 * e; ++k) {
    int128 v = 0;
    v += e1 * (k >= 2 ? p[k - 1] : 0);
    v -= e2 * (k >= 3 ? p[k - 2] : 0);
    v += e3 * (k >= 4 ? p[k - 3] : 0);
    v -= e4 * (k >= 5 ? p[k - 4] : 0);
    if (k == 1) v = e1;
    if (k == 2) v = e1 * p[1] - 2 * e2;
    if (k == 3) v = e1 * p[2] - e2 * p[1] + 3 * e3;
    if (k == 4) v = e1 * p[3] - e2 * p[2] + e3 * p[1] - 4 * e4;
    p[k] = v;
  }
  // Elementary symmetric functions of w_i^e from the power sums P_k = p_{ke}.
  int128 P1 = p[e], P2 = p[2 * e], P3 = p[3 * e], P4 = p[4 * e];
  int128 E1 = P1;
  int128 E2n = E1 * P1 - P2;
  ADDLAW_CHECK(E2n % 2 == 0, "symmetric function E2 is not an integer");
  int128 E2 = E2n / 2;
  int128 E3n = E2 * P1 - E1 * P2 + P3;
  ADDLAW_CHECK(E3n % 3 == 0, "symmetric function E3 is not an integer");
  int128 E3 = E3n / 3;
  int128 E4n = E3 * P1 - E2 * P2 + E1 * P3 - P4;
  ADDLAW_CHECK(E4n % 4 == 0, "symmetric function E4 is not an integer");
  int128 E4 = E4n / 4;
  int128 result = 1 - E1 + E2 - E3 + E4;
  ADDLAW_CHECK(result > 0, "Jacobian order must be positive");
  return static_cast<uint64_t>(result);
}

Json Orbit4Point::to_json() const {
  Json j;
  j["quadratic_field"] = quadratic->to_string();
  j["quartic_field"] = quartic->to_string();
  j["x0"] = x0.to_string();
  j["y0"] = y0.to_string();
  j["orbit_size_four"] = orbit_size_four;
  j["sigma2_is_conjugate"] = sigma2_is_conjugate;
  j["on_curve"] = on_curve;
  return j;
}

std::optional<Orbit4Point> find_orbit4_point(const HyperellipticCurve& c) {
  FieldRef base = c.field();
  uint64_t q = base->order();
  FieldRef K = Field::extension(base, 2);
  K->require_enumerable("orbit search");
  FieldRef L = Field::extension(K, 2);
  Poly fK = embed_poly(c.fx(), K);
  for (uint64_t i = 0; i < K->order(); ++i) {
    Element x = K->element_at(i);
    Element val = fK.eval(x);
    if (val.is_zero() || K->is_square(val)) continue;
    // f(x) is a nonsquare of the quadratic field, hence a square of the
    // quartic field with roots outside the quadratic one.
    Orbit4Point pt;
    pt.quadratic = K;
    pt.quartic = L;
    pt.x0 = L->embed(x);
    auto y = L->sqrt(L->embed(val));
    ADDLAW_CHECK(y.has_value(), "quadratic-field element must be a quartic square");
    pt.y0 = *y;
    Element x1 = L->frobenius(pt.x0, q);
    Element y1 = L->frobenius(pt.y0, q);
    Element x2 = L->frobenius(x1, q);
    Element y2 = L->frobenius(y1, q);
    pt.on_curve = pt.y0 * pt.y0 == embed_poly(c.fx(), L).eval(pt.x0);
    pt.sigma2_is_conjugate = (x2 == pt.x0) && (y2 == -pt.y0);
    // The four orbit members (x0,y0), (x1,y1), (x0,-y0), (x1,-y1) must be
    // pairwise distinct.
    bool xs_differ = !(x1 == pt.x0);
    bool y0_nonzero = !pt.y0.is_zero();
    bool y1_nonzero = !y1.is_zero();
    pt.orbit_size_four = xs_differ && y0_nonzero && y1_nonzero;
    ADDLAW_CHECK(pt.ok(), "orbit-4 point failed its postconditions");
    return pt;
  }
  return std::nullopt;
}

bool MumfordDivisor::operator<(const MumfordDivisor& o) const {
  if (u.degree() != o.u.degree()) return u.degree() < o.u.degree();
  auto key = [](const Poly& p, size_t len) {
    std::vector<uint64_t> k;
    for (size_t i = 0; i < len; ++i) k.push_back(p.at(i).index());
    return k;
  };
  size_t ulen = u.coeffs().size();
  auto ka = key(u, ulen), kb = key(o.u, ulen);
  if (ka != kb) return ka < kb;
  size_t vlen = ulen ? ulen - 1 : 0;
  return key(v, vlen) < key(o.v, vlen);
}

std::string MumfordDivisor::to_string() const {
  return "(" + u.to_string() + ", " + v.to_string() + ")";
}

Json MumfordDivisor::to_json() const {
  Json j;
  auto dump = [](const Poly& p) {
    Json a = Json::array();
    for (const Element& c : p.coeffs()) a.push_back(c.to_string());
    return a;
  };
  j["u"] = dump(u);
  j["v"] = dump(v);
  j["weight"] = weight();
  return j;
}

MumfordDivisor mumford_identity(FieldRef f) {
  return {Poly::constant(f->one()), Poly::zero(f)};
}

MumfordDivisor mumford_from_point(const HyperellipticCurve& c, const Element& x,
                                  const Element& y) {
  ADDLAW_CHECK(y * y == c.fx().eval(x), "point is not on the curve");
  return {Poly::linear_root(x), Poly::constant(y)};
}

MumfordDivisor mumford_from_pair(const HyperellipticCurve& c, const Element& x1,
                                 const Element& y1, const Element& x2,
                                 const Element& y2) {
  ADDLAW_CHECK(!(x1 == x2), "pair constructor needs distinct x-coordinates");
  MumfordDivisor d{Poly::linear_root(x1) * Poly::linear_root(x2),
                   Poly::interpolate({x1, x2}, {y1, y2})};
  ADDLAW_CHECK(on_jacobian(c, d), "pair does not give a Jacobian class");
  return d;
}

bool on_jacobian(const HyperellipticCurve& c, const MumfordDivisor& d) {
  if (d.u.is_zero() || d.u.degree() > 2) return false;
  if (!d.u.lc().is_one()) return false;
  if (!d.v.is_zero() && d.v.degree() >= d.u.degree()) return false;
  if (d.u.degree() == 0) return d.v.is_zero();
  return ((d.v * d.v - c.fx()) % d.u).is_zero();
}

MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a,
                          const MumfordDivisor& b) {
  ADDLAW_CHECK(c.degree() == 5, "Jacobian arithmetic needs a degree-5 model");
  ADDLAW_CHECK(on_jacobian(c, a) && on_jacobian(c, b),
               "Cantor addition input is not a Jacobian class");
  const Poly& f = c.fx();
  auto [d1, e1, e2] = Poly::xgcd(a.u, b.u);
  auto [d, c1, c2] = Poly::xgcd(d1, a.v + b.v);
  Poly s1 = c1 * e1;
  Poly s2 = c1 * e2;
  const Poly& s3 = c2;
  auto [u, ur] = (a.u * b.u).divmod(d * d);
  ADDLAW_CHECK(ur.is_zero(), "composition denominator must divide exactly");
  Poly vnum = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f);
  auto [vq, vr] = vnum.divmod(d);
  ADDLAW_CHECK(vr.is_zero(), "composition numerator must divide exactly");
  Poly v = vq % u;
  while (u.degree() > 2) {
    auto [unew, rr] = (f - v * v).divmod(u);
    ADDLAW_CHECK(rr.is_zero(), "reduction step must divide exactly");
    u = unew.monic();
    v = (-v) % u;
  }
  u = u.monic();
  v = v % u;
  return {std::move(u), std::move(v)};
}

MumfordDivisor cantor_neg(const MumfordDivisor& d) { return {d.u, -d.v}; }

MumfordDivisor cantor_sub(const HyperellipticCurve& c, const MumfordDivisor& a,
                          const MumfordDivisor& b) {
  return cantor_add(c, a, cantor_neg(b));
}

MumfordDivisor frobenius_divisor(const MumfordDivisor& d, uint64_t q0) {
  return {frobenius_poly(d.u, q0), frobenius_poly(d.v, q0)};
}

std::vector<MumfordDivisor> enumerate_jacobian(const HyperellipticCurve& c) {
  ADDLAW_CHECK(c.degree() == 5, "Jacobian enumeration needs a degree-5 model");
  FieldRef F = c.field();
  uint64_t n = F->order();
  ADDLAW_CHECK(n <= 512, "Jacobian scan is cubic in the field order");
  const Poly& f = c.fx();
  std::vector<MumfordDivisor> out;
  out.push_back(mumford_identity(F));
  for (uint64_t xi = 0; xi < n; ++xi) {
    Element x = F->element_at(xi);
    Element val = f.eval(x);
    if (val.is_zero()) {
      out.push_back({Poly::linear_root(x), Poly::zero(F)});
    } else if (auto r = F->sqrt(val)) {
      out.push_back({Poly::linear_root(x), Poly::constant(*r)});
      out.push_back({Poly::linear_root(x), Poly::constant(-*r)});
    }
  }
  Element two = F->from_int(2);
  for (uint64_t ai = 0; ai < n; ++ai) {
    Element a = F->element_at(ai);
    for (uint64_t bi = 0; bi < n; ++bi) {
      Element b = F->element_at(bi);
      Poly u(F, {b, a, F->one()});
      Poly fr = f % u;
      Element alpha = fr.at(1);
      Element beta = fr.at(0);
      // v = c x + d with v^2 = f mod u: comparing coefficients gives
      // 2cd - a c^2 = alpha and d^2 - b c^2 = beta.
      for (uint64_t ci = 1; ci < n; ++ci) {
        Element cc = F->element_at(ci);
        Element dd = (alpha + a * cc * cc) / (two * cc);
        if (dd * dd - b * cc * cc == beta)
          out.push_back({u, Poly(F, {dd, cc})});
      }
      if (alpha.is_zero()) {
        if (beta.is_zero()) {
          out.push_back({u, Poly::zero(F)});
        } else if (auto r = F->sqrt(beta)) {
          out.push_back({u, Poly::constant(*r)});
          out.push_back({u, Poly::constant(-*r)});
        }
      }
    }
  }
  return out;
}

std::vector<MumfordDivisor> theta_intersection(const HyperellipticCurve& c,
                                               const MumfordDivisor& z1,
                                               const MumfordDivisor& z2) {
  std::vector<MumfordDivisor> out;
  for (const MumfordDivisor& cl : enumerate_jacobian(c)) {
    if (cantor_sub(c, cl, z1).weight() > 1) continue;
    if (cantor_sub(c, cl, z2).weight() > 1) continue;
    out.push_back(cl);
  }
  return out;
}

bool ThetaIntersectionReport::ok() const {
  bool base = p0.ok() && sum_is_identity && frobenius_permutes &&
              predicted_in_pairwise && predicted_distinct && fourfold_excluded;
  if (!base) return false;
  if (!exhaustive) return true;
  if (!fourfold.empty()) return false;
  if (!theta_symmetric || !negation_swaps_translates) return false;
  // The enumerated pairwise intersections (0,1) and (0,3) must be exactly
  // the predicted singletons.
  if (pairwise.size() != 6) return false;
  if (pairwise[0].size() != 1 || !(pairwise[0][0] == c01)) return false;
  if (pairwise[2].size() != 1 || !(pairwise[2][0] == c03)) return false;
  return true;
}

Json ThetaIntersectionReport::to_json() const {
  Json j;
  j["curve"] = curve->to_string();
  j["extension_curve"] = curve_ext->to_string();
  j["point"] = p0.to_json();
  Json as = Json::array();
  for (const MumfordDivisor& a : alphas) as.push_back(a.to_json());
  j["alphas"] = std::move(as);
  j["sum_is_identity"] = sum_is_identity;
  j["frobenius_permutes"] = frobenius_permutes;
  j["predicted_01"] = c01.to_json();
  j["predicted_03"] = c03.to_json();
  j["predicted_in_pairwise"] = predicted_in_pairwise;
  j["predicted_distinct"] = predicted_distinct;
  j["fourfold_excluded"] = fourfold_excluded;
  j["exhaustive"] = exhaustive;
  if (exhaustive) {
    j["jacobian_size"] = jacobian_size;
    Json pw = Json::array();
    for (const auto& set : pairwise) {
      Json row = Json::array();
      for (const MumfordDivisor& d : set) row.push_back(d.to_json());
      pw.push_back(std::move(row));
    }
    j["pairwise_intersections"] = std::move(pw);
    Json ff = Json::array();
    for (const MumfordDivisor& d : fourfold) ff.push_back(d.to_json());
    j["fourfold_intersection"] = std::move(ff);
    j["theta_symmetric"] = theta_symmetric;
    j["negation_swaps_translates"] = negation_swaps_translates;
  }
  j["ok"] = ok();
  return j;
}

ThetaIntersectionReport build_theta_classes(HyperPtr c) {
  ADDLAW_CHECK(c->degree() == 5, "theta construction needs a degree-5 model");
  auto p0 = find_orbit4_point(*c);
  ADDLAW_CHECK(p0.has_value(), kNoOrbit4Message);

  ThetaIntersectionReport rep;
  rep.curve = c;
  rep.p0 = *p0;
  FieldRef L = rep.p0.quartic;
  uint64_t q = c->field()->order();
  HyperPtr cl = c->base_change(L);
  rep.curve_ext = cl;

  Element x0 = rep.p0.x0, y0 = rep.p0.y0;
  Element x1 = L->frobenius(x0, q), y1 = L->frobenius(y0, q);
  // The four orbit points: P0 = (x0,y0), P0^s = (x1,y1), conj P0 = (x0,-y0),
  // conj P0^s = (x1,-y1). Each alpha is a sum of two consecutive ones.
  MumfordDivisor a0 = mumford_from_pair(*cl, x0, y0, x1, y1);
  MumfordDivisor a1 = mumford_from_pair(*cl, x1, y1, x0, -y0);
  MumfordDivisor a2 = mumford_from_pair(*cl, x0, -y0, x1, -y1);
  MumfordDivisor a3 = mumford_from_pair(*cl, x1, -y1, x0, y0);
  ADDLAW_CHECK(a2 == cantor_neg(a0) && a3 == cantor_neg(a1),
               "alpha classes are not negation-paired");
  rep.alphas = {a0, a1, a2, a3};

  MumfordDivisor sum = mumford_identity(L);
  for (const MumfordDivisor& a : rep.alphas) sum = cantor_add(*cl, sum, a);
  rep.sum_is_identity = sum.is_identity();

  rep.frobenius_permutes = true;
  for (int i = 0; i < 4; ++i) {
    if (!(frobenius_divisor(rep.alphas[i], q) == rep.alphas[(i + 1) % 4]))
      rep.frobenius_permutes = false;
  }

  // Predicted members of the pairwise intersections.
  rep.c01 = cantor_add(*cl, mumford_from_point(*cl, x0, -y0), a0);
  rep.c03 = cantor_add(*cl, mumford_from_point(*cl, x1, -y1), a0);
  auto on_translate = [&](const MumfordDivisor& d, const MumfordDivisor& z) {
    return cantor_sub(*cl, d, z).weight() <= 1;
  };
  rep.predicted_in_pairwise =
      on_translate(rep.c01, a0) && on_translate(rep.c01, a1) &&
      on_translate(rep.c03, a0) && on_translate(rep.c03, a3);
  rep.predicted_distinct = !(rep.c01 == rep.c03);
  // Any four-fold member lies in both pairwise intersections; the predicted
  // classes are their only members, and each fails the remaining translates.
  rep.fourfold_excluded =
      !on_translate(rep.c01, a2) && !on_translate(rep.c01, a3) &&
      !on_translate(rep.c03, a1) && !on_translate(rep.c03, a2);

  if (L->order() <= 128) {
    rep.exhaustive = true;
    std::vector<MumfordDivisor> all = enumerate_jacobian(*cl);
    rep.jacobian_size = all.size();
    std::vector<std::vector<bool>> member(4);
    for (int i = 0; i < 4; ++i) {
      member[i].reserve(all.size());
      for (const MumfordDivisor& d : all)
        member[i].push_back(on_translate(d, rep.alphas[i]));
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::vector<MumfordDivisor> inter;
        for (size_t t = 0; t < all.size(); ++t)
          if (member[i][t] && member[j][t]) inter.push_back(all[t]);
        rep.pairwise.push_back(std::move(inter));
      }
    for (size_t t = 0; t < all.size(); ++t)
      if (member[0][t] && member[1][t] && member[2][t] && member[3][t])
        rep.fourfold.push_back(all[t]);
    // Theta symmetry and its effect on the translates: negation fixes the
    // weight filtration and swaps the translate by a0 with the translate by
    // a2 = -a0 (and a1 with a3).
    rep.theta_symmetric = true;
    for (const MumfordDivisor& d : all) {
      bool w = d.weight() <= 1;
      bool wn = cantor_neg(d).weight() <= 1;
      if (w != wn) rep.theta_symmetric = false;
    }
    auto negated_set = [&](int i) {
      std::set<MumfordDivisor> s;
      for (size_t t = 0; t < all.size(); ++t)
        if (member[i][t]) s.insert(cantor_neg(all[t]));
      return s;
    };
    auto plain_set = [&](int i) {
      std::set<MumfordDivisor> s;
      for (size_t t = 0; t < all.size(); ++t)
        if (member[i][t]) s.insert(all[t]);
      return s;
    };
    rep.negation_swaps_translates =
        negated_set(0) == plain_set(2) && negated_set(1) == plain_set(3);
  }
  return rep;
}

std::vector<HyperPtr> scan_genus2_counterexamples(FieldRef field,
                                                  unsigned jobs) {
  ADDLAW_CHECK(field->characteristic() != 2,
               "scan covers odd characteristic only");
  uint64_t q = field->order();
  ADDLAW_CHECK(q <= 16, "degeneracy scan is designed for tiny fields");
  FieldRef K = Field::extension(field, 2);
  K->require_enumerable("orbit-existence scan");
  uint64_t n2 = K->order();
  // Squares table of the quadratic extension, by element index.
  std::vector<char> is_sq(n2, 0);
  for (uint64_t t = 0; t < n2; ++t) {
    Element e = K->element_at(t);
    is_sq[(e * e).index()] = 1;
  }
  std::vector<HyperPtr> hits;
  for (int deg = 5; deg <= 6; ++deg) {
    uint64_t low_count = 1;
    for (int i = 0; i < deg; ++i) low_count *= q;
    // Flat index over (lead, low) with lead outermost, low fastest.
    auto scan_chunk = [&, deg, low_count](size_t lo, size_t hi) {
      std::vector<HyperPtr> part;
      for (uint64_t t = lo; t < hi; ++t) {
        uint64_t lead = 1 + t / low_count;
        uint64_t low = t % low_count;
        std::vector<Element> cs;
        uint64_t rest = low;
        for (int i = 0; i < deg; ++i) {
          cs.push_back(field->element_at(rest % q));
          rest /= q;
        }
        cs.push_back(field->element_at(lead));
        Poly f(field, std::move(cs));
        if (!f.is_squarefree()) continue;
        Poly fK = embed_poly(f, K);
        bool has_point = false;
        for (uint64_t xi = 0; xi < n2 && !has_point; ++xi) {
          Element val = fK.eval(K->element_at(xi));
          if (!val.is_zero() && !is_sq[val.index()]) has_point = true;
        }
        if (!has_point)
          part.push_back(std::make_shared<HyperellipticCurve>(field, f));
      }
      return part;
    };
    std::vector<HyperPtr> deg_hits = parallel_reduce(
        (q - 1) * low_count, jobs, std::vector<HyperPtr>{}, scan_chunk,
        [](std::vector<HyperPtr> acc, std::vector<HyperPtr> part) {
          for (HyperPtr& h : part) acc.push_back(std::move(h));
          return acc;
        });
    for (HyperPtr& h : deg_hits) hits.push_back(std::move(h));
  }
  return hits;
}

}  // namespace addlaw
