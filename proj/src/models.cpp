#include "addlaw/models.hpp"

#include <algorithm>

#include "addlaw/bihom.hpp"

namespace addlaw {

// ---- Point ----

Point::Point(std::vector<Element> coords) : c_(std::move(coords)) {
  ADDLAW_CHECK(!c_.empty(), "point needs coordinates");
  size_t first = c_.size();
  for (size_t i = 0; i < c_.size(); ++i) {
    ADDLAW_CHECK(c_[i].field() == c_[0].field(), "point coordinates in different fields");
    if (first == c_.size() && !c_[i].is_zero()) first = i;
  }
  ADDLAW_CHECK(first < c_.size(), "the zero vector is not a projective point");
  if (!c_[first].is_one()) {
    Element s = c_[first].inv();
    for (auto& x : c_) x = x * s;
  }
}

bool Point::operator<(const Point& o) const {
  ADDLAW_CHECK(c_.size() == o.c_.size(), "comparing points of different dimension");
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].index() != o.c_[i].index()) return c_[i].index() < o.c_[i].index();
  }
  return false;
}

std::string Point::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ":";
    out += c_[i].to_string();
  }
  return out + ")";
}

Point frobenius_point(const Point& p, uint64_t q0) {
  FieldRef f = p.coords()[0].field();
  std::vector<Element> c;
  c.reserve(p.dim());
  for (const auto& x : p.coords()) c.push_back(f->frobenius(x, q0));
  return Point(std::move(c));
}

std::string model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::weierstrass: return "weierstrass";
    case ModelKind::edwards: return "edwards";
    case ModelKind::hessian: return "hessian";
  }
  return "?";
}

// ---- CurveModel shared behaviour ----

Point CurveModel::mul(const Point& p, uint64_t n) const {
  Point acc = identity();
  Point base = p;
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    base = add(base, base);
    n >>= 1;
  }
  return acc;
}

const std::vector<Point>& CurveModel::enumerate() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (pts_cache_.empty()) {
    field()->require_enumerable("point enumeration");
    pts_cache_ = enumerate_impl();
    std::sort(pts_cache_.begin(), pts_cache_.end());
  }
  return pts_cache_;
}

Point CurveModel::random_point(Rng& rng) const {
  const auto& pts = enumerate();
  return pts[rng.below(pts.size())];
}

// ---- Weierstrass ----

WeierstrassCurve::WeierstrassCurve(FieldRef f, Element a1, Element a2, Element a3, Element a4,
                                   Element a6)
    : f_(f), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6), disc_(f->zero()) {
  for (const Element& a : {a1, a2, a3, a4, a6})
    ADDLAW_CHECK(a.field() == f, "curve coefficient in the wrong field");
  Element b2 = a1 * a1 + f->from_int(4) * a2;
  Element b4 = f->from_int(2) * a4 + a1 * a3;
  Element b6 = a3 * a3 + f->from_int(4) * a6;
  Element b8 = a1 * a1 * a6 + f->from_int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  disc_ = -(b2 * b2 * b8) - f->from_int(8) * (b4 * b4 * b4) - f->from_int(27) * (b6 * b6) +
          f->from_int(9) * b2 * b4 * b6;
  ADDLAW_CHECK(!disc_.is_zero(), "singular Weierstrass coefficients");
}

std::shared_ptr<WeierstrassCurve> WeierstrassCurve::make(FieldRef f,
                                                         const std::vector<int64_t>& a) {
  ADDLAW_CHECK(a.size() == 5, "expected coefficients a1,a2,a3,a4,a6");
  return std::make_shared<WeierstrassCurve>(f, f->from_int(a[0]), f->from_int(a[1]),
                                            f->from_int(a[2]), f->from_int(a[3]),
                                            f->from_int(a[4]));
}

bool WeierstrassCurve::on_curve(const Point& p) const {
  ADDLAW_CHECK(p.dim() == 3, "Weierstrass points have 3 coordinates");
  const Element &X = p[0], &Y = p[1], &Z = p[2];
  Element lhs = Y * Y * Z + a1_ * X * Y * Z + a3_ * Y * Z * Z;
  Element rhs = X * X * X + a2_ * X * X * Z + a4_ * X * Z * Z + a6_ * Z * Z * Z;
  return lhs == rhs;
}

Point WeierstrassCurve::identity() const {
  return Point({f_->zero(), f_->one(), f_->zero()});
}

std::pair<Element, Element> WeierstrassCurve::affine(const Point& p) const {
  ADDLAW_CHECK(!p[2].is_zero(), "the identity has no affine coordinates");
  Element iz = p[2].inv();
  return {p[0] * iz, p[1] * iz};
}

Point WeierstrassCurve::from_affine(const Element& x, const Element& y) const {
  return Point({x, y, f_->one()});
}

Point WeierstrassCurve::negate(const Point& p) const {
  if (is_identity(p)) return p;
  auto [x, y] = affine(p);
  return from_affine(x, -y - a1_ * x - a3_);
}

Point WeierstrassCurve::add(const Point& p, const Point& q) const {
  if (is_identity(p)) return q;
  if (is_identity(q)) return p;
  if (q == negate(p)) return identity();
  auto [x1, y1] = affine(p);
  auto [x2, y2] = affine(q);
  Element lam = f_->zero();
  if (p == q) {
    Element denom = f_->from_int(2) * y1 + a1_ * x1 + a3_;
    lam = (f_->from_int(3) * x1 * x1 + f_->from_int(2) * a2_ * x1 + a4_ - a1_ * y1) / denom;
  } else {
    // Distinct points with equal x are negatives of each other (handled above).
    lam = (y2 - y1) / (x2 - x1);
  }
  Element nu = y1 - lam * x1;
  Element x3 = lam * lam + a1_ * lam - a2_ - x1 - x2;
  Element y3 = -(lam + a1_) * x3 - nu - a3_;
  return from_affine(x3, y3);
}

std::vector<Element> WeierstrassCurve::y_solutions(const Element& x) const {
  Element b = a1_ * x + a3_;
  Element rhs = x * x * x + a2_ * x * x + a4_ * x + a6_;
  std::vector<Element> out;
  if (f_->characteristic() == 2) {
    if (b.is_zero()) {
      out.push_back(*f_->sqrt(rhs));
    } else if (auto z = f_->solve_artin_schreier(rhs / (b * b))) {
      out.push_back(b * *z);
      out.push_back(b * (*z + f_->one()));
    }
  } else {
    Element disc = b * b + f_->from_int(4) * rhs;
    if (auto s = f_->sqrt(disc)) {
      Element half = f_->from_int(2).inv();
      out.push_back((-b + *s) * half);
      if (!s->is_zero()) out.push_back((-b - *s) * half);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> WeierstrassCurve::enumerate_impl() const {
  std::vector<Point> pts{identity()};
  for (uint64_t i = 0; i < f_->order(); ++i) {
    Element x = f_->element_at(i);
    for (const Element& y : y_solutions(x)) pts.push_back(from_affine(x, y));
  }
  return pts;
}

std::string WeierstrassCurve::to_string() const {
  std::string out = "weierstrass:" + f_->short_string() + ":";
  const Element coeffs[5] = {a1_, a2_, a3_, a4_, a6_};
  for (int i = 0; i < 5; ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i].index());
  }
  return out;
}

std::shared_ptr<CurveModel> WeierstrassCurve::base_change(FieldRef to) const {
  return std::make_shared<WeierstrassCurve>(to, to->embed(a1_), to->embed(a2_), to->embed(a3_),
                                            to->embed(a4_), to->embed(a6_));
}

// ---- Edwards ----

EdwardsCurve::EdwardsCurve(FieldRef f, Element d) : f_(f), d_(d), A_(f->zero()), B_(f->zero()) {
  ADDLAW_CHECK(d.field() == f, "curve coefficient in the wrong field");
  ADDLAW_CHECK(f->characteristic() != 2, "this quartic model needs odd characteristic");
  ADDLAW_CHECK(!d.is_zero() && !d.is_one(), "parameter d must avoid 0 and 1");
  Element one = f->one();
  A_ = f->from_int(2) * (one + d) / (one - d);
  B_ = f->from_int(4) / (one - d);
  w_ = std::make_shared<WeierstrassCurve>(f, f->zero(), A_ * B_, f->zero(), B_ * B_, f->zero());
}

bool EdwardsCurve::on_curve(const Point& p) const {
  ADDLAW_CHECK(p.dim() == 4, "quartic model points have 4 coordinates");
  const Element &X0 = p[0], &X1 = p[1], &X2 = p[2], &X3 = p[3];
  return X0 * X3 == X1 * X2 && X1 * X1 + X2 * X2 == X0 * X0 + d_ * X3 * X3;
}

Point EdwardsCurve::identity() const {
  return Point({f_->one(), f_->zero(), f_->one(), f_->zero()});
}

Point EdwardsCurve::from_affine(const Element& x, const Element& y) const {
  return Point({f_->one(), x, y, x * y});
}

Point EdwardsCurve::negate(const Point& p) const {
  return Point({p[0], -p[1], p[2], -p[3]});
}

Point EdwardsCurve::to_w(const Point& p) const {
  if (p[0].is_zero()) {
    if (p[1].is_zero()) {
      // (0:0:t:1) with t^2 = d
      Element t = p[2] / p[3];
      return w_->from_affine(-B_, -(B_ * B_) * t);
    }
    // (0:t:0:1) with t^2 = d: a 2-torsion point u^2 + Au + 1 = 0, v = 0
    Element t = p[1] / p[3];
    Element u = (t + f_->one()) / (t - f_->one());
    return w_->from_affine(B_ * u, f_->zero());
  }
  Element x = p[1] / p[0], y = p[2] / p[0];
  if (x.is_zero()) {
    if (y.is_one()) return w_->identity();
    return w_->from_affine(f_->zero(), f_->zero());  // (0,-1)
  }
  Element u = (f_->one() + y) / (f_->one() - y);
  Element v = u / x;
  return w_->from_affine(B_ * u, B_ * B_ * v);
}

Point EdwardsCurve::from_w(const Point& wp) const {
  if (w_->is_identity(wp)) return identity();
  auto [X, Y] = w_->affine(wp);
  Element u = X / B_, v = Y / (B_ * B_);
  if (u.is_zero()) return Point({f_->one(), f_->zero(), -f_->one(), f_->zero()});
  if (v.is_zero()) {
    Element t = (u + f_->one()) / (u - f_->one());
    return Point({f_->zero(), t, f_->zero(), f_->one()});
  }
  if (u == -f_->one()) return Point({f_->zero(), f_->zero(), -v, f_->one()});
  Element x = u / v, y = (u - f_->one()) / (u + f_->one());
  return from_affine(x, y);
}

Point EdwardsCurve::add(const Point& p, const Point& q) const {
  return from_w(w_->add(to_w(p), to_w(q)));
}

std::vector<Point> EdwardsCurve::enumerate_impl() const {
  std::vector<Point> pts;
  for (uint64_t i = 0; i < f_->order(); ++i) {
    Element x = f_->element_at(i);
    Element t = f_->one() - d_ * x * x;
    if (t.is_zero()) continue;
    Element rhs = (f_->one() - x * x) / t;
    if (auto r = f_->sqrt(rhs)) {
      pts.push_back(from_affine(x, *r));
      if (!r->is_zero()) pts.push_back(from_affine(x, -*r));
    }
  }
  if (auto s = f_->sqrt(d_)) {
    for (const Element& t : {*s, -*s}) {
      pts.push_back(Point({f_->zero(), f_->zero(), t, f_->one()}));
      pts.push_back(Point({f_->zero(), t, f_->zero(), f_->one()}));
    }
  }
  return pts;
}

std::string EdwardsCurve::to_string() const {
  return "edwards:" + f_->short_string() + ":" + std::to_string(d_.index());
}

std::shared_ptr<CurveModel> EdwardsCurve::base_change(FieldRef to) const {
  return std::make_shared<EdwardsCurve>(to, to->embed(d_));
}

// ---- Hessian ----

namespace {

// Dense trivariate homogeneous polynomial of fixed degree.
struct TriPoly {
  FieldRef f;
  unsigned deg;
  std::vector<uint64_t> c;  // over monomial_exponents(3, deg)

  TriPoly(FieldRef f_, unsigned deg_) : f(f_), deg(deg_) {
    c.assign(monomial_exponents(3, deg).size(), 0);
  }

  static size_t mono_index(unsigned deg, const ExpVec& e) {
    const auto& monos = monomial_exponents(3, deg);
    auto it = std::find(monos.begin(), monos.end(), e);
    ADDLAW_CHECK(it != monos.end(), "monomial not found");
    return (size_t)(it - monos.begin());
  }

  Element coeff(const ExpVec& e) const { return Element(f, c[mono_index(deg, e)]); }

  TriPoly operator*(const TriPoly& o) const {
    TriPoly r(f, deg + o.deg);
    const auto& ma = monomial_exponents(3, deg);
    const auto& mb = monomial_exponents(3, o.deg);
    for (size_t i = 0; i < ma.size(); ++i) {
      if (!c[i]) continue;
      for (size_t j = 0; j < mb.size(); ++j) {
        if (!o.c[j]) continue;
        ExpVec e = {ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]};
        size_t k = mono_index(r.deg, e);
        r.c[k] = f->add(r.c[k], f->mul(c[i], o.c[j]));
      }
    }
    return r;
  }

  TriPoly& add_scaled(const TriPoly& o, const Element& s) {
    ADDLAW_CHECK(deg == o.deg, "degree mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] = f->add(c[i], f->mul(s.index(), o.c[i]));
    return *this;
  }

  static TriPoly linear(FieldRef f, const Element& cx, const Element& cy, const Element& cz) {
    TriPoly r(f, 1);
    r.c = {cx.index(), cy.index(), cz.index()};  // monomials x, y, z
    return r;
  }
};

// Inverse of a 3x3 matrix over a field (columns given); throws when singular.
std::vector<std::vector<Element>> invert3(FieldRef f,
                                          const std::vector<std::vector<Element>>& m) {
  auto det2 = [&](size_t r0, size_t c0, size_t r1, size_t c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  Element det = m[0][0] * det2(1, 1, 2, 2) - m[0][1] * det2(1, 0, 2, 2) +
                m[0][2] * det2(1, 0, 2, 1);
  ADDLAW_CHECK(!det.is_zero(), "coordinate change is singular");
  Element idet = det.inv();
  std::vector<std::vector<Element>> inv(3, std::vector<Element>(3, f->zero()));
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // Cofactor expansion with the (-1)^{i+j} sign folded into index cycling.
      Element cof = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
      inv[j][i] = cof * idet;
    }
  }
  return inv;
}

std::vector<Element> mat_vec(FieldRef f, const std::vector<std::vector<Element>>& m,
                             const std::vector<Element>& v) {
  std::vector<Element> out(3, f->zero());
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

HessianCurve::HessianCurve(FieldRef f, Element a, Element d)
    : f_(f), a_(a), d_(d), lambda_(f->zero()) {
  ADDLAW_CHECK(a.field() == f && d.field() == f, "curve coefficient in the wrong field");
  Element smooth = a * (f->from_int(27) * a - d * d * d);
  ADDLAW_CHECK(!smooth.is_zero(), "singular cubic coefficients");

  bool char3 = f->characteristic() == 3;
  Element O0 = f->zero(), O1 = -f->one(), O2 = f->one();
  // Basis: e1 on the tangent at the identity, e2 the identity, e3 off the
  // tangent. The tangent at (0:-1:1) is d*X0 + 3*X1 + 3*X2 = 0 (X0 = 0 in
  // characteristic 3).
  std::vector<Element> e1, e3;
  if (char3) {
    e1 = {f->zero(), f->one(), f->zero()};
    e3 = {f->one(), f->zero(), f->zero()};
  } else {
    e1 = {f->from_int(-3), d, f->zero()};
    e3 = d.is_zero() ? std::vector<Element>{f->zero(), f->one(), f->zero()}
                     : std::vector<Element>{f->one(), f->zero(), f->zero()};
  }
  std::vector<Element> e2 = {O0, O1, O2};
  m_.assign(3, std::vector<Element>(3, f->zero()));
  for (size_t i = 0; i < 3; ++i) {
    m_[i][0] = e1[i];
    m_[i][1] = e2[i];
    m_[i][2] = e3[i];
  }
  minv_ = invert3(f, m_);

  // Substitute (X0,X1,X2) = M * (x,y,z) into a*X0^3 + X1^3 + X2^3 - d*X0*X1*X2
  // and collect the coefficients of the resulting cubic G(x,y,z).
  TriPoly L0 = TriPoly::linear(f, m_[0][0], m_[0][1], m_[0][2]);
  TriPoly L1 = TriPoly::linear(f, m_[1][0], m_[1][1], m_[1][2]);
  TriPoly L2 = TriPoly::linear(f, m_[2][0], m_[2][1], m_[2][2]);
  TriPoly G(f, 3);
  G.add_scaled(L0 * L0 * L0, a);
  G.add_scaled(L1 * L1 * L1, f->one());
  G.add_scaled(L2 * L2 * L2, f->one());
  G.add_scaled(L0 * L1 * L2, -d);

  // The identity must be an inflection with tangent z = 0 in the new frame.
  ADDLAW_CHECK(G.coeff({0, 3, 0}).is_zero(), "identity is not on the curve");
  ADDLAW_CHECK(G.coeff({1, 2, 0}).is_zero(), "tangency failure at the identity");
  ADDLAW_CHECK(G.coeff({2, 1, 0}).is_zero(), "inflection failure at the identity");
  Element c021 = G.coeff({0, 2, 1});
  ADDLAW_CHECK(!c021.is_zero(), "degenerate tangent frame");
  Element ic = c021.inv();
  Element c300 = G.coeff({3, 0, 0});
  lambda_ = -c300 * ic;
  ADDLAW_CHECK(!lambda_.is_zero(), "tangent basis point lies on the curve");
  Element w_a1 = G.coeff({1, 1, 1}) * ic;
  Element w_a2 = -G.coeff({2, 0, 1}) * ic;
  Element w_a3 = G.coeff({0, 1, 2}) * ic * lambda_;
  Element w_a4 = -G.coeff({1, 0, 2}) * ic * lambda_;
  Element w_a6 = -G.coeff({0, 0, 3}) * ic * lambda_ * lambda_;
  w_ = std::make_shared<WeierstrassCurve>(f, w_a1, w_a2, w_a3, w_a4, w_a6);
}

bool HessianCurve::on_curve(const Point& p) const {
  ADDLAW_CHECK(p.dim() == 3, "cubic model points have 3 coordinates");
  const Element &X = p[0], &Y = p[1], &Z = p[2];
  return a_ * X * X * X + Y * Y * Y + Z * Z * Z == d_ * X * Y * Z;
}

Point HessianCurve::identity() const {
  return Point({f_->zero(), -f_->one(), f_->one()});
}

Point HessianCurve::negate(const Point& p) const { return Point({p[0], p[2], p[1]}); }

Point HessianCurve::to_w(const Point& p) const {
  if (p == identity()) return w_->identity();
  std::vector<Element> prime = mat_vec(f_, minv_, p.coords());
  ADDLAW_CHECK(!prime[2].is_zero(), "only the identity leaves the affine frame");
  Element iz = prime[2].inv();
  return w_->from_affine(lambda_ * prime[0] * iz, lambda_ * prime[1] * iz);
}

Point HessianCurve::from_w(const Point& wp) const {
  if (w_->is_identity(wp)) return identity();
  auto [X, Y] = w_->affine(wp);
  Element il = lambda_.inv();
  std::vector<Element> prime = {X * il, Y * il, f_->one()};
  return Point(mat_vec(f_, m_, prime));
}

Point HessianCurve::add(const Point& p, const Point& q) const {
  return from_w(w_->add(to_w(p), to_w(q)));
}

std::vector<Point> HessianCurve::enumerate_impl() const {
  std::vector<Point> pts;
  // Chart X0 = 1.
  for (uint64_t i = 0; i < f_->order(); ++i) {
    Element y = f_->element_at(i);
    for (uint64_t j = 0; j < f_->order(); ++j) {
      Element z = f_->element_at(j);
      Point p({f_->one(), y, z});
      if (on_curve(p)) pts.push_back(p);
    }
  }
  // Chart X0 = 0: points (0:1:z) with 1 + z^3 = 0.
  for (uint64_t j = 0; j < f_->order(); ++j) {
    Element z = f_->element_at(j);
    if ((f_->one() + z * z * z).is_zero()) pts.push_back(Point({f_->zero(), f_->one(), z}));
  }
  return pts;
}

std::string HessianCurve::to_string() const {
  return "hessian:" + f_->short_string() + ":" + std::to_string(a_.index()) + "," +
         std::to_string(d_.index());
}

std::shared_ptr<CurveModel> HessianCurve::base_change(FieldRef to) const {
  return std::make_shared<HessianCurve>(to, to->embed(a_), to->embed(d_));
}

// ---- parsing ----

CurvePtr parse_curve(const std::string& s) {
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
  ADDLAW_CHECK(parts.size() >= 3, "curve string needs model:field:coefficients");
  const std::string& model = parts[0];
  std::string field_str = parts[1];
  for (size_t i = 2; i + 1 < parts.size(); ++i) field_str += ":" + parts[i];
  FieldRef f = Field::parse(field_str);
  std::vector<Element> coeffs;
  {
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
  }
  if (model == "weierstrass") {
    ADDLAW_CHECK(coeffs.size() == 5, "weierstrass curves need a1,a2,a3,a4,a6");
    return std::make_shared<WeierstrassCurve>(f, coeffs[0], coeffs[1], coeffs[2], coeffs[3],
                                              coeffs[4]);
  }
  if (model == "edwards") {
    ADDLAW_CHECK(coeffs.size() == 1, "edwards curves need d");
    return std::make_shared<EdwardsCurve>(f, coeffs[0]);
  }
  if (model == "hessian") {
    ADDLAW_CHECK(coeffs.size() == 2, "hessian curves need a,d");
    return std::make_shared<HessianCurve>(f, coeffs[0], coeffs[1]);
  }
  throw error("unknown curve model '" + model + "'");
}

}  // namespace addlaw
