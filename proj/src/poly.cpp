#include "addlaw/poly.hpp"

#include <tuple>

namespace addlaw {

Poly Poly::from_int_coeffs(FieldRef f, const std::vector<int64_t>& coeffs) {
  std::vector<Element> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.push_back(f->from_int(v));
  return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  ADDLAW_CHECK(f_ == o.f_, "polynomials over different fields");
  std::vector<Element> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = at(i) + o.at(i);
  return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  ADDLAW_CHECK(f_ == o.f_, "polynomials over different fields");
  std::vector<Element> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = at(i) - o.at(i);
  return Poly(f_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Element> r(c_);
  for (auto& e : r) e = -e;
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  ADDLAW_CHECK(f_ == o.f_, "polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return Poly(f_);
  std::vector<Element> r(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Element& s) const {
  std::vector<Element> r(c_);
  for (auto& e : r) e = e * s;
  return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return *this * c_.back().inv();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  ADDLAW_CHECK(f_ == d.f_, "polynomials over different fields");
  ADDLAW_CHECK(!d.c_.empty(), "polynomial division by zero");
  if (degree() < d.degree()) return {Poly(f_), *this};
  Element ilc = d.lc().inv();
  std::vector<Element> rem(c_);
  std::vector<Element> quo(degree() - d.degree() + 1, f_->zero());
  for (int i = degree(); i >= d.degree(); --i) {
    Element q = rem[i] * ilc;
    if (q.is_zero()) continue;
    quo[i - d.degree()] = q;
    for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
  }
  return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

Element Poly::eval(const Element& x) const {
  Element acc = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Element> r(c_.size() - 1, f_->zero());
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * f_->from_int((int64_t)i);
  return Poly(f_, std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& a, const Poly& b) {
  FieldRef f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f->one()), s1 = Poly(f);
  Poly t0 = Poly(f), t1 = Poly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && !r0.lc().is_one()) {
    Element ilc = r0.lc().inv();
    r0 = r0 * ilc;
    s0 = s0 * ilc;
    t0 = t0 * ilc;
  }
  return {r0, s0, t0};
}

Poly Poly::powmod(uint64_t e, const Poly& mod) const {
  Poly result = Poly::constant(f_->one()) % mod;
  Poly base = *this % mod;
  while (e > 0) {
    if (e & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return result;
}

bool Poly::is_squarefree() const {
  ADDLAW_CHECK(degree() >= 0, "squarefreeness of the zero polynomial");
  if (degree() == 0) return true;
  Poly d = derivative();
  if (d.is_zero()) return false;  // p-th power in characteristic p
  return gcd(*this, d).degree() == 0;
}

bool Poly::is_irreducible() const {
  int n = degree();
  ADDLAW_CHECK(n >= 1, "irreducibility requires degree at least 1");
  if (n == 1) return true;
  uint64_t q = f_->order();
  Poly f = monic();
  Poly x = Poly::x(f_);
  // x^{q^n} == x mod f, and gcd(x^{q^{n/l}} - x, f) = 1 for primes l | n.
  Poly t = x;
  for (int i = 0; i < n; ++i) t = t.powmod(q, f);
  if (!((t - x) % f).is_zero()) return false;
  for (uint64_t l : prime_factors((uint64_t)n)) {
    Poly u = x;
    for (uint64_t i = 0; i < (uint64_t)n / l; ++i) u = u.powmod(q, f);
    if (gcd(u - x, f).degree() != 0) return false;
  }
  return true;
}

std::vector<Element> Poly::roots() const {
  ADDLAW_CHECK(!is_zero(), "roots of the zero polynomial");
  f_->require_enumerable("polynomial root scan");
  std::vector<Element> out;
  for (uint64_t i = 0; i < f_->order(); ++i) {
    Element x = f_->element_at(i);
    if (eval(x).is_zero()) out.push_back(x);
  }
  return out;
}

Poly Poly::interpolate(const std::vector<Element>& xs, const std::vector<Element>& ys) {
  ADDLAW_CHECK(!xs.empty() && xs.size() == ys.size(), "interpolation needs matching point lists");
  FieldRef f = xs[0].field();
  Poly acc(f);
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly li = Poly::constant(f->one());
    Element denom = f->one();
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * Poly::linear_root(xs[j]);
      denom = denom * (xs[i] - xs[j]);
    }
    acc = acc + li * (ys[i] / denom);
  }
  return acc;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[i].to_string();
    if (i == 0) {
      out += coeff;
    } else {
      if (!c_[i].is_one()) out += coeff + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace addlaw
