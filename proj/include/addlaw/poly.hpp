#pragma once

#include <string>
#include <utility>
#include <vector>

#include "addlaw/field.hpp"

namespace addlaw {

// Dense univariate polynomial over a finite field, constant coefficient
// first, with no trailing zero coefficients (the zero polynomial has an empty
// coefficient vector). Used for Mumford representations, interpolation and
// irreducibility work; not performance critical.
class Poly {
 public:
  // Unusable placeholder (no field); assign before use.
  Poly() = default;
  explicit Poly(FieldRef f) : f_(f) {}
  Poly(FieldRef f, std::vector<Element> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

  static Poly zero(FieldRef f) { return Poly(f); }
  static Poly constant(const Element& a) { return Poly(a.field(), {a}); }
  static Poly x(FieldRef f) { return Poly(f, {f->zero(), f->one()}); }
  // x - a
  static Poly linear_root(const Element& a) { return Poly(a.field(), {-a, a.field()->one()}); }
  static Poly from_int_coeffs(FieldRef f, const std::vector<int64_t>& coeffs);

  FieldRef field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }
  // Coefficient of x^i (zero beyond the degree).
  Element at(size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
  Element lc() const {
    ADDLAW_CHECK(!c_.empty(), "leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<Element>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Element& s) const;
  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly monic() const;
  // Quotient and remainder; the divisor may have any nonzero leading
  // coefficient.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Element eval(const Element& x) const;
  Poly derivative() const;

  // Monic gcd.
  static Poly gcd(Poly a, Poly b);
  // Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);

  Poly powmod(uint64_t e, const Poly& mod) const;
  bool is_squarefree() const;
  bool is_irreducible() const;

  // All roots in the base field, ascending by element index. Requires an
  // enumerable field.
  std::vector<Element> roots() const;

  // Lagrange interpolation through distinct x-values.
  static Poly interpolate(const std::vector<Element>& xs, const std::vector<Element>& ys);

  std::string to_string() const;  // e.g. "x^3 + 2*x + 1"

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  FieldRef f_;
  std::vector<Element> c_;
};

}  // namespace addlaw
