#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "addlaw/field.hpp"

namespace addlaw {

// A projective point, canonicalized so the first nonzero coordinate is 1.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Element> coords);

  bool valid() const { return !c_.empty(); }
  size_t dim() const { return c_.size(); }  // number of homogeneous coordinates
  const std::vector<Element>& coords() const { return c_; }
  const Element& operator[](size_t i) const { return c_[i]; }

  bool operator==(const Point& o) const { return c_ == o.c_; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const;  // lexicographic by element index

  std::string to_string() const;  // "(a:b:c)"

 private:
  std::vector<Element> c_;
};

// Coordinate-wise Frobenius x -> x^{q0}.
Point frobenius_point(const Point& p, uint64_t q0);

enum class ModelKind { weierstrass, edwards, hessian };
std::string model_kind_name(ModelKind k);

// A projective curve model carrying a total group-law oracle. The oracle is
// the ground truth that all addition-law tuples are checked against; each
// model implements it by classical chord-and-tangent arithmetic (directly, or
// through an explicit isomorphism to a Weierstrass model with all exceptional
// cases patched by hand).
class CurveModel {
 public:
  virtual ~CurveModel() = default;

  virtual ModelKind kind() const = 0;
  virtual FieldRef field() const = 0;
  virtual unsigned num_coords() const = 0;  // r+1 for a model in P^r
  virtual bool on_curve(const Point& p) const = 0;
  virtual Point identity() const = 0;
  virtual Point negate(const Point& p) const = 0;
  virtual Point add(const Point& p, const Point& q) const = 0;
  virtual std::string to_string() const = 0;
  virtual std::shared_ptr<CurveModel> base_change(FieldRef to) const = 0;

  Point sub(const Point& p, const Point& q) const { return add(p, negate(q)); }
  Point mul(const Point& p, uint64_t n) const;

  // All rational points, sorted canonically. Cached; requires an enumerable
  // field.
  const std::vector<Point>& enumerate() const;
  Point random_point(Rng& rng) const;

 protected:
  virtual std::vector<Point> enumerate_impl() const = 0;

 private:
  mutable std::mutex cache_mu_;
  mutable std::vector<Point> pts_cache_;
};

using CurvePtr = std::shared_ptr<const CurveModel>;

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 in P^2, identity (0:1:0).
// Valid in every characteristic; rejects singular coefficient tuples.
class WeierstrassCurve : public CurveModel {
 public:
  WeierstrassCurve(FieldRef f, Element a1, Element a2, Element a3, Element a4, Element a6);
  static std::shared_ptr<WeierstrassCurve> make(FieldRef f,
                                                const std::vector<int64_t>& a13466);

  ModelKind kind() const override { return ModelKind::weierstrass; }
  FieldRef field() const override { return f_; }
  unsigned num_coords() const override { return 3; }
  bool on_curve(const Point& p) const override;
  Point identity() const override;
  Point negate(const Point& p) const override;
  Point add(const Point& p, const Point& q) const override;
  std::string to_string() const override;
  std::shared_ptr<CurveModel> base_change(FieldRef to) const override;

  Element a1() const { return a1_; }
  Element a2() const { return a2_; }
  Element a3() const { return a3_; }
  Element a4() const { return a4_; }
  Element a6() const { return a6_; }
  Element discriminant() const { return disc_; }

  // Affine chart helpers (the only point off the chart is the identity).
  bool is_identity(const Point& p) const { return p[2].is_zero(); }
  std::pair<Element, Element> affine(const Point& p) const;
  Point from_affine(const Element& x, const Element& y) const;
  // y-solutions over x: the roots of y^2 + (a1 x + a3) y - rhs(x).
  std::vector<Element> y_solutions(const Element& x) const;

 protected:
  std::vector<Point> enumerate_impl() const override;

 private:
  FieldRef f_;
  Element a1_, a2_, a3_, a4_, a6_, disc_;
};

// Quartic model X1^2 + X2^2 = X0^2 + d X3^2, X0 X3 = X1 X2 in P^3, with
// identity (1:0:1:0); requires odd characteristic and d not in {0,1}. The
// group law is transported through a Montgomery-to-Weierstrass isomorphism
// covering every projective point, including the four points on X0 = 0 that
// exist when d is a square.
class EdwardsCurve : public CurveModel {
 public:
  EdwardsCurve(FieldRef f, Element d);

  ModelKind kind() const override { return ModelKind::edwards; }
  FieldRef field() const override { return f_; }
  unsigned num_coords() const override { return 4; }
  bool on_curve(const Point& p) const override;
  Point identity() const override;
  Point negate(const Point& p) const override;
  Point add(const Point& p, const Point& q) const override;
  std::string to_string() const override;
  std::shared_ptr<CurveModel> base_change(FieldRef to) const override;

  Element d() const { return d_; }
  // (x, y) -> (1 : x : y : xy).
  Point from_affine(const Element& x, const Element& y) const;

 protected:
  std::vector<Point> enumerate_impl() const override;

 private:
  // Montgomery chart: B v^2 = u^3 + A u^2 + u, embedded in the Weierstrass
  // curve y^2 = x^3 + AB x^2 + B^2 x via (u, v) -> (Bu, B^2 v).
  Point to_w(const Point& p) const;
  Point from_w(const Point& w) const;

  FieldRef f_;
  Element d_, A_, B_;
  std::shared_ptr<WeierstrassCurve> w_;
};

// Twisted cubic a X0^3 + X1^3 + X2^3 = d X0 X1 X2 in P^2 with identity
// (0:-1:1); smooth exactly when a(27a - d^3) != 0 (in characteristic 3 this
// degenerates to ad != 0). The group law is transported through an explicit
// linear equivalence to a Weierstrass model; the identity is the only point
// outside the affine chart of that equivalence.
class HessianCurve : public CurveModel {
 public:
  HessianCurve(FieldRef f, Element a, Element d);

  ModelKind kind() const override { return ModelKind::hessian; }
  FieldRef field() const override { return f_; }
  unsigned num_coords() const override { return 3; }
  bool on_curve(const Point& p) const override;
  Point identity() const override;
  Point negate(const Point& p) const override;
  Point add(const Point& p, const Point& q) const override;
  std::string to_string() const override;
  std::shared_ptr<CurveModel> base_change(FieldRef to) const override;

  Element a() const { return a_; }
  Element d() const { return d_; }

 protected:
  std::vector<Point> enumerate_impl() const override;

 private:
  Point to_w(const Point& p) const;
  Point from_w(const Point& w) const;

  FieldRef f_;
  Element a_, d_;
  // Columns of the linear change of coordinates and its inverse.
  std::vector<std::vector<Element>> m_, minv_;
  Element lambda_;  // affine rescaling factor into the Weierstrass chart
  std::shared_ptr<WeierstrassCurve> w_;
};

// Parses "model:field:coeffs" where coeffs are canonical element indices,
// e.g. "weierstrass:7:0,0,0,1,1", "edwards:13:5", "hessian:7:2,0".
// Field strings containing ':' (explicit moduli, towers) are supported; the
// final segment is always the coefficient list.
CurvePtr parse_curve(const std::string& s);

}  // namespace addlaw
