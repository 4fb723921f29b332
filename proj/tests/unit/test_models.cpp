#include "doctest.h"

#include <set>

#include "addlaw/models.hpp"

using namespace addlaw;

namespace {

// Exhaustive abelian-group axioms against the model's own enumeration.
void check_group_axioms(const CurveModel& E) {
  const auto& pts = E.enumerate();
  REQUIRE(!pts.empty());
  Point O = E.identity();
  CHECK(E.on_curve(O));
  std::set<Point> ptset(pts.begin(), pts.end());
  CHECK(ptset.size() == pts.size());
  CHECK(ptset.count(O) == 1);

  for (const Point& p : pts) {
    CHECK(E.on_curve(p));
    CHECK(E.add(p, O) == p);
    CHECK(E.add(O, p) == p);
    Point np = E.negate(p);
    CHECK(ptset.count(np) == 1);
    CHECK(E.add(p, np) == O);
    for (const Point& q : pts) {
      Point s = E.add(p, q);
      CHECK(E.on_curve(s));
      CHECK(ptset.count(s) == 1);
      CHECK(E.add(q, p) == s);
    }
  }
  // Associativity, exhaustively.
  for (const Point& p : pts)
    for (const Point& q : pts)
      for (const Point& r : pts) CHECK(E.add(E.add(p, q), r) == E.add(p, E.add(q, r)));
  // Lagrange: the group order kills every point.
  for (const Point& p : pts) CHECK(E.mul(p, pts.size()) == O);
}

// Independent brute-force point count scanning all of P^2 via on_curve.
size_t brute_count_p2(const CurveModel& E) {
  FieldRef F = E.field();
  size_t n = 0;
  for (uint64_t y = 0; y < F->order(); ++y)
    for (uint64_t z = 0; z < F->order(); ++z)
      if (E.on_curve(Point({F->one(), F->element_at(y), F->element_at(z)}))) ++n;
  for (uint64_t z = 0; z < F->order(); ++z)
    if (E.on_curve(Point({F->zero(), F->one(), F->element_at(z)}))) ++n;
  if (E.on_curve(Point({F->zero(), F->zero(), F->one()}))) ++n;
  return n;
}

size_t brute_count_p3(const CurveModel& E) {
  FieldRef F = E.field();
  size_t n = 0;
  uint64_t N = F->order();
  for (uint64_t a = 0; a < N; ++a)
    for (uint64_t b = 0; b < N; ++b)
      for (uint64_t c = 0; c < N; ++c)
        if (E.on_curve(Point({F->one(), F->element_at(a), F->element_at(b), F->element_at(c)})))
          ++n;
  for (uint64_t b = 0; b < N; ++b)
    for (uint64_t c = 0; c < N; ++c)
      if (E.on_curve(Point({F->zero(), F->one(), F->element_at(b), F->element_at(c)}))) ++n;
  for (uint64_t c = 0; c < N; ++c)
    if (E.on_curve(Point({F->zero(), F->zero(), F->one(), F->element_at(c)}))) ++n;
  if (E.on_curve(Point({F->zero(), F->zero(), F->zero(), F->one()}))) ++n;
  return n;
}

}  // namespace

TEST_CASE("points canonicalize and compare deterministically") {
  FieldRef F = Field::prime(7);
  Point p({F->from_int(2), F->from_int(4), F->from_int(6)});
  CHECK(p[0].is_one());
  CHECK(p == Point({F->from_int(1), F->from_int(2), F->from_int(3)}));
  Point q({F->zero(), F->from_int(3), F->from_int(5)});
  CHECK(q[1].is_one());
  CHECK(q < p);  // leading zero sorts first
  CHECK_THROWS(Point({F->zero(), F->zero(), F->zero()}));
}

TEST_CASE("Weierstrass group law passes exhaustive axioms across characteristics") {
  struct Case {
    uint64_t p;
    unsigned k;
    std::vector<int64_t> a;
  };
  for (const Case& c : {Case{5, 1, {0, 0, 0, 1, 1}},    // y^2 = x^3 + x + 1
                        Case{7, 1, {0, 0, 0, 0, 1}},    // y^2 = x^3 + 1
                        Case{2, 1, {0, 0, 1, 0, 0}},    // y^2 + y = x^3
                        Case{2, 2, {1, 1, 0, 0, 1}},    // char 2, full coefficients
                        Case{3, 1, {0, 0, 0, 2, 1}},    // char 3
                        Case{3, 2, {1, 0, 1, 2, 1}},    // char 3 extension, a1,a3 != 0
                        Case{13, 1, {0, 0, 0, 1, 6}}}) {
    FieldRef F = Field::make(c.p, c.k);
    auto E = WeierstrassCurve::make(F, c.a);
    check_group_axioms(*E);
    CHECK(E->enumerate().size() == brute_count_p2(*E));
  }
}

TEST_CASE("known point count: y^2 = x^3 + 1 over F_7 has 12 points") {
  auto E = WeierstrassCurve::make(Field::prime(7), {0, 0, 0, 0, 1});
  CHECK(E->enumerate().size() == 12);
}

TEST_CASE("singular Weierstrass coefficients are rejected") {
  FieldRef F = Field::prime(5);
  CHECK_THROWS(WeierstrassCurve::make(F, {0, 0, 0, 0, 0}));  // y^2 = x^3
  CHECK_THROWS(WeierstrassCurve::make(F, {0, 0, 0, -3, 2}));  // double root at x=1
}

TEST_CASE("quartic model group law is a total group across square and nonsquare d") {
  struct Case {
    uint64_t q;
    int64_t d;
  };
  for (const Case& c : {Case{5, 2}, Case{5, 4}, Case{13, 5}, Case{11, 3}, Case{9, 0}}) {
    FieldRef F = c.q == 9 ? Field::make(3, 2) : Field::prime(c.q);
    Element d = c.q == 9 ? F->element_at(5) : F->from_int(c.d);
    EdwardsCurve E(F, d);
    check_group_axioms(E);
    CHECK(E.enumerate().size() == brute_count_p3(E));
    // The four points with X0 = 0 exist exactly when d is a square.
    size_t infinite = 0;
    for (const Point& p : E.enumerate())
      if (p[0].is_zero()) ++infinite;
    CHECK(infinite == (F->is_square(d) ? 4u : 0u));
    // (x,y) = (1,0) has order 4.
    Point t = E.from_affine(F->one(), F->zero());
    CHECK(E.on_curve(t));
    CHECK(E.mul(t, 2) != E.identity());
    CHECK(E.mul(t, 4) == E.identity());
  }
}

TEST_CASE("quartic model addition matches the classical affine formulas") {
  FieldRef F = Field::prime(13);
  Element d = F->from_int(5);
  EdwardsCurve E(F, d);
  const auto& pts = E.enumerate();
  for (const Point& p : pts) {
    for (const Point& q : pts) {
      if (p[0].is_zero() || q[0].is_zero()) continue;
      Element x1 = p[1] / p[0], y1 = p[2] / p[0];
      Element x2 = q[1] / q[0], y2 = q[2] / q[0];
      Element prod = d * x1 * x2 * y1 * y2;
      Element den1 = F->one() + prod, den2 = F->one() - prod;
      if (den1.is_zero() || den2.is_zero()) continue;
      Element x3 = (x1 * y2 + x2 * y1) / den1;
      Element y3 = (y1 * y2 - x1 * x2) / den2;
      CHECK(E.add(p, q) == E.from_affine(x3, y3));
    }
  }
}

TEST_CASE("quartic model rejects invalid parameters") {
  CHECK_THROWS(EdwardsCurve(Field::prime(5), Field::prime(5)->zero()));
  CHECK_THROWS(EdwardsCurve(Field::prime(5), Field::prime(5)->one()));
  CHECK_THROWS(EdwardsCurve(Field::make(2, 2), Field::make(2, 2)->element_at(2)));
}

TEST_CASE("cubic model group law passes exhaustive axioms across characteristics") {
  struct Case {
    uint64_t p;
    unsigned k;
    int64_t a, d;
  };
  for (const Case& c : {Case{7, 1, 2, 0},   // a noncube mod 7, diagonal cubic
                        Case{7, 1, 1, 2},   // a cube, d != 0
                        Case{5, 1, 2, 1},   //
                        Case{3, 1, 1, 1},   // characteristic 3
                        Case{3, 2, 2, 1},   // characteristic 3 extension
                        Case{13, 1, 2, 3}}) {
    FieldRef F = Field::make(c.p, c.k);
    HessianCurve E(F, F->from_int(c.a), F->from_int(c.d));
    check_group_axioms(E);
    CHECK(E.enumerate().size() == brute_count_p2(E));
  }
}

TEST_CASE("cubic model rejects singular parameter pairs") {
  FieldRef F7 = Field::prime(7);
  CHECK_THROWS(HessianCurve(F7, F7->zero(), F7->one()));
  // 27a = d^3: a = 1, d = 3 gives 27 = 27.
  CHECK_THROWS(HessianCurve(F7, F7->one(), F7->from_int(3)));
  FieldRef F3 = Field::prime(3);
  CHECK_THROWS(HessianCurve(F3, F3->one(), F3->zero()));  // char 3 needs d != 0
}

TEST_CASE("base change embeds the rational points and commutes with addition") {
  FieldRef F3 = Field::prime(3);
  FieldRef F9 = Field::extension(F3, 2);
  auto E = WeierstrassCurve::make(F3, {0, 0, 0, 2, 1});
  auto E9 = E->base_change(F9);

  auto lift = [&](const Point& p) {
    std::vector<Element> c;
    for (const auto& x : p.coords()) c.push_back(F9->embed(x));
    return Point(c);
  };
  const auto& small = E->enumerate();
  const auto& big = E9->enumerate();
  std::set<Point> bigset(big.begin(), big.end());
  for (const Point& p : small) {
    CHECK(bigset.count(lift(p)) == 1);
    for (const Point& q : small) CHECK(lift(E->add(p, q)) == E9->add(lift(p), lift(q)));
  }
  CHECK(big.size() >= small.size());

  // Frobenius is a group automorphism fixing exactly the rational points.
  size_t fixed = 0;
  for (const Point& p : big) {
    Point fp = frobenius_point(p, 3);
    CHECK(E9->on_curve(fp));
    if (fp == p) ++fixed;
    for (const Point& q : big)
      CHECK(frobenius_point(E9->add(p, q), 3) == E9->add(fp, frobenius_point(q, 3)));
  }
  CHECK(fixed == small.size());
}

TEST_CASE("curve strings round-trip through the parser") {
  for (const char* s : {"weierstrass:7:0,0,0,1,1", "edwards:13:5", "hessian:7:2,0",
                        "weierstrass:2^2:1,1,0,0,1", "edwards:3^2:5"}) {
    CurvePtr E = parse_curve(s);
    CHECK(E->to_string() == s);
    CurvePtr E2 = parse_curve(E->to_string());
    CHECK(E2->to_string() == s);
  }
  CHECK_THROWS(parse_curve("weierstrass:7:1,1"));
  CHECK_THROWS(parse_curve("frobnitz:7:1"));
  // Explicit modulus inside the field part.
  CurvePtr E = parse_curve("weierstrass:3^2:1,0,1:0,0,0,5,1");
  CHECK(E->field() == Field::make(3, 2));
}
