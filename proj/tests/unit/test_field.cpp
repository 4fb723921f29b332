#include "doctest.h"

#include <set>

#include "addlaw/field.hpp"

using namespace addlaw;

TEST_CASE("prime field arithmetic is exact") {
  FieldRef F = Field::prime(7);
  CHECK(F->order() == 7);
  CHECK(F->characteristic() == 7);
  CHECK(F->is_prime_field());
  for (uint64_t a = 0; a < 7; ++a) {
    for (uint64_t b = 0; b < 7; ++b) {
      CHECK(F->add(a, b) == (a + b) % 7);
      CHECK(F->sub(a, b) == (a + 7 - b) % 7);
      CHECK(F->mul(a, b) == (a * b) % 7);
    }
    if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
  }
  CHECK(F->from_int(-3) == F->from_int(4));
  CHECK(F->from_int(700) == F->zero());
}

TEST_CASE("canonical moduli match the documented lowest-integer rule") {
  CHECK(Field::make(3, 2)->modulus_digits() == std::vector<uint64_t>{1, 0, 1});     // x^2+1
  CHECK(Field::make(2, 3)->modulus_digits() == std::vector<uint64_t>{1, 1, 0, 1});  // x^3+x+1
  CHECK(Field::make(5, 2)->modulus_digits() == std::vector<uint64_t>{2, 0, 1});     // x^2+2
  CHECK(Field::make(2, 2)->modulus_digits() == std::vector<uint64_t>{1, 1, 1});     // x^2+x+1
}

TEST_CASE("field interning returns identical pointers") {
  CHECK(Field::prime(11) == Field::prime(11));
  CHECK(Field::make(3, 2) == Field::parse("3^2"));
  CHECK(Field::make(3, 2) == Field::parse("3^2:1,0,1"));
  CHECK(Field::parse("7") == Field::prime(7));
  CHECK(Field::parse("7^1:0,1") == Field::prime(7));
}

TEST_CASE("extension field ring axioms hold exhaustively on F_9") {
  FieldRef F = Field::make(3, 2);
  CHECK(F->order() == 9);
  CHECK(F->abs_degree() == 2);
  for (uint64_t a = 0; a < 9; ++a) {
    for (uint64_t b = 0; b < 9; ++b) {
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      for (uint64_t c = 0; c < 9; ++c) {
        CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      }
      CHECK(F->sub(F->add(a, b), b) == a);
    }
    if (a != 0) {
      CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->pow(a, 8) == 1);
    }
    CHECK(F->pow(a, 9) == a);  // Frobenius over F_9 to the full power is identity
  }
}

TEST_CASE("characteristic-2 field F_8 behaves as expected") {
  FieldRef F = Field::make(2, 3);
  CHECK(F->order() == 8);
  for (uint64_t a = 0; a < 8; ++a) {
    CHECK(F->add(a, a) == 0);
    CHECK(F->neg(a) == a);
    if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK(F->pow(a, 8) == a);
  }
  // Every element is a square with a unique root.
  for (uint64_t a = 0; a < 8; ++a) {
    Element x = F->element_at(a);
    CHECK(F->is_square(x));
    auto r = F->sqrt(x);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == x);
  }
}

TEST_CASE("frobenius is the field automorphism fixing exactly the subfield") {
  FieldRef F = Field::make(3, 2);
  uint64_t fixed = 0;
  for (uint64_t a = 0; a < 9; ++a) {
    Element x = F->element_at(a);
    Element fx = F->frobenius(x, 3);
    if (fx == x) ++fixed;
    for (uint64_t b = 0; b < 9; ++b) {
      Element y = F->element_at(b);
      CHECK(F->frobenius(x + y, 3) == fx + F->frobenius(y, 3));
      CHECK(F->frobenius(x * y, 3) == fx * F->frobenius(y, 3));
    }
    CHECK(F->frobenius(fx, 3) == x);  // order-2 automorphism
  }
  CHECK(fixed == 3);
}

TEST_CASE("squares and square roots are canonical") {
  for (uint64_t q : {7ULL, 13ULL}) {
    FieldRef F = Field::prime(q);
    uint64_t squares = 0;
    for (uint64_t a = 0; a < q; ++a) {
      Element x = F->element_at(a);
      if (F->is_square(x)) {
        ++squares;
        auto r = F->sqrt(x);
        REQUIRE(r.has_value());
        CHECK((*r) * (*r) == x);
        CHECK(r->index() <= (-*r).index());  // canonical smaller root
      } else {
        CHECK(!F->sqrt(x).has_value());
      }
    }
    CHECK(squares == (q + 1) / 2);
  }
  FieldRef F9 = Field::make(3, 2);
  uint64_t squares = 0;
  for (uint64_t a = 0; a < 9; ++a)
    if (F9->is_square(F9->element_at(a))) ++squares;
  CHECK(squares == 5);  // (9-1)/2 nonzero squares plus zero
}

TEST_CASE("cube detection matches the order condition") {
  FieldRef F7 = Field::prime(7);  // 3 | 6: exactly 2 nonzero cubes
  uint64_t cubes = 0;
  for (uint64_t a = 0; a < 7; ++a)
    if (F7->is_cube(F7->element_at(a))) ++cubes;
  CHECK(cubes == 3);
  FieldRef F5 = Field::prime(5);  // 3 does not divide 4: everything is a cube
  for (uint64_t a = 0; a < 5; ++a) CHECK(F5->is_cube(F5->element_at(a)));
}

TEST_CASE("Artin-Schreier solver covers exactly the trace-zero elements") {
  FieldRef F = Field::make(2, 3);
  uint64_t solvable = 0;
  for (uint64_t a = 0; a < 8; ++a) {
    Element c = F->element_at(a);
    auto z = F->solve_artin_schreier(c);
    if (z.has_value()) {
      ++solvable;
      CHECK((*z) * (*z) + (*z) == c);
      Element other = *z + F->one();
      CHECK(z->index() <= other.index());
    }
  }
  CHECK(solvable == 4);
}

TEST_CASE("two-step towers embed and descend consistently") {
  FieldRef F3 = Field::prime(3);
  FieldRef F9 = Field::extension(F3, 2);
  FieldRef F81 = Field::extension(F9, 2);
  CHECK(F81->order() == 81);
  CHECK(F81->abs_degree() == 4);
  CHECK(F81->in_chain(F9));
  CHECK(F81->in_chain(F3));
  CHECK(!F9->in_chain(F81));

  // Embedding is a ring homomorphism.
  for (uint64_t a = 0; a < 9; ++a) {
    for (uint64_t b = 0; b < 9; ++b) {
      Element x = F9->element_at(a), y = F9->element_at(b);
      CHECK(F81->embed(x + y) == F81->embed(x) + F81->embed(y));
      CHECK(F81->embed(x * y) == F81->embed(x) * F81->embed(y));
    }
  }
  // Descents recover exactly the subfield image.
  uint64_t in_f9 = 0, in_f3 = 0;
  for (uint64_t a = 0; a < 81; ++a) {
    Element x = F81->element_at(a);
    if (auto d = F81->descend(x, F9)) {
      ++in_f9;
      CHECK(F81->embed(*d) == x);
    }
    if (F81->descend(x, F3)) ++in_f3;
    // The F_9 image must be exactly the fixed field of x -> x^9.
    CHECK((F81->frobenius(x, 9) == x) == (x.index() < 9));
  }
  CHECK(in_f9 == 9);
  CHECK(in_f3 == 3);
}

TEST_CASE("field and element serialization round-trips") {
  for (const char* s : {"7", "3^2", "5^2:2,0,1", "13", "2^3"}) {
    FieldRef F = Field::parse(s);
    CHECK(Field::parse(F->to_string()) == F);
    CHECK(Field::parse(F->short_string()) == F);
  }
  FieldRef F81 = Field::extension(Field::make(3, 2), 2);
  CHECK(Field::parse(F81->to_string()) == F81);

  FieldRef F9 = Field::make(3, 2);
  for (uint64_t a = 0; a < 9; ++a) {
    Element x = F9->element_at(a);
    CHECK(F9->elem_parse(x.to_string()) == x);
  }
  CHECK(F9->elem_parse("1,2") == F9->element_at(7));
  FieldRef F7 = Field::prime(7);
  CHECK(F7->elem_parse("5") == F7->element_at(5));
  for (uint64_t a = 0; a < 81; ++a) {
    Element x = F81->element_at(a);
    CHECK(F81->elem_parse(x.to_string()) == x);
  }
}

TEST_CASE("large fields beyond the table cap still compute correctly") {
  FieldRef F = Field::make(2, 23);  // order 2^23, above the table threshold
  CHECK(F->order() == (1ULL << 23));
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    Element x = F->random_nonzero(rng);
    CHECK(x * x.inv() == F->one());
    CHECK(x.pow(F->order() - 1) == F->one());
    CHECK(x.pow(F->order()) == x);
    auto r = F->sqrt(x);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == x);
  }

  FieldRef G = Field::make(5, 10);  // order ~9.7e6, odd characteristic
  for (int i = 0; i < 10; ++i) {
    Element x = G->random_nonzero(rng);
    Element sq = x * x;
    CHECK(G->is_square(sq));
    auto r = G->sqrt(sq);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == sq);
    CHECK((*r == x || *r == -x));
    CHECK(r->index() <= (-*r).index());
  }
}

TEST_CASE("rng is deterministic and uniform-ish") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  std::set<uint64_t> seen;
  for (int i = 0; i < 200; ++i) {
    uint64_t v = c.below(10);
    CHECK(v < 10);
    seen.insert(v);
  }
  CHECK(seen.size() == 10);
}
