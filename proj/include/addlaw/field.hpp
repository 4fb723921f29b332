#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "addlaw/util.hpp"

namespace addlaw {

class Field;
using FieldRef = const Field*;

// A finite-field element: an owning field reference plus the canonical index
// of the element. The index packs the coefficient vector over the base field
// little-endian (constant coefficient least significant digit, one digit per
// base-field element index), so index 0 is zero, index 1 is one, and for a
// prime field the index is the residue itself. Elements are trivially
// copyable; all arithmetic is delegated to the field.
class Element {
 public:
  Element() = default;
  Element(FieldRef f, uint64_t idx) : f_(f), idx_(idx) {}

  FieldRef field() const { return f_; }
  uint64_t index() const { return idx_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const { return idx_ == 0; }
  bool is_one() const { return idx_ == 1; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element inv() const;
  Element pow(uint64_t e) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  bool operator==(const Element& o) const { return f_ == o.f_ && idx_ == o.idx_; }
  bool operator!=(const Element& o) const { return !(*this == o); }
  // Canonical total order (by index), used for deterministic choices.
  bool operator<(const Element& o) const;

  std::string to_string() const;

 private:
  FieldRef f_ = nullptr;
  uint64_t idx_ = 0;
};

// A finite field F_{p^k}, either a prime field or a single extension step
// over a base field (towers arise by chaining steps). Fields are immutable,
// interned and live for the process lifetime, so raw FieldRef pointers are
// stable and identity-comparable. The modulus of an extension step is a monic
// irreducible polynomial over the base, stored constant-first as base-element
// indices. When no modulus is given the canonical one is chosen: the lowest
// monic irreducible when coefficient vectors are read as base-order integers
// (constant coefficient least significant).
class Field {
 public:
  // Interned factories.
  static FieldRef prime(uint64_t p);
  static FieldRef extension(FieldRef base, unsigned step_degree);  // canonical modulus
  static FieldRef extension(FieldRef base, const std::vector<uint64_t>& modulus_digits);
  static FieldRef make(uint64_t p, unsigned k);  // single step over F_p, canonical modulus
  // Parses "p", "p^k", "p^k:c0,...,ck" and tower chains joined by '|'
  // ("p^k:mods|k2:mods2", later moduli written as base-element indices).
  static FieldRef parse(const std::string& s);

  uint64_t characteristic() const { return p_; }
  uint64_t order() const { return order_; }
  unsigned step_degree() const { return k_; }
  unsigned abs_degree() const { return abs_degree_; }
  FieldRef base() const { return base_; }
  bool is_prime_field() const { return base_ == nullptr; }
  // Modulus coefficients (constant-first, length k+1, as base-element indices).
  const std::vector<uint64_t>& modulus_digits() const { return modulus_; }

  // Full serialization (round-trips through parse). Prime: "5^1:0,1".
  std::string to_string() const;
  // Compact form used inside curve strings: "5", "3^2" when the modulus is
  // canonical, otherwise the full form.
  std::string short_string() const;

  Element zero() const { return Element(this, 0); }
  Element one() const { return Element(this, order_ > 1 ? 1 : 0); }
  Element element_at(uint64_t idx) const {
    ADDLAW_CHECK(idx < order_, "element index out of range");
    return Element(this, idx);
  }
  // Embeds an integer via the prime subfield (v mod p).
  Element from_int(int64_t v) const;
  // Builds an element from its coefficient vector over the base (length <= k).
  Element from_coeffs(const std::vector<Element>& coeffs) const;
  std::vector<Element> coeffs(const Element& x) const;  // length k, over base

  // Index-level arithmetic.
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  uint64_t pow(uint64_t a, uint64_t e) const;

  // x^q0 where q0 is the order of a subfield (q0 = p^j, j | abs_degree).
  Element frobenius(const Element& x, uint64_t q0) const;

  bool is_square(const Element& x) const;
  std::optional<Element> sqrt(const Element& x) const;  // canonical (smaller) root
  bool is_cube(const Element& x) const;

  // Solves z^2 + z = c in characteristic 2; returns the canonical root.
  std::optional<Element> solve_artin_schreier(const Element& c) const;

  // Trace to the prime subfield is not needed; this is the absolute trace to
  // F_2 used by the characteristic-2 solver.
  Element random(Rng& rng) const { return Element(this, rng.below(order_)); }
  Element random_nonzero(Rng& rng) const { return Element(this, 1 + rng.below(order_ - 1)); }

  // True when `sub` appears in this field's base chain (or equals it).
  bool in_chain(FieldRef sub) const;
  // Embeds an element of a chain subfield into this field (index-preserving).
  Element embed(const Element& x) const;
  // Inverse of embed when x actually lies in `sub`; nullopt otherwise.
  std::optional<Element> descend(const Element& x, FieldRef sub) const;

  // Caps from the module contract.
  static constexpr uint64_t kMaxOrder = 1ULL << 40;
  static constexpr uint64_t kMaxEnumerable = 1ULL << 22;
  void require_enumerable(const char* what) const {
    ADDLAW_CHECK(order_ <= kMaxEnumerable, std::string(what) + ": field order exceeds the enumeration cap 2^22");
  }

  std::string elem_to_string(const Element& x) const;
  Element elem_parse(const std::string& s) const;

  ~Field();

 private:
  Field() = default;
  Field(const Field&) = delete;

  uint64_t p_ = 0;
  uint64_t order_ = 0;
  unsigned k_ = 1;
  unsigned abs_degree_ = 1;
  FieldRef base_ = nullptr;         // null for prime fields
  std::vector<uint64_t> modulus_;   // constant-first, length k+1 (extension only)
  bool canonical_modulus_ = true;

  // Barrett constant for prime fields.
  uint64_t barrett_ = 0;

  // Discrete-log tables (order <= kMaxEnumerable): exp_[i] = index of g^i,
  // log_[idx] = i. log_[0] is unused.
  std::vector<uint32_t> exp_, log_;
  uint64_t generator_ = 0;

  mutable std::vector<Element> theta_cache_;  // char-2 solver helper

  // Digit-vector helpers (polynomials over the base as index vectors).
  std::vector<uint64_t> to_digits(uint64_t idx) const;
  uint64_t from_digits(const std::vector<uint64_t>& d) const;
  uint64_t mul_generic(uint64_t a, uint64_t b) const;
  uint64_t pow_generic(uint64_t a, uint64_t e) const;
  void build_tables();
  static std::vector<uint64_t> canonical_modulus(FieldRef base, unsigned k);
  static bool modulus_irreducible(FieldRef base, const std::vector<uint64_t>& mod);

  friend class FieldRegistry;
};

}  // namespace addlaw
