#include "addlaw/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace addlaw {

namespace {

// ---- digit-vector polynomials over a base field ----
// A polynomial over `F` is a vector of element indices, constant-first, with
// no trailing zeros (zero polynomial = empty vector). These helpers back the
// generic arithmetic and the modulus search; they are not performance
// critical.

using DPoly = std::vector<uint64_t>;

void dtrim(DPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

DPoly dmul(FieldRef F, const DPoly& a, const DPoly& b) {
  if (a.empty() || b.empty()) return {};
  DPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = F->add(r[i + j], F->mul(a[i], b[j]));
    }
  }
  dtrim(r);
  return r;
}

// Remainder of a modulo monic f.
DPoly dmod(FieldRef F, DPoly a, const DPoly& f) {
  ADDLAW_CHECK(!f.empty() && f.back() == 1, "dmod: modulus must be monic");
  size_t k = f.size() - 1;
  while (a.size() > k) {
    uint64_t c = a.back();
    size_t shift = a.size() - 1 - k;
    if (c != 0) {
      for (size_t j = 0; j < k; ++j)
        a[shift + j] = F->sub(a[shift + j], F->mul(c, f[j]));
    }
    a.pop_back();
    dtrim(a);
    if (a.size() <= k) break;
  }
  dtrim(a);
  return a;
}

DPoly dmulmod(FieldRef F, const DPoly& a, const DPoly& b, const DPoly& f) {
  return dmod(F, dmul(F, a, b), f);
}

// x^e mod f.
DPoly dpow_x(FieldRef F, uint64_t e, const DPoly& f) {
  DPoly result{1};           // 1
  DPoly base{0, 1};          // x
  base = dmod(F, base, f);
  while (e > 0) {
    if (e & 1) result = dmulmod(F, result, base, f);
    base = dmulmod(F, base, base, f);
    e >>= 1;
  }
  return result;
}

DPoly dsub(FieldRef F, DPoly a, const DPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = F->sub(a[i], b[i]);
  dtrim(a);
  return a;
}

DPoly dgcd(FieldRef F, DPoly a, DPoly b) {
  while (!b.empty()) {
    // Make b monic so dmod applies.
    uint64_t lc = b.back();
    if (lc != 1) {
      uint64_t ilc = F->inv(lc);
      for (auto& c : b) c = F->mul(c, ilc);
    }
    DPoly r = dmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    uint64_t ilc = F->inv(a.back());
    for (auto& c : a) c = F->mul(c, ilc);
  }
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

uint64_t parse_u64(const std::string& s) {
  ADDLAW_CHECK(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
               "expected a nonnegative integer, got '" + s + "'");
  ADDLAW_CHECK(s.size() <= 19, "integer literal too large: '" + s + "'");
  return std::stoull(s);
}

std::vector<uint64_t> parse_digit_list(const std::string& s) {
  std::vector<uint64_t> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_u64(part));
  return out;
}

std::string join_digits(const std::vector<uint64_t>& d) {
  std::string out;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(d[i]);
  }
  return out;
}

}  // namespace

// ---- interned field registry ----

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry* reg = new FieldRegistry();  // immortal
    return *reg;
  }

  FieldRef get_prime(uint64_t p) {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = "p:" + std::to_string(p);
    auto it = fields_.find(key);
    if (it != fields_.end()) return it->second;
    ADDLAW_CHECK(p >= 2 && is_prime_u64(p), "field characteristic must be prime, got " + std::to_string(p));
    ADDLAW_CHECK(p <= (1ULL << 20), "prime field characteristic exceeds the cap 2^20");
    Field* f = new Field();
    f->p_ = p;
    f->order_ = p;
    f->k_ = 1;
    f->abs_degree_ = 1;
    f->base_ = nullptr;
    f->barrett_ = (p == 0) ? 0 : (uint64_t)(((__uint128_t)1 << 64) / p);
    f->build_tables();
    fields_[key] = f;
    return f;
  }

  FieldRef get_extension(FieldRef base, const std::vector<uint64_t>& mods, bool known_canonical) {
    ADDLAW_CHECK(base != nullptr, "extension requires a base field");
    ADDLAW_CHECK(mods.size() >= 3, "extension step degree must be at least 2");
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = "e:" + base->to_string() + "||" + join_digits(mods);
    auto it = fields_.find(key);
    if (it != fields_.end()) return it->second;

    unsigned k = (unsigned)(mods.size() - 1);
    ADDLAW_CHECK(mods.back() == 1, "extension modulus must be monic");
    for (uint64_t d : mods)
      ADDLAW_CHECK(d < base->order(), "modulus coefficient index out of range for the base field");
    __uint128_t ord = 1;
    for (unsigned i = 0; i < k; ++i) {
      ord *= base->order();
      ADDLAW_CHECK(ord <= Field::kMaxOrder, "field order exceeds the cap 2^40");
    }
    ADDLAW_CHECK(Field::modulus_irreducible(base, mods), "extension modulus is reducible");

    Field* f = new Field();
    f->p_ = base->characteristic();
    f->order_ = (uint64_t)ord;
    f->k_ = k;
    f->abs_degree_ = base->abs_degree() * k;
    f->base_ = base;
    f->modulus_ = mods;
    f->canonical_modulus_ = known_canonical || (mods == Field::canonical_modulus(base, k));
    if (f->order_ <= Field::kMaxEnumerable) f->build_tables();
    fields_[key] = f;
    return f;
  }

 private:
  std::mutex mu_;
  std::map<std::string, Field*> fields_;
};

// ---- Field: construction ----

Field::~Field() = default;

FieldRef Field::prime(uint64_t p) { return FieldRegistry::instance().get_prime(p); }

FieldRef Field::extension(FieldRef base, unsigned step_degree) {
  ADDLAW_CHECK(step_degree >= 2, "extension step degree must be at least 2");
  return FieldRegistry::instance().get_extension(base, canonical_modulus(base, step_degree), true);
}

FieldRef Field::extension(FieldRef base, const std::vector<uint64_t>& modulus_digits) {
  return FieldRegistry::instance().get_extension(base, modulus_digits, false);
}

FieldRef Field::make(uint64_t p, unsigned k) {
  ADDLAW_CHECK(k >= 1, "field degree must be at least 1");
  FieldRef fp = prime(p);
  return k == 1 ? fp : extension(fp, k);
}

bool Field::modulus_irreducible(FieldRef base, const std::vector<uint64_t>& mod) {
  size_t k = mod.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  DPoly f(mod);
  uint64_t B = base->order();
  // x^{B^k} must reduce to x mod f ...
  DPoly xq = dpow_x(base, ipow_u64(B, (unsigned)k), f);
  if (xq != DPoly{0, 1}) return false;
  // ... and x^{B^{k/l}} - x must be coprime to f for every prime l | k.
  for (uint64_t l : prime_factors((uint64_t)k)) {
    DPoly t = dpow_x(base, ipow_u64(B, (unsigned)(k / l)), f);
    DPoly g = dgcd(base, dsub(base, t, DPoly{0, 1}), f);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<uint64_t> Field::canonical_modulus(FieldRef base, unsigned k) {
  // Scan monic degree-k candidates in increasing order of the integer whose
  // base-B digits (constant-first) are the coefficient indices.
  uint64_t B = base->order();
  uint64_t lo = ipow_u64(B, k);
  for (uint64_t m = lo; m < 2 * lo; ++m) {
    std::vector<uint64_t> digits(k + 1);
    uint64_t t = m;
    for (unsigned i = 0; i <= k; ++i) {
      digits[i] = t % B;
      t /= B;
    }
    if (digits[0] == 0) continue;  // divisible by x
    if (modulus_irreducible(base, digits)) return digits;
  }
  throw error("no irreducible modulus found (unreachable)");
}

// ---- tables ----

void Field::build_tables() {
  uint64_t n1 = order_ - 1;
  auto factors = prime_factors(n1);
  // Smallest-index generator of the multiplicative group.
  uint64_t g = 0;
  for (uint64_t c = 2; c < order_; ++c) {
    bool ok = true;
    for (uint64_t l : factors) {
      if (pow_generic(c, n1 / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = c;
      break;
    }
  }
  if (g == 0) {
    ADDLAW_CHECK(order_ == 2 || order_ == 3, "generator search failed");
    g = order_ - 1;  // F_2: g=1; F_3: g=2
    if (order_ == 2) g = 1;
  }
  generator_ = g;
  exp_.assign(n1, 0);
  log_.assign(order_, 0);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < n1; ++i) {
    exp_[i] = (uint32_t)cur;
    log_[cur] = (uint32_t)i;
    cur = mul_generic(cur, g);
  }
  ADDLAW_CHECK(cur == 1, "generator order mismatch");
}

// ---- digit packing ----

std::vector<uint64_t> Field::to_digits(uint64_t idx) const {
  std::vector<uint64_t> d(k_, 0);
  uint64_t B = base_->order();
  for (unsigned i = 0; i < k_ && idx; ++i) {
    d[i] = idx % B;
    idx /= B;
  }
  return d;
}

uint64_t Field::from_digits(const std::vector<uint64_t>& d) const {
  uint64_t B = base_->order(), idx = 0;
  for (size_t i = d.size(); i-- > 0;) idx = idx * B + d[i];
  return idx;
}

// ---- index arithmetic ----

uint64_t Field::add(uint64_t a, uint64_t b) const {
  if (base_ == nullptr) {
    uint64_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  if (p_ == 2) return a ^ b;  // every digit level is a power of 2
  uint64_t B = base_->order(), res = 0, place = 1;
  while (a || b) {
    res += base_->add(a % B, b % B) * place;
    a /= B;
    b /= B;
    place *= B;
  }
  return res;
}

uint64_t Field::neg(uint64_t a) const {
  if (base_ == nullptr) return a == 0 ? 0 : order_ - a;
  if (p_ == 2) return a;
  uint64_t B = base_->order(), res = 0, place = 1;
  while (a) {
    res += base_->neg(a % B) * place;
    a /= B;
    place *= B;
  }
  return res;
}

uint64_t Field::sub(uint64_t a, uint64_t b) const {
  if (base_ == nullptr) {
    return a >= b ? a - b : a + order_ - b;
  }
  if (p_ == 2) return a ^ b;
  uint64_t B = base_->order(), res = 0, place = 1;
  while (a || b) {
    res += base_->sub(a % B, b % B) * place;
    a /= B;
    b /= B;
    place *= B;
  }
  return res;
}

uint64_t Field::mul(uint64_t a, uint64_t b) const {
  if (base_ == nullptr) {
    uint64_t t = a * b;  // p <= 2^20, so t < 2^40
    uint64_t q = (uint64_t)(((__uint128_t)t * barrett_) >> 64);
    uint64_t r = t - q * order_;
    if (r >= order_) r -= order_;
    return r;
  }
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    uint64_t s = (uint64_t)log_[a] + log_[b];
    uint64_t n1 = order_ - 1;
    if (s >= n1) s -= n1;
    return exp_[s];
  }
  return mul_generic(a, b);
}

uint64_t Field::mul_generic(uint64_t a, uint64_t b) const {
  if (base_ == nullptr) return mul(a, b);
  if (a == 0 || b == 0) return 0;
  DPoly da = to_digits(a), db = to_digits(b);
  dtrim(da);
  dtrim(db);
  DPoly prod = dmod(base_, dmul(base_, da, db), modulus_);
  prod.resize(k_, 0);
  return from_digits(prod);
}

uint64_t Field::pow_generic(uint64_t a, uint64_t e) const {
  uint64_t result = 1, cur = a;
  while (e > 0) {
    if (e & 1) result = mul_generic(result, cur);
    cur = mul_generic(cur, cur);
    e >>= 1;
  }
  return result;
}

uint64_t Field::pow(uint64_t a, uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  uint64_t n1 = order_ - 1;
  if (!exp_.empty() && base_ != nullptr) {
    // l*e' < 2^22 * 2^40 < 2^63: no overflow.
    uint64_t l = log_[a];
    uint64_t ee = e % n1;
    return ee == 0 ? 1 : exp_[(l * ee) % n1];
  }
  if (base_ == nullptr) {
    uint64_t result = 1, cur = a, ee = e % n1;
    if (ee == 0) return 1;
    while (ee > 0) {
      if (ee & 1) result = mul(result, cur);
      cur = mul(cur, cur);
      ee >>= 1;
    }
    return result;
  }
  return pow_generic(a, e % n1 == 0 ? n1 : e % n1);
}

uint64_t Field::inv(uint64_t a) const {
  ADDLAW_CHECK(a != 0, "division by zero");
  if (!exp_.empty()) {
    uint64_t l = log_[a];
    return l == 0 ? 1 : exp_[order_ - 1 - l];
  }
  return pow(a, order_ - 2);
}

// ---- element-level operations ----

Element Field::from_int(int64_t v) const {
  int64_t p = (int64_t)p_;
  int64_t r = v % p;
  if (r < 0) r += p;
  return Element(this, (uint64_t)r);  // prime-subfield indices embed unchanged
}

Element Field::from_coeffs(const std::vector<Element>& coeffs) const {
  ADDLAW_CHECK(base_ != nullptr, "from_coeffs requires an extension field");
  ADDLAW_CHECK(coeffs.size() <= k_, "too many coefficients");
  std::vector<uint64_t> d(k_, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    ADDLAW_CHECK(coeffs[i].field() == base_, "coefficient lies in the wrong field");
    d[i] = coeffs[i].index();
  }
  return Element(this, from_digits(d));
}

std::vector<Element> Field::coeffs(const Element& x) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  ADDLAW_CHECK(base_ != nullptr, "coeffs requires an extension field");
  std::vector<Element> out;
  for (uint64_t d : to_digits(x.index())) out.emplace_back(base_, d);
  return out;
}

Element Field::frobenius(const Element& x, uint64_t q0) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  // q0 must be p^j with j dividing the absolute degree.
  uint64_t t = q0;
  unsigned j = 0;
  while (t > 1 && t % p_ == 0) {
    t /= p_;
    ++j;
  }
  ADDLAW_CHECK(t == 1 && j >= 1 && abs_degree_ % j == 0,
               "frobenius base order must be a subfield order");
  return Element(this, pow(x.index(), q0));
}

bool Field::is_square(const Element& x) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  if (x.is_zero() || p_ == 2) return true;
  if (!exp_.empty()) return (log_[x.index()] & 1) == 0;
  return pow(x.index(), (order_ - 1) / 2) == 1;
}

std::optional<Element> Field::sqrt(const Element& x) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  if (x.is_zero()) return zero();
  if (p_ == 2) return Element(this, pow(x.index(), order_ / 2));
  if (!exp_.empty()) {
    uint64_t l = log_[x.index()];
    if (l & 1) return std::nullopt;
    uint64_t r = exp_[l / 2];
    uint64_t nr = neg(r);
    return Element(this, std::min(r, nr));
  }
  // Tonelli-Shanks with a deterministic nonresidue.
  uint64_t n1 = order_ - 1;
  if (pow(x.index(), n1 / 2) != 1) return std::nullopt;
  uint64_t Q = n1;
  unsigned S = 0;
  while ((Q & 1) == 0) {
    Q >>= 1;
    ++S;
  }
  uint64_t z = 2;
  while (pow(z, n1 / 2) == 1) ++z;
  uint64_t M = S;
  uint64_t c = pow(z, Q);
  uint64_t t = pow(x.index(), Q);
  uint64_t r = pow(x.index(), (Q + 1) / 2);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mul(tt, tt);
      ++i;
      ADDLAW_CHECK(i < M, "sqrt: internal loop failure");
    }
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < M; ++j) b = mul(b, b);
    M = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  uint64_t nr = neg(r);
  return Element(this, std::min(r, nr));
}

bool Field::is_cube(const Element& x) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  if (x.is_zero()) return true;
  uint64_t n1 = order_ - 1;
  if (n1 % 3 != 0) return true;
  if (!exp_.empty()) return log_[x.index()] % 3 == 0;
  return pow(x.index(), n1 / 3) == 1;
}

std::optional<Element> Field::solve_artin_schreier(const Element& c) const {
  ADDLAW_CHECK(c.field() == this, "element belongs to a different field");
  ADDLAW_CHECK(p_ == 2, "Artin-Schreier solver requires characteristic 2");
  unsigned m = abs_degree_;
  // Absolute trace to F_2.
  Element tr = zero();
  Element cur = c;
  std::vector<Element> powers;  // c^{2^i}
  for (unsigned i = 0; i < m; ++i) {
    powers.push_back(cur);
    tr += cur;
    cur = cur * cur;
  }
  if (!tr.is_zero()) return std::nullopt;
  // theta with absolute trace 1 (cached; deterministic scan).
  if (theta_cache_.empty()) {
    for (uint64_t idx = 1; idx < order_; ++idx) {
      Element t(this, idx), s = zero(), u = t;
      for (unsigned i = 0; i < m; ++i) {
        s += u;
        u = u * u;
      }
      if (s.is_one()) {
        theta_cache_.push_back(t);
        break;
      }
    }
    ADDLAW_CHECK(!theta_cache_.empty(), "no trace-one element found");
  }
  Element theta = theta_cache_[0];
  // z = sum_{i=0}^{m-2} s_i * theta^{2^i},  s_i = sum_{j>i} c^{2^j}.
  Element z = zero();
  Element thpow = theta;  // theta^{2^0}
  // Build suffix sums s_i.
  std::vector<Element> suffix(m + 1, zero());
  for (unsigned j = m; j-- > 0;) suffix[j] = suffix[j + 1] + powers[j];
  for (unsigned i = 0; i + 1 < m; ++i) {
    z += suffix[i + 1] * thpow;
    thpow = thpow * thpow;
  }
  ADDLAW_CHECK(z * z + z == c, "Artin-Schreier solver produced a wrong root");
  Element z2 = z + one();
  return z.index() <= z2.index() ? z : z2;
}

// ---- towers ----

bool Field::in_chain(FieldRef sub) const {
  for (FieldRef f = this; f != nullptr; f = f->base_)
    if (f == sub) return true;
  return false;
}

Element Field::embed(const Element& x) const {
  ADDLAW_CHECK(x.valid(), "cannot embed an invalid element");
  ADDLAW_CHECK(in_chain(x.field()), "element field is not in this field's tower chain");
  return Element(this, x.index());
}

std::optional<Element> Field::descend(const Element& x, FieldRef sub) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  ADDLAW_CHECK(in_chain(sub), "target field is not in this field's tower chain");
  // Chain subfields occupy the initial index segment.
  if (x.index() < sub->order()) return Element(sub, x.index());
  return std::nullopt;
}

// ---- serialization ----

std::string Field::to_string() const {
  if (base_ == nullptr) return std::to_string(p_) + "^1:0,1";
  if (base_->is_prime_field()) {
    return std::to_string(p_) + "^" + std::to_string(k_) + ":" + join_digits(modulus_);
  }
  return base_->to_string() + "|" + std::to_string(k_) + ":" + join_digits(modulus_);
}

std::string Field::short_string() const {
  if (base_ == nullptr) return std::to_string(p_);
  if (base_->is_prime_field() && canonical_modulus_)
    return std::to_string(p_) + "^" + std::to_string(k_);
  return to_string();
}

FieldRef Field::parse(const std::string& s) {
  ADDLAW_CHECK(!s.empty(), "empty field string");
  auto segs = split(s, '|');
  FieldRef cur = nullptr;
  for (size_t si = 0; si < segs.size(); ++si) {
    const std::string& seg = segs[si];
    ADDLAW_CHECK(!seg.empty(), "empty field tower segment in '" + s + "'");
    auto colon = seg.find(':');
    std::string head = colon == std::string::npos ? seg : seg.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : seg.substr(colon + 1);
    if (si == 0) {
      auto caret = head.find('^');
      uint64_t p = parse_u64(caret == std::string::npos ? head : head.substr(0, caret));
      unsigned k = caret == std::string::npos ? 1 : (unsigned)parse_u64(head.substr(caret + 1));
      ADDLAW_CHECK(k >= 1, "field degree must be at least 1");
      if (k == 1) {
        cur = prime(p);
        if (!tail.empty())
          ADDLAW_CHECK(parse_digit_list(tail) == std::vector<uint64_t>({0, 1}),
                       "degree-1 modulus must be 0,1");
      } else if (tail.empty()) {
        cur = extension(prime(p), k);
      } else {
        cur = extension(prime(p), parse_digit_list(tail));
      }
    } else {
      unsigned k = (unsigned)parse_u64(head);
      ADDLAW_CHECK(k >= 2, "tower step degree must be at least 2");
      if (tail.empty()) {
        cur = extension(cur, k);
      } else {
        auto digits = parse_digit_list(tail);
        ADDLAW_CHECK(digits.size() == k + 1, "tower step modulus has the wrong length");
        cur = extension(cur, digits);
      }
    }
  }
  return cur;
}

std::string Field::elem_to_string(const Element& x) const {
  ADDLAW_CHECK(x.field() == this, "element belongs to a different field");
  if (base_ == nullptr) return std::to_string(x.index());
  if (base_->is_prime_field()) return join_digits(to_digits(x.index()));
  return "#" + std::to_string(x.index());
}

Element Field::elem_parse(const std::string& s) const {
  ADDLAW_CHECK(!s.empty(), "empty element string");
  if (s[0] == '#') {
    uint64_t idx = parse_u64(s.substr(1));
    return element_at(idx);
  }
  if (s.find(',') != std::string::npos) {
    ADDLAW_CHECK(base_ != nullptr, "coefficient list given for a prime field element");
    auto digits = parse_digit_list(s);
    ADDLAW_CHECK(digits.size() <= k_, "too many coefficients for this field");
    for (uint64_t d : digits)
      ADDLAW_CHECK(d < base_->order(), "coefficient index out of range");
    digits.resize(k_, 0);
    return Element(this, from_digits(digits));
  }
  uint64_t v = parse_u64(s);
  if (base_ == nullptr) {
    ADDLAW_CHECK(v < order_, "residue out of range for this field");
    return Element(this, v);
  }
  return element_at(v);
}

// ---- Element operators ----

namespace {
FieldRef common_field(const Element& a, const Element& b) {
  ADDLAW_CHECK(a.valid() && b.valid(), "operation on an invalid element");
  ADDLAW_CHECK(a.field() == b.field(), "elements belong to different fields");
  return a.field();
}
}  // namespace

Element Element::operator+(const Element& o) const {
  FieldRef F = common_field(*this, o);
  return Element(F, F->add(idx_, o.idx_));
}

Element Element::operator-(const Element& o) const {
  FieldRef F = common_field(*this, o);
  return Element(F, F->sub(idx_, o.idx_));
}

Element Element::operator*(const Element& o) const {
  FieldRef F = common_field(*this, o);
  return Element(F, F->mul(idx_, o.idx_));
}

Element Element::operator/(const Element& o) const {
  FieldRef F = common_field(*this, o);
  return Element(F, F->mul(idx_, F->inv(o.idx_)));
}

Element Element::operator-() const {
  ADDLAW_CHECK(valid(), "operation on an invalid element");
  return Element(f_, f_->neg(idx_));
}

Element Element::inv() const {
  ADDLAW_CHECK(valid(), "operation on an invalid element");
  return Element(f_, f_->inv(idx_));
}

Element Element::pow(uint64_t e) const {
  ADDLAW_CHECK(valid(), "operation on an invalid element");
  return Element(f_, f_->pow(idx_, e));
}

bool Element::operator<(const Element& o) const {
  common_field(*this, o);
  return idx_ < o.idx_;
}

std::string Element::to_string() const {
  ADDLAW_CHECK(valid(), "operation on an invalid element");
  return f_->elem_to_string(*this);
}

}  // namespace addlaw
