#include "addlaw/bihom.hpp"

#include <algorithm>
#include <map>

namespace addlaw {

namespace {

void gen_monomials(unsigned nvars, unsigned remaining, unsigned pos, ExpVec& cur,
                   std::vector<ExpVec>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = (int)remaining; e >= 0; --e) {
    cur[pos] = (unsigned)e;
    gen_monomials(nvars, remaining - (unsigned)e, pos + 1, cur, out);
  }
}

// Cache of monomial bases keyed by (nvars, degree).
const std::vector<ExpVec>& cached_monomials(unsigned nvars, unsigned degree) {
  static std::map<std::pair<unsigned, unsigned>, std::vector<ExpVec>>* cache =
      new std::map<std::pair<unsigned, unsigned>, std::vector<ExpVec>>();
  auto key = std::make_pair(nvars, degree);
  auto it = cache->find(key);
  if (it != cache->end()) return it->second;
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  gen_monomials(nvars, degree, 0, cur, out);
  return cache->emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<ExpVec> monomial_exponents(unsigned nvars, unsigned degree) {
  ADDLAW_CHECK(nvars >= 1, "monomials need at least one variable");
  return cached_monomials(nvars, degree);
}

uint64_t monomial_count(unsigned nvars, unsigned degree) {
  // C(degree + nvars - 1, nvars - 1)
  uint64_t num = 1, den = 1;
  for (unsigned i = 1; i < nvars; ++i) {
    num *= degree + i;
    den *= i;
  }
  return num / den;
}

std::vector<uint64_t> monomial_values(FieldRef f, const std::vector<Element>& coords,
                                      const std::vector<ExpVec>& monos) {
  ADDLAW_CHECK(!monos.empty(), "empty monomial list");
  unsigned nvars = (unsigned)monos[0].size();
  ADDLAW_CHECK(coords.size() == nvars, "coordinate count does not match monomials");
  unsigned maxdeg = 0;
  for (const auto& m : monos)
    for (unsigned e : m) maxdeg = std::max(maxdeg, e);
  // pw[v][e] = coords[v]^e
  std::vector<std::vector<uint64_t>> pw(nvars, std::vector<uint64_t>(maxdeg + 1, 1));
  for (unsigned v = 0; v < nvars; ++v) {
    ADDLAW_CHECK(coords[v].field() == f, "coordinate in the wrong field");
    for (unsigned e = 1; e <= maxdeg; ++e) pw[v][e] = f->mul(pw[v][e - 1], coords[v].index());
  }
  std::vector<uint64_t> out;
  out.reserve(monos.size());
  for (const auto& m : monos) {
    uint64_t acc = 1;
    for (unsigned v = 0; v < nvars; ++v)
      if (m[v]) acc = f->mul(acc, pw[v][m[v]]);
    out.push_back(acc);
  }
  return out;
}

BihomForm::BihomForm(FieldRef f, unsigned nx, unsigned ny, unsigned dx, unsigned dy)
    : f_(f), nx_(nx), ny_(ny), dx_(dx), dy_(dy) {
  coeff_.assign(monomial_count(nx, dx) * monomial_count(ny, dy), 0);
}

const std::vector<ExpVec>& BihomForm::x_monomials() const { return cached_monomials(nx_, dx_); }
const std::vector<ExpVec>& BihomForm::y_monomials() const { return cached_monomials(ny_, dy_); }

BihomForm BihomForm::from_terms(FieldRef f, unsigned nx, unsigned ny, unsigned dx, unsigned dy,
                                const std::vector<Term>& terms) {
  BihomForm out(f, nx, ny, dx, dy);
  const auto& mx = out.x_monomials();
  const auto& my = out.y_monomials();
  for (const auto& [xe, ye, c] : terms) {
    auto xi = std::find(mx.begin(), mx.end(), xe);
    auto yi = std::find(my.begin(), my.end(), ye);
    ADDLAW_CHECK(xi != mx.end(), "x exponent vector has the wrong degree or arity");
    ADDLAW_CHECK(yi != my.end(), "y exponent vector has the wrong degree or arity");
    size_t i = (size_t)(xi - mx.begin()), j = (size_t)(yi - my.begin());
    Element prev = out.coeff(i, j);
    out.set_coeff(i, j, prev + c);
  }
  return out;
}

Element BihomForm::coeff(size_t xi, size_t yi) const {
  size_t ny_count = coeff_.size() / monomial_count(nx_, dx_);
  return Element(f_, coeff_[xi * ny_count + yi]);
}

void BihomForm::set_coeff(size_t xi, size_t yi, const Element& c) {
  ADDLAW_CHECK(c.field() == f_, "coefficient in the wrong field");
  size_t ny_count = coeff_.size() / monomial_count(nx_, dx_);
  coeff_[xi * ny_count + yi] = c.index();
}

void BihomForm::set_all(const std::vector<uint64_t>& flat) {
  ADDLAW_CHECK(flat.size() == coeff_.size(), "coefficient vector has the wrong length");
  coeff_ = flat;
}

bool BihomForm::is_zero() const {
  for (uint64_t c : coeff_)
    if (c) return false;
  return true;
}

Element BihomForm::eval(const std::vector<Element>& X, const std::vector<Element>& Y) const {
  auto xm = monomial_values(f_, X, x_monomials());
  auto ym = monomial_values(f_, Y, y_monomials());
  return Element(f_, eval_mono(xm, ym));
}

uint64_t BihomForm::eval_mono(const std::vector<uint64_t>& xmono,
                              const std::vector<uint64_t>& ymono) const {
  uint64_t acc = 0;
  size_t idx = 0;
  for (size_t i = 0; i < xmono.size(); ++i) {
    if (xmono[i] == 0) {
      idx += ymono.size();
      continue;
    }
    uint64_t row = 0;
    for (size_t j = 0; j < ymono.size(); ++j, ++idx) {
      uint64_t c = coeff_[idx];
      if (c && ymono[j]) row = f_->add(row, f_->mul(c, ymono[j]));
    }
    acc = f_->add(acc, f_->mul(row, xmono[i]));
  }
  return acc;
}

BihomForm BihomForm::operator+(const BihomForm& o) const {
  ADDLAW_CHECK(f_ == o.f_ && nx_ == o.nx_ && ny_ == o.ny_ && dx_ == o.dx_ && dy_ == o.dy_,
               "form shape mismatch");
  BihomForm out = *this;
  for (size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = f_->add(coeff_[i], o.coeff_[i]);
  return out;
}

BihomForm BihomForm::operator*(const Element& s) const {
  ADDLAW_CHECK(s.field() == f_, "scalar in the wrong field");
  BihomForm out = *this;
  for (auto& c : out.coeff_) c = f_->mul(c, s.index());
  return out;
}

bool BihomForm::operator==(const BihomForm& o) const {
  return f_ == o.f_ && nx_ == o.nx_ && ny_ == o.ny_ && dx_ == o.dx_ && dy_ == o.dy_ &&
         coeff_ == o.coeff_;
}

BihomForm BihomForm::normalized() const {
  for (uint64_t c : coeff_) {
    if (c) {
      if (c == 1) return *this;
      return *this * Element(f_, f_->inv(c));
    }
  }
  return *this;
}

BihomForm BihomForm::base_change(FieldRef to) const {
  ADDLAW_CHECK(to->in_chain(f_), "target field does not extend the coefficient field");
  BihomForm out(to, nx_, ny_, dx_, dy_);
  out.coeff_ = coeff_;  // chain embeddings preserve indices
  return out;
}

std::optional<BihomForm> BihomForm::descend(FieldRef sub) const {
  ADDLAW_CHECK(f_->in_chain(sub), "target field is not a chain subfield");
  for (uint64_t c : coeff_)
    if (c >= sub->order()) return std::nullopt;
  BihomForm out(sub, nx_, ny_, dx_, dy_);
  out.coeff_ = coeff_;
  return out;
}

BihomForm BihomForm::frobenius_coeffs(uint64_t q0) const {
  BihomForm out = *this;
  for (auto& c : out.coeff_) c = f_->frobenius(Element(f_, c), q0).index();
  return out;
}

Json BihomForm::to_json() const {
  Json terms = Json::array();
  const auto& mx = x_monomials();
  const auto& my = y_monomials();
  size_t idx = 0;
  for (size_t i = 0; i < mx.size(); ++i) {
    for (size_t j = 0; j < my.size(); ++j, ++idx) {
      if (!coeff_[idx]) continue;
      Json t;
      t["xe"] = mx[i];
      t["ye"] = my[j];
      t["c"] = f_->elem_to_string(Element(f_, coeff_[idx]));
      terms.push_back(t);
    }
  }
  Json j;
  j["nx"] = nx_;
  j["ny"] = ny_;
  j["dx"] = dx_;
  j["dy"] = dy_;
  j["terms"] = terms;
  return j;
}

BihomForm BihomForm::from_json(FieldRef f, const Json& j) {
  BihomForm out(f, j.at("nx").get<unsigned>(), j.at("ny").get<unsigned>(),
                j.at("dx").get<unsigned>(), j.at("dy").get<unsigned>());
  const auto& mx = out.x_monomials();
  const auto& my = out.y_monomials();
  for (const auto& t : j.at("terms")) {
    ExpVec xe = t.at("xe").get<ExpVec>();
    ExpVec ye = t.at("ye").get<ExpVec>();
    Element c = f->elem_parse(t.at("c").get<std::string>());
    auto xi = std::find(mx.begin(), mx.end(), xe);
    auto yi = std::find(my.begin(), my.end(), ye);
    ADDLAW_CHECK(xi != mx.end() && yi != my.end(), "term exponents do not match the bidegree");
    out.set_coeff((size_t)(xi - mx.begin()), (size_t)(yi - my.begin()), c);
  }
  return out;
}

std::string BihomForm::to_string() const {
  auto mono_str = [](const char* name, const ExpVec& e) {
    std::string s;
    for (size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (!s.empty()) s += "*";
      s += name + std::to_string(v);
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s;
  };
  std::string out;
  const auto& mx = x_monomials();
  const auto& my = y_monomials();
  size_t idx = 0;
  for (size_t i = 0; i < mx.size(); ++i) {
    for (size_t j = 0; j < my.size(); ++j, ++idx) {
      if (!coeff_[idx]) continue;
      if (!out.empty()) out += " + ";
      Element c(f_, coeff_[idx]);
      std::string m = mono_str("X", mx[i]), n = mono_str("Y", my[j]);
      std::string term;
      if (!c.is_one() || (m.empty() && n.empty())) term = c.to_string();
      if (!m.empty()) term += (term.empty() ? "" : "*") + m;
      if (!n.empty()) term += (term.empty() ? "" : "*") + n;
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

// ---- RrefAccumulator ----

std::vector<uint64_t> RrefAccumulator::reduce(std::vector<uint64_t> row) const {
  ADDLAW_CHECK(row.size() == ncols_, "row width mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint64_t c = row[pivots_[r]];
    if (!c) continue;
    const auto& pr = rows_[r];
    for (size_t j = pivots_[r]; j < ncols_; ++j)
      if (pr[j]) row[j] = f_->sub(row[j], f_->mul(c, pr[j]));
  }
  return row;
}

bool RrefAccumulator::in_row_space(const std::vector<uint64_t>& row) const {
  auto r = reduce(row);
  for (uint64_t c : r)
    if (c) return false;
  return true;
}

bool RrefAccumulator::add_row(std::vector<uint64_t> row) {
  row = reduce(std::move(row));
  size_t p = ncols_;
  for (size_t j = 0; j < ncols_; ++j) {
    if (row[j]) {
      p = j;
      break;
    }
  }
  if (p == ncols_) return false;
  uint64_t ip = f_->inv(row[p]);
  for (size_t j = p; j < ncols_; ++j)
    if (row[j]) row[j] = f_->mul(row[j], ip);
  // Eliminate the new pivot column from existing rows.
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint64_t c = rows_[r][p];
    if (!c) continue;
    for (size_t j = p; j < ncols_; ++j)
      if (row[j]) rows_[r][j] = f_->sub(rows_[r][j], f_->mul(c, row[j]));
  }
  // Insert keeping pivot order.
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + (long)pos, std::move(row));
  pivots_.insert(pivots_.begin() + (long)pos, p);
  return true;
}

std::vector<size_t> RrefAccumulator::pivot_cols() const { return pivots_; }

std::vector<std::vector<uint64_t>> RrefAccumulator::nullspace() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<uint64_t>> basis;
  for (size_t fcol = 0; fcol < ncols_; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<uint64_t> v(ncols_, 0);
    v[fcol] = 1;
    for (size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = f_->neg(rows_[r][fcol]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace addlaw
