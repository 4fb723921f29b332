#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "addlaw/field.hpp"

namespace addlaw {

using Json = nlohmann::ordered_json;

// Exponent vector of a monomial, one entry per variable.
using ExpVec = std::vector<unsigned>;

// All exponent vectors of total degree `degree` in `nvars` variables, in
// lexicographically descending order (earlier variables get high exponents
// first). This order fixes the coefficient layout everywhere.
std::vector<ExpVec> monomial_exponents(unsigned nvars, unsigned degree);
uint64_t monomial_count(unsigned nvars, unsigned degree);

// Values of the given monomials at a point (one coordinate per variable).
std::vector<uint64_t> monomial_values(FieldRef f, const std::vector<Element>& coords,
                                      const std::vector<ExpVec>& monos);

// A bihomogeneous form of bidegree (dx, dy) in two variable blocks
// X_0..X_{nx-1} and Y_0..Y_{ny-1}. Coefficients are stored densely over the
// monomial bases, X-monomial major.
class BihomForm {
 public:
  BihomForm(FieldRef f, unsigned nx, unsigned ny, unsigned dx, unsigned dy);

  using Term = std::tuple<ExpVec, ExpVec, Element>;
  static BihomForm from_terms(FieldRef f, unsigned nx, unsigned ny, unsigned dx, unsigned dy,
                              const std::vector<Term>& terms);

  FieldRef field() const { return f_; }
  unsigned nx() const { return nx_; }
  unsigned ny() const { return ny_; }
  unsigned dx() const { return dx_; }
  unsigned dy() const { return dy_; }
  const std::vector<ExpVec>& x_monomials() const;
  const std::vector<ExpVec>& y_monomials() const;
  size_t coeff_count() const { return coeff_.size(); }
  const std::vector<uint64_t>& coeff_indices() const { return coeff_; }

  Element coeff(size_t xi, size_t yi) const;
  void set_coeff(size_t xi, size_t yi, const Element& c);
  // Assigns all coefficients from a flat vector (X-monomial major).
  void set_all(const std::vector<uint64_t>& flat);

  bool is_zero() const;
  Element eval(const std::vector<Element>& X, const std::vector<Element>& Y) const;
  // Fast path: dot product against precomputed monomial value vectors.
  uint64_t eval_mono(const std::vector<uint64_t>& xmono, const std::vector<uint64_t>& ymono) const;

  BihomForm operator+(const BihomForm& o) const;
  BihomForm operator*(const Element& s) const;
  bool operator==(const BihomForm& o) const;

  // Scales so the first nonzero coefficient is 1; zero forms are unchanged.
  BihomForm normalized() const;

  // Coefficient-wise tower maps.
  BihomForm base_change(FieldRef to) const;
  std::optional<BihomForm> descend(FieldRef sub) const;
  BihomForm frobenius_coeffs(uint64_t q0) const;

  // Sparse JSON: {"nx","ny","dx","dy","terms":[{"xe":[...],"ye":[...],"c":"..."}]}
  // (zero coefficients omitted, terms in basis order).
  Json to_json() const;
  static BihomForm from_json(FieldRef f, const Json& j);
  std::string to_string() const;  // human-readable sum of terms

 private:
  FieldRef f_;
  unsigned nx_, ny_, dx_, dy_;
  std::vector<uint64_t> coeff_;  // element indices, size |Mx| * |My|
};

// Incremental reduced row echelon form over a finite field. Rows are dense
// element-index vectors of a fixed width. The reduced form is canonical for
// the accumulated row space, which makes every downstream basis choice
// deterministic regardless of insertion order.
class RrefAccumulator {
 public:
  RrefAccumulator(FieldRef f, size_t ncols) : f_(f), ncols_(ncols) {}

  // Returns true when the row increased the rank.
  bool add_row(std::vector<uint64_t> row);
  size_t rank() const { return rows_.size(); }
  size_t ncols() const { return ncols_; }
  FieldRef field() const { return f_; }

  // Fully reduces a row against the accumulated basis (without inserting).
  std::vector<uint64_t> reduce(std::vector<uint64_t> row) const;
  bool in_row_space(const std::vector<uint64_t>& row) const;

  const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }
  std::vector<size_t> pivot_cols() const;

  // Canonical kernel basis: one vector per free column, ascending.
  std::vector<std::vector<uint64_t>> nullspace() const;

 private:
  FieldRef f_;
  size_t ncols_;
  std::vector<std::vector<uint64_t>> rows_;  // pivot-sorted, fully reduced
  std::vector<size_t> pivots_;               // pivot column of rows_[i]
};

}  // namespace addlaw
