#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addlaw/bihom.hpp"
#include "addlaw/models.hpp"

namespace addlaw {

// An addition-law candidate on a curve model: one bihomogeneous form of a
// common bidegree per homogeneous coordinate. The tuple computes the group
// law on the open set where at least one coordinate is nonzero; it is
// *undefined* at a pair exactly when every coordinate vanishes there.
struct AdditionLaw {
  CurvePtr curve;
  std::vector<BihomForm> forms;
  std::string label;

  unsigned dx() const { return forms.at(0).dx(); }
  unsigned dy() const { return forms.at(0).dy(); }

  std::vector<Element> eval(const Point& P, const Point& Q) const;
  bool defined_at(const Point& P, const Point& Q) const;
  // The computed sum; requires defined_at.
  Point value(const Point& P, const Point& Q) const;

  AdditionLaw base_change(FieldRef to) const;

  Json to_json() const;
  static AdditionLaw from_json(const Json& j);
};

enum class ValidateMode { automatic, exhaustive, sampled };

// Result of checking a law against the curve's group-law oracle.
struct LawValidation {
  uint64_t pairs_checked = 0;
  uint64_t undefined_pairs = 0;
  uint64_t mismatches = 0;
  bool exhaustive = false;
  std::optional<std::pair<Point, Point>> first_mismatch;
  std::optional<Point> first_mismatch_value;     // what the law computed
  std::optional<Point> first_mismatch_expected;  // what the oracle says

  bool ok() const { return mismatches == 0; }
  Json to_json() const;
};

// Compares the law with the oracle over rational pairs: exhaustively when
// |E|^2 <= 2^18 (or mode forces it), otherwise on `samples` random pairs.
LawValidation validate_law(const AdditionLaw& law, ValidateMode mode = ValidateMode::automatic,
                           Rng* rng = nullptr, uint64_t samples = 512);

// ---- published addition laws, built from the embedded symbolic tables ----

// The raw table JSON (symbolic coefficients in the curve parameters).
const Json& law_tables();

// Bidegree-(2,2) Y-coordinate law on a short Weierstrass curve
// y^2 = x^3 + ax + b (requires a1 = a2 = a3 = 0).
AdditionLaw bosma_lenstra_law(CurvePtr curve);

// The bidegree-(2,2) tuple on the quartic model exactly as printed in its
// published source, and the corrected variant (third/fourth coordinates use
// the factor X2Y2 - X1Y1 instead of X0Y3 - X3Y0). The printed tuple is
// preserved verbatim so the discrepancy can be demonstrated, never silently
// patched.
AdditionLaw edwards_printed_law(CurvePtr curve);
AdditionLaw edwards_corrected_law(CurvePtr curve);

// The pair of bidegree-(2,2) laws on the twisted cubic model.
AdditionLaw hessian_first_law(CurvePtr curve);
AdditionLaw hessian_second_law(CurvePtr curve);

// Looks up a published law by name: "bosma-lenstra" (alias "remark44"),
// "edwards-printed", "edwards-corrected", "hessian-first", "hessian-second".
// Throws for unknown names and for a curve of the wrong model.
AdditionLaw stored_law(const std::string& name, CurvePtr curve);

// The recognised names, in the order listed above.
std::vector<std::string> stored_law_names();

}  // namespace addlaw
