#include "addlaw/addlaws.hpp"

#include <map>
#include <utility>

namespace addlaw {

namespace {

// A symbolic coefficient is a list of [integer, {param: exponent}] summands.
Element eval_symbolic_coeff(FieldRef f, const Json& c,
                            const std::map<std::string, Element>& params) {
  Element acc = f->zero();
  for (const auto& summand : c) {
    Element term = f->from_int(summand.at(0).get<int64_t>());
    const Json& powers = summand.at(1);
    for (auto it = powers.begin(); it != powers.end(); ++it) {
      auto p = params.find(it.key());
      ADDLAW_CHECK(p != params.end(), "law table references unknown parameter '" + it.key() + "'");
      term = term * p->second.pow(it.value().get<uint64_t>());
    }
    acc = acc + term;
  }
  return acc;
}

AdditionLaw law_from_table(const std::string& key, CurvePtr curve,
                           const std::map<std::string, Element>& params, std::string label) {
  ADDLAW_CHECK(curve != nullptr, "law construction needs a curve");
  const Json& tab = law_tables().at(key);
  FieldRef f = curve->field();
  const unsigned nc = tab.at("num_coords").get<unsigned>();
  ADDLAW_CHECK(nc == curve->num_coords(), "law table '" + key + "' does not fit this model");
  const unsigned dx = tab.at("dx").get<unsigned>();
  const unsigned dy = tab.at("dy").get<unsigned>();

  AdditionLaw law;
  law.curve = std::move(curve);
  law.label = std::move(label);
  for (const Json& jform : tab.at("forms")) {
    std::vector<BihomForm::Term> terms;
    for (const Json& jt : jform) {
      terms.emplace_back(jt.at("xe").get<ExpVec>(), jt.at("ye").get<ExpVec>(),
                         eval_symbolic_coeff(f, jt.at("c"), params));
    }
    law.forms.push_back(BihomForm::from_terms(f, nc, nc, dx, dy, terms));
  }
  return law;
}

}  // namespace

std::vector<Element> AdditionLaw::eval(const Point& P, const Point& Q) const {
  std::vector<Element> out;
  out.reserve(forms.size());
  for (const BihomForm& form : forms) out.push_back(form.eval(P.coords(), Q.coords()));
  return out;
}

bool AdditionLaw::defined_at(const Point& P, const Point& Q) const {
  for (const BihomForm& form : forms) {
    if (!form.eval(P.coords(), Q.coords()).is_zero()) return true;
  }
  return false;
}

Point AdditionLaw::value(const Point& P, const Point& Q) const {
  std::vector<Element> v = eval(P, Q);
  bool any = false;
  for (const Element& e : v) any = any || !e.is_zero();
  ADDLAW_CHECK(any, "addition law undefined at " + P.to_string() + ", " + Q.to_string());
  return Point(std::move(v));
}

AdditionLaw AdditionLaw::base_change(FieldRef to) const {
  AdditionLaw out;
  out.curve = curve->base_change(to);
  out.label = label;
  out.forms.reserve(forms.size());
  for (const BihomForm& form : forms) out.forms.push_back(form.base_change(to));
  return out;
}

Json AdditionLaw::to_json() const {
  Json j;
  j["label"] = label;
  j["curve"] = curve->to_string();
  j["dx"] = dx();
  j["dy"] = dy();
  Json jf = Json::array();
  for (const BihomForm& form : forms) jf.push_back(form.to_json());
  j["forms"] = std::move(jf);
  return j;
}

AdditionLaw AdditionLaw::from_json(const Json& j) {
  AdditionLaw law;
  law.curve = parse_curve(j.at("curve").get<std::string>());
  law.label = j.at("label").get<std::string>();
  for (const Json& jf : j.at("forms")) {
    law.forms.push_back(BihomForm::from_json(law.curve->field(), jf));
  }
  ADDLAW_CHECK(law.forms.size() == law.curve->num_coords(),
               "law has the wrong number of coordinate forms");
  return law;
}

Json LawValidation::to_json() const {
  Json j;
  j["pairs_checked"] = pairs_checked;
  j["undefined_pairs"] = undefined_pairs;
  j["mismatches"] = mismatches;
  j["exhaustive"] = exhaustive;
  j["ok"] = ok();
  if (first_mismatch) {
    j["first_mismatch"] = {{"P", first_mismatch->first.to_string()},
                           {"Q", first_mismatch->second.to_string()},
                           {"law_value", first_mismatch_value->to_string()},
                           {"oracle_value", first_mismatch_expected->to_string()}};
  }
  return j;
}

namespace {

void check_pair(const AdditionLaw& law, const Point& P, const Point& Q, LawValidation& out) {
  out.pairs_checked++;
  std::vector<Element> v = law.eval(P, Q);
  bool any = false;
  for (const Element& e : v) any = any || !e.is_zero();
  if (!any) {
    out.undefined_pairs++;
    return;
  }
  Point got(std::move(v));
  Point expected = law.curve->add(P, Q);
  if (got != expected) {
    out.mismatches++;
    if (!out.first_mismatch) {
      out.first_mismatch = {P, Q};
      out.first_mismatch_value = got;
      out.first_mismatch_expected = expected;
    }
  }
}

}  // namespace

LawValidation validate_law(const AdditionLaw& law, ValidateMode mode, Rng* rng, uint64_t samples) {
  ADDLAW_CHECK(!law.forms.empty(), "cannot validate an empty law");
  const CurveModel& curve = *law.curve;
  bool exhaustive = false;
  if (mode == ValidateMode::exhaustive) {
    exhaustive = true;
  } else if (mode == ValidateMode::automatic) {
    if (curve.field()->order() <= Field::kMaxEnumerable) {
      uint64_t n = curve.enumerate().size();
      exhaustive = n * n <= (1ULL << 18);
    }
  }

  LawValidation out;
  out.exhaustive = exhaustive;
  if (exhaustive) {
    const std::vector<Point>& pts = curve.enumerate();
    for (const Point& P : pts) {
      for (const Point& Q : pts) check_pair(law, P, Q, out);
    }
    return out;
  }

  Rng local(0xadd1a30ULL);
  Rng& r = rng ? *rng : local;
  const Point O = curve.identity();
  check_pair(law, O, O, out);
  for (uint64_t i = 0; i < samples; ++i) {
    Point P = curve.random_point(r);
    Point Q = curve.random_point(r);
    if (i < 8) {
      // Exercise the classically delicate configurations explicitly.
      check_pair(law, P, O, out);
      check_pair(law, O, P, out);
      check_pair(law, P, P, out);
      check_pair(law, P, curve.negate(P), out);
    }
    check_pair(law, P, Q, out);
  }
  return out;
}

AdditionLaw bosma_lenstra_law(CurvePtr curve) {
  auto w = std::dynamic_pointer_cast<const WeierstrassCurve>(curve);
  ADDLAW_CHECK(w != nullptr, "this law lives on the plane cubic model");
  ADDLAW_CHECK(w->a1().is_zero() && w->a2().is_zero() && w->a3().is_zero(),
               "this law needs the short form y^2 = x^3 + ax + b");
  return law_from_table("weierstrass_y_22", std::move(curve),
                        {{"a", w->a4()}, {"b", w->a6()}}, "bosma-lenstra-complete");
}

AdditionLaw edwards_printed_law(CurvePtr curve) {
  auto e = std::dynamic_pointer_cast<const EdwardsCurve>(curve);
  ADDLAW_CHECK(e != nullptr, "this law lives on the quartic model");
  return law_from_table("edwards_printed_22", std::move(curve), {{"d", e->d()}},
                        "edwards-printed");
}

AdditionLaw edwards_corrected_law(CurvePtr curve) {
  auto e = std::dynamic_pointer_cast<const EdwardsCurve>(curve);
  ADDLAW_CHECK(e != nullptr, "this law lives on the quartic model");
  return law_from_table("edwards_corrected_22", std::move(curve), {{"d", e->d()}},
                        "edwards-corrected");
}

AdditionLaw hessian_first_law(CurvePtr curve) {
  auto h = std::dynamic_pointer_cast<const HessianCurve>(curve);
  ADDLAW_CHECK(h != nullptr, "this law lives on the twisted cubic model");
  return law_from_table("hessian_1", std::move(curve), {{"a", h->a()}, {"d", h->d()}},
                        "hessian-1");
}

AdditionLaw hessian_second_law(CurvePtr curve) {
  auto h = std::dynamic_pointer_cast<const HessianCurve>(curve);
  ADDLAW_CHECK(h != nullptr, "this law lives on the twisted cubic model");
  return law_from_table("hessian_2", std::move(curve), {{"a", h->a()}, {"d", h->d()}},
                        "hessian-2");
}

}  // namespace addlaw
