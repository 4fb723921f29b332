#include "addlaw/lawspace.hpp"

#include <algorithm>

namespace addlaw {

FieldRef lift_field(FieldRef above, uint64_t min_order) {
  if (above->order() >= min_order) return above;
  unsigned m = 2;
  while (true) {
    // Overflow-safe order of the candidate step.
    uint64_t ord = 1;
    bool big = false;
    for (unsigned i = 0; i < m; ++i) {
      ord *= above->order();
      if (ord >= min_order) {
        big = true;
        break;
      }
    }
    if (big) {
      ADDLAW_CHECK(m <= 24, "lift degree out of range");
      return Field::extension(above, m);
    }
    ++m;
  }
}

namespace {

// Shared interpolation engine: accumulates the law-proportionality system and
// the evaluation-only system (used to quotient out identically-vanishing
// tuples) over sampled pairs of an extension curve.
class SpaceEngine {
 public:
  SpaceEngine(CurvePtr base_curve, unsigned dx, unsigned dy, FieldRef lift)
      : base_(std::move(base_curve)),
        dx_(dx),
        dy_(dy),
        F_(lift),
        ext_(F_ == base_->field() ? base_ : CurvePtr(base_->base_change(F_))),
        nc_(base_->num_coords()),
        Mx_(monomial_exponents(nc_, dx)),
        My_(monomial_exponents(nc_, dy)),
        B_(Mx_.size() * My_.size()),
        U_(nc_ * B_),
        cons_(F_, U_),
        eval_(F_, U_) {
    ADDLAW_CHECK(F_->in_chain(base_->field()), "lift field must contain the curve's field");
    F_->require_enumerable("law-space interpolation");
  }

  FieldRef lift() const { return F_; }
  const CurveModel& ext_curve() const { return *ext_; }
  CurvePtr ext_curve_ptr() const { return ext_; }
  size_t unknowns() const { return U_; }
  uint64_t pairs() const { return pairs_; }
  size_t cons_rank() const { return cons_.rank(); }
  size_t eval_rank() const { return eval_.rank(); }

  // X-monomial-major tensor of monomial values at (P, Q): the layout of a
  // form's coefficient block.
  std::vector<uint64_t> pair_tensor(const Point& P, const Point& Q) const {
    std::vector<uint64_t> mx = monomial_values(F_, P.coords(), Mx_);
    std::vector<uint64_t> my = monomial_values(F_, Q.coords(), My_);
    std::vector<uint64_t> t(B_);
    size_t k = 0;
    for (uint64_t vx : mx) {
      for (uint64_t vy : my) t[k++] = F_->mul(vx, vy);
    }
    return t;
  }

  // Proportionality rows against the oracle sum, plus evaluation rows.
  void add_pair(const Point& P, const Point& Q) {
    std::vector<uint64_t> t = pair_tensor(P, Q);
    Point R = ext_->add(P, Q);
    for (unsigned i = 0; i < nc_; ++i) {
      for (unsigned j = i + 1; j < nc_; ++j) {
        uint64_t ri = R[i].index(), rj = R[j].index();
        if (ri == 0 && rj == 0) continue;
        std::vector<uint64_t> row(U_, 0);
        for (size_t k = 0; k < B_; ++k) {
          row[i * B_ + k] = F_->mul(t[k], rj);
          row[j * B_ + k] = F_->neg(F_->mul(t[k], ri));
        }
        cons_.add_row(std::move(row));
      }
    }
    for (unsigned b = 0; b < nc_; ++b) {
      std::vector<uint64_t> row(U_, 0);
      std::copy(t.begin(), t.end(), row.begin() + b * B_);
      eval_.add_row(std::move(row));
    }
    ++pairs_;
  }

  // Prescribes vanishing of every coordinate at (P, Q).
  void add_vanishing(const Point& P, const Point& Q) {
    std::vector<uint64_t> t = pair_tensor(P, Q);
    for (unsigned b = 0; b < nc_; ++b) {
      std::vector<uint64_t> row(U_, 0);
      std::copy(t.begin(), t.end(), row.begin() + b * B_);
      cons_.add_row(std::move(row));
    }
    ++pairs_;
  }

  // Solves the accumulated systems: canonical basis of the solution space,
  // with the identically-vanishing subspace quotiented out. Returns false if
  // the systems are visibly unsaturated (a degenerate vector escapes the
  // solution space, or a representative fails to descend).
  bool extract(size_t* raw_dim, size_t* degen_dim, std::vector<AdditionLaw>* laws,
               std::vector<std::vector<uint64_t>>* degen_out, const std::string& label_prefix) {
    std::vector<std::vector<uint64_t>> L = cons_.nullspace();
    std::vector<std::vector<uint64_t>> D = eval_.nullspace();
    *raw_dim = L.size();
    *degen_dim = D.size();

    // Each identically-vanishing tuple must satisfy the proportionality
    // system; if not, sampling has not saturated yet.
    for (const auto& d : D) {
      for (const auto& row : cons_.rows()) {
        uint64_t dot = 0;
        for (size_t c = 0; c < U_; ++c) dot = F_->add(dot, F_->mul(row[c], d[c]));
        if (dot != 0) return false;
      }
    }

    // Coordinates of the degenerate basis with respect to the canonical
    // solution basis: a nullspace vector is determined by its values on the
    // free columns, so those values are exactly the coordinates.
    std::vector<size_t> free_cols;
    {
      std::vector<size_t> piv = cons_.pivot_cols();
      std::vector<bool> is_piv(U_, false);
      for (size_t c : piv) is_piv[c] = true;
      for (size_t c = 0; c < U_; ++c) {
        if (!is_piv[c]) free_cols.push_back(c);
      }
    }
    ADDLAW_CHECK(free_cols.size() == L.size(), "free column/basis mismatch");
    RrefAccumulator combo(F_, L.size());
    for (const auto& d : D) {
      std::vector<uint64_t> coords(L.size());
      for (size_t i = 0; i < L.size(); ++i) coords[i] = d[free_cols[i]];
      combo.add_row(std::move(coords));
    }
    if (combo.rank() != D.size()) return false;

    std::vector<size_t> drop = combo.pivot_cols();
    std::vector<bool> dropped(L.size(), false);
    for (size_t c : drop) dropped[c] = true;

    laws->clear();
    for (size_t i = 0; i < L.size(); ++i) {
      if (dropped[i]) continue;
      // Build the tuple over the lift field, then descend each form: at
      // saturation the solution space is Galois-stable and its canonical
      // basis has base-field coefficients.
      AdditionLaw law;
      law.curve = base_;
      law.label = label_prefix + std::to_string(laws->size());
      bool ok = true;
      for (unsigned b = 0; b < nc_ && ok; ++b) {
        BihomForm form(F_, nc_, nc_, dx_, dy_);
        form.set_all(std::vector<uint64_t>(L[i].begin() + b * B_, L[i].begin() + (b + 1) * B_));
        std::optional<BihomForm> down = form.descend(base_->field());
        if (!down) {
          ok = false;
          break;
        }
        law.forms.push_back(std::move(*down));
      }
      if (!ok) return false;
      laws->push_back(std::move(law));
    }

    // The degenerate basis is Galois-stable and canonical, so its entries
    // also descend; element indices are preserved along the tower, so the
    // descended flat vector is the vector itself once every entry is checked
    // to lie in the base field's index range.
    degen_out->clear();
    const uint64_t base_order = base_->field()->order();
    for (const auto& d : D) {
      for (uint64_t idx : d) {
        if (idx >= base_order) return false;
      }
      degen_out->push_back(d);
    }
    return true;
  }

 private:
  CurvePtr base_;
  unsigned dx_, dy_;
  FieldRef F_;
  CurvePtr ext_;
  unsigned nc_;
  std::vector<ExpVec> Mx_, My_;
  size_t B_, U_;
  RrefAccumulator cons_, eval_;
  uint64_t pairs_ = 0;
};

constexpr uint64_t kMinLiftOrder = 500;
constexpr unsigned kBatchPairs = 24;
constexpr int kMaxBatches = 80;

}  // namespace

Json LawSpaceResult::to_json() const {
  Json j;
  j["curve"] = curve->to_string();
  j["bidegree"] = {dx, dy};
  j["raw_dimension"] = raw_dimension;
  j["degenerate_dimension"] = degenerate_dimension;
  j["law_dimension"] = law_dimension;
  j["pairs_sampled"] = pairs_sampled;
  j["lift_field"] = lift_field;
  Json jl = Json::array();
  for (const AdditionLaw& law : laws) jl.push_back(law.to_json());
  j["laws"] = std::move(jl);
  return j;
}

Json PrescribedVanishingResult::to_json() const {
  Json j;
  j["orbit_size"] = orbit_size;
  j["raw_dimension"] = raw_dimension;
  j["degenerate_dimension"] = degenerate_dimension;
  j["solution_dimension"] = solution_dimension;
  j["pairs_sampled"] = pairs_sampled;
  j["lift_field"] = lift_field;
  Json jl = Json::array();
  for (const AdditionLaw& law : laws) jl.push_back(law.to_json());
  j["laws"] = std::move(jl);
  return j;
}

LawSpaceResult discover_laws(CurvePtr curve, unsigned dx, unsigned dy, Rng& rng) {
  SpaceEngine eng(curve, dx, dy, lift_field(curve->field(), kMinLiftOrder));
  const CurveModel& E = eng.ext_curve();
  const Point O = E.identity();

  LawSpaceResult out;
  out.curve = curve;
  out.dx = dx;
  out.dy = dy;
  out.lift_field = eng.lift()->to_string();

  // Seed with the classically delicate configurations.
  Point S = E.random_point(rng);
  eng.add_pair(O, O);
  eng.add_pair(S, O);
  eng.add_pair(O, S);
  eng.add_pair(S, S);
  eng.add_pair(S, E.negate(S));

  size_t prev_cons = SIZE_MAX, prev_eval = SIZE_MAX;
  for (int batch = 0; batch < kMaxBatches; ++batch) {
    for (unsigned i = 0; i < kBatchPairs; ++i) {
      eng.add_pair(E.random_point(rng), E.random_point(rng));
    }
    bool stable = eng.cons_rank() == prev_cons && eng.eval_rank() == prev_eval;
    prev_cons = eng.cons_rank();
    prev_eval = eng.eval_rank();
    if (!stable) continue;
    if (eng.extract(&out.raw_dimension, &out.degenerate_dimension, &out.laws,
                    &out.degenerate_tuples,
                    "discovered-" + model_kind_name(curve->kind()) + "-" +
                        std::to_string(dx) + std::to_string(dy) + "-")) {
      out.law_dimension = out.laws.size();
      out.pairs_sampled = eng.pairs();
      // Every representative must agree with the oracle where defined.
      for (const AdditionLaw& law : out.laws) {
        Rng check = rng.fork();
        LawValidation v = validate_law(law, ValidateMode::automatic, &check, 96);
        ADDLAW_CHECK(v.ok(), "discovered tuple fails oracle validation");
      }
      return out;
    }
  }
  throw error("law-space interpolation did not saturate");
}

PrescribedVanishingResult prescribed_vanishing_law(CurvePtr curve, unsigned dx, unsigned dy,
                                                   const Point& p0, Rng& rng) {
  FieldRef base = curve->field();
  FieldRef K = p0[0].field();
  ADDLAW_CHECK(K->in_chain(base), "the vanishing point must live over the curve's field");
  const uint64_t q = base->order();

  // Full Frobenius orbit of the prescribed difference.
  std::vector<Point> orbit{p0};
  for (Point c = frobenius_point(p0, q); c != p0; c = frobenius_point(c, q)) {
    orbit.push_back(c);
    ADDLAW_CHECK(orbit.size() <= 64, "Frobenius orbit unexpectedly large");
  }

  SpaceEngine eng(curve, dx, dy, lift_field(K, kMinLiftOrder));
  ADDLAW_CHECK(eng.lift()->in_chain(K), "lift field must contain the vanishing point");
  const CurveModel& E = eng.ext_curve();
  const Point O = E.identity();

  std::vector<Point> lifted;
  lifted.reserve(orbit.size());
  for (const Point& c : orbit) {
    std::vector<Element> coords;
    for (const Element& e : c.coords()) coords.push_back(eng.lift()->embed(e));
    Point lc(std::move(coords));
    ADDLAW_CHECK(E.on_curve(lc), "vanishing point is not on the curve");
    lifted.push_back(std::move(lc));
  }

  PrescribedVanishingResult out;
  out.orbit_size = orbit.size();
  out.lift_field = eng.lift()->to_string();

  Point S = E.random_point(rng);
  eng.add_pair(O, O);
  eng.add_pair(S, O);
  eng.add_pair(O, S);
  eng.add_pair(S, S);
  eng.add_pair(S, E.negate(S));
  for (const Point& c : lifted) eng.add_vanishing(c, O);

  size_t prev_cons = SIZE_MAX, prev_eval = SIZE_MAX;
  for (int batch = 0; batch < kMaxBatches; ++batch) {
    for (unsigned i = 0; i < kBatchPairs; ++i) {
      eng.add_pair(E.random_point(rng), E.random_point(rng));
    }
    for (const Point& c : lifted) {
      for (unsigned i = 0; i < 4; ++i) {
        Point Q = E.random_point(rng);
        eng.add_vanishing(E.add(Q, c), Q);
      }
    }
    bool stable = eng.cons_rank() == prev_cons && eng.eval_rank() == prev_eval;
    prev_cons = eng.cons_rank();
    prev_eval = eng.eval_rank();
    if (!stable) continue;
    if (eng.extract(&out.raw_dimension, &out.degenerate_dimension, &out.laws,
                    &out.degenerate_tuples, "prescribed-vanishing-")) {
      out.solution_dimension = out.laws.size();
      out.pairs_sampled = eng.pairs();
      for (const AdditionLaw& law : out.laws) {
        Rng check = rng.fork();
        LawValidation v = validate_law(law, ValidateMode::automatic, &check, 96);
        ADDLAW_CHECK(v.ok(), "prescribed tuple fails oracle validation");
      }
      return out;
    }
  }
  throw error("prescribed-vanishing interpolation did not saturate");
}

}  // namespace addlaw
