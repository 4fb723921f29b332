// Command-line front end: every pipeline of the toolkit behind one binary,
// with seeded reproducibility and JSON certificate emission.
//
// Exit codes: 0 = success; 1 = the run completed but verified a negative
// (an incomplete law, a missing witness, a curve without the required orbit
// point, a transcription discrepancy); 2 = usage or input error.
//
// Certificates go to stdout (or --out FILE) as canonical two-space-indented
// JSON with a trailing newline; identical argv + seed give byte-identical
// output. Human-readable summaries go to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "addlaw/addlaws.hpp"
#include "addlaw/complete.hpp"
#include "addlaw/construct.hpp"
#include "addlaw/genus2.hpp"
#include "addlaw/hyperplane.hpp"
#include "addlaw/lawspace.hpp"
#include "addlaw/models.hpp"

using namespace addlaw;

namespace {

void note(const std::string& line) { std::cerr << line << "\n"; }

void emit(Json& cert, const std::string& out_path) {
  seal_certificate(cert);
  std::string bytes = certificate_to_bytes(cert);
  if (out_path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    ADDLAW_CHECK(f.good(), "cannot open output file '" + out_path + "'");
    f.write(bytes.data(), (std::streamsize)bytes.size());
    ADDLAW_CHECK(f.good(), "failed writing output file '" + out_path + "'");
    note("certificate written to " + out_path);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      ADDLAW_CHECK(!cur.empty(), "empty token in '" + s + "'");
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

// --curve accepts either a full "model:field:coefficients" string or a bare
// coefficient list combined with --field (and --model, default weierstrass).
// Weierstrass lists may be short (a, b) or full (a1, a2, a3, a4, a6).
CurvePtr resolve_curve(const std::string& model, const std::string& field_str,
                       const std::string& curve_str) {
  ADDLAW_CHECK(!curve_str.empty(), "--curve is required");
  if (curve_str.find(':') != std::string::npos) return parse_curve(curve_str);
  ADDLAW_CHECK(!field_str.empty(), "bare coefficient lists need --field");
  FieldRef f = Field::parse(field_str);
  std::vector<Element> cs;
  for (const std::string& tok : split_commas(curve_str))
    cs.push_back(f->elem_parse(tok));
  if (model == "weierstrass") {
    if (cs.size() == 2)
      return std::make_shared<WeierstrassCurve>(f, f->zero(), f->zero(),
                                                f->zero(), cs[0], cs[1]);
    ADDLAW_CHECK(cs.size() == 5,
                 "weierstrass takes 2 (a, b) or 5 (a1, a2, a3, a4, a6) "
                 "coefficients");
    return std::make_shared<WeierstrassCurve>(f, cs[0], cs[1], cs[2], cs[3],
                                              cs[4]);
  }
  if (model == "edwards") {
    ADDLAW_CHECK(cs.size() == 1, "edwards takes one coefficient (d)");
    return std::make_shared<EdwardsCurve>(f, cs[0]);
  }
  if (model == "hessian") {
    ADDLAW_CHECK(cs.size() == 2, "hessian takes two coefficients (a, d)");
    return std::make_shared<HessianCurve>(f, cs[0], cs[1]);
  }
  throw error("unknown model '" + model + "'");
}

// --curve "hyper:field:coefficients" or --field plus --f-coeffs.
HyperPtr resolve_hyper(const std::string& field_str, const std::string& coeffs,
                       const std::string& curve_str) {
  if (!curve_str.empty()) return parse_hyperelliptic(curve_str);
  ADDLAW_CHECK(!field_str.empty() && !coeffs.empty(),
               "need --curve or both --field and --f-coeffs");
  FieldRef f = Field::parse(field_str);
  std::vector<Element> cs;
  for (const std::string& tok : split_commas(coeffs))
    cs.push_back(f->elem_parse(tok));
  return std::make_shared<HyperellipticCurve>(f, Poly(f, std::move(cs)));
}

// A seeded nonzero combination of the basis laws; it lies in the law space
// and outside the identically-vanishing subspace.
AdditionLaw random_space_law(const LawSpaceResult& space, Rng& rng) {
  ADDLAW_CHECK(!space.laws.empty(), "the discovered law space is empty");
  FieldRef f = space.curve->field();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Element> combo;
    bool nonzero = false;
    for (size_t i = 0; i < space.laws.size(); ++i) {
      Element c = f->element_at(rng.below(f->order()));
      if (!c.is_zero()) nonzero = true;
      combo.push_back(c);
    }
    if (!nonzero) continue;
    AdditionLaw out;
    out.curve = space.curve;
    out.label = "seeded-combination";
    for (size_t j = 0; j < space.laws[0].forms.size(); ++j) {
      BihomForm form = space.laws[0].forms[j] * combo[0];
      for (size_t i = 1; i < space.laws.size(); ++i)
        form = form + space.laws[i].forms[j] * combo[i];
      out.forms.push_back(form);
    }
    return out;
  }
  throw error("could not draw a nonzero combination");
}

std::pair<unsigned, unsigned> parse_bidegree(const std::string& s) {
  auto toks = split_commas(s);
  ADDLAW_CHECK(toks.size() == 2, "--bidegree takes 'm,n'");
  int m = std::stoi(toks[0]), n = std::stoi(toks[1]);
  ADDLAW_CHECK(m >= 1 && n >= 1, "bidegrees must be positive");
  return {(unsigned)m, (unsigned)n};
}

// ---- subcommand handlers ----

struct Opts {
  std::string model = "weierstrass";
  std::string field;
  std::string curve;
  std::string law = "bosma-lenstra";
  std::string bidegree = "2,2";
  std::string f_coeffs;
  std::string out;
  uint64_t seed = 0;
  unsigned jobs = 0;  // 0 = all cores; scans only
  unsigned max_degree = 6;
  unsigned max_extension = 4;
  unsigned degree = 2;
  unsigned sections = 1;
  bool random_law = false;
};

int run_discover(const Opts& o) {
  CurvePtr curve = resolve_curve(o.model, o.field, o.curve);
  auto [dx, dy] = parse_bidegree(o.bidegree);
  Rng rng(o.seed);
  LawSpaceResult res = discover_laws(curve, dx, dy, rng);
  Json cert = new_certificate("law-space", o.seed);
  cert["field"] = curve->field()->to_string();
  cert["curve"] = curve->to_string();
  cert["bidegree"] = Json::array({dx, dy});
  cert["result"] = res.to_json();
  note("law space on " + curve->to_string() + " at bidegree (" +
       std::to_string(dx) + "," + std::to_string(dy) +
       "): dimension " + std::to_string(res.law_dimension) + " (raw " +
       std::to_string(res.raw_dimension) + ", identically vanishing " +
       std::to_string(res.degenerate_dimension) + "), " +
       std::to_string(res.pairs_sampled) + " pairs over " + res.lift_field);
  emit(cert, o.out);
  return 0;
}

int run_certify(const Opts& o) {
  CurvePtr curve = resolve_curve(o.model, o.field, o.curve);
  AdditionLaw law = stored_law(o.law, curve);
  ExceptionalReport rep = certify_k_complete(law);
  Rng rng(o.seed);
  LawValidation val = validate_law(law, ValidateMode::automatic, &rng);
  Json cert = new_certificate("completeness", o.seed);
  cert["field"] = curve->field()->to_string();
  cert["curve"] = curve->to_string();
  cert["law"] = o.law;
  cert["law_label"] = law.label;
  cert["complete"] = rep.complete();
  cert["report"] = rep.to_json();
  cert["validation"] = val.to_json();
  bool good = rep.complete() && val.ok();
  if (good) {
    note("law '" + o.law + "' on " + curve->to_string() + ": complete, " +
         std::to_string(rep.pairs_scanned) + " pairs scanned, " +
         std::to_string(val.pairs_checked) + " oracle comparisons exact");
  } else if (!rep.complete()) {
    note("law '" + o.law + "' on " + curve->to_string() + ": INCOMPLETE, " +
         std::to_string(rep.differences.size()) +
         " exceptional difference(s), " +
         std::to_string(rep.exceptional_count) + " undefined pair(s)");
  } else {
    note("law '" + o.law + "' on " + curve->to_string() +
         ": oracle mismatches found");
  }
  emit(cert, o.out);
  return good ? 0 : 1;
}

int run_construct(const Opts& o) {
  CurvePtr curve = resolve_curve(o.model, o.field, o.curve);
  Rng rng(o.seed);
  Json cert = new_certificate("complete-construction", o.seed);
  cert["field"] = curve->field()->to_string();
  cert["curve"] = curve->to_string();
  try {
    CompleteConstruction con = build_k_complete_law(curve, rng);
    cert["constructed"] = true;
    cert["construction"] = con.to_json();
    note("constructed a defined-everywhere law on " + curve->to_string() +
         " from a size-three kernel orbit; base-field scan covered " +
         std::to_string(con.base_scan.pairs_scanned) + " pairs clean");
    emit(cert, o.out);
    return 0;
  } catch (const error& e) {
    if (std::string(e.what()) != kNoKernelOrbitMessage) throw;
    cert["constructed"] = false;
    cert["reason"] = e.what();
    note("no construction on " + curve->to_string() + ": " + e.what());
    emit(cert, o.out);
    return 1;
  }
}

int run_witness(const Opts& o) {
  CurvePtr curve = resolve_curve(o.model, o.field, o.curve);
  auto [dx, dy] = parse_bidegree(o.bidegree);
  Rng rng(o.seed);
  AdditionLaw law = o.random_law
                        ? random_space_law(discover_laws(curve, dx, dy, rng), rng)
                        : stored_law(o.law, curve);
  Json cert = new_certificate("incompleteness-witness", o.seed);
  cert["field"] = curve->field()->to_string();
  cert["curve"] = curve->to_string();
  cert["law"] = o.random_law ? "seeded-combination" : o.law;
  cert["max_degree"] = o.max_degree;
  auto w = incompleteness_witness(law, o.max_degree);
  cert["found"] = w.has_value();
  if (w) {
    cert["witness"] = w->to_json();
    note("witness at extension degree " + std::to_string(w->degree) +
         ": the law vanishes identically at a rational pair there");
  } else {
    note("no exceptional pair up to extension degree " +
         std::to_string(o.max_degree));
  }
  emit(cert, o.out);
  return w ? 0 : 1;
}

int run_scan_ec(const Opts& o) {
  ADDLAW_CHECK(!o.field.empty(), "--field is required");
  FieldRef f = Field::parse(o.field);
  std::vector<SmallQCurve> hits = scan_small_q(f, o.jobs);
  Json cert = new_certificate("ec-degeneracy-scan", o.seed);
  cert["field"] = f->to_string();
  cert["count"] = hits.size();
  Json arr = Json::array();
  for (const SmallQCurve& h : hits) arr.push_back(h.to_json());
  cert["curves"] = std::move(arr);
  note(std::to_string(hits.size()) +
       " curve(s) with fully rational norm kernel over " + f->to_string());
  emit(cert, o.out);
  return 0;
}

int run_hyperplane(const Opts& o) {
  ADDLAW_CHECK(!o.field.empty(), "--field is required");
  FieldRef f = Field::parse(o.field);
  HyperplaneFamily fam = build_family(f, o.degree, o.sections);
  Json cert = new_certificate("hyperplane-family", o.seed);
  cert["field"] = f->to_string();
  cert["degree"] = o.degree;
  cert["sections"] = o.sections;
  cert["family"] = fam.to_json();
  cert["embedding_dimension_g1"] = embedding_dimension(1, o.degree, o.sections);
  cert["embedding_dimension_g2"] = embedding_dimension(2, o.degree, o.sections);
  note("degree-" + std::to_string(o.degree) + " conjugate family over " +
       f->to_string() + " in P^" + std::to_string(o.sections) +
       (fam.emptiness_verified
            ? ": no rational point on any plane (" +
                  std::to_string(fam.points_scanned) + " points scanned)"
            : ": emptiness scan skipped (space too large)"));
  emit(cert, o.out);
  return 0;
}

int run_genus2_pipeline(const Opts& o) {
  HyperPtr c = resolve_hyper(o.field, o.f_coeffs, o.curve);
  Json cert = new_certificate("theta-translate", o.seed);
  cert["field"] = c->field()->to_string();
  cert["curve"] = c->to_string();
  try {
    ThetaIntersectionReport rep = build_theta_classes(c);
    cert["constructed"] = true;
    cert["report"] = rep.to_json();
    note(std::string("theta translates on ") + c->to_string() + ": " +
         (rep.exhaustive ? "exhaustively enumerated ("
                             + std::to_string(rep.jacobian_size) + " classes)"
                         : "witness-checked") +
         (rep.ok() ? ", all properties hold" : ", a property FAILED"));
    emit(cert, o.out);
    return rep.ok() ? 0 : 1;
  } catch (const error& e) {
    if (std::string(e.what()) != kNoOrbit4Message) throw;
    cert["constructed"] = false;
    cert["reason"] = e.what();
    note("no construction on " + c->to_string() + ": " + e.what());
    emit(cert, o.out);
    return 1;
  }
}

int run_scan_g2(const Opts& o) {
  ADDLAW_CHECK(!o.field.empty(), "--field is required");
  FieldRef f = Field::parse(o.field);
  std::vector<HyperPtr> hits = scan_genus2_counterexamples(f, o.jobs);
  Json cert = new_certificate("genus2-degeneracy-scan", o.seed);
  cert["field"] = f->to_string();
  cert["count"] = hits.size();
  Json arr = Json::array();
  for (const HyperPtr& h : hits) arr.push_back(h->to_string());
  cert["curves"] = std::move(arr);
  note(std::to_string(hits.size()) + " curve(s) without an orbit-4 point over " +
       f->to_string());
  emit(cert, o.out);
  return 0;
}

int run_g2_count(const Opts& o) {
  HyperPtr c = resolve_hyper(o.field, o.f_coeffs, o.curve);
  ADDLAW_CHECK(o.max_extension >= 1, "--max-extension must be positive");
  Json cert = new_certificate("genus2-counts", o.seed);
  cert["field"] = c->field()->to_string();
  cert["curve"] = c->to_string();
  Json counts = Json::array(), orders = Json::array();
  std::string csum, jsum;
  for (unsigned e = 1; e <= o.max_extension; ++e) {
    uint64_t n = c->count_points(e);
    uint64_t j = jacobian_order(*c, e);
    counts.push_back(n);
    orders.push_back(j);
    csum += (e > 1 ? ", " : "") + std::to_string(n);
    jsum += (e > 1 ? ", " : "") + std::to_string(j);
  }
  cert["point_counts"] = std::move(counts);
  cert["jacobian_orders"] = std::move(orders);
  note("points of " + c->to_string() + " over extension degrees 1.." +
       std::to_string(o.max_extension) + ": " + csum);
  note("jacobian group orders: " + jsum);
  emit(cert, o.out);
  return 0;
}

int run_validate_tables(const Opts& o) {
  struct Fixture {
    std::string law;
    std::string curve;
  };
  // Deterministic fixtures covering every stored tuple on several curves.
  const std::vector<Fixture> fixtures = {
      {"bosma-lenstra", "weierstrass:5:0,0,0,1,1"},
      {"bosma-lenstra", "weierstrass:7:0,0,0,1,1"},
      {"bosma-lenstra", "weierstrass:13:0,0,0,2,3"},
      {"edwards-printed", "edwards:5:2"},
      {"edwards-printed", "edwards:13:2"},
      {"edwards-printed", "edwards:3^2:4"},
      {"edwards-corrected", "edwards:5:2"},
      {"edwards-corrected", "edwards:13:2"},
      {"edwards-corrected", "edwards:3^2:4"},
      {"hessian-first", "hessian:7:2,0"},
      {"hessian-first", "hessian:13:1,2"},
      {"hessian-second", "hessian:7:2,0"},
      {"hessian-second", "hessian:13:1,2"},
  };
  Json cert = new_certificate("table-validation", o.seed);
  Json entries = Json::array();
  size_t discrepancies = 0;
  for (const Fixture& fx : fixtures) {
    CurvePtr curve = parse_curve(fx.curve);
    AdditionLaw law = stored_law(fx.law, curve);
    LawValidation val = validate_law(law, ValidateMode::exhaustive);
    Json entry;
    entry["law"] = fx.law;
    entry["curve"] = curve->to_string();
    entry["field"] = curve->field()->to_string();
    entry["validation"] = val.to_json();
    entry["status"] = val.ok() ? "oracle-exact" : "discrepancy";
    entries.push_back(std::move(entry));
    if (!val.ok()) {
      ++discrepancies;
      note(fx.law + " on " + fx.curve + ": DISCREPANCY, " +
           std::to_string(val.mismatches) + " mismatch(es) in " +
           std::to_string(val.pairs_checked) + " pairs");
    } else {
      note(fx.law + " on " + fx.curve + ": oracle-exact on " +
           std::to_string(val.pairs_checked) + " pairs");
    }
  }
  cert["entries"] = std::move(entries);
  cert["discrepancy_count"] = discrepancies;
  if (discrepancies > 0)
    note("stored tuples reproduced verbatim: the as-printed quartic tuple "
         "disagrees with the oracle (its corrected variant passes); "
         "transcriptions are reported, never patched");
  emit(cert, o.out);
  return discrepancies == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discovers, constructs and certifies complete addition laws "
               "on curve models over small finite fields"};
  app.require_subcommand(1);
  Opts o;

  auto add_common = [&](CLI::App* sc, bool with_seed = true) {
    sc->add_option("--out", o.out, "write the certificate to a file");
    if (with_seed) sc->add_option("--seed", o.seed, "PRNG seed (default 0)");
  };
  auto add_curve_opts = [&](CLI::App* sc) {
    sc->add_option("--model", o.model,
                   "curve model: weierstrass, edwards or hessian");
    sc->add_option("--field", o.field, "field string, e.g. 7, 13^2, 5|2");
    sc->add_option("--curve", o.curve,
                   "full curve string or bare coefficient list");
  };

  CLI::App* discover = app.add_subcommand(
      "discover-laws", "interpolate the space of addition-law tuples");
  add_curve_opts(discover);
  discover->add_option("--bidegree", o.bidegree, "bidegree m,n (default 2,2)");
  add_common(discover);

  CLI::App* certify = app.add_subcommand(
      "certify", "check a stored law for definedness at every rational pair");
  add_curve_opts(certify);
  certify->add_option("--law", o.law,
                      "bosma-lenstra (alias remark44), edwards-printed, "
                      "edwards-corrected, hessian-first, hessian-second");
  add_common(certify);

  CLI::App* construct = app.add_subcommand(
      "construct", "build a defined-everywhere law from a kernel orbit");
  add_curve_opts(construct);
  add_common(construct);

  CLI::App* witness = app.add_subcommand(
      "witness", "find an extension pair where a law vanishes identically");
  add_curve_opts(witness);
  witness->add_option("--law", o.law, "stored law to probe");
  witness->add_flag("--random", o.random_law,
                    "probe a seeded combination from the discovered space");
  witness->add_option("--bidegree", o.bidegree,
                      "bidegree for --random (default 2,2)");
  witness->add_option("--max-degree", o.max_degree,
                      "largest extension degree to try (default 6)");
  add_common(witness);

  CLI::App* scan_ec = app.add_subcommand(
      "scan-ec-counterexamples",
      "find curves whose norm kernel is entirely rational");
  scan_ec->add_option("--field", o.field, "tiny field, order <= 16");
  scan_ec->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  add_common(scan_ec);

  CLI::App* hyper = app.add_subcommand(
      "hyperplane", "build a Galois-conjugate hyperplane family");
  hyper->add_option("--field", o.field, "base field");
  hyper->add_option("--degree", o.degree, "number of conjugate planes d");
  hyper->add_option("--sections", o.sections,
                    "projective dimension r0 (requires d > r0)");
  add_common(hyper);

  CLI::App* g2pipe = app.add_subcommand(
      "genus2-pipeline", "build and check the four theta translate classes");
  g2pipe->add_option("--field", o.field, "base field");
  g2pipe->add_option("--f-coeffs", o.f_coeffs,
                     "coefficients c0,...,cd of the right-hand side");
  g2pipe->add_option("--curve", o.curve, "full curve string hyper:field:coeffs");
  add_common(g2pipe);

  CLI::App* scan_g2 = app.add_subcommand(
      "scan-g2-counterexamples",
      "find genus-2 curves without an orbit-4 point");
  scan_g2->add_option("--field", o.field, "tiny odd field, order <= 16");
  scan_g2->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  add_common(scan_g2);

  CLI::App* g2count = app.add_subcommand(
      "g2-count", "point counts and Jacobian orders over extensions");
  g2count->add_option("--field", o.field, "base field");
  g2count->add_option("--f-coeffs", o.f_coeffs,
                      "coefficients c0,...,cd of the right-hand side");
  g2count->add_option("--curve", o.curve, "full curve string");
  g2count->add_option("--max-extension", o.max_extension,
                      "largest extension degree (default 4)");
  add_common(g2count);

  CLI::App* validate = app.add_subcommand(
      "validate-paper-laws",
      "run every stored tuple against the oracle and report discrepancies");
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(discover)) return run_discover(o);
    if (app.got_subcommand(certify)) return run_certify(o);
    if (app.got_subcommand(construct)) return run_construct(o);
    if (app.got_subcommand(witness)) return run_witness(o);
    if (app.got_subcommand(scan_ec)) return run_scan_ec(o);
    if (app.got_subcommand(hyper)) return run_hyperplane(o);
    if (app.got_subcommand(g2pipe)) return run_genus2_pipeline(o);
    if (app.got_subcommand(scan_g2)) return run_scan_g2(o);
    if (app.got_subcommand(g2count)) return run_g2_count(o);
    if (app.got_subcommand(validate)) return run_validate_tables(o);
  } catch (const error& e) {
    note(std::string("error: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    note(std::string("error: ") + e.what());
    return 2;
  }
  return 2;
}
