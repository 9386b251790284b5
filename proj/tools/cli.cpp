#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>

#include "folia/errors.hpp"
#include "folia/foliation.hpp"
#include "folia/matrix.hpp"
#include "folia/newton.hpp"
#include "folia/selfcheck.hpp"
#include "folia/wps.hpp"
#include "json_io.hpp"

namespace folia::cli {

namespace {

Json envelope(const std::string& command, Json inputs, Json result) {
  Json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["result"] = std::move(result);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Terminal:
      return "TERMINAL";
    case Verdict::LogCanonical:
      return "LOG_CANONICAL";
    case Verdict::NotLc:
      return "NOT_LC";
  }
  return "?";
}

std::vector<VectorField> parse_field_list(const std::string& text) {
  std::vector<VectorField> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    out.push_back(parse_vector_field(text.substr(
        start, end == std::string::npos ? std::string::npos : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

Json field_json(const VectorField& v) {
  Json out = Json::array();
  for (const auto& c : v.components) out.push_back(to_string(c));
  return out;
}

struct Options {
  int vars = 0;
  std::string ideal;
  std::string matrix;
  std::string field;
  std::string others;
  std::string poly;
  std::string lambda;
  std::string boundary;
  std::string delta;
  std::string weights;
  std::string form;
  std::string suite = "all";
  int chart = 0;
  bool generic = false;
  bool pretty = false;
  std::uint64_t seed = 0;
};

WeightVector parse_weight_list(const std::string& text) {
  WeightVector out;
  for (const Rational& r : parse_lambda(text)) {
    if (r.get_den() != 1 || r < 1) throw DomainError("weights must be positive integers");
    out.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return out;
}

Json run_lct(const Options& opt) {
  const MonomialIdeal ideal = parse_monomial_ideal(opt.ideal, opt.vars);
  Json inputs;
  inputs["vars"] = opt.vars;
  Json gens = Json::array();
  for (const auto& g : ideal.generators) {
    gens.push_back(to_string(Polynomial::monomial(opt.vars, g, 1)));
  }
  inputs["ideal"] = std::move(gens);

  Json result;
  const LctOutcome out =
      opt.generic ? lct_generic_combination(opt.vars, ideal.generators).outcome
                  : lct_monomial(ideal);
  if (out.infinite) {
    result["lct"] = "infinite";
  } else {
    result = lct_result_json(*out.result);
  }
  if (opt.generic) {
    result["generic"] = true;
    result["assumption"] = "general linear combination of the generators";
  }
  return envelope("lct", std::move(inputs), std::move(result));
}

Json run_nilpotent(const Options& opt) {
  const RationalMatrix a = parse_rational_matrix(opt.matrix);
  Json inputs;
  inputs["matrix"] = to_string(a);
  Json result;
  result["nilpotent"] = is_nilpotent(a);
  result["characteristic_polynomial"] = to_string(characteristic_polynomial(a));
  return envelope("nilpotent", std::move(inputs), std::move(result));
}

Json run_cycle_form(const Options& opt) {
  const RationalMatrix a = parse_rational_matrix(opt.matrix);
  Json inputs;
  inputs["matrix"] = to_string(a);
  const CycleClassification cls = classify_special(a);
  Json result;
  if (cls.kind == CycleClassification::Kind::Nilpotent) {
    result["classification"] = "NILPOTENT";
  } else {
    result["classification"] = "CYCLE_FORM";
    Json cycle = Json::array();
    for (int v : cls.cycle) cycle.push_back(v + 1);
    result["cycle"] = std::move(cycle);
    result["entries"] = lambda_json(cls.entries);
  }
  return envelope("cycle-form", std::move(inputs), std::move(result));
}

Json run_linear_part(const Options& opt) {
  const VectorField v = parse_vector_field(opt.field);
  Json inputs;
  inputs["field"] = field_json(v);
  Json result;
  result["matrix"] = to_string(linear_part(v));
  return envelope("linear-part", std::move(inputs), std::move(result));
}

Json run_mp_check(const Options& opt) {
  const VectorField v = parse_vector_field(opt.field);
  Json inputs;
  inputs["field"] = field_json(v);
  const MpVerdict verdict = mp_classify(v);
  Json result;
  result["verdict"] = verdict_name(verdict.verdict);
  result["linear_part"] = verdict.linear ? Json(to_string(*verdict.linear)) : Json(nullptr);
  return envelope("mp-check", std::move(inputs), std::move(result));
}

Json run_validate_pair(const Options& opt) {
  const VectorField v = parse_vector_field(opt.field);
  std::optional<Polynomial> delta;
  if (!opt.delta.empty()) delta = parse_polynomial(opt.delta, v.dimension);
  Json inputs;
  inputs["field"] = field_json(v);
  inputs["delta"] = delta ? Json(to_string(*delta)) : Json(nullptr);
  Json result;
  result["valid"] = validate_pair(v, delta);
  return envelope("validate-pair", std::move(inputs), std::move(result));
}

Json run_tangency(const Options& opt) {
  const VectorField w = parse_vector_field(opt.field);
  const std::vector<VectorField> others = parse_field_list(opt.others);
  Json inputs;
  inputs["field"] = field_json(w);
  Json other_json = Json::array();
  for (const auto& v : others) other_json.push_back(field_json(v));
  inputs["others"] = std::move(other_json);
  Json result;
  result["determinant"] = to_string(tangency_determinant(w, others));
  return envelope("tangency", std::move(inputs), std::move(result));
}

Json run_omega(const Options& opt) {
  const VectorField v = parse_vector_field(opt.field);
  const LambdaVector lambda = parse_lambda(opt.lambda);
  const IndexSet boundary = parse_boundary(opt.boundary, v.dimension);
  Json inputs;
  inputs["field"] = field_json(v);
  inputs["lambda"] = lambda_json(lambda);
  inputs["boundary"] = index_set_json(boundary);
  Json result;
  result["contraction"] = to_string(omega_contract(v, lambda, boundary));
  return envelope("omega", std::move(inputs), std::move(result));
}

Json run_f_from_matrix(const Options& opt) {
  const RationalMatrix a = parse_rational_matrix(opt.matrix);
  const LambdaVector lambda = parse_lambda(opt.lambda);
  const IndexSet boundary = parse_boundary(opt.boundary, a.order());
  Json inputs;
  inputs["matrix"] = to_string(a);
  inputs["lambda"] = lambda_json(lambda);
  inputs["boundary"] = index_set_json(boundary);
  Json result;
  result["polynomial"] = to_string(f_from_matrix(a, lambda, boundary));
  return envelope("f-from-matrix", std::move(inputs), std::move(result));
}

Json run_select_lambda(const Options& opt) {
  const RationalMatrix a = parse_rational_matrix(opt.matrix);
  const IndexSet boundary = parse_boundary(opt.boundary, a.order());
  Json inputs;
  inputs["matrix"] = to_string(a);
  inputs["boundary"] = index_set_json(boundary);
  const Selection sel = select_lambda(a, boundary, opt.seed);
  if (!verify_certificate(sel.f, sel.certificate)) {
    throw InternalError("selection certificate failed verification");
  }
  Json result;
  result["lambda"] = lambda_json(sel.lambda);
  result["f"] = to_string(sel.f);
  result["certificate"] = certificate_json(sel.certificate, a.order());
  result["verified"] = true;
  Json out = envelope("select-lambda", std::move(inputs), std::move(result));
  out["seed"] = opt.seed;
  return out;
}

Json run_gamma(const Options& opt) {
  const VectorField v = parse_vector_field(opt.field);
  const IndexSet boundary = parse_boundary(opt.boundary, v.dimension);
  std::optional<Polynomial> delta;
  if (!opt.delta.empty()) delta = parse_polynomial(opt.delta, v.dimension);
  Json inputs;
  inputs["field"] = field_json(v);
  inputs["boundary"] = index_set_json(boundary);
  inputs["delta"] = delta ? Json(to_string(*delta)) : Json(nullptr);
  const GammaResult g = gamma_construct(v, boundary, delta, opt.seed);
  if (!verify_certificate(g.certified, g.certificate)) {
    throw InternalError("gamma certificate failed verification");
  }
  Json result;
  result["gamma"] = to_string(g.gamma);
  result["certified"] = to_string(g.certified);
  result["case"] = g.case_used;
  result["lambda"] = lambda_json(g.lambda);
  result["retries"] = g.retries;
  result["certificate"] = certificate_json(g.certificate, v.dimension);
  result["verified"] = true;
  Json out = envelope("gamma", std::move(inputs), std::move(result));
  out["seed"] = opt.seed;
  return out;
}

Json run_lowest_part(const Options& opt) {
  const Polynomial p = parse_polynomial(opt.poly, opt.vars);
  const WeightVector w = parse_weight_list(opt.weights);
  Json inputs;
  inputs["vars"] = opt.vars;
  inputs["poly"] = to_string(p);
  inputs["weights"] = w;
  Json result;
  const auto order = p.weighted_order(w);
  if (!order) {
    result["order"] = "infinite";
    result["lowest_part"] = nullptr;
  } else {
    result["order"] = *order;
    result["lowest_part"] = to_string(p.weighted_lowest_part(w));
  }
  return envelope("lowest-part", std::move(inputs), std::move(result));
}

Json run_wps(const Options& opt, bool chart_requested) {
  const WeightVector w = parse_weight_list(opt.weights);
  const OneForm omega = parse_one_form(opt.form);
  if (omega.coordinate_count() != static_cast<int>(w.size())) {
    throw DomainError("one form component per weight required");
  }
  Json inputs;
  inputs["weights"] = w;
  Json comps = Json::array();
  for (const auto& c : omega.components) comps.push_back(to_string(c));
  inputs["form"] = std::move(comps);

  Json result;
  result["form_weight"] = form_weight(omega, w);
  result["euler_contraction"] = to_string(euler_contraction(omega, w));
  if (w.size() == 3) {
    const GradedDegree degree = foliation_canonical_degree(omega, w);
    result["canonical_degree"] = degree;
    result["self_intersection"] = rational_json(self_intersection(degree, degree, w));
  }
  if (chart_requested) {
    const AffineChartForm chart = dehomogenize(omega, opt.chart - 1, w);
    Json chart_json;
    chart_json["index"] = opt.chart;
    chart_json["group_order"] = chart.group_order;
    Json affine = Json::array();
    for (const auto& c : chart.components) affine.push_back(to_string(c));
    chart_json["affine_form"] = std::move(affine);
    if (chart.components.size() == 2) {
      const VectorField field = annihilator_2d(chart.components);
      chart_json["vector_field"] = field_json(field);
      const MpVerdict verdict = mp_classify(field);
      chart_json["verdict"] = verdict_name(verdict.verdict);
      chart_json["linear_part"] =
          verdict.linear ? Json(to_string(*verdict.linear)) : Json(nullptr);
    }
    result["chart"] = std::move(chart_json);
  }
  return envelope("wps", std::move(inputs), std::move(result));
}

Json run_selfcheck_cmd(const Options& opt, bool& all_passed) {
  Json inputs;
  inputs["suite"] = opt.suite;
  std::vector<SuiteResult> reports;
  if (opt.suite == "all") {
    reports = run_all_selfchecks(opt.seed);
  } else {
    reports.push_back(run_selfcheck(opt.suite, opt.seed));
  }
  Json suites = Json::array();
  all_passed = true;
  for (const auto& r : reports) {
    suites.push_back(suite_result_json(r));
    all_passed = all_passed && r.passed();
  }
  Json result;
  result["suites"] = std::move(suites);
  result["all_passed"] = all_passed;
  Json out = envelope("selfcheck", std::move(inputs), std::move(result));
  out["seed"] = opt.seed;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"exact chart-level computations for rank-1 foliation singularities"};
  app.require_subcommand(1);
  app.add_flag("--pretty", opt.pretty, "indent the JSON output");

  auto* lct = app.add_subcommand("lct", "log canonical threshold of a monomial ideal");
  lct->add_option("--vars", opt.vars, "ambient dimension")->required();
  lct->add_option("--ideal", opt.ideal, "comma-separated monomial generators")->required();
  lct->add_flag("--generic", opt.generic,
                "value for a general linear combination of the generators");

  auto* nilpotent = app.add_subcommand("nilpotent", "exact nilpotency test");
  nilpotent->add_option("--matrix", opt.matrix, "rows ';'-separated, entries ','")->required();

  auto* cycle_form = app.add_subcommand(
      "cycle-form", "cycle classification under the principal-submatrix hypothesis");
  cycle_form->add_option("--matrix", opt.matrix, "rows ';'-separated, entries ','")->required();

  auto* linear = app.add_subcommand("linear-part", "first-order matrix of a singular field");
  linear->add_option("--field", opt.field, "comma-separated components")->required();

  auto* mp_check = app.add_subcommand("mp-check", "terminal / log canonical / not-lc verdict");
  mp_check->add_option("--field", opt.field, "comma-separated components")->required();

  auto* validate = app.add_subcommand("validate-pair", "invariant divisor through a singularity");
  validate->add_option("--field", opt.field, "comma-separated components")->required();
  validate->add_option("--delta", opt.delta, "divisor polynomial");

  auto* tangency = app.add_subcommand("tangency", "tangency determinant against n-1 fields");
  tangency->add_option("--field", opt.field, "the foliation generator")->required();
  tangency->add_option("--others", opt.others, "';'-separated companion fields")->required();

  auto* omega = app.add_subcommand("omega", "logarithmic contraction on a chart");
  omega->add_option("--field", opt.field, "comma-separated components")->required();
  omega->add_option("--lambda", opt.lambda, "comma-separated coefficients")->required();
  omega->add_option("--boundary", opt.boundary, "comma-separated 1-based boundary indices");

  auto* ffm = app.add_subcommand("f-from-matrix", "linear-part contraction polynomial");
  ffm->add_option("--matrix", opt.matrix, "rows ';'-separated, entries ','")->required();
  ffm->add_option("--lambda", opt.lambda, "comma-separated coefficients")->required();
  ffm->add_option("--boundary", opt.boundary, "comma-separated 1-based boundary indices");

  auto* select = app.add_subcommand("select-lambda", "certified coefficient selection");
  select->add_option("--matrix", opt.matrix, "rows ';'-separated, entries ','")->required();
  select->add_option("--boundary", opt.boundary, "comma-separated 1-based boundary indices");
  select->add_option("--seed", opt.seed, "PRNG seed (default 0)");

  auto* gamma = app.add_subcommand("gamma", "certified chart divisor construction");
  gamma->add_option("--field", opt.field, "comma-separated components")->required();
  gamma->add_option("--boundary", opt.boundary, "comma-separated 1-based boundary indices");
  gamma->add_option("--delta", opt.delta, "invariant divisor polynomial");
  gamma->add_option("--seed", opt.seed, "PRNG seed (default 0)");

  auto* lowest = app.add_subcommand("lowest-part", "weighted order and lowest part");
  lowest->add_option("--vars", opt.vars, "ambient dimension")->required();
  lowest->add_option("--poly", opt.poly, "polynomial")->required();
  lowest->add_option("--weights", opt.weights, "comma-separated positive weights")->required();

  auto* wps = app.add_subcommand("wps", "weighted projective form bookkeeping");
  wps->add_option("--weights", opt.weights, "comma-separated positive weights")->required();
  wps->add_option("--form", opt.form, "comma-separated form components")->required();
  auto* chart_opt = wps->add_option("--chart", opt.chart, "1-based chart coordinate");

  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in property suites");
  selfcheck->add_option("suite", opt.suite,
                        "lemma31|lambda|howald|tangency|chart|gamma|example62|all");
  selfcheck->add_option("--seed", opt.seed, "PRNG seed (default 0)");

  // lets --pretty appear after the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("folia");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json payload;
    int exit_code = 0;
    if (*lct) {
      payload = run_lct(opt);
    } else if (*nilpotent) {
      payload = run_nilpotent(opt);
    } else if (*cycle_form) {
      payload = run_cycle_form(opt);
    } else if (*linear) {
      payload = run_linear_part(opt);
    } else if (*mp_check) {
      payload = run_mp_check(opt);
    } else if (*validate) {
      payload = run_validate_pair(opt);
    } else if (*tangency) {
      payload = run_tangency(opt);
    } else if (*omega) {
      payload = run_omega(opt);
    } else if (*ffm) {
      payload = run_f_from_matrix(opt);
    } else if (*select) {
      payload = run_select_lambda(opt);
    } else if (*gamma) {
      payload = run_gamma(opt);
    } else if (*lowest) {
      payload = run_lowest_part(opt);
    } else if (*wps) {
      payload = run_wps(opt, chart_opt->count() > 0);
    } else if (*selfcheck) {
      bool all_passed = false;
      payload = run_selfcheck_cmd(opt, all_passed);
      if (!all_passed) exit_code = 3;
    }
    out << payload.dump(opt.pretty ? 2 : -1) << "\n";
    return exit_code;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace folia::cli
