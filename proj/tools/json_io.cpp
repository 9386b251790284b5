#include "json_io.hpp"

#include "folia/errors.hpp"

namespace folia::cli {

Json rational_json(const Rational& r) { return to_fraction_string(r); }

Json lambda_json(const LambdaVector& lambda) {
  Json out = Json::array();
  for (const auto& l : lambda) out.push_back(rational_json(l));
  return out;
}

Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

IndexSet index_set_from_json(const Json& j, int dimension) {
  IndexSet out;
  for (const auto& v : j) out.push_back(v.get<int>() - 1);
  validate_index_set(out, dimension);
  return out;
}

namespace {

const char* kind_name(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::SmoothLinear:
      return "smooth_linear";
    case Certificate::Kind::ReducedSncMonomial:
      return "reduced_snc_monomial";
    case Certificate::Kind::MonomialGenericHowald:
      return "monomial_generic_howald";
    case Certificate::Kind::Restriction:
      return "restriction";
    case Certificate::Kind::LowestPartReduction:
      return "lowest_part_reduction";
    case Certificate::Kind::PairSnc:
      return "pair_snc";
  }
  return "?";
}

}  // namespace

Json certificate_json(const Certificate& cert, int dimension) {
  Json out;
  out["kind"] = kind_name(cert.kind);
  switch (cert.kind) {
    case Certificate::Kind::SmoothLinear:
      out["form"] = to_string(*cert.form);
      break;
    case Certificate::Kind::ReducedSncMonomial:
      out["monomial"] = to_string(*cert.form);
      break;
    case Certificate::Kind::MonomialGenericHowald: {
      Json support = Json::array();
      for (const auto& e : cert.support) {
        support.push_back(to_string(Polynomial::monomial(dimension, e, 1)));
      }
      out["support"] = std::move(support);
      out["lambda"] = lambda_json(cert.lambdas);
      out["lct"] = rational_json(*cert.lct_value);
      out["assumption"] = "general linear combination";
      break;
    }
    case Certificate::Kind::Restriction:
      out["restrict_to"] = index_set_json(cert.restrict_to);
      out["factor_out"] = index_set_json(cert.factor_out);
      out["child"] =
          certificate_json(*cert.child, static_cast<int>(cert.restrict_to.size()));
      break;
    case Certificate::Kind::LowestPartReduction:
      out["weights"] = cert.weights;
      out["child"] = certificate_json(*cert.child, dimension);
      break;
    case Certificate::Kind::PairSnc:
      out["smooth_index"] = cert.smooth_index + 1;
      out["smooth_factor"] = cert.smooth_factor;
      out["transversality"] =
          cert.transversality ? rational_json(*cert.transversality) : Json(nullptr);
      out["boundary"] = index_set_json(cert.boundary);
      out["child"] = certificate_json(*cert.child, dimension);
      break;
  }
  return out;
}

Certificate certificate_from_json(const Json& j, int dimension) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "smooth_linear") {
    return Certificate::smooth_linear(
        parse_polynomial(j.at("form").get<std::string>(), dimension));
  }
  if (kind == "reduced_snc_monomial") {
    return Certificate::reduced_snc_monomial(
        parse_polynomial(j.at("monomial").get<std::string>(), dimension));
  }
  if (kind == "monomial_generic_howald") {
    std::vector<MultiIndex> support;
    for (const auto& s : j.at("support")) {
      const Polynomial mono = parse_polynomial(s.get<std::string>(), dimension);
      if (mono.term_count() != 1) throw DomainError("support entries must be monomials");
      support.push_back(mono.terms().begin()->first);
    }
    std::vector<Rational> lambdas;
    for (const auto& l : j.at("lambda")) {
      lambdas.push_back(rational_from_string(l.get<std::string>()));
    }
    return Certificate::monomial_generic_howald(
        std::move(support), std::move(lambdas),
        rational_from_string(j.at("lct").get<std::string>()));
  }
  if (kind == "restriction") {
    IndexSet I = index_set_from_json(j.at("restrict_to"), dimension);
    IndexSet K = index_set_from_json(j.at("factor_out"), dimension);
    Certificate child = certificate_from_json(j.at("child"), static_cast<int>(I.size()));
    return Certificate::restriction(std::move(I), std::move(K), std::move(child));
  }
  if (kind == "lowest_part_reduction") {
    WeightVector w = j.at("weights").get<WeightVector>();
    return Certificate::lowest_part_reduction(std::move(w),
                                              certificate_from_json(j.at("child"), dimension));
  }
  if (kind == "pair_snc") {
    std::optional<Rational> transversality;
    if (!j.at("transversality").is_null()) {
      transversality = rational_from_string(j.at("transversality").get<std::string>());
    }
    return Certificate::pair_snc(j.at("smooth_index").get<int>() - 1,
                                 j.at("smooth_factor").get<bool>(), std::move(transversality),
                                 index_set_from_json(j.at("boundary"), dimension),
                                 certificate_from_json(j.at("child"), dimension));
  }
  throw DomainError("unknown certificate kind: " + kind);
}

Json lct_result_json(const LctResult& result) {
  Json witness;
  witness["mu"] = lambda_json(result.mu);
  witness["slack"] = lambda_json(result.slack);
  Json weight = Json::array();
  for (const auto& w : result.weight) weight.push_back(std::stol(w.get_str()));
  witness["weight"] = std::move(weight);
  Json out;
  out["lct"] = rational_json(result.value);
  out["witness"] = std::move(witness);
  return out;
}

LctResult lct_result_from_json(const Json& j) {
  LctResult out;
  out.value = rational_from_string(j.at("lct").get<std::string>());
  const Json& witness = j.at("witness");
  for (const auto& m : witness.at("mu")) out.mu.push_back(rational_from_string(m.get<std::string>()));
  for (const auto& s : witness.at("slack")) {
    out.slack.push_back(rational_from_string(s.get<std::string>()));
  }
  for (const auto& w : witness.at("weight")) out.weight.push_back(Integer(w.get<long>()));
  return out;
}

Json membership_json(const MembershipResult& result) {
  Json out;
  out["member"] = result.member;
  if (result.member) {
    out["mu"] = lambda_json(result.mu);
    out["slack"] = lambda_json(result.slack);
  } else {
    Json weight = Json::array();
    for (const auto& w : result.separating_weight) weight.push_back(std::stol(w.get_str()));
    out["separating_weight"] = std::move(weight);
  }
  return out;
}

Json suite_result_json(const SuiteResult& result) {
  Json out;
  out["name"] = result.name;
  out["cases"] = result.cases;
  out["failures"] = result.failures;
  out["notes"] = result.notes;
  return out;
}

}  // namespace folia::cli
