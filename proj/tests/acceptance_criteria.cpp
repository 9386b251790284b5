// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exits nonzero if any line fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "folia/foliation.hpp"
#include "folia/newton.hpp"
#include "folia/selfcheck.hpp"
#include "json_io.hpp"

using namespace folia;

namespace {

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool suite_ok(const std::string& name, std::uint64_t seed, int expected_cases,
              std::string& detail) {
  const SuiteResult r = run_selfcheck(name, seed);
  std::ostringstream msg;
  msg << r.cases << " cases, " << r.failures << " failures";
  if (!r.notes.empty()) msg << "; first: " << r.notes.front();
  detail = msg.str();
  return r.failures == 0 && r.cases == expected_cases;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "threshold of the cycle ideal is exactly 1/1 with a validating witness",
                      1.0, [](std::string& detail) {
                        std::string out;
                        const int code = run_cli({"lct", "--vars", "3", "--ideal",
                                                  "x2^2*x3, x1*x3^2, x1^2*x2"},
                                                 out);
                        if (code != 0) {
                          detail = "CLI exit code " + std::to_string(code);
                          return false;
                        }
                        const cli::Json payload = cli::Json::parse(out);
                        if (payload["result"]["lct"] != "1/1") {
                          detail = "lct = " + payload["result"]["lct"].dump();
                          return false;
                        }
                        const LctResult witness = cli::lct_result_from_json(payload["result"]);
                        const MonomialIdeal ideal =
                            parse_monomial_ideal("x2^2*x3, x1*x3^2, x1^2*x2", 3);
                        detail = "lct = 1/1, witness re-checked";
                        return witness.verify(ideal);
                      }});

  criteria.push_back({2, "weighted projective pipeline for weights (1,1,n), n = 1..10", 1.0,
                      [](std::string& detail) {
                        if (!suite_ok("example62", 0, 10, detail)) return false;
                        std::string out;
                        const int code =
                            run_cli({"wps", "--weights", "1,1,4", "--form",
                                     "x^2*z, y^2*z, -(x^3+y^3)", "--chart", "3"},
                                    out);
                        if (code != 0) return false;
                        const cli::Json payload = cli::Json::parse(out);
                        return payload["result"]["form_weight"] == 7 &&
                               payload["result"]["canonical_degree"] == 1 &&
                               payload["result"]["self_intersection"] == "1/4" &&
                               payload["result"]["chart"]["verdict"] == "NOT_LC";
                      }});

  criteria.push_back({3,
                      "nilpotency / cycle / normal-form equivalence, 512 exhaustive + 1000 random",
                      30.0, [](std::string& detail) { return suite_ok("lemma31", 0, 1512, detail); }});

  criteria.push_back({4, "coefficient selection certificates over every boundary set", 60.0,
                      [](std::string& detail) { return suite_ok("lambda", 0, 1500, detail); }});

  criteria.push_back({5, "LP threshold equals the integer brute force on 300 seeded ideals",
                      60.0, [](std::string& detail) { return suite_ok("howald", 0, 301, detail); }});

  criteria.push_back({6, "planar tangency determinant matches the displayed divisor", 1.0,
                      [](std::string& detail) { return suite_ok("tangency", 0, 25, detail); }});

  criteria.push_back({7, "tangency determinant vs logarithmic contraction, constant ratio",
                      60.0, [](std::string& detail) { return suite_ok("chart", 0, 928, detail); }});

  criteria.push_back({8, "end-to-end chart divisor construction with verified certificates",
                      120.0, [](std::string& detail) { return suite_ok("gamma", 0, 928, detail); }});

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < criterion.budget_seconds;
    ok = ok && in_budget;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.number << ": "
              << criterion.label << "  [" << std::fixed << std::setprecision(2) << seconds
              << " s / " << criterion.budget_seconds << " s]";
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    if (!in_budget) std::cout << "  (over budget)";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}
