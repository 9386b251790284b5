#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace folia {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> notes;

  bool passed() const { return cases > 0 && failures == 0; }
};

// Property suites with independent oracles (exhaustive small-case search,
// integer brute force, permutation search).  Deterministic for a fixed seed.
//
//   lemma31   - nilpotency / cycle / normal-form equivalence, exhaustive
//               {0,1} order-3 plus 1000 seeded rational order-4 matrices
//   lambda    - coefficient selection soundness over all boundary sets
//   howald    - LP threshold against the integer weight brute force
//   tangency  - the planar tangency determinant identity
//   chart     - determinant vs. logarithmic contraction, constant ratio
//   gamma     - end-to-end chart divisor construction and certificates
//   example62 - weighted projective pipeline for n = 1..10
std::vector<std::string> selfcheck_suites();

SuiteResult run_selfcheck(std::string_view suite, std::uint64_t seed);

std::vector<SuiteResult> run_all_selfchecks(std::uint64_t seed);

}  // namespace folia
