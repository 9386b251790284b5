#pragma once

#include <cstdint>
#include <random>

namespace folia {

// Deterministic PRNG.  Every random choice in the library flows through an
// explicit seed so that outputs are reproducible byte for byte; no global
// state anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [lo, hi], both inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace folia
