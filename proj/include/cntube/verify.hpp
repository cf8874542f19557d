#pragma once

// Randomized invariant suite over all modules, driven by a seeded RNG.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cntube/nanotube.hpp"
#include "cntube/spectrum.hpp"

namespace cntube::verify {

using Rng = std::mt19937_64;

enum class Status { pass, fail, skip };

std::string_view to_string(Status s);

struct CheckResult {
  std::string module;
  std::string name;
  Status status = Status::pass;
  std::string detail; // counterexample on failure, reason on skip
};

struct Options {
  std::uint64_t seed = 1;
  int trials = 100;
};

std::vector<CheckResult> run_all(const ChiralityData& cd, const Options& opts);

bool all_passed(const std::vector<CheckResult>& results);

// Sampling helpers shared with the test suites.
LatticePoint random_point(Rng& rng, Int radius);
TranslationVector random_translation(Rng& rng, Int radius);
KVector random_k(Rng& rng, double radius);
// Hamada (n1, n2) with max >= n1 > n2 > 0, so the tube is chiral.
IntTriple random_chiral(Rng& rng, Int max_index);
// Uniform over lines, then uniform in the clipped parameter interval.
KVector random_allowed_k(Rng& rng, const ChiralityData& cd);

} // namespace cntube::verify
