#pragma once

// Invariant sweeps run by `homrec verify` and the acceptance tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homrec/coloring.hpp"

namespace homrec {

struct SuiteOptions {
  Vertex n = 5;
  bool exhaustive = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  Vertex nmax = 20;
  unsigned threads = 1;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> lines;  // stable, thread-count independent
  std::optional<std::string> counterexample;
};

const std::vector<std::string_view>& suite_names();

/// Throws Error(Parse) for an unknown name, Error(Budget) for a scale the
/// suite refuses (e.g. exhaustive oracle above n = 5).
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

/// Every coloring on n vertices (n <= 6) or `samples` random ones
/// (density 1/2, rng seeds seed, seed+1, ...).
std::vector<Coloring> sweep_colorings(Vertex n, bool exhaustive, std::size_t samples, std::uint64_t seed);

}  // namespace homrec
