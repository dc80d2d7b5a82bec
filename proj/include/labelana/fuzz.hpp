#pragma once

#include <functional>
#include <string>

#include "labelana/analysis.hpp"
#include "labelana/random_graph.hpp"

namespace labelana {

struct FuzzSummary {
  int cases = 0;
  int oracle_agreements = 0;
  int failures = 0;
  std::string first_failure_reason;
  std::string first_failure_lgr;
  bool ok() const { return failures == 0; }
};

/// One fuzz case: an injectively labeled random skeleton plus a random
/// relabeling of the same skeleton over a small alphabet.
struct FuzzCase {
  Graph injective;
  Graph labeled;
};

FuzzCase make_fuzz_case(int size, std::uint64_t seed, std::uint64_t index);

/// Differential run: classical checkers against the labeled analysis on the
/// injective copy, soundness mesh on both copies. Stops at the first failure.
FuzzSummary run_fuzz(int n, int size, std::uint64_t seed, const Config& config,
                     const std::function<void(int)>& progress = {});

}  // namespace labelana
