#pragma once

#include <cstdint>
#include <string>

namespace labelana {

enum class CoverMode { SameLength, PrefixFree, Both };

enum class OutputFormat { Text, Json };

// Analysis configuration. Every bound is >= 1 and the same (input, config)
// pair always produces byte-identical output.
struct Config {
  // Families indexed by atoms are enumerated only while 2^atoms stays within
  // this budget.
  int max_atoms = 16;

  // Scales the loop-word search bound B_loop = #states * (|shortest|+1).
  int word_bound_multiplier = 1;

  CoverMode cover_mode = CoverMode::Both;
  OutputFormat format = OutputFormat::Text;

  // Admit the empty word as a cover path in connects-to-loop.
  bool allow_epsilon_cover = false;

  std::uint64_t seed = 1;

  // Hard caps on the input graph.
  int max_vertices = 64;
  int max_edges = 10000;

  // Cap on subset-automaton states per view.
  int max_states = 1 << 18;

  // Loop witnesses reported per base set.
  int max_loop_witnesses = 16;

  // Quotients carry per-atom loop-witness detail only while the core lattice
  // stays within this size; the decisive predicates are always computed.
  int max_quotient_reports = 64;
};

}  // namespace labelana
