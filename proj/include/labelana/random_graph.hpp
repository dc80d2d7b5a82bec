#pragma once

#include <random>

#include "labelana/graph.hpp"

namespace labelana {

struct RandomGraphParams {
  int max_vertices = 8;
  int max_edges = 12;
  int letters = 3;  // ignored in injective mode (one letter per edge)
  bool injective = false;
};

/// Deterministic no-sink random graph. Bounded sampling uses plain modulo on
/// the raw generator so outputs match across platforms.
Graph random_graph(const RandomGraphParams& params, std::mt19937_64& rng);

/// Relabel a graph's edges with letters drawn from a small alphabet,
/// preserving the skeleton. Duplicate (src,dst,label) collisions are resolved
/// by cycling labels.
Graph relabel_random(const Graph& g, int letters, std::mt19937_64& rng);

}  // namespace labelana
