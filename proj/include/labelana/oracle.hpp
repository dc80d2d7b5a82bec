#pragma once

#include <vector>

#include "labelana/graph.hpp"

namespace labelana {

/// Plain directed graph derived from an injectively labeled graph, labels
/// dropped. Classical graph-algebra checkers run on this; they deliberately
/// share no machinery with the labeled-space analysis.
struct PlainGraph {
  int n = 0;
  std::vector<std::vector<int>> out;  // adjacency (parallel edges kept)

  /// Throws ValidationError("oracle inapplicable...") when two edges share a
  /// label.
  static PlainGraph from_injective(const Graph& g);
};

/// Every cycle has an exit: no cycle consists solely of out-degree-one
/// vertices.
bool condition_L(const PlainGraph& g);

/// No vertex is the base of exactly one first-return loop.
bool condition_K(const PlainGraph& g);

/// Every vertex reaches a vertex that lies on a cycle.
bool vertex_connects_to_loop_graph(const PlainGraph& g);

struct OracleReport {
  bool L = false;
  bool K = false;
  bool connects = false;
};

OracleReport run_oracle(const Graph& g);

}  // namespace labelana
