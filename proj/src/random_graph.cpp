#include "labelana/random_graph.hpp"

#include <set>
#include <tuple>

namespace labelana {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::string letter_name(int i) {
  static const char* base[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  if (i < 8) return base[i];
  return "l" + std::to_string(i);
}

}  // namespace

Graph random_graph(const RandomGraphParams& params, std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(params.max_vertices)));
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));

  const int max_edges = std::max(params.max_edges, n);
  const int target =
      n + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_edges - n + 1)));

  std::set<std::tuple<int, int, int>> used;
  std::vector<std::tuple<int, int, int>> edges;  // src, dst, letter index
  auto add = [&](int s, int d, int l) {
    if (used.emplace(s, d, l).second) {
      edges.emplace_back(s, d, l);
      return true;
    }
    return false;
  };

  // One outgoing edge per vertex keeps the graph sink-free.
  for (int v = 0; v < n; ++v) {
    int dst = static_cast<int>(pick(rng, n));
    int letter = params.injective ? static_cast<int>(edges.size())
                                  : static_cast<int>(pick(rng, params.letters));
    add(v, dst, letter);
  }
  int attempts = 0;
  while (static_cast<int>(edges.size()) < target && attempts < 20 * target) {
    ++attempts;
    int src = static_cast<int>(pick(rng, n));
    int dst = static_cast<int>(pick(rng, n));
    int letter = params.injective ? static_cast<int>(edges.size())
                                  : static_cast<int>(pick(rng, params.letters));
    add(src, dst, letter);
  }

  std::vector<Graph::RawEdge> raw;
  for (auto [s, d, l] : edges) {
    raw.push_back({vertices[s], vertices[d],
                   params.injective ? "e" + std::to_string(l) : letter_name(l)});
  }
  return Graph::build("random", vertices, raw, Config{});
}

Graph relabel_random(const Graph& g, int letters, std::mt19937_64& rng) {
  std::set<std::tuple<int, int, int>> used;
  std::vector<Graph::RawEdge> raw;
  for (const Edge& e : g.edges()) {
    int l = static_cast<int>(pick(rng, letters));
    bool placed = false;
    for (int tries = 0; tries < letters && !placed; ++tries) {
      if (used.emplace(e.src, e.dst, l).second) {
        placed = true;
      } else {
        l = (l + 1) % letters;
      }
    }
    // When every label between this (src,dst) pair is taken the edge would
    // duplicate an existing triple; dropping it cannot create a sink since
    // the kept parallel edges leave the same source.
    if (placed) {
      raw.push_back({g.vertex_name(e.src), g.vertex_name(e.dst), letter_name(l)});
    }
  }
  return Graph::build(g.name() + "-relabeled", g.vertex_names(), raw, Config{});
}

}  // namespace labelana
