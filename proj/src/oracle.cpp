#include "labelana/oracle.hpp"

#include <algorithm>
#include <set>

namespace labelana {

PlainGraph PlainGraph::from_injective(const Graph& g) {
  std::set<LetterId> used;
  for (const Edge& e : g.edges()) {
    if (!used.insert(e.label).second) {
      throw ValidationError("oracle inapplicable: labeling is not injective (label '" +
                            g.letter_name(e.label) + "' repeats)");
    }
  }
  PlainGraph p;
  p.n = g.vertex_count();
  p.out.assign(p.n, {});
  for (const Edge& e : g.edges()) p.out[e.src].push_back(e.dst);
  return p;
}

bool condition_L(const PlainGraph& g) {
  // An exit-less cycle forces out-degree one along the whole cycle, so it is
  // a cycle of the functional graph of out-degree-one vertices.
  std::vector<int> next(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (g.out[v].size() == 1) next[v] = g.out[v][0];
  }
  for (int v = 0; v < g.n; ++v) {
    if (next[v] < 0) continue;
    int cur = next[v];
    for (int step = 0; step < g.n; ++step) {
      if (cur == v) return false;  // closed an out-degree-one cycle
      if (next[cur] < 0) break;    // left the out-degree-one set
      cur = next[cur];
    }
  }
  return true;
}

namespace {

// Iterative Tarjan SCC over an adjacency structure with a removed vertex.
struct Scc {
  std::vector<int> comp;  // node -> scc id (-1 for the removed vertex)
  std::vector<std::vector<int>> members;
  std::vector<bool> cyclic;  // scc has an internal edge
};

Scc scc_without(const PlainGraph& g, int removed) {
  Scc s;
  s.comp.assign(g.n, -1);
  std::vector<int> index(g.n, -1), low(g.n, 0);
  std::vector<bool> onstack(g.n, false);
  std::vector<int> stack;
  int counter = 0;

  struct Frame {
    int v;
    size_t ei;
  };
  for (int root = 0; root < g.n; ++root) {
    if (root == removed || index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    onstack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.ei < g.out[f.v].size()) {
        int w = g.out[f.v][f.ei++];
        if (w == removed) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          onstack[w] = true;
          call.push_back({w, 0});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          int cid = static_cast<int>(s.members.size());
          s.members.emplace_back();
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            onstack[w] = false;
            s.comp[w] = cid;
            s.members[cid].push_back(w);
            if (w == f.v) break;
          }
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  s.cyclic.assign(s.members.size(), false);
  for (int v = 0; v < g.n; ++v) {
    if (v == removed) continue;
    for (int w : g.out[v]) {
      if (w != removed && s.comp[v] == s.comp[w]) s.cyclic[s.comp[v]] = true;
    }
  }
  return s;
}

}  // namespace

bool condition_K(const PlainGraph& g) {
  const int CAP = 2;  // 0, 1, and "two or more"
  for (int v = 0; v < g.n; ++v) {
    // First-return loops at v: self-loop edges plus walks through G minus v
    // that finish with an edge into v.
    int selfloops = 0;
    std::vector<int> into_v(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
      for (int w : g.out[u]) {
        if (w == v && u == v) ++selfloops;
        if (w == v && u != v) ++into_v[u];
      }
    }

    Scc s = scc_without(g, v);
    // f(u): number of v-avoiding walks from u ending with an edge into v,
    // saturated at 2; a cyclic component that reaches an exit pumps forever.
    std::vector<int> f(g.n, 0);
    // SCC ids from Tarjan come out in reverse topological order: every edge
    // leaving a component points to a component with a smaller id.
    for (size_t cid = 0; cid < s.members.size(); ++cid) {
      int base = 0;
      for (int u : s.members[cid]) {
        base = std::min(CAP, base + into_v[u]);
        for (int w : g.out[u]) {
          if (w == v) continue;
          if (s.comp[w] != static_cast<int>(cid)) base = std::min(CAP, base + f[w]);
        }
      }
      if (s.cyclic[cid] && base > 0) base = CAP;
      if (s.cyclic[cid]) {
        for (int u : s.members[cid]) f[u] = base;
      } else {
        int u = s.members[cid][0];
        int val = into_v[u];
        for (int w : g.out[u]) {
          if (w != v) val = std::min(CAP, val + f[w]);
        }
        f[u] = val;
      }
    }

    int total = selfloops;
    for (int w : g.out[v]) {
      if (w != v) total = std::min(CAP, total + f[w]);
    }
    if (total == 1) return false;
  }
  return true;
}

bool vertex_connects_to_loop_graph(const PlainGraph& g) {
  Scc s = scc_without(g, -1);
  std::vector<bool> on_cycle(g.n, false);
  for (int v = 0; v < g.n; ++v) on_cycle[v] = s.cyclic[s.comp[v]];

  for (int v = 0; v < g.n; ++v) {
    // DFS from v looking for a cycle vertex.
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack{v};
    seen[v] = true;
    bool found = false;
    while (!stack.empty() && !found) {
      int u = stack.back();
      stack.pop_back();
      if (on_cycle[u]) found = true;
      for (int w : g.out[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (!found) return false;
  }
  return true;
}

OracleReport run_oracle(const Graph& g) {
  PlainGraph p = PlainGraph::from_injective(g);
  return OracleReport{condition_L(p), condition_K(p), vertex_connects_to_loop_graph(p)};
}

}  // namespace labelana
