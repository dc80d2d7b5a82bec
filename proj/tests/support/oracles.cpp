#include "support/oracles.hpp"

#include <algorithm>
#include <map>

namespace labelana::testsupport {

VertexMask oracle_word_range(const Graph& g, VertexMask from, const Word& w) {
  std::set<VertexId> cur;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (from & bit(v)) cur.insert(v);
  }
  for (LetterId a : w) {
    std::set<VertexId> nxt;
    for (const Edge& e : g.edges()) {
      if (e.label == a && cur.count(e.src)) nxt.insert(e.dst);
    }
    cur.swap(nxt);
  }
  VertexMask out = 0;
  for (VertexId v : cur) out |= bit(v);
  return out;
}

std::vector<Word> realized_words(const Graph& g, int maxlen) {
  std::vector<Word> out;
  // paths as (endpoint, word); extend edge by edge
  std::vector<std::pair<VertexId, Word>> layer;
  for (const Edge& e : g.edges()) layer.push_back({e.dst, Word{e.label}});
  std::set<Word> seen;
  for (int len = 1; len <= maxlen && !layer.empty(); ++len) {
    for (auto& [v, w] : layer) {
      if (seen.insert(w).second) out.push_back(w);
    }
    std::vector<std::pair<VertexId, Word>> next;
    for (auto& [v, w] : layer) {
      for (const Edge& e : g.edges()) {
        if (e.src == v) {
          Word w2 = w;
          w2.push_back(e.label);
          next.push_back({e.dst, std::move(w2)});
        }
      }
    }
    // collapse duplicate (endpoint, word) pairs to keep the layer small
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer.swap(next);
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<std::pair<Word, VertexMask>> words_from(const Graph& g, VertexMask from, int length) {
  std::map<Word, VertexMask> acc;
  struct Path {
    VertexId end;
    Word word;
  };
  std::vector<Path> layer;
  for (const Edge& e : g.edges()) {
    if (from & bit(e.src)) layer.push_back({e.dst, Word{e.label}});
  }
  for (int len = 1; len < length; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (const Edge& e : g.edges()) {
        if (e.src == p.end) {
          Word w = p.word;
          w.push_back(e.label);
          next.push_back({e.dst, std::move(w)});
        }
      }
    }
    layer.swap(next);
  }
  for (const Path& p : layer) acc[p.word] |= bit(p.end);
  return {acc.begin(), acc.end()};
}

std::vector<std::vector<VertexMask>> language_partition_levels(const Graph& g) {
  // Range sets r(alpha) with their shortest word length, by subset BFS from
  // the full vertex set.
  std::map<VertexMask, int> depth;
  std::vector<VertexMask> frontier;
  for (LetterId a = 0; a < g.letter_count(); ++a) {
    VertexMask r = g.letter_range(g.all_vertices(), a);
    if (r && !depth.count(r)) {
      depth[r] = 1;
      frontier.push_back(r);
    }
  }
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<VertexMask> next;
    for (VertexMask m : frontier) {
      for (LetterId a = 0; a < g.letter_count(); ++a) {
        VertexMask r = g.letter_range(m, a);
        if (r && !depth.count(r)) {
          depth[r] = d + 1;
          next.push_back(r);
        }
      }
    }
    frontier.swap(next);
  }

  auto partition_at = [&](int level) {
    std::map<std::vector<int>, VertexMask> classes;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!(g.omega0() & bit(v))) continue;
      std::vector<int> sig;
      int i = 0;
      for (auto& [m, d] : depth) {
        if (d <= level && (m & bit(v))) sig.push_back(i);
        ++i;
      }
      classes[sig] |= bit(v);
    }
    std::vector<VertexMask> out;
    for (auto& [sig, m] : classes) out.push_back(m);
    std::sort(out.begin(), out.end(), [](VertexMask x, VertexMask y) {
      return std::countr_zero(x) < std::countr_zero(y);
    });
    return out;
  };

  // The final partition uses every reachable range set; iterating level by
  // level until it is reached avoids stopping early on a repeated level that
  // still refines later.
  int max_depth = 1;
  for (auto& [m, d] : depth) max_depth = std::max(max_depth, d);
  std::vector<VertexMask> final_partition = partition_at(max_depth);

  std::vector<std::vector<VertexMask>> levels;
  for (int l = 1;; ++l) {
    levels.push_back(partition_at(l));
    if (levels.back() == final_partition) break;
  }
  return levels;
}

std::vector<std::set<Word>> incoming_languages(const Graph& g, int l) {
  const int n = g.vertex_count();
  std::vector<std::set<Word>> acc(n);
  std::vector<std::set<Word>> exact(n);  // words of the current exact length
  for (const Edge& e : g.edges()) {
    exact[e.dst].insert(Word{e.label});
    acc[e.dst].insert(Word{e.label});
  }
  for (int len = 2; len <= l; ++len) {
    std::vector<std::set<Word>> next(n);
    for (const Edge& e : g.edges()) {
      for (const Word& w : exact[e.src]) {
        Word w2 = w;
        w2.push_back(e.label);
        next[e.dst].insert(std::move(w2));
      }
    }
    for (int v = 0; v < n; ++v) acc[v].insert(next[v].begin(), next[v].end());
    exact.swap(next);
  }
  return acc;
}

namespace {

std::vector<VertexMask> nonempty_members(const Space& space) {
  std::vector<VertexMask> out;
  for (AtomMask m = 1;; ++m) {
    out.push_back(space.vertices_of(m));
    if (m == space.all_atoms()) break;
  }
  return out;
}

struct ForcedWalk {
  bool branched = false;
  Word word;
  std::vector<VertexMask> frontiers;  // frontiers[i] after i letters
  int repeat_at = -1;                 // first index equal to the final frontier
};

ForcedWalk forced_walk(const Graph& g, VertexMask start, int max_steps) {
  ForcedWalk fw;
  fw.frontiers.push_back(start);
  VertexMask cur = start;
  for (int step = 0; step < max_steps; ++step) {
    std::set<LetterId> labels;
    for (const Edge& e : g.edges()) {
      if (cur & bit(e.src)) labels.insert(e.label);
    }
    if (labels.size() != 1) {
      fw.branched = true;
      return fw;
    }
    LetterId a = *labels.begin();
    VertexMask nxt = 0;
    for (const Edge& e : g.edges()) {
      if (e.label == a && (cur & bit(e.src))) nxt |= bit(e.dst);
    }
    fw.word.push_back(a);
    cur = nxt;
    for (size_t i = 0; i < fw.frontiers.size(); ++i) {
      if (fw.frontiers[i] == cur) {
        fw.repeat_at = static_cast<int>(i);
        fw.frontiers.push_back(cur);
        return fw;
      }
    }
    fw.frontiers.push_back(cur);
  }
  return fw;
}

}  // namespace

bool oracle_disagreeable(const Space& space) {
  const Graph& g = space.graph();
  const int max_steps = (1 << g.vertex_count()) + 2;
  for (VertexMask member : nonempty_members(space)) {
    ForcedWalk fw = forced_walk(g, member, max_steps);
    if (fw.branched || fw.repeat_at < 0) continue;
    int preperiod = fw.repeat_at;
    int period = static_cast<int>(fw.word.size()) - preperiod;
    bool purely = true;
    for (int i = 0; i < preperiod && purely; ++i) purely = fw.word[i] == fw.word[i + period];
    if (purely) return false;
  }
  return true;
}

bool oracle_condition_le(const Space& space) {
  const Graph& g = space.graph();
  const int max_steps = 4 * ((1 << g.vertex_count()) + 2);
  for (VertexMask member : nonempty_members(space)) {
    // Walk while the frontier emits a single label; every return to the
    // member is an exit-free loop candidate, checked against the cycle
    // condition on all family subsets.
    VertexMask cur = member;
    Word word;
    for (int step = 0; step < max_steps; ++step) {
      std::set<LetterId> labels;
      for (const Edge& e : g.edges()) {
        if (cur & bit(e.src)) labels.insert(e.label);
      }
      if (labels.size() != 1) break;
      LetterId a = *labels.begin();
      VertexMask nxt = 0;
      for (const Edge& e : g.edges()) {
        if (e.label == a && (cur & bit(e.src))) nxt |= bit(e.dst);
      }
      word.push_back(a);
      cur = nxt;
      if (cur == member) {
        bool cycle = true;
        for (AtomMask sub = 1; sub <= space.all_atoms() && cycle; ++sub) {
          VertexMask b = space.vertices_of(sub);
          if ((b & member) != b || b == 0) continue;
          cycle = oracle_word_range(g, b, word) == b;
        }
        if (cycle) return false;
      }
    }
  }
  return true;
}

std::vector<AtomMask> oracle_minimal_sets(const Space& space) {
  std::vector<AtomMask> family = space.enumerate_family();
  std::vector<AtomMask> out;
  for (AtomMask a : family) {
    if (a == 0) continue;
    bool minimal = true;
    for (AtomMask b : family) {
      AtomMask meet = a & b;
      if (meet != a && meet != 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace labelana::testsupport
