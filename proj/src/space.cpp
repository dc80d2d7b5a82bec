#include "labelana/space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace labelana {

namespace {

// Canonical class order: by lowest contained vertex.
std::vector<VertexMask> sorted_classes(std::vector<VertexMask> classes) {
  std::sort(classes.begin(), classes.end(), [](VertexMask x, VertexMask y) {
    return std::countr_zero(x) < std::countr_zero(y);
  });
  return classes;
}

std::vector<int> class_index(const std::vector<VertexMask>& classes, int n) {
  std::vector<int> idx(n, -1);
  for (size_t c = 0; c < classes.size(); ++c) {
    VertexMask rest = classes[c];
    while (rest) {
      idx[std::countr_zero(rest)] = static_cast<int>(c);
      rest &= rest - 1;
    }
  }
  return idx;
}

}  // namespace

AtomPartition refine_partition(const Graph& g) {
  const int n = g.vertex_count();
  const VertexMask omega0 = g.omega0();
  if (omega0 == 0) {
    throw ValidationError("every vertex is a source; the accommodating family is {∅}");
  }

  // Level 1: group by incoming letter sets.
  std::map<std::uint64_t, VertexMask> by_inletters;
  std::vector<std::uint64_t> inletters(n, 0);
  for (const Edge& e : g.edges()) inletters[e.dst] |= std::uint64_t{1} << e.label;
  for (VertexId v = 0; v < n; ++v) {
    if (omega0 & bit(v)) by_inletters[inletters[v]] |= bit(v);
  }

  AtomPartition p;
  std::vector<VertexMask> cur;
  for (auto& [key, m] : by_inletters) cur.push_back(m);
  cur = sorted_classes(std::move(cur));
  p.levels.push_back(cur);

  // Refine by signatures over edges from non-source vertices.
  for (;;) {
    std::vector<int> idx = class_index(cur, n);
    std::vector<std::set<std::pair<int, LetterId>>> sig(n);
    for (const Edge& e : g.edges()) {
      if (omega0 & bit(e.src)) sig[e.dst].insert({idx[e.src], e.label});
    }
    std::vector<VertexMask> next;
    for (VertexMask cls : cur) {
      std::map<std::set<std::pair<int, LetterId>>, VertexMask> split;
      VertexMask rest = cls;
      while (rest) {
        VertexId v = static_cast<VertexId>(std::countr_zero(rest));
        rest &= rest - 1;
        split[sig[v]] |= bit(v);
      }
      for (auto& [key, m] : split) next.push_back(m);
    }
    next = sorted_classes(std::move(next));
    if (next == cur) break;  // the extra round that verifies stability
    cur = std::move(next);
    p.levels.push_back(cur);
  }
  p.stabilization_depth = static_cast<int>(p.levels.size());
  return p;
}

Space Space::analyze(Graph g, const Config& config) {
  Space s;
  s.config_ = config;
  s.graph_ = std::move(g);
  const Graph& graph = s.graph_;

  for (VertexId v : graph.sources()) {
    s.warnings_.push_back("source vertex '" + graph.vertex_name(v) +
                          "' belongs to no set of the accommodating family");
  }

  s.partition_ = refine_partition(graph);
  s.atoms_ = s.partition_.atoms();
  const int k = static_cast<int>(s.atoms_.size());
  s.all_atoms_ = (k == 64) ? ~AtomMask{0} : (AtomMask{1} << k) - 1;
  s.atom_of_.assign(graph.vertex_count(), -1);
  for (int a = 0; a < k; ++a) {
    VertexMask rest = s.atoms_[a];
    while (rest) {
      s.atom_of_[std::countr_zero(rest)] = a;
      rest &= rest - 1;
    }
  }

  // Letter images of atoms. Every image must be an exact union of atoms;
  // anything else means the partition is not the family's atom partition.
  s.letter_image_.assign(static_cast<size_t>(graph.letter_count()) * k, 0);
  for (LetterId a = 0; a < graph.letter_count(); ++a) {
    for (int atom = 0; atom < k; ++atom) {
      VertexMask img = graph.letter_range(s.atoms_[atom], a);
      auto am = s.atoms_of(img);
      if (!am) {
        throw LogicError("letter image of an atom is not a union of atoms");
      }
      s.letter_image_[static_cast<size_t>(a) * k + atom] = *am;
    }
  }
  s.initial_range_.assign(graph.letter_count(), 0);
  for (LetterId a = 0; a < graph.letter_count(); ++a) {
    auto am = s.atoms_of(graph.letter_range(graph.all_vertices(), a));
    if (!am) throw LogicError("r(a) is not a union of atoms");
    s.initial_range_[a] = *am;
  }

  // Weakly left-resolving: images of disjoint atoms stay disjoint. The
  // letter-level check extends to words because the family is closed under
  // relative ranges.
  for (int i = 0; i < k && s.wlr_.holds; ++i) {
    for (int j = i + 1; j < k && s.wlr_.holds; ++j) {
      for (LetterId a = 0; a < graph.letter_count(); ++a) {
        VertexMask ri = graph.letter_range(s.atoms_[i], a);
        VertexMask rj = graph.letter_range(s.atoms_[j], a);
        if (ri & rj) {
          s.wlr_.holds = false;
          s.wlr_.counterexample = WlrCounterexample{s.atoms_[i], s.atoms_[j], a};
          break;
        }
      }
    }
  }

  // Independent partition-level cross-check of the atom construction:
  // the coarsest partition refining range-set membership whose class images
  // are unions of classes (Moore-style splitting) must equal the atoms.
  {
    std::vector<VertexMask> ranges;
    {
      std::set<VertexMask> seen;
      std::vector<VertexMask> frontier;
      for (LetterId a = 0; a < graph.letter_count(); ++a) {
        VertexMask r = graph.letter_range(graph.all_vertices(), a);
        if (seen.insert(r).second) frontier.push_back(r);
      }
      while (!frontier.empty()) {
        VertexMask cur = frontier.back();
        frontier.pop_back();
        for (LetterId a = 0; a < graph.letter_count(); ++a) {
          VertexMask nxt = graph.letter_range(cur, a);
          if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
      }
      ranges.assign(seen.begin(), seen.end());
    }
    std::vector<VertexMask> classes{graph.omega0()};
    auto split_by = [&](VertexMask splitter) {
      std::vector<VertexMask> next;
      bool changed = false;
      for (VertexMask c : classes) {
        VertexMask in = c & splitter, out = c & ~splitter;
        if (in && out) {
          next.push_back(in);
          next.push_back(out);
          changed = true;
        } else {
          next.push_back(c);
        }
      }
      classes = std::move(next);
      return changed;
    };
    for (VertexMask r : ranges) split_by(r);
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<VertexMask> snapshot = classes;
      for (VertexMask c : snapshot) {
        for (LetterId a = 0; a < graph.letter_count(); ++a) {
          if (split_by(graph.letter_range(c, a))) changed = true;
        }
      }
    }
    if (sorted_classes(std::move(classes)) != s.atoms_) {
      throw LogicError("partition refinement disagrees with Moore-style family atoms");
    }
  }

  if (k <= 8) verify_family_fixpoint(s);
  s.star_ = condition_star(s);
  return s;
}

VertexMask Space::vertices_of(AtomMask m) const {
  VertexMask out = 0;
  AtomMask rest = m;
  while (rest) {
    out |= atoms_[std::countr_zero(rest)];
    rest &= rest - 1;
  }
  return out;
}

std::optional<AtomMask> Space::atoms_of(VertexMask m) const {
  AtomMask out = 0;
  VertexMask covered = 0;
  VertexMask rest = m;
  while (rest) {
    VertexId v = static_cast<VertexId>(std::countr_zero(rest));
    rest &= rest - 1;
    if (covered & bit(v)) continue;
    int a = atom_of_[v];
    if (a < 0) return std::nullopt;  // source vertex: not in any family member
    if ((atoms_[a] & m) != atoms_[a]) return std::nullopt;
    out |= AtomMask{1} << a;
    covered |= atoms_[a];
  }
  return out;
}

std::vector<AtomMask> Space::enumerate_family() const {
  if (atom_count() > config_.max_atoms) {
    throw ResourceError("atom budget exceeded: " + std::to_string(atom_count()) +
                        " atoms > cap " + std::to_string(config_.max_atoms));
  }
  std::vector<AtomMask> out;
  out.reserve(family_size());
  for (AtomMask m = 0; m <= all_atoms_; ++m) {
    out.push_back(m);
    if (m == all_atoms_) break;
  }
  return out;
}

std::vector<AtomMask> Space::minimal_sets() const {
  std::vector<AtomMask> out;
  for (int a = 0; a < atom_count(); ++a) out.push_back(AtomMask{1} << a);
  return out;
}

std::vector<VertexMask> family_fixpoint_closure(const Graph& g, size_t max_size) {
  std::set<VertexMask> family;
  std::vector<VertexMask> frontier;
  auto add = [&](VertexMask m) {
    if (family.insert(m).second) frontier.push_back(m);
  };
  for (LetterId a = 0; a < g.letter_count(); ++a) {
    add(g.letter_range(g.all_vertices(), a));
  }
  const size_t budget = max_size;
  for (bool grew = true; grew;) {
    grew = false;
    while (!frontier.empty()) {
      VertexMask cur = frontier.back();
      frontier.pop_back();
      for (LetterId a = 0; a < g.letter_count(); ++a) add(g.letter_range(cur, a));
      grew = true;
    }
    std::vector<VertexMask> snapshot(family.begin(), family.end());
    for (VertexMask x : snapshot) {
      for (VertexMask y : snapshot) {
        add(x & y);
        add(x | y);
        add(x & ~y);
      }
    }
    if (family.size() > budget) {
      throw ResourceError("family fixpoint closure exceeded the atom budget");
    }
    grew = grew || !frontier.empty();
  }
  return {family.begin(), family.end()};
}

void verify_family_fixpoint(const Space& space) {
  // The closure must come out as exactly 2^atoms sets; four times that is a
  // generous cap for detecting runaway growth.
  std::vector<VertexMask> closure =
      family_fixpoint_closure(space.graph(), size_t{4} << std::min(space.atom_count(), 20));
  std::vector<VertexMask> unions;
  unions.reserve(space.family_size());
  for (AtomMask m = 0;; ++m) {
    unions.push_back(space.vertices_of(m));
    if (m == space.all_atoms()) break;
  }
  std::sort(unions.begin(), unions.end());
  unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
  if (closure != unions) {
    throw LogicError("fixpoint closure family differs from the atom-union family");
  }
}

StarReport condition_star(const Space& space) {
  StarReport r;
  // (i) every nonempty member contains a minimal set: any nonempty atom union
  // contains one of its atoms.
  r.every_nonempty_contains_minimal = space.atom_count() > 0;

  // (ii) ranges of minimal sets are unions of minimal sets: walk all states
  // reachable from each atom and confirm each is a union of atoms.
  std::set<AtomMask> seen;
  std::vector<AtomMask> frontier;
  for (int a = 0; a < space.atom_count(); ++a) {
    AtomMask m = AtomMask{1} << a;
    if (seen.insert(m).second) frontier.push_back(m);
  }
  while (!frontier.empty()) {
    AtomMask cur = frontier.back();
    frontier.pop_back();
    ++r.states_checked;
    VertexMask verts = space.vertices_of(cur);
    for (LetterId a = 0; a < space.graph().letter_count(); ++a) {
      VertexMask img = space.graph().letter_range(verts, a);
      auto am = space.atoms_of(img);
      if (!am) {
        r.ranges_are_minimal_unions = false;
        continue;
      }
      if (seen.insert(*am).second) frontier.push_back(*am);
    }
  }
  r.holds = r.every_nonempty_contains_minimal && r.ranges_are_minimal_unions;
  return r;
}

}  // namespace labelana
