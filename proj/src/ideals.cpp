#include "labelana/ideals.hpp"

#include <algorithm>
#include <deque>

namespace labelana {

std::vector<AtomMask> atom_reachable_unions(const SubsetAutomaton& aut) {
  const Space& space = *aut.view().space;
  std::vector<AtomMask> good(space.atom_count(), 0);
  for (int atom : aut.view().atom_ids()) {
    std::vector<char> seen(aut.state_count(), 0);
    std::deque<int> q;
    int start = aut.atom_state(atom);
    for (int li = 0; li < aut.letter_count(); ++li) {
      int t = aut.next(start, li);
      if (t >= 0 && !seen[t]) {
        seen[t] = 1;
        q.push_back(t);
      }
    }
    AtomMask u = 0;
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      u |= aut.state(s);
      for (int li = 0; li < aut.letter_count(); ++li) {
        int t = aut.next(s, li);
        if (t >= 0 && !seen[t]) {
          seen[t] = 1;
          q.push_back(t);
        }
      }
    }
    good[atom] = u;
  }
  return good;
}

Core saturate_hereditary_closure(const Space& space, const SubsetAutomaton& aut, AtomMask seed) {
  std::vector<AtomMask> good = atom_reachable_unions(aut);
  AtomMask u = seed;
  for (bool changed = true; changed;) {
    changed = false;
    // (i) range closure
    for (bool grew = true; grew;) {
      grew = false;
      for (LetterId a = 0; a < space.graph().letter_count(); ++a) {
        AtomMask img = space.range(u, a);
        if (img & ~u) {
          u |= img;
          grew = true;
          changed = true;
        }
      }
    }
    // (ii) saturation: pull in atoms whose every reachable range lies inside
    for (int b = 0; b < space.atom_count(); ++b) {
      AtomMask bm = AtomMask{1} << b;
      if ((u & bm) == 0 && (good[b] & ~u) == 0) {
        u |= bm;
        changed = true;
      }
    }
  }
  return Core{u, space.vertices_of(u)};
}

bool is_core(const Space& space, const std::vector<AtomMask>& good, AtomMask candidate) {
  for (LetterId a = 0; a < space.graph().letter_count(); ++a) {
    if (space.range(candidate, a) & ~candidate) return false;  // not range-closed
  }
  for (int b = 0; b < space.atom_count(); ++b) {
    AtomMask bm = AtomMask{1} << b;
    if ((candidate & bm) == 0 && (good[b] & ~candidate) == 0) return false;  // not saturated
  }
  return true;
}

CoreLattice enumerate_cores(const Space& space, const SubsetAutomaton& aut) {
  if (space.atom_count() > space.config().max_atoms) {
    throw ResourceError("atom budget exceeded: " + std::to_string(space.atom_count()) +
                        " atoms > cap " + std::to_string(space.config().max_atoms));
  }
  std::vector<AtomMask> good = atom_reachable_unions(aut);
  CoreLattice lat;
  for (AtomMask m = 0;; ++m) {
    if (is_core(space, good, m)) lat.cores.push_back(Core{m, space.vertices_of(m)});
    if (m == space.all_atoms()) break;
  }
  std::sort(lat.cores.begin(), lat.cores.end(), [](const Core& x, const Core& y) {
    int px = std::popcount(x.atoms), py = std::popcount(y.atoms);
    return px != py ? px < py : x.atoms < y.atoms;
  });
  for (size_t i = 0; i < lat.cores.size(); ++i) {
    for (size_t j = 0; j < lat.cores.size(); ++j) {
      AtomMask a = lat.cores[i].atoms, b = lat.cores[j].atoms;
      if (a == b || (a & ~b)) continue;  // need a strictly below b
      bool covered = false;
      for (size_t k = 0; k < lat.cores.size() && !covered; ++k) {
        AtomMask m = lat.cores[k].atoms;
        if (m != a && m != b && (a & ~m) == 0 && (m & ~b) == 0) covered = true;
      }
      if (!covered) lat.hasse.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return lat;
}

QuotientSpace make_quotient(const Space& space, const Core& core) {
  QuotientSpace q;
  q.space = &space;
  q.core = core;
  q.view = quotient_view(space, core.atoms);
  q.zero = core.atoms == space.all_atoms();
  if (q.zero) return q;

  const AtomMask u = core.atoms;

  // Well-definedness of the set operations on representatives and of the
  // quotient range, checked on all atom pairs and letters.
  for (int x = 0; x < space.atom_count(); ++x) {
    AtomMask xm = AtomMask{1} << x;
    for (int y = 0; y < space.atom_count(); ++y) {
      AtomMask ym = AtomMask{1} << y;
      AtomMask lhs_u = (xm & ~u) | (ym & ~u);
      if (lhs_u != ((xm | ym) & ~u)) {
        throw LogicError("quotient union is not well-defined");
      }
      if (((xm & ~u) & (ym & ~u)) != ((xm & ym) & ~u)) {
        throw LogicError("quotient intersection is not well-defined");
      }
      if (((xm & ~u) & ~(ym & ~u) & ~u) != ((xm & ~ym) & ~u)) {
        throw LogicError("quotient difference is not well-defined");
      }
    }
    // Heredity makes dropping the core before or after a step agree:
    // r(A,a)\U == r(A\U,a)\U.
    for (LetterId a = 0; a < space.graph().letter_count(); ++a) {
      if ((space.range(xm, a) & ~u) != (space.range(xm & ~u, a) & ~u)) {
        throw LogicError("quotient range is not well-defined (core not hereditary?)");
      }
    }
  }

  // Quotient no-sinks: every quotient atom keeps a live letter (forced by
  // saturation of the core).
  for (int atom : q.view.atom_ids()) {
    bool live = false;
    for (LetterId a : q.view.letters) {
      if (q.view.range(AtomMask{1} << atom, a) != 0) {
        live = true;
        break;
      }
    }
    if (!live) {
      throw LogicError("quotient atom with no live letter (core not saturated?)");
    }
  }

  // Quotient weak left-resolving: images of distinct quotient atoms stay
  // disjoint. Automatic when the original space is weakly left-resolving.
  if (space.wlr().holds) {
    auto ids = q.view.atom_ids();
    for (size_t i = 0; i < ids.size(); ++i) {
      for (size_t j = i + 1; j < ids.size(); ++j) {
        for (LetterId a : q.view.letters) {
          if (q.view.range(AtomMask{1} << ids[i], a) & q.view.range(AtomMask{1} << ids[j], a)) {
            throw LogicError("quotient lost weak left-resolving");
          }
        }
      }
    }
  }
  return q;
}

QuotientPredicates quotient_predicates(const QuotientSpace& q, const Config& config,
                                       bool include_loops) {
  if (q.zero) {
    throw ValidationError("the zero quotient has no predicates");
  }
  SubsetAutomaton aut(q.view, config);
  QuotientPredicates p;
  p.disagreeable = is_disagreeable(aut);
  p.connects = connects_to_loop(aut, config);
  p.condition_le = condition_L_E(aut);
  p.star = condition_star_view(aut);
  if (include_loops) {
    p.loops_included = true;
    for (int atom : q.view.atom_ids()) {
      p.atom_loops.push_back(find_loops(aut, AtomMask{1} << atom, config));
    }
  }
  return p;
}

StronglyDisagreeableResult strongly_disagreeable(const Space& space, const CoreLattice& lattice,
                                                 const Config& config) {
  StronglyDisagreeableResult r;
  for (const Core& core : lattice.cores) {
    if (core.full(space)) continue;  // zero quotient
    QuotientSpace q = make_quotient(space, core);
    SubsetAutomaton aut(q.view, config);
    DisagreeableResult d = is_disagreeable(aut);
    if (!d.disagreeable) {
      r.value = false;
      r.failing_core = core;
      r.failing_witnesses = d.witnesses;
      return r;
    }
  }
  return r;
}

}  // namespace labelana
