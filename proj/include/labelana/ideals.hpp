#pragma once

#include "labelana/dynamics.hpp"

namespace labelana {

/// A hereditary saturated subset of the family, stored through its core: the
/// union U of all members. Range-closed (hereditary) and saturated (an atom
/// whose every reachable range lies inside U belongs to U).
struct Core {
  AtomMask atoms = 0;
  VertexMask vertices = 0;
  bool proper(const Space& s) const { return atoms != s.all_atoms(); }
  bool full(const Space& s) const { return atoms == s.all_atoms(); }
};

/// Union of every range set reachable from each atom (one or more steps).
/// good[b] is the saturation test set: an atom saturates into U iff
/// good[b] is contained in U.
std::vector<AtomMask> atom_reachable_unions(const SubsetAutomaton& aut);

/// Smallest hereditary saturated core containing the seed. Alternates range
/// closure with atom saturation until the joint fixpoint.
Core saturate_hereditary_closure(const Space& space, const SubsetAutomaton& aut, AtomMask seed);

struct CoreLattice {
  std::vector<Core> cores;                  // sorted by (popcount, mask); includes {} and full
  std::vector<std::pair<int, int>> hasse;   // cover pairs (lower, upper)
  bool trivial() const { return cores.size() == 2; }
};

/// All hereditary saturated cores as a lattice under inclusion; this is the
/// gauge-invariant ideal lattice. Guarded by the atom budget.
CoreLattice enumerate_cores(const Space& space, const SubsetAutomaton& aut);

bool is_core(const Space& space, const std::vector<AtomMask>& good, AtomMask candidate);

/// Quotient of the space by a hereditary saturated core, realized on the
/// atoms outside the core. Construction validates the well-definedness
/// identities and the no-sink property of the quotient.
struct QuotientSpace {
  const Space* space = nullptr;
  Core core;
  SpaceView view;
  bool zero = false;  // core == everything

  std::vector<LetterId> alphabet() const { return view.letters; }
};

QuotientSpace make_quotient(const Space& space, const Core& core);

/// Dynamics predicates re-run on the quotient view. Letters with empty
/// quotient range are ignored by construction of the view. Loop-witness
/// lists are reporting detail; callers facing huge lattices skip them.
struct QuotientPredicates {
  DisagreeableResult disagreeable;
  ConnectsResult connects;
  ConditionLEResult condition_le;
  StarReport star;
  std::vector<LoopSearchResult> atom_loops;  // per view atom; may be empty
  bool loops_included = false;
};

QuotientPredicates quotient_predicates(const QuotientSpace& q, const Config& config,
                                       bool include_loops = true);

struct StronglyDisagreeableResult {
  bool value = true;
  std::optional<Core> failing_core;
  std::vector<NonDisagreeableWitness> failing_witnesses;
};

/// Every proper-core quotient is disagreeable (the zero quotient is skipped).
StronglyDisagreeableResult strongly_disagreeable(const Space& space, const CoreLattice& lattice,
                                                 const Config& config);

}  // namespace labelana
