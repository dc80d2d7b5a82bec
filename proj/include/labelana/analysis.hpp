#pragma once

#include "labelana/ideals.hpp"
#include "labelana/verdicts.hpp"

namespace labelana {

struct QuotientSummary {
  Core core;
  bool zero = false;
  std::vector<int> view_atoms;
  std::vector<LetterId> alphabet;
  std::optional<QuotientPredicates> predicates;  // absent for the zero quotient
};

struct InfiniteProjectionEntry {
  AtomMask base = 0;
  Word loop;
  LoopExit exit;
};

/// Everything the analyzer computes for one graph. Built once, serialized in
/// a fixed order, never mutated afterwards.
struct Analysis {
  Config config;
  Space space;

  DisagreeableResult disagreeable;
  ConditionLEResult condition_le;
  ConnectsResult connects;
  CofinalResult cofinal;
  std::optional<CycleWitness> cycle;
  std::vector<LoopSearchResult> atom_loops;  // indexed by atom
  std::vector<NonPowerLoops> nonpower;       // indexed by atom

  CoreLattice lattice;
  std::vector<QuotientSummary> quotients;  // aligned with lattice.cores
  StronglyDisagreeableResult sdis;

  std::vector<InfiniteProjectionEntry> infinite_projections;
  std::vector<Verdict> verdicts;
  int automaton_states = 0;

  const Verdict& verdict(Question q) const;
};

Analysis run_analysis(Graph g, const Config& config = {});

/// Decision layer, exposed for targeted testing. Appends to a.verdicts.
void decide_verdicts(Analysis& a);

/// Cross-result consistency: contradictory statuses, disagreeable spaces
/// whose loops lack exits, certified pure infiniteness without its necessary
/// conditions, and the two simplicity routes disagreeing all throw
/// LogicError. Theorem-backed implications are checked only when the space
/// is weakly left-resolving.
void verify_soundness(const Analysis& a);

}  // namespace labelana
