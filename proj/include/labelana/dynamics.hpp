#pragma once

#include <map>
#include <optional>
#include <vector>

#include "labelana/space.hpp"

namespace labelana {

/// A restriction of the analyzed space to the atoms outside a hereditary
/// saturated core. The original space is the view with nothing excluded.
/// All dynamics run against a view, so quotient spaces reuse the same code.
struct SpaceView {
  const Space* space = nullptr;
  AtomMask excluded = 0;   // atoms inside the core
  AtomMask universe = 0;   // view atoms
  std::vector<LetterId> letters;  // letters with nonempty view range

  AtomMask range(AtomMask s, LetterId a) const {
    return space->range(s & universe, a) & universe;
  }
  AtomMask word_range(AtomMask s, const Word& w) const {
    AtomMask cur = s & universe;
    for (LetterId a : w) cur = range(cur, a);
    return cur;
  }
  AtomMask initial(LetterId a) const { return space->initial_range(a) & universe; }

  std::vector<int> atom_ids() const {
    std::vector<int> out;
    AtomMask rest = universe;
    while (rest) {
      out.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    return out;
  }
  bool is_original() const { return excluded == 0; }
};

SpaceView original_view(const Space& space);

/// View for the quotient by a hereditary saturated core; `core_atoms` must be
/// range-closed and saturated.
SpaceView quotient_view(const Space& space, AtomMask core_atoms);

/// Deterministic automaton over the view's nonempty range sets, seeded with
/// every r(a) and every view atom. The empty set is absorbing and kept out of
/// the state list.
class SubsetAutomaton {
 public:
  SubsetAutomaton(SpaceView view, const Config& config);

  const SpaceView& view() const { return view_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  AtomMask state(int id) const { return states_[id]; }
  int state_id(AtomMask m) const;  // -1 when absent (empty or unreachable)

  int letter_count() const { return static_cast<int>(view_.letters.size()); }
  LetterId letter(int li) const { return view_.letters[li]; }

  /// Transition by letter index; -1 means the empty (dead) set.
  int next(int state, int li) const {
    return trans_[static_cast<size_t>(state) * view_.letters.size() + li];
  }

  const std::vector<int>& initial_frontier() const { return initial_frontier_; }
  bool reachable_from_initial(int state) const { return from_initial_[state] != 0; }

  /// State id of a single atom.
  int atom_state(int atom) const { return atom_state_.at(atom); }

  /// Number of live words of this length from a state, saturated at `cap`.
  std::uint64_t live_word_count(int state, int length, std::uint64_t cap = 4) const;

 private:
  SpaceView view_;
  std::vector<AtomMask> states_;
  std::map<AtomMask, int> id_;
  std::vector<int> trans_;
  std::vector<char> from_initial_;
  std::vector<int> initial_frontier_;
  std::map<int, int> atom_state_;
};

// ---------------------------------------------------------------------------
// Word utilities

bool words_commute(const Word& a, const Word& b);

/// The shortest word d with a,b both powers of d, present exactly when
/// ab == ba (equivalently when a^m == b^n has a solution).
std::optional<Word> word_common_root(const Word& a, const Word& b);

/// Smallest period d of w with d | |w| (w is a power of its first d letters).
int primitive_root_length(const Word& w);

// ---------------------------------------------------------------------------
// Forced chains and disagreeability

struct ForcedChain {
  AtomMask start = 0;
  std::vector<AtomMask> states;  // states[0] == start
  Word letters;                  // letters[i] leads states[i] -> states[i+1]
  std::optional<int> branch_index;
  std::vector<LetterId> branch_letters;
  // Valid when there is no branch: the chain closes a state cycle.
  int preperiod = 0;
  int period = 0;
  bool purely_periodic = false;
  Word period_word;  // minimal period block of the forced word
};

ForcedChain forced_chain(const SubsetAutomaton& aut, int atom);

struct NonDisagreeableWitness {
  AtomMask atom;
  Word beta;  // the forced word is beta^infinity
};

struct DisagreeableResult {
  bool disagreeable = true;
  std::vector<NonDisagreeableWitness> witnesses;
  std::vector<ForcedChain> chains;  // one per view atom, in atom order
};

/// Prop.-style characterization: the space fails to be disagreeable exactly
/// when some atom's forced chain never branches and its forced word is purely
/// periodic. Witnesses are re-verified by brute force for small powers.
DisagreeableResult is_disagreeable(const SubsetAutomaton& aut);

// ---------------------------------------------------------------------------
// Loops, cycles, exits

struct ExitlessCycle {
  AtomMask atom;
  Word word;
};

struct ConditionLEResult {
  bool holds = true;
  std::vector<ExitlessCycle> failures;  // all failing atoms
};

/// No cycle without exits. An exit-less cycle at any set restricts to one at
/// each of its atoms, so scanning atoms decides the condition.
ConditionLEResult condition_L_E(const SubsetAutomaton& aut);

struct LoopExit {
  bool same_length_word = false;  // type (i)
  Word word;                      // the deviating word for type (i)
  bool proper_growth = false;     // type (ii): base strictly below its range
};

struct LoopWitness {
  AtomMask base = 0;
  Word word;
  bool is_cycle = false;
  std::vector<LoopExit> exits;
};

struct LoopSearchResult {
  std::vector<LoopWitness> witnesses;  // shortest-then-lex order
  bool truncated = false;
  std::uint64_t length_bound = 0;
};

/// Loop words at a base set in shortest-then-lex order, with exit
/// annotations, up to the configured count and length bounds.
LoopSearchResult find_loops(const SubsetAutomaton& aut, AtomMask base, const Config& config);

struct CycleWitness {
  AtomMask atom;
  Word word;
};

/// Some pair (word, atom) with r(atom, word) == atom, if one exists.
std::optional<CycleWitness> find_cycle(const SubsetAutomaton& aut);

// ---------------------------------------------------------------------------
// Connects to a loop

struct ConnectsCertificate {
  AtomMask atom = 0;
  bool connects = false;
  bool via_epsilon = false;
  AtomMask loop_atom = 0;
  Word loop_word;
  Word cover_word;  // a one-element prefix-free cover; empty when via_epsilon
};

struct ConnectsResult {
  bool all_connect = true;
  std::vector<ConnectsCertificate> per_atom;
};

/// Exact decision. Covering an atom by a union of range sets needs only one
/// witness word, and every loop base contains an atom that loops, so the
/// search reduces to: some reachable state from b contains a looping atom.
/// A same-length cover then exists at k = |cover_word| as well, which makes
/// the same-length and prefix-free search modes agree.
ConnectsResult connects_to_loop(const SubsetAutomaton& aut, const Config& config);

// ---------------------------------------------------------------------------
// Strong cofinality

struct BadCycleWitness {
  AtomMask atom;  // the generalized vertex whose ranges never catch up
  Word preperiod;
  Word period;  // witness word x = preperiod . period^infinity
};

struct CofinalResult {
  bool holds = true;
  std::optional<BadCycleWitness> witness;
};

/// Strong cofinality over the view. Fails exactly when, for some atom b, a
/// cycle of states not dominated by Good(b) (the union of all ranges from b)
/// is reachable from an initial range through undominated states only.
CofinalResult strongly_cofinal(const SubsetAutomaton& aut);

// ---------------------------------------------------------------------------
// Two loops that are not powers of a common word

struct NonPowerLoops {
  bool has_loops = false;  // the minimal set admits a loop at all
  bool found = false;      // a pair with no common root exists
  Word alpha;              // shortest loop word
  Word beta;               // loop word with no common root with alpha
};

/// Exact decision via a product of the subset automaton with the
/// power-language of alpha's primitive root.
NonPowerLoops two_nonpower_loops(const SubsetAutomaton& aut, int atom, const Config& config);

/// Condition (*) on the view: every nonempty member contains a minimal set
/// and ranges of minimal sets are unions of minimal sets.
StarReport condition_star_view(const SubsetAutomaton& aut);

}  // namespace labelana
