#pragma once

#include <optional>
#include <string>
#include <vector>

#include "labelana/config.hpp"
#include "labelana/graph.hpp"

namespace labelana {

// Subsets of the accommodating family are unions of atoms, stored as bitmasks
// over atom indices.
using AtomMask = std::uint64_t;

/// Generalized-vertex partition of the non-source vertices, one refinement
/// level per round. Level 1 groups by incoming letter sets; level l+1 refines
/// level l by the signature {(level-l class of s(e), label(e))} over edges
/// from non-source vertices (source edges only carry length-1 information,
/// which level 1 already captured).
struct AtomPartition {
  // levels[l-1] holds the level-l classes, each a vertex mask, ordered by
  // lowest vertex index.
  std::vector<std::vector<VertexMask>> levels;
  // Smallest l with level l == level l+1; verified by one extra round.
  int stabilization_depth = 0;

  const std::vector<VertexMask>& atoms() const { return levels.back(); }
};

struct WlrCounterexample {
  VertexMask a, b;  // disjoint atoms
  LetterId letter;
};

struct WlrResult {
  bool holds = true;
  std::optional<WlrCounterexample> counterexample;
};

struct StarReport {
  bool holds = true;
  bool every_nonempty_contains_minimal = true;
  bool ranges_are_minimal_unions = true;
  int states_checked = 0;
};

/// Computes the partition; throws ValidationError if every vertex is a source
/// (impossible for a validated no-sink graph, kept as a guard).
AtomPartition refine_partition(const Graph& g);

/// The analyzed labeled space: atoms of the smallest normal accommodating
/// family, letter dynamics at atom level, and the structural checks.
class Space {
 public:
  Space() = default;

  static Space analyze(Graph g, const Config& config = {});

  const Graph& graph() const { return graph_; }
  const Config& config() const { return config_; }
  const AtomPartition& partition() const { return partition_; }

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<VertexMask>& atoms() const { return atoms_; }
  VertexMask atom_vertices(int atom) const { return atoms_[atom]; }
  int atom_of(VertexId v) const { return atom_of_[v]; }
  AtomMask all_atoms() const { return all_atoms_; }

  VertexMask vertices_of(AtomMask m) const;

  /// Exact atom decomposition of a vertex set, or nullopt when the set is not
  /// a union of atoms (i.e. not a member of the family).
  std::optional<AtomMask> atoms_of(VertexMask m) const;

  /// Membership predicate for the accommodating family.
  bool in_family(VertexMask m) const { return atoms_of(m).has_value(); }

  /// r(A, a) at atom level.
  AtomMask range(AtomMask a_set, LetterId a) const {
    AtomMask out = 0;
    AtomMask rest = a_set;
    while (rest) {
      int atom = std::countr_zero(rest);
      rest &= rest - 1;
      out |= letter_image_[static_cast<size_t>(a) * atoms_.size() + atom];
    }
    return out;
  }

  AtomMask word_range(AtomMask a_set, const Word& w) const {
    AtomMask cur = a_set;
    for (LetterId a : w) cur = range(cur, a);
    return cur;
  }

  /// atoms_of(r(a)) for each letter, the seeds of the subset automaton.
  AtomMask initial_range(LetterId a) const { return initial_range_[a]; }

  /// Number of family members: 2^atoms, saturated when every one of 64
  /// vertices forms its own atom.
  std::uint64_t family_size() const {
    return atoms_.size() >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << atoms_.size();
  }

  /// Full enumeration of the family as atom masks; guarded by the atom budget.
  std::vector<AtomMask> enumerate_family() const;

  /// Minimal nonempty members: exactly the single-atom sets.
  std::vector<AtomMask> minimal_sets() const;

  const WlrResult& wlr() const { return wlr_; }
  const StarReport& star() const { return star_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::string format_atom_set(AtomMask m) const {
    return graph_.format_vertex_set(vertices_of(m));
  }

 private:
  Graph graph_;
  Config config_;
  AtomPartition partition_;
  std::vector<VertexMask> atoms_;
  std::vector<int> atom_of_;
  std::vector<AtomMask> letter_image_;  // [letter * atoms + atom]
  std::vector<AtomMask> initial_range_;
  AtomMask all_atoms_ = 0;
  WlrResult wlr_;
  StarReport star_;
  std::vector<std::string> warnings_;
};

/// Literal fixpoint construction of the smallest family that contains every
/// reachable range set and is closed under intersection, union, relative
/// complement, and letter ranges. Returns the family as sorted vertex masks.
/// Exponential in the atom count; guarded by the size cap.
std::vector<VertexMask> family_fixpoint_closure(const Graph& g, size_t max_size = 1 << 20);

/// Cross-check: the fixpoint closure equals the atom-union family. Throws
/// LogicError on mismatch.
void verify_family_fixpoint(const Space& space);

/// Condition (*) evaluation: every nonempty member contains a minimal set and
/// every range of a minimal set is a union of minimal sets. Both hold
/// structurally for finite atom-union families; the checks run anyway.
StarReport condition_star(const Space& space);

}  // namespace labelana
