#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "labelana/config.hpp"
#include "labelana/errors.hpp"

namespace labelana {

using VertexId = int;
using LetterId = int;

// Vertex sets are bitmasks over the input vertex order; the 64-vertex cap
// keeps every set in one machine word.
using VertexMask = std::uint64_t;

// A nonempty label word as letter indices. The empty word is represented by
// an empty vector only where an operation explicitly admits it.
using Word = std::vector<LetterId>;

struct Edge {
  VertexId src;
  VertexId dst;
  LetterId label;
};

inline VertexMask bit(VertexId v) { return VertexMask{1} << v; }

/// A validated finite labeled graph: unique vertices, no duplicate
/// (src,dst,label) triples, no sinks. The alphabet is derived from the edges
/// and ordered by first appearance; the vertex order fixes all bit indices.
class Graph {
 public:
  // Placeholder state used before a validated graph is assigned.
  Graph() = default;

  struct RawEdge {
    std::string src, dst, label;
  };

  static Graph build(std::string name, const std::vector<std::string>& vertices,
                     const std::vector<RawEdge>& edges, const Config& config = {});

  const std::string& name() const { return name_; }

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  std::optional<VertexId> vertex_id(std::string_view name) const;

  int letter_count() const { return static_cast<int>(letter_names_.size()); }
  const std::string& letter_name(LetterId a) const { return letter_names_[a]; }
  const std::vector<std::string>& letter_names() const { return letter_names_; }
  std::optional<LetterId> letter_id(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }

  VertexMask all_vertices() const { return all_; }

  /// Vertices that receive at least one edge.
  VertexMask omega0() const { return omega0_; }

  /// Source vertices (receive no edge); they belong to no accommodating set.
  std::vector<VertexId> sources() const;

  /// Relative range of a single letter: endpoints of a-labeled edges leaving A.
  VertexMask letter_range(VertexMask a_set, LetterId a) const {
    VertexMask out = 0;
    VertexMask rest = a_set;
    while (rest) {
      VertexId v = static_cast<VertexId>(std::countr_zero(rest));
      rest &= rest - 1;
      out |= succ_[static_cast<size_t>(a) * vertex_names_.size() + v];
    }
    return out;
  }

  /// Left fold of letter_range over a word; the empty word returns A itself.
  VertexMask word_range(VertexMask a_set, const Word& word) const {
    VertexMask cur = a_set;
    for (LetterId a : word) cur = letter_range(cur, a);
    return cur;
  }

  std::string format_vertex_set(VertexMask m) const;
  std::string format_word(const Word& w) const;

  std::string to_lgr() const;

 private:
  std::string name_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> letter_names_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> succ_;  // succ_[letter * n + vertex]
  VertexMask all_ = 0;
  VertexMask omega0_ = 0;
};

/// Parse the .lgr line format. '#' starts a comment.
Graph parse_lgr(std::string_view text, const Config& config = {});

/// Parse the JSON object form {"name", "vertices", "edges"}.
Graph parse_graph_json(const std::string& text, const Config& config = {});

/// Dispatch on filename extension (.json vs .lgr) and read the file.
Graph parse_graph_file(const std::string& path, const Config& config = {});

/// Shortest-then-lexicographic order on words (letter ids follow input order).
bool word_less(const Word& a, const Word& b);

}  // namespace labelana
