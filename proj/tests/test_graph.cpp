#include <random>

#include "doctest.h"
#include "labelana/random_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace labelana;
using namespace labelana::testsupport;

TEST_CASE("smallest legal graph parses") {
  Graph g = parse_lgr("vertex v\nedge v v : a\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edges().size() == 1);
  CHECK(g.letter_count() == 1);
  CHECK(g.letter_name(0) == "a");
}

TEST_CASE("a vertex without outgoing edges is rejected as a sink") {
  CHECK_THROWS_AS(parse_lgr("vertex u v\nedge u v : a\n"), ValidationError);
}

TEST_CASE("branch-2cycle fixture parses to the expected shape") {
  Graph g = load_fixture("F4");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges().size() == 3);
  CHECK(g.letter_count() == 2);
  CHECK(g.name() == "branch-2cycle");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_lgr("vertex v\nedge v w : a\n"), ParseError);   // unknown vertex
  CHECK_THROWS_AS(parse_lgr("vertex v\nedge v v a\n"), ParseError);     // malformed edge
  CHECK_THROWS_AS(parse_lgr("frob v\n"), ParseError);                   // unknown directive
  CHECK_THROWS_AS(parse_lgr("graph a\ngraph b\nvertex v\nedge v v : a\n"), ParseError);
  CHECK_THROWS_AS(parse_lgr("vertex v v\nedge v v : a\n"), ValidationError);  // dup vertex
  CHECK_THROWS_AS(parse_lgr("vertex v\nedge v v : a\nedge v v : a\n"),
                  ValidationError);  // duplicate triple
  CHECK_THROWS_AS(parse_lgr(""), ValidationError);  // no vertices
}

TEST_CASE("comments and blank lines are ignored") {
  Graph g = parse_lgr("# heading\n\nvertex v  # trailing\nedge v v : a\n");
  CHECK(g.vertex_count() == 1);
}

TEST_CASE("resource caps on vertices and edges") {
  std::string text = "vertex";
  for (int i = 0; i < 65; ++i) text += " v" + std::to_string(i);
  text += "\n";
  for (int i = 0; i < 65; ++i) text += "edge v" + std::to_string(i) + " v0 : a\n";
  CHECK_THROWS_AS(parse_lgr(text), ResourceError);

  Config tight;
  tight.max_edges = 2;
  CHECK_THROWS_AS(parse_lgr("vertex v\nedge v v : a\nedge v v : b\nedge v v : c\n", tight),
                  ResourceError);
}

TEST_CASE("letter range on the branch-2cycle fixture") {
  Graph g = load_fixture("F4");
  LetterId a = *g.letter_id("a");
  CHECK(g.letter_range(make_set(g, {"v1"}), a) == make_set(g, {"v2"}));
  CHECK(g.letter_range(make_set(g, {"v1", "v2"}), a) == make_set(g, {"v1", "v2"}));
  CHECK(g.letter_range(0, a) == 0);
}

TEST_CASE("sources are detected") {
  Graph g = load_fixture("N1");
  auto sources = g.sources();
  REQUIRE(sources.size() == 1);
  CHECK(g.vertex_name(sources[0]) == "s");
  CHECK((g.omega0() & bit(sources[0])) == 0);
}

TEST_CASE("lgr serialization round-trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    RandomGraphParams p;
    p.max_vertices = 6;
    p.injective = (i % 2) == 0;
    Graph g = random_graph(p, rng);
    Graph h = parse_lgr(g.to_lgr());
    CHECK(h.vertex_names() == g.vertex_names());
    CHECK(h.letter_names() == g.letter_names());
    REQUIRE(h.edges().size() == g.edges().size());
    for (size_t e = 0; e < g.edges().size(); ++e) {
      CHECK(h.edges()[e].src == g.edges()[e].src);
      CHECK(h.edges()[e].dst == g.edges()[e].dst);
      CHECK(h.edges()[e].label == g.edges()[e].label);
    }
  }
}

TEST_CASE("json graph input") {
  Graph g = parse_graph_json(R"({"name":"j","vertices":["u","v"],
    "edges":[{"src":"u","dst":"v","label":"a"},{"src":"v","dst":"u","label":"a"}]})");
  CHECK(g.vertex_count() == 2);
  CHECK(g.name() == "j");
  CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":[]})"), ParseError);
}

TEST_CASE("letter range is a union homomorphism and monotone") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 6;
    Graph g = random_graph(p, rng);
    const VertexMask all = g.all_vertices();
    for (int t = 0; t < 50; ++t) {
      VertexMask a = rng() & all, b = rng() & all;
      LetterId l = static_cast<LetterId>(rng() % g.letter_count());
      CHECK(g.letter_range(a | b, l) == (g.letter_range(a, l) | g.letter_range(b, l)));
      VertexMask sub = a & b;
      CHECK((g.letter_range(sub, l) & ~g.letter_range(a, l)) == 0);
    }
  }
}

TEST_CASE("word ranges agree with explicit path enumeration") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 5;
    Graph g = random_graph(p, rng);
    for (VertexMask a = 0; a <= g.all_vertices(); ++a) {
      for (int len = 1; len <= 6; ++len) {
        // every realized word of this length from a, by explicit paths
        for (auto& [word, endpoints] : words_from(g, a, len)) {
          CHECK(g.word_range(a, word) == endpoints);
          CHECK(oracle_word_range(g, a, word) == endpoints);
        }
      }
      if (a == g.all_vertices()) break;
    }
  }
}

TEST_CASE("word order is shortest-then-lex") {
  CHECK(word_less({1}, {0, 0}));
  CHECK(word_less({0, 1}, {1, 0}));
  CHECK_FALSE(word_less({1, 0}, {0, 1}));
  CHECK_FALSE(word_less({0}, {0}));
}
