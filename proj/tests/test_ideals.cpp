#include <random>

#include "doctest.h"
#include "labelana/random_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace labelana;
using namespace labelana::testsupport;

namespace {

struct Rig {
  Space space;
  SubsetAutomaton aut;
  explicit Rig(const std::string& fixture)
      : space(Space::analyze(load_fixture(fixture))), aut(original_view(space), Config{}) {}

  AtomMask atoms_for(std::initializer_list<const char*> names) {
    VertexMask m = make_set(space.graph(), names);
    auto am = space.atoms_of(m);
    REQUIRE(am.has_value());
    return *am;
  }
};

}  // namespace

TEST_CASE("hereditary saturated closure on loop-to-loop") {
  Rig r("F5");
  Core c = saturate_hereditary_closure(r.space, r.aut, r.atoms_for({"v2"}));
  CHECK(c.vertices == make_set(r.space.graph(), {"v2"}));
}

TEST_CASE("closure of the full seed is itself") {
  Rig r("F2");
  Core c = saturate_hereditary_closure(r.space, r.aut, r.atoms_for({"v"}));
  CHECK(c.atoms == r.space.all_atoms());
}

TEST_CASE("range closure pulls the whole branch-2cycle in") {
  Rig r("F4");
  Core c = saturate_hereditary_closure(r.space, r.aut, r.atoms_for({"v1"}));
  CHECK(c.atoms == r.space.all_atoms());
}

TEST_CASE("closure is idempotent and monotone") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 6;
    Graph g = random_graph(p, rng);
    Space s = Space::analyze(g);
    SubsetAutomaton aut(original_view(s), {});
    for (int t = 0; t < 12; ++t) {
      AtomMask seed = rng() & s.all_atoms();
      Core c = saturate_hereditary_closure(s, aut, seed);
      CHECK((seed & ~c.atoms) == 0);
      CHECK(saturate_hereditary_closure(s, aut, c.atoms).atoms == c.atoms);
      AtomMask wider = seed | (rng() & s.all_atoms());
      Core cw = saturate_hereditary_closure(s, aut, wider);
      CHECK((c.atoms & ~cw.atoms) == 0);
    }
  }
}

TEST_CASE("core lattices of the fixtures") {
  {
    Rig r("F5");
    CoreLattice lat = enumerate_cores(r.space, r.aut);
    REQUIRE(lat.cores.size() == 3);
    CHECK(lat.cores[0].atoms == 0);
    CHECK(lat.cores[1].vertices == make_set(r.space.graph(), {"v2"}));
    CHECK(lat.cores[2].atoms == r.space.all_atoms());
    REQUIRE(lat.hasse.size() == 2);  // empty < {v2} < full
    CHECK(lat.hasse[0] == std::pair<int, int>{0, 1});
    CHECK(lat.hasse[1] == std::pair<int, int>{1, 2});
  }
  CHECK(enumerate_cores(Rig("F2").space, Rig("F2").aut).cores.size() == 2);
  CHECK(enumerate_cores(Rig("F4").space, Rig("F4").aut).cores.size() == 2);
}

TEST_CASE("cores define down-closed hereditary families") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 6;
    Graph g = random_graph(p, rng);
    Space s = Space::analyze(g);
    SubsetAutomaton aut(original_view(s), {});
    CoreLattice lat = enumerate_cores(s, aut);
    CHECK(lat.cores.front().atoms == 0);
    CHECK(lat.cores.back().atoms == s.all_atoms());
    for (const Core& c : lat.cores) {
      // H = every family member below the core; closed under union, subsets,
      // and letter ranges by definition of the core.
      for (AtomMask x = 0;; ++x) {
        if ((x & ~c.atoms) == 0) {
          for (LetterId a = 0; a < g.letter_count(); ++a) {
            CHECK((s.range(x, a) & ~c.atoms) == 0);
          }
        }
        if (x == s.all_atoms()) break;
      }
    }
  }
}

TEST_CASE("quotient by the loop-to-loop core") {
  Rig r("F5");
  const Graph& g = r.space.graph();
  Core c = saturate_hereditary_closure(r.space, r.aut, r.atoms_for({"v2"}));
  QuotientSpace q = make_quotient(r.space, c);
  CHECK_FALSE(q.zero);
  REQUIRE(q.view.atom_ids().size() == 1);
  CHECK(r.space.atom_vertices(q.view.atom_ids()[0]) == make_set(g, {"v1"}));
  // b and c die into the core; only a survives
  REQUIRE(q.view.letters.size() == 1);
  CHECK(g.letter_name(q.view.letters[0]) == "a");
  // dynamics: {v1} -a-> {v1}
  AtomMask v1 = q.view.universe;
  CHECK(q.view.range(v1, q.view.letters[0]) == v1);
}

TEST_CASE("quotient by the empty core is the original space") {
  Rig r("F4");
  QuotientSpace q = make_quotient(r.space, Core{0, 0});
  CHECK_FALSE(q.zero);
  CHECK(q.view.universe == r.space.all_atoms());
  CHECK(q.view.letters.size() == static_cast<size_t>(r.space.graph().letter_count()));
}

TEST_CASE("quotient by the full core is zero") {
  Rig r("F4");
  QuotientSpace q = make_quotient(r.space, Core{r.space.all_atoms(),
                                               r.space.vertices_of(r.space.all_atoms())});
  CHECK(q.zero);
  CHECK_THROWS_AS(quotient_predicates(q, Config{}), ValidationError);
}

TEST_CASE("quotients keep every atom alive") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 6;
    Graph g = random_graph(p, rng);
    Space s = Space::analyze(g);
    SubsetAutomaton aut(original_view(s), {});
    for (const Core& c : enumerate_cores(s, aut).cores) {
      if (c.full(s)) continue;
      QuotientSpace q = make_quotient(s, c);  // construction asserts no sinks
      for (int atom : q.view.atom_ids()) {
        bool live = false;
        for (LetterId a : q.view.letters) {
          live = live || q.view.range(AtomMask{1} << atom, a) != 0;
        }
        CHECK(live);
      }
    }
  }
}

TEST_CASE("quotient of a quotient agrees with the bigger quotient") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 6;
    Graph g = random_graph(p, rng);
    Space s = Space::analyze(g);
    SubsetAutomaton aut(original_view(s), {});
    CoreLattice lat = enumerate_cores(s, aut);
    for (const Core& c1 : lat.cores) {
      for (const Core& c2 : lat.cores) {
        if ((c1.atoms & ~c2.atoms) != 0 || c2.full(s)) continue;
        SpaceView big = quotient_view(s, c2.atoms);
        SpaceView small = quotient_view(s, c1.atoms);
        // dropping c2 in the small quotient equals the big quotient
        for (int t = 0; t < 10; ++t) {
          AtomMask x = rng() & big.universe;
          Word word;
          int len = 1 + static_cast<int>(rng() % 4);
          for (int i = 0; i < len; ++i) {
            word.push_back(static_cast<LetterId>(rng() % g.letter_count()));
          }
          AtomMask via_small = small.word_range(x, word) & ~c2.atoms;
          CHECK(big.word_range(x, word) == via_small);
        }
      }
    }
  }
}

TEST_CASE("quotient predicates of the loop-to-loop fixture") {
  Rig r("F5");
  const Graph& g = r.space.graph();
  {
    Core c = saturate_hereditary_closure(r.space, r.aut, r.atoms_for({"v2"}));
    QuotientPredicates p = quotient_predicates(make_quotient(r.space, c), Config{});
    CHECK_FALSE(p.disagreeable.disagreeable);
    REQUIRE(p.disagreeable.witnesses.size() == 1);
    CHECK(r.space.vertices_of(p.disagreeable.witnesses[0].atom) == make_set(g, {"v1"}));
    CHECK(p.disagreeable.witnesses[0].beta == make_word(g, "a"));
    CHECK(p.connects.all_connect);
    CHECK(p.star.holds);
  }
  {
    QuotientPredicates p = quotient_predicates(make_quotient(r.space, Core{0, 0}), Config{});
    CHECK_FALSE(p.disagreeable.disagreeable);
    REQUIRE(p.disagreeable.witnesses.size() == 1);
    CHECK(r.space.vertices_of(p.disagreeable.witnesses[0].atom) == make_set(g, {"v2"}));
    CHECK(p.disagreeable.witnesses[0].beta == make_word(g, "c"));
  }
}

TEST_CASE("strong disagreeability across the fixtures") {
  {
    Rig r("F2");
    CoreLattice lat = enumerate_cores(r.space, r.aut);
    CHECK(strongly_disagreeable(r.space, lat, Config{}).value);
  }
  {
    Rig r("F5");
    CoreLattice lat = enumerate_cores(r.space, r.aut);
    StronglyDisagreeableResult sd = strongly_disagreeable(r.space, lat, Config{});
    CHECK_FALSE(sd.value);
    REQUIRE(sd.failing_core.has_value());
    CHECK(sd.failing_core->atoms == 0);  // already fails at the trivial quotient
    REQUIRE_FALSE(sd.failing_witnesses.empty());
    CHECK(r.space.vertices_of(sd.failing_witnesses[0].atom) ==
          make_set(r.space.graph(), {"v2"}));
  }
  {
    Rig r("F4");
    CoreLattice lat = enumerate_cores(r.space, r.aut);
    CHECK(strongly_disagreeable(r.space, lat, Config{}).value);
  }
}

TEST_CASE("cores match the classical hereditary saturated sets on plain graphs") {
  // For a source-free injectively labeled graph the atoms are the vertex
  // singletons, so the cores must enumerate exactly the vertex sets that are
  // successor-closed and saturated in the classical sense.
  std::mt19937_64 rng(907);
  int compared = 0;
  for (int trial = 0; trial < 120 && compared < 40; ++trial) {
    RandomGraphParams p;
    p.max_vertices = 7;
    p.injective = true;
    Graph g = random_graph(p, rng);
    if (!g.sources().empty()) continue;
    ++compared;

    std::set<VertexMask> classical;
    const int n = g.vertex_count();
    for (VertexMask h = 0; h < (VertexMask{1} << n); ++h) {
      bool hereditary = true;
      for (const Edge& e : g.edges()) {
        if ((h & bit(e.src)) && !(h & bit(e.dst))) hereditary = false;
      }
      if (!hereditary) continue;
      bool saturated = true;
      for (VertexId v = 0; v < n && saturated; ++v) {
        if (h & bit(v)) continue;
        bool all_out_in = true;
        for (const Edge& e : g.edges()) {
          if (e.src == v && !(h & bit(e.dst))) all_out_in = false;
        }
        if (all_out_in) saturated = false;
      }
      if (saturated) classical.insert(h);
    }

    Space s = Space::analyze(g);
    SubsetAutomaton aut(original_view(s), {});
    std::set<VertexMask> cores;
    for (const Core& c : enumerate_cores(s, aut).cores) cores.insert(c.vertices);
    CHECK(cores == classical);
  }
  CHECK(compared >= 40);
}

TEST_CASE("atom budget guards the lattice") {
  Config tight;
  tight.max_atoms = 1;
  Space s = Space::analyze(load_fixture("F4"), tight);
  SubsetAutomaton aut(original_view(s), tight);
  CHECK_THROWS_AS(enumerate_cores(s, aut), ResourceError);
}
