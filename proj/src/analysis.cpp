#include "labelana/analysis.hpp"

#include <algorithm>

namespace labelana {

const char* question_name(Question q) {
  switch (q) {
    case Question::Simple: return "Simple";
    case Question::IH: return "IH";
    case Question::PurelyInfinite: return "PurelyInfinite";
    case Question::GaugeInvariantIdeals: return "GaugeInvariantIdeals";
    case Question::InfiniteProjectionExists: return "InfiniteProjectionExists";
  }
  return "?";
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Certified: return "Certified";
    case Status::Refuted: return "Refuted";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

const Verdict& Analysis::verdict(Question q) const {
  for (const Verdict& v : verdicts) {
    if (v.question == q) return v;
  }
  throw LogicError("missing verdict");
}

namespace {

constexpr const char* kWlrCaveat =
    "weakly-left-resolving fails; the standing assumption behind every verdict rule is "
    "violated, so all conclusions are withheld";

bool all_proper_quotients_connect(const Analysis& a) {
  for (const QuotientSummary& q : a.quotients) {
    if (q.zero) continue;
    if (!q.predicates->connects.all_connect) return false;
  }
  return true;
}

bool all_quotients_star(const Analysis& a) {
  for (const QuotientSummary& q : a.quotients) {
    if (q.zero) continue;
    if (!q.predicates->star.holds) return false;
  }
  return true;
}

Json core_json(const Analysis& a, const Core& c) { return aset_to_json(a.space, c.atoms); }

}  // namespace

void decide_verdicts(Analysis& a) {
  const Space& sp = a.space;
  const Graph& g = sp.graph();
  const bool wlr = sp.wlr().holds;

  auto unknown_all = [&](Verdict& v) {
    v.status = Status::Unknown;
    v.caveats.push_back(kWlrCaveat);
  };

  // --- Simple ---
  {
    Verdict v;
    v.question = Question::Simple;
    if (!wlr) {
      unknown_all(v);
    } else {
      const bool le = a.condition_le.holds;
      const bool trivial = a.lattice.trivial();
      if (le && trivial) {
        v.status = Status::Certified;
        v.rule = rules::simple_le_trivial_lattice;
        v.rules.push_back({v.rule, Json{{"no_exitless_cycle", true},
                                        {"hereditary_saturated_cores", a.lattice.cores.size()}}});
        if (a.disagreeable.disagreeable && a.cofinal.holds) {
          v.rules.push_back({rules::simple_disagreeable_cofinal,
                             Json{{"disagreeable", true}, {"strongly_cofinal", true}}});
        }
        if (a.disagreeable.disagreeable && a.cofinal.holds && a.cycle) {
          v.rules.push_back({rules::simple_cofinal_cycle,
                             Json{{"cycle_base", aset_to_json(sp, a.cycle->atom)},
                                  {"cycle_word", word_to_json(g, a.cycle->word)}}});
        }
      } else {
        v.status = Status::Refuted;
        if (!le) {
          const ExitlessCycle& w = a.condition_le.failures.front();
          v.rules.push_back({rules::simple_refute_le,
                             Json{{"base", aset_to_json(sp, w.atom)},
                                  {"word", word_to_json(g, w.word)}}});
        }
        if (!trivial) {
          Json cores = Json::array();
          for (const Core& c : a.lattice.cores) cores.push_back(core_json(a, c));
          v.rules.push_back({rules::simple_refute_lattice,
                             Json{{"cores", cores}, {"count", a.lattice.cores.size()}}});
        }
        v.rule = v.rules.front().tag;
      }
    }
    a.verdicts.push_back(std::move(v));
  }

  // --- IH ---
  {
    Verdict v;
    v.question = Question::IH;
    if (!wlr) {
      unknown_all(v);
    } else if (a.disagreeable.disagreeable && a.connects.all_connect) {
      v.status = Status::Certified;
      v.rule = rules::ih_disagreeable_connects;
      Json covers = Json::array();
      for (const ConnectsCertificate& c : a.connects.per_atom) {
        covers.push_back(Json{{"vertex", aset_to_json(sp, c.atom)},
                              {"loop_base", aset_to_json(sp, c.loop_atom)},
                              {"loop_word", word_to_json(g, c.loop_word)},
                              {"cover", c.via_epsilon ? Json::array() : Json::array({word_to_json(g, c.cover_word)})}});
      }
      v.rules.push_back({v.rule, Json{{"disagreeable", true}, {"connects", covers}}});
    } else if (a.disagreeable.disagreeable && sp.star().holds && !a.connects.all_connect) {
      v.status = Status::Refuted;
      v.rule = rules::ih_refute_no_connect;
      Json failing = Json::array();
      for (const ConnectsCertificate& c : a.connects.per_atom) {
        if (!c.connects) failing.push_back(aset_to_json(sp, c.atom));
      }
      v.rules.push_back({v.rule, Json{{"unconnected_vertices", failing}}});
      v.caveats.push_back("connects-to-loop search is exhaustive over the finite state space");
    } else {
      v.status = Status::Unknown;
      v.caveats.push_back("space is not disagreeable; the certifying rule does not apply");
    }
    a.verdicts.push_back(std::move(v));
  }

  // --- PurelyInfinite ---
  {
    Verdict v;
    v.question = Question::PurelyInfinite;
    if (!wlr) {
      unknown_all(v);
    } else {
      std::vector<RuleApplication> certify, refute;
      if (a.sdis.value && all_proper_quotients_connect(a)) {
        Json qs = Json::array();
        for (const QuotientSummary& q : a.quotients) {
          if (q.zero) continue;
          qs.push_back(Json{{"core", core_json(a, q.core)},
                            {"connects", q.predicates->connects.all_connect}});
        }
        certify.push_back({rules::pi_quotients_connect,
                           Json{{"strongly_disagreeable", true}, {"quotients", qs}}});
      }
      if (a.cofinal.holds && a.disagreeable.disagreeable && a.cycle) {
        certify.push_back({rules::pi_cofinal_cycle,
                           Json{{"strongly_cofinal", true},
                                {"disagreeable", true},
                                {"cycle_base", aset_to_json(sp, a.cycle->atom)},
                                {"cycle_word", word_to_json(g, a.cycle->word)}}});
      }
      if (!a.condition_le.holds) {
        const ExitlessCycle& w = a.condition_le.failures.front();
        refute.push_back(
            {rules::pi_refute_exitless_loop,
             Json{{"minimal_set", aset_to_json(sp, w.atom)},
                  {"loop_word", word_to_json(g, w.word)},
                  {"n", w.word.size()},
                  {"claim", "hereditary subalgebra isomorphic to the n-by-n matrices over the "
                            "continuous functions on the circle"}}});
      }
      for (int atom = 0; atom < sp.atom_count(); ++atom) {
        const NonPowerLoops& np = a.nonpower[atom];
        if (np.has_loops && !np.found) {
          refute.push_back({rules::pi_refute_single_root,
                            Json{{"minimal_set", aset_to_json(sp, AtomMask{1} << atom)},
                                 {"alpha", word_to_json(g, np.alpha)},
                                 {"search", "exhaustive over the loop language"}}});
          break;
        }
      }
      if (sp.star().holds && all_quotients_star(a) && !a.sdis.value) {
        Json cert{{"star_in_all_quotients", true}, {"strongly_disagreeable", false}};
        if (a.sdis.failing_core) cert["failing_core"] = core_json(a, *a.sdis.failing_core);
        if (!a.sdis.failing_witnesses.empty()) {
          cert["witness"] =
              Json{{"vertex", aset_to_json(sp, a.sdis.failing_witnesses.front().atom)},
                   {"word", word_to_json(g, a.sdis.failing_witnesses.front().beta)}};
        }
        refute.push_back({rules::pi_refute_not_sd, std::move(cert)});
      }
      // Route through simplicity: for simple algebras pure infiniteness and
      // the infinite-hereditary property coincide.
      {
        const Verdict& simple = a.verdicts[0];
        const Verdict& ih = a.verdicts[1];
        if (simple.status == Status::Certified && ih.status == Status::Refuted) {
          refute.push_back({rules::pi_refute_simple_no_ih,
                            Json{{"simple", "Certified"}, {"ih", "Refuted"}}});
        }
      }

      if (!certify.empty() && !refute.empty()) {
        throw LogicError("contradictory pure-infiniteness verdict: " + certify.front().tag +
                         " vs " + refute.front().tag);
      }
      if (!certify.empty()) {
        v.status = Status::Certified;
        v.rules = std::move(certify);
        v.rule = v.rules.front().tag;
      } else if (!refute.empty()) {
        v.status = Status::Refuted;
        v.rules = std::move(refute);
        v.rule = v.rules.front().tag;
      } else {
        v.status = Status::Unknown;
        v.caveats.push_back("no certifying or refuting rule applies");
      }
      if (a.sdis.value) {
        v.caveats.push_back(
            "under strong disagreeability: purely infinite iff every generating projection is "
            "properly infinite iff every quotient has only infinite hereditary subalgebras");
      }
    }
    a.verdicts.push_back(std::move(v));
  }

  // --- GaugeInvariantIdeals ---
  {
    Verdict v;
    v.question = Question::GaugeInvariantIdeals;
    if (!wlr) {
      unknown_all(v);
    } else if (a.sdis.value) {
      v.status = Status::Certified;
      v.rule = rules::gauge_sd;
      v.rules.push_back({v.rule, Json{{"strongly_disagreeable", true}}});
    } else {
      v.status = Status::Unknown;
      v.caveats.push_back("not strongly disagreeable; the rule is one-directional");
      if (a.sdis.failing_core) {
        v.caveats.push_back("failing core: " + sp.format_atom_set(a.sdis.failing_core->atoms));
      }
    }
    a.verdicts.push_back(std::move(v));
  }

  // --- InfiniteProjectionExists ---
  {
    Verdict v;
    v.question = Question::InfiniteProjectionExists;
    if (!wlr) {
      unknown_all(v);
    } else if (!a.infinite_projections.empty()) {
      v.status = Status::Certified;
      v.rule = rules::proj_loop_exit;
      Json entries = Json::array();
      for (const InfiniteProjectionEntry& e : a.infinite_projections) {
        Json exit;
        if (e.exit.same_length_word) {
          exit = Json{{"type", "same-length-word"}, {"word", word_to_json(g, e.exit.word)}};
        } else {
          exit = Json{{"type", "proper-growth"}};
        }
        entries.push_back(Json{{"base", aset_to_json(sp, e.base)},
                               {"loop", word_to_json(g, e.loop)},
                               {"exit", exit},
                               {"statement", "the projection of this base set is infinite"}});
      }
      v.rules.push_back({v.rule, std::move(entries)});
    } else {
      v.status = Status::Unknown;
      if (!a.condition_le.holds) {
        v.caveats.push_back(
            "no loop with an exit; an exit-less loop instead yields a hereditary subalgebra of "
            "matrices over the circle, which carries no infinite projection");
      } else {
        v.caveats.push_back("no loop with an exit was found");
      }
    }
    a.verdicts.push_back(std::move(v));
  }
}

Analysis run_analysis(Graph g, const Config& config) {
  Analysis a;
  a.config = config;
  a.space = Space::analyze(std::move(g), config);
  const Space& sp = a.space;

  SubsetAutomaton aut(original_view(sp), config);
  a.automaton_states = aut.state_count();

  a.disagreeable = is_disagreeable(aut);
  a.condition_le = condition_L_E(aut);
  a.connects = connects_to_loop(aut, config);
  a.cofinal = strongly_cofinal(aut);
  a.cycle = find_cycle(aut);
  for (int atom = 0; atom < sp.atom_count(); ++atom) {
    a.atom_loops.push_back(find_loops(aut, AtomMask{1} << atom, config));
    a.nonpower.push_back(two_nonpower_loops(aut, atom, config));
  }

  a.lattice = enumerate_cores(sp, aut);
  const bool detailed =
      a.lattice.cores.size() <= static_cast<size_t>(std::max(1, config.max_quotient_reports));
  for (const Core& core : a.lattice.cores) {
    QuotientSummary qs;
    qs.core = core;
    qs.zero = core.full(sp);
    if (!qs.zero) {
      QuotientSpace q = make_quotient(sp, core);
      qs.view_atoms = q.view.atom_ids();
      qs.alphabet = q.view.letters;
      qs.predicates = quotient_predicates(q, config, detailed);
    }
    a.quotients.push_back(std::move(qs));
  }

  a.sdis.value = true;
  for (const QuotientSummary& qs : a.quotients) {
    if (qs.zero) continue;
    if (!qs.predicates->disagreeable.disagreeable) {
      a.sdis.value = false;
      a.sdis.failing_core = qs.core;
      a.sdis.failing_witnesses = qs.predicates->disagreeable.witnesses;
      break;
    }
  }

  for (int atom = 0; atom < sp.atom_count(); ++atom) {
    for (const LoopWitness& w : a.atom_loops[atom].witnesses) {
      if (!w.exits.empty()) {
        a.infinite_projections.push_back({w.base, w.word, w.exits.front()});
        break;  // one representative per base
      }
    }
  }

  decide_verdicts(a);
  return a;
}

void verify_soundness(const Analysis& a) {
  auto fail = [](const std::string& why) { throw LogicError("soundness violation: " + why); };

  // Structural: one status per question, never both certified and refuted,
  // and every decided verdict carries a certificate.
  for (const Verdict& v : a.verdicts) {
    int count = 0;
    for (const Verdict& w : a.verdicts) {
      if (w.question == v.question) ++count;
    }
    if (count != 1) fail("duplicate verdicts for one question");
    if (v.status != Status::Unknown && v.rules.empty()) {
      fail("decided verdict without a certificate");
    }
  }

  if (!a.space.wlr().holds) return;  // theorem-backed implications presuppose it

  if (a.disagreeable.disagreeable) {
    if (!a.condition_le.holds) fail("disagreeable space with an exit-less cycle");
    for (const LoopSearchResult& lr : a.atom_loops) {
      for (const LoopWitness& w : lr.witnesses) {
        if (w.exits.empty()) fail("disagreeable space produced a loop without exits");
      }
    }
  }

  const Verdict& simple = a.verdict(Question::Simple);
  const Verdict& ih = a.verdict(Question::IH);
  const Verdict& pi = a.verdict(Question::PurelyInfinite);

  if (a.disagreeable.disagreeable && a.cofinal.holds) {
    if (!(a.condition_le.holds && a.lattice.trivial())) {
      fail("the two simplicity routes disagree");
    }
    if (simple.status != Status::Certified) fail("simple not certified under both routes");
  }

  if (pi.status == Status::Certified) {
    if (!a.sdis.value) fail("purely infinite certified without strong disagreeability");
    if (ih.status != Status::Certified) fail("purely infinite certified but IH not certified");
    for (int atom = 0; atom < a.space.atom_count(); ++atom) {
      const NonPowerLoops& np = a.nonpower[atom];
      if (np.has_loops && !np.found) {
        fail("purely infinite certified but a minimal set has single-root loops only");
      }
    }
  }
  if (pi.status == Status::Certified && pi.cites(rules::pi_refute_not_sd)) {
    fail("contradictory rule citations");
  }
}

}  // namespace labelana
