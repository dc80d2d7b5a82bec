#include "labelana/report.hpp"

#include <sstream>

namespace labelana {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json{{"src", g.vertex_name(e.src)},
                         {"dst", g.vertex_name(e.dst)},
                         {"label", g.letter_name(e.label)}});
  }
  Json sources = Json::array();
  for (VertexId v : g.sources()) sources.push_back(g.vertex_name(v));
  return Json{{"name", g.name()},
              {"vertices", g.vertex_names()},
              {"edges", edges},
              {"alphabet", g.letter_names()},
              {"sources", sources}};
}

Json forced_chain_to_json(const Space& sp, const ForcedChain& c) {
  const Graph& g = sp.graph();
  Json out{{"start", aset_to_json(sp, c.start)}, {"letters", word_to_json(g, c.letters)}};
  if (c.branch_index) {
    out["branch_index"] = *c.branch_index;
    Json bl = Json::array();
    for (LetterId a : c.branch_letters) bl.push_back(g.letter_name(a));
    out["branch_letters"] = bl;
  } else {
    out["preperiod"] = c.preperiod;
    out["period"] = c.period;
    out["purely_periodic"] = c.purely_periodic;
    if (c.purely_periodic) out["period_word"] = word_to_json(g, c.period_word);
  }
  return out;
}

namespace {

Json loop_witness_to_json(const Space& sp, const LoopWitness& w) {
  const Graph& g = sp.graph();
  Json exits = Json::array();
  for (const LoopExit& e : w.exits) {
    if (e.same_length_word) {
      exits.push_back(Json{{"type", "same-length-word"}, {"word", word_to_json(g, e.word)}});
    } else {
      exits.push_back(Json{{"type", "proper-growth"}});
    }
  }
  return Json{{"base", aset_to_json(sp, w.base)},
              {"word", word_to_json(g, w.word)},
              {"kind", w.is_cycle ? "cycle" : "loop"},
              {"exits", exits}};
}

Json connects_to_json(const Space& sp, const ConnectsResult& r) {
  const Graph& g = sp.graph();
  const CoverMode mode = sp.config().cover_mode;
  Json per = Json::array();
  for (const ConnectsCertificate& c : r.per_atom) {
    Json e{{"vertex", aset_to_json(sp, c.atom)}, {"connects", c.connects}};
    if (c.connects) {
      e["loop_base"] = aset_to_json(sp, c.loop_atom);
      e["loop_word"] = word_to_json(g, c.loop_word);
      if (c.via_epsilon) {
        e["cover"] = Json{{"epsilon", true}};
      } else {
        // A one-word prefix-free family covers the loop base, and the union
        // of all ranges at that length does too, so both search stages
        // succeed at the same depth.
        Json cover;
        if (mode != CoverMode::SameLength) {
          cover["prefix_free"] = Json::array({word_to_json(g, c.cover_word)});
        }
        if (mode != CoverMode::PrefixFree) {
          cover["same_length_k"] = c.cover_word.size();
        }
        e["cover"] = std::move(cover);
      }
    }
    per.push_back(std::move(e));
  }
  return Json{{"value", r.all_connect}, {"per_vertex", per}};
}

Json disagreeable_to_json(const Space& sp, const DisagreeableResult& d) {
  const Graph& g = sp.graph();
  Json witnesses = Json::array();
  for (const NonDisagreeableWitness& w : d.witnesses) {
    witnesses.push_back(
        Json{{"vertex", aset_to_json(sp, w.atom)}, {"word", word_to_json(g, w.beta)}});
  }
  Json chains = Json::array();
  for (const ForcedChain& c : d.chains) chains.push_back(forced_chain_to_json(sp, c));
  return Json{{"value", d.disagreeable}, {"witnesses", witnesses}, {"forced_chains", chains}};
}

Json condition_le_to_json(const Space& sp, const ConditionLEResult& r) {
  Json failures = Json::array();
  for (const ExitlessCycle& f : r.failures) {
    failures.push_back(Json{{"base", aset_to_json(sp, f.atom)},
                            {"word", word_to_json(sp.graph(), f.word)}});
  }
  return Json{{"value", r.holds}, {"failures", failures}};
}

Json cofinal_to_json(const Space& sp, const CofinalResult& r) {
  Json out{{"value", r.holds}};
  if (r.witness) {
    out["witness"] = Json{{"vertex", aset_to_json(sp, r.witness->atom)},
                          {"preperiod", word_to_json(sp.graph(), r.witness->preperiod)},
                          {"period", word_to_json(sp.graph(), r.witness->period)}};
  }
  return out;
}

Json star_to_json(const StarReport& s) {
  return Json{{"value", s.holds},
              {"every_nonempty_contains_minimal", s.every_nonempty_contains_minimal},
              {"ranges_are_minimal_unions", s.ranges_are_minimal_unions},
              {"states_checked", s.states_checked}};
}

}  // namespace

Json loop_search_to_json(const Space& sp, const LoopSearchResult& r) {
  Json ws = Json::array();
  for (const LoopWitness& w : r.witnesses) ws.push_back(loop_witness_to_json(sp, w));
  return Json{{"witnesses", ws}, {"truncated", r.truncated}, {"length_bound", r.length_bound}};
}

Json quotient_summary_to_json(const Space& sp, const QuotientSummary& q) {
  const Graph& g = sp.graph();
  Json out{{"core", aset_to_json(sp, q.core.atoms)}, {"zero", q.zero}};
  if (q.zero) return out;
  Json atoms = Json::array();
  for (int atom : q.view_atoms) atoms.push_back(aset_to_json(sp, AtomMask{1} << atom));
  Json alphabet = Json::array();
  for (LetterId a : q.alphabet) alphabet.push_back(g.letter_name(a));
  out["atoms"] = atoms;
  out["alphabet"] = alphabet;
  const QuotientPredicates& p = *q.predicates;
  out["disagreeable"] = disagreeable_to_json(sp, p.disagreeable);
  out["connects_to_loop"] = connects_to_json(sp, p.connects);
  out["condition_le"] = condition_le_to_json(sp, p.condition_le);
  out["star"] = star_to_json(p.star);
  if (p.loops_included) {
    Json loops = Json::array();
    for (const LoopSearchResult& lr : p.atom_loops) loops.push_back(loop_search_to_json(sp, lr));
    out["loops"] = loops;
  }
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json rules = Json::array();
  for (const RuleApplication& r : v.rules) {
    rules.push_back(Json{{"tag", r.tag}, {"certificate", r.certificate}});
  }
  return Json{{"question", question_name(v.question)},
              {"status", status_name(v.status)},
              {"rule", v.rule},
              {"certificate", v.rules.empty() ? Json(nullptr) : v.rules.front().certificate},
              {"rules", rules},
              {"caveats", v.caveats}};
}

Json analysis_to_json(const Analysis& a) {
  const Space& sp = a.space;
  const Graph& g = sp.graph();

  Json atoms = Json::array();
  for (VertexMask m : sp.atoms()) atoms.push_back(vset_to_json(g, m));
  Json levels = Json::array();
  for (const auto& level : sp.partition().levels) {
    Json cls = Json::array();
    for (VertexMask m : level) cls.push_back(vset_to_json(g, m));
    levels.push_back(cls);
  }
  Json minimal = Json::array();
  for (AtomMask m : sp.minimal_sets()) minimal.push_back(aset_to_json(sp, m));

  Json space_json{{"atoms", atoms},
                  {"stabilization_depth", sp.partition().stabilization_depth},
                  {"levels", levels},
                  {"wlr", sp.wlr().holds},
                  {"family_size", sp.family_size()},
                  {"minimal_sets", minimal},
                  {"star", sp.star().holds},
                  {"star_report", star_to_json(sp.star())},
                  {"warnings", sp.warnings()}};
  if (!sp.wlr().holds) {
    const WlrCounterexample& c = *sp.wlr().counterexample;
    space_json["wlr_counterexample"] = Json{{"a", vset_to_json(g, c.a)},
                                            {"b", vset_to_json(g, c.b)},
                                            {"letter", g.letter_name(c.letter)}};
  }

  Json loops = Json::array();
  for (const LoopSearchResult& lr : a.atom_loops) loops.push_back(loop_search_to_json(sp, lr));
  Json nonpower = Json::array();
  for (int atom = 0; atom < sp.atom_count(); ++atom) {
    const NonPowerLoops& np = a.nonpower[atom];
    Json e{{"minimal_set", aset_to_json(sp, AtomMask{1} << atom)},
           {"has_loops", np.has_loops},
           {"found", np.found}};
    if (np.has_loops) e["alpha"] = word_to_json(g, np.alpha);
    if (np.found) e["beta"] = word_to_json(g, np.beta);
    nonpower.push_back(std::move(e));
  }

  Json dynamics{{"automaton_states", a.automaton_states},
                {"disagreeable", disagreeable_to_json(sp, a.disagreeable)},
                {"condition_le", condition_le_to_json(sp, a.condition_le)},
                {"connects_to_loop", connects_to_json(sp, a.connects)},
                {"strongly_cofinal", cofinal_to_json(sp, a.cofinal)},
                {"loops", loops},
                {"two_nonpower_loops", nonpower}};
  if (a.cycle) {
    dynamics["cycle"] = Json{{"base", aset_to_json(sp, a.cycle->atom)},
                             {"word", word_to_json(g, a.cycle->word)}};
  }

  Json cores = Json::array();
  for (const Core& c : a.lattice.cores) cores.push_back(aset_to_json(sp, c.atoms));
  Json hasse = Json::array();
  for (auto [lo, hi] : a.lattice.hasse) hasse.push_back(Json::array({lo, hi}));
  Json quotients = Json::array();
  for (const QuotientSummary& q : a.quotients) {
    quotients.push_back(quotient_summary_to_json(sp, q));
  }
  Json sdis{{"value", a.sdis.value}};
  if (a.sdis.failing_core) sdis["failing_core"] = aset_to_json(sp, a.sdis.failing_core->atoms);
  if (!a.sdis.failing_witnesses.empty()) {
    sdis["witness"] = Json{{"vertex", aset_to_json(sp, a.sdis.failing_witnesses.front().atom)},
                           {"word", word_to_json(g, a.sdis.failing_witnesses.front().beta)}};
  }
  Json ideals{{"cores", cores},
              {"hasse", hasse},
              {"quotients", quotients},
              {"strongly_disagreeable", sdis},
              {"note", "the cores order the gauge-invariant ideals; under strong "
                       "disagreeability this is the full ideal lattice"}};

  Json projections = Json::array();
  for (const InfiniteProjectionEntry& e : a.infinite_projections) {
    projections.push_back(Json{{"base", aset_to_json(sp, e.base)},
                               {"loop", word_to_json(g, e.loop)}});
  }

  Json verdicts = Json::array();
  for (const Verdict& v : a.verdicts) verdicts.push_back(verdict_to_json(v));

  return Json{{"schema", kSchema},
              {"graph", graph_to_json(g)},
              {"space", space_json},
              {"dynamics", dynamics},
              {"ideals", ideals},
              {"infinite_projections", projections},
              {"verdicts", verdicts}};
}

std::string analysis_to_text(const Analysis& a) {
  const Space& sp = a.space;
  const Graph& g = sp.graph();
  std::ostringstream os;
  os << "graph " << (g.name().empty() ? "(unnamed)" : g.name()) << ": " << g.vertex_count()
     << " vertices, " << g.edges().size() << " edges, alphabet {";
  for (int i = 0; i < g.letter_count(); ++i) os << (i ? "," : "") << g.letter_name(i);
  os << "}\n";
  for (const std::string& w : sp.warnings()) os << "warning: " << w << "\n";

  os << "\natoms (" << sp.atom_count() << ", depth " << sp.partition().stabilization_depth
     << "):";
  for (VertexMask m : sp.atoms()) os << " " << g.format_vertex_set(m);
  os << "\nfamily size: " << sp.family_size() << "\n";
  os << "weakly left-resolving: " << (sp.wlr().holds ? "yes" : "NO") << "\n";
  if (!sp.wlr().holds) {
    const auto& c = *sp.wlr().counterexample;
    os << "  counterexample: r(" << g.format_vertex_set(c.a) << "," << g.letter_name(c.letter)
       << ") meets r(" << g.format_vertex_set(c.b) << "," << g.letter_name(c.letter) << ")\n";
  }
  os << "condition (*): " << (sp.star().holds ? "yes" : "no") << "\n";

  os << "\npredicates:\n";
  os << "  disagreeable:      " << (a.disagreeable.disagreeable ? "yes" : "no");
  if (!a.disagreeable.witnesses.empty()) {
    const auto& w = a.disagreeable.witnesses.front();
    os << "  (witness " << sp.format_atom_set(w.atom) << ", " << g.format_word(w.beta) << ")";
  }
  os << "\n  no exitless cycle: " << (a.condition_le.holds ? "yes" : "no");
  if (!a.condition_le.failures.empty()) {
    const auto& f = a.condition_le.failures.front();
    os << "  (cycle " << g.format_word(f.word) << " at " << sp.format_atom_set(f.atom) << ")";
  }
  os << "\n  connects to loop:  " << (a.connects.all_connect ? "yes" : "no");
  os << "\n  strongly cofinal:  " << (a.cofinal.holds ? "yes" : "no");
  if (a.cofinal.witness) {
    os << "  (bad word " << g.format_word(a.cofinal.witness->preperiod) << "("
       << g.format_word(a.cofinal.witness->period) << ")^inf for "
       << sp.format_atom_set(a.cofinal.witness->atom) << ")";
  }
  os << "\n  strongly disagr.:  " << (a.sdis.value ? "yes" : "no");
  if (a.sdis.failing_core) {
    os << "  (failing core " << sp.format_atom_set(a.sdis.failing_core->atoms) << ")";
  }
  os << "\n  cycle exists:      " << (a.cycle ? "yes" : "no") << "\n";

  os << "\nideal lattice (" << a.lattice.cores.size() << " hereditary saturated cores):";
  for (const Core& c : a.lattice.cores) os << " " << sp.format_atom_set(c.atoms);
  os << "\n";

  os << "\nverdicts:\n";
  for (const Verdict& v : a.verdicts) {
    os << "  " << question_name(v.question) << ": " << status_name(v.status);
    if (!v.rule.empty()) os << "  [" << v.rule << "]";
    os << "\n";
    for (const std::string& c : v.caveats) os << "      caveat: " << c << "\n";
  }
  return os.str();
}

std::string analysis_to_dot(const Analysis& a) {
  const Space& sp = a.space;
  const Graph& g = sp.graph();
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6",
                                  "#ffff99", "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00"};
  // Mark the largest proper core.
  VertexMask marked = 0;
  for (const Core& c : a.lattice.cores) {
    if (c.proper(sp)) marked = c.vertices;
  }
  std::ostringstream os;
  os << "digraph \"" << (g.name().empty() ? "labelana" : g.name()) << "\" {\n";
  os << "  rankdir=LR;\n  node [style=filled];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int atom = sp.atom_of(v);
    os << "  \"" << g.vertex_name(v) << "\" [fillcolor=\""
       << (atom >= 0 ? palette[atom % 10] : "#dddddd") << "\"";
    if (marked & bit(v)) os << ", peripheries=2";
    if (atom < 0) os << ", shape=diamond";
    os << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  \"" << g.vertex_name(e.src) << "\" -> \"" << g.vertex_name(e.dst) << "\" [label=\""
       << g.letter_name(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json error_to_json(const Error& e) {
  return Json{{"schema", kSchema}, {"error", Json{{"kind", e.kind_name()}, {"message", e.what()}}}};
}

}  // namespace labelana
