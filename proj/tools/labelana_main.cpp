#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "labelana/fuzz.hpp"
#include "labelana/oracle.hpp"
#include "labelana/report.hpp"

namespace {

using namespace labelana;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Validation: return 3;
    case ErrorKind::Resource: return 4;
    case ErrorKind::Logic: return 1;
  }
  return 1;
}

void emit_error(const Error& e) { std::cerr << dump_json(error_to_json(e)); }

struct CommonOpts {
  std::string file;
  Config config;
  std::string format = "text";
  std::string cover_mode = "both";

  void apply() {
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (cover_mode == "same-length") {
      config.cover_mode = CoverMode::SameLength;
    } else if (cover_mode == "prefix-free") {
      config.cover_mode = CoverMode::PrefixFree;
    } else {
      config.cover_mode = CoverMode::Both;
    }
    if (const char* env = std::getenv("LABELANA_MAX_ATOMS")) {
      int v = std::atoi(env);
      if (v >= 1) config.max_atoms = v;
    }
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_file = true) {
  if (with_file) cmd->add_option("file", o.file, "input graph (.lgr or .json)")->required();
  cmd->add_option("--max-atoms", o.config.max_atoms,
                  "atom budget for family enumeration (env LABELANA_MAX_ATOMS overrides)");
  cmd->add_option("--word-bound", o.config.word_bound_multiplier,
                  "multiplier on the loop-word length bound");
  cmd->add_option("--cover-mode", o.cover_mode, "same-length | prefix-free | both")
      ->check(CLI::IsMember({"same-length", "prefix-free", "both"}));
  cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--allow-epsilon-cover", o.config.allow_epsilon_cover,
                "admit the empty word as a cover path in connects-to-loop");
  cmd->add_option("--seed", o.config.seed, "random seed (fuzz)");
}

int cmd_analyze(CommonOpts& o) {
  Analysis a = run_analysis(parse_graph_file(o.file, o.config), o.config);
  if (o.config.format == OutputFormat::Json) {
    std::cout << dump_json(analysis_to_json(a));
  } else {
    std::cout << analysis_to_text(a);
  }
  return 0;
}

int cmd_check(CommonOpts& o, const std::string& property) {
  Analysis a = run_analysis(parse_graph_file(o.file, o.config), o.config);
  const Space& sp = a.space;
  Json out{{"schema", kSchema}, {"property", property}};
  std::string text;
  if (property == "disagreeable") {
    out["value"] = a.disagreeable.disagreeable;
    Json ws = Json::array();
    for (const auto& w : a.disagreeable.witnesses) {
      ws.push_back(Json{{"vertex", aset_to_json(sp, w.atom)},
                        {"word", word_to_json(sp.graph(), w.beta)}});
    }
    out["witnesses"] = ws;
    text = a.disagreeable.disagreeable ? "disagreeable: true" : "disagreeable: false";
    if (!a.disagreeable.witnesses.empty()) {
      const auto& w = a.disagreeable.witnesses.front();
      text += "  witness (" + sp.format_atom_set(w.atom) + ", " +
              sp.graph().format_word(w.beta) + ")";
    }
  } else if (property == "strongly-disagreeable") {
    out["value"] = a.sdis.value;
    if (a.sdis.failing_core) out["failing_core"] = aset_to_json(sp, a.sdis.failing_core->atoms);
    if (!a.sdis.failing_witnesses.empty()) {
      const auto& w = a.sdis.failing_witnesses.front();
      out["witness"] = Json{{"vertex", aset_to_json(sp, w.atom)},
                            {"word", word_to_json(sp.graph(), w.beta)}};
    }
    text = a.sdis.value ? "strongly-disagreeable: true" : "strongly-disagreeable: false";
    if (a.sdis.failing_core) {
      text += "  failing core " + sp.format_atom_set(a.sdis.failing_core->atoms);
      if (!a.sdis.failing_witnesses.empty()) {
        const auto& w = a.sdis.failing_witnesses.front();
        text += ", witness (" + sp.format_atom_set(w.atom) + ", " +
                sp.graph().format_word(w.beta) + ")";
      }
    }
  } else if (property == "strongly-cofinal") {
    out["value"] = a.cofinal.holds;
    if (a.cofinal.witness) {
      out["witness"] = Json{{"vertex", aset_to_json(sp, a.cofinal.witness->atom)},
                            {"preperiod", word_to_json(sp.graph(), a.cofinal.witness->preperiod)},
                            {"period", word_to_json(sp.graph(), a.cofinal.witness->period)}};
    }
    text = a.cofinal.holds ? "strongly-cofinal: true" : "strongly-cofinal: false";
  } else if (property == "l-e") {
    out["value"] = a.condition_le.holds;
    Json fs = Json::array();
    for (const auto& f : a.condition_le.failures) {
      fs.push_back(Json{{"base", aset_to_json(sp, f.atom)},
                        {"word", word_to_json(sp.graph(), f.word)}});
    }
    out["failures"] = fs;
    text = a.condition_le.holds ? "l-e: true" : "l-e: false";
  } else if (property == "star") {
    out["value"] = sp.star().holds;
    text = sp.star().holds ? "star: true" : "star: false";
  } else if (property == "connects") {
    out["value"] = a.connects.all_connect;
    text = a.connects.all_connect ? "connects: true" : "connects: false";
  } else if (property == "wlr") {
    out["value"] = sp.wlr().holds;
    if (!sp.wlr().holds) {
      const auto& c = *sp.wlr().counterexample;
      out["counterexample"] = Json{{"a", vset_to_json(sp.graph(), c.a)},
                                   {"b", vset_to_json(sp.graph(), c.b)},
                                   {"letter", sp.graph().letter_name(c.letter)}};
    }
    text = sp.wlr().holds ? "wlr: true" : "wlr: false";
  } else {
    throw ParseError("unknown property '" + property + "'");
  }
  if (o.config.format == OutputFormat::Json) {
    std::cout << dump_json(out);
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int cmd_ideals(CommonOpts& o) {
  Analysis a = run_analysis(parse_graph_file(o.file, o.config), o.config);
  Json cores = Json::array();
  for (const Core& c : a.lattice.cores) cores.push_back(aset_to_json(a.space, c.atoms));
  Json hasse = Json::array();
  for (auto [lo, hi] : a.lattice.hasse) hasse.push_back(Json::array({lo, hi}));
  Json quotients = Json::array();
  for (const QuotientSummary& q : a.quotients) {
    quotients.push_back(quotient_summary_to_json(a.space, q));
  }
  Json out{{"schema", kSchema},
           {"cores", cores},
           {"hasse", hasse},
           {"quotients", quotients}};
  if (o.config.format == OutputFormat::Json) {
    std::cout << dump_json(out);
  } else {
    std::cout << "hereditary saturated cores (" << a.lattice.cores.size() << "):\n";
    for (size_t i = 0; i < a.lattice.cores.size(); ++i) {
      std::cout << "  [" << i << "] " << a.space.format_atom_set(a.lattice.cores[i].atoms)
                << "\n";
    }
    std::cout << "cover relations:";
    for (auto [lo, hi] : a.lattice.hasse) std::cout << " " << lo << "<" << hi;
    std::cout << "\n";
  }
  return 0;
}

int cmd_quotient(CommonOpts& o, const std::string& core_spec) {
  Config config = o.config;
  Graph g = parse_graph_file(o.file, config);
  Space space = Space::analyze(g, config);
  SubsetAutomaton aut(original_view(space), config);

  std::vector<std::string> notes;
  VertexMask requested = 0;
  {
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      auto id = space.graph().vertex_id(cur);
      if (!id) throw ParseError("unknown vertex '" + cur + "' in --core");
      requested |= bit(*id);
      cur.clear();
    };
    for (char c : core_spec) {
      if (c == ',') {
        flush();
      } else {
        cur += c;
      }
    }
    flush();
  }
  VertexMask inside = requested & space.graph().omega0();
  if (inside != requested) {
    notes.push_back("source vertices were dropped from the requested core (they belong to no "
                    "family member)");
  }
  AtomMask seed = 0;
  for (int atom = 0; atom < space.atom_count(); ++atom) {
    if (space.atom_vertices(atom) & inside) seed |= AtomMask{1} << atom;
  }
  if (space.vertices_of(seed) != inside) {
    notes.push_back("requested vertices were widened to full atoms: " +
                    space.graph().format_vertex_set(space.vertices_of(seed)));
  }
  Core core = saturate_hereditary_closure(space, aut, seed);
  if (core.atoms != seed) {
    notes.push_back("hereditary saturated closure enlarged the core to " +
                    space.format_atom_set(core.atoms));
  }

  QuotientSpace q = make_quotient(space, core);
  QuotientSummary summary;
  summary.core = core;
  summary.zero = q.zero;
  if (!q.zero) {
    summary.view_atoms = q.view.atom_ids();
    summary.alphabet = q.view.letters;
    summary.predicates = quotient_predicates(q, config);
  }

  Json out{{"schema", kSchema},
           {"requested", vset_to_json(space.graph(), requested)},
           {"core", aset_to_json(space, core.atoms)},
           {"notes", notes},
           {"quotient", quotient_summary_to_json(space, summary)}};
  if (config.format == OutputFormat::Json) {
    std::cout << dump_json(out);
  } else {
    std::cout << "core: " << space.format_atom_set(core.atoms) << "\n";
    for (const auto& n : notes) std::cout << "note: " << n << "\n";
    if (summary.zero) {
      std::cout << "zero quotient (core covers every atom)\n";
    } else {
      std::cout << "quotient atoms:";
      for (int atom : summary.view_atoms) {
        std::cout << " " << space.format_atom_set(AtomMask{1} << atom);
      }
      std::cout << "\nquotient alphabet:";
      for (LetterId a : summary.alphabet) std::cout << " " << space.graph().letter_name(a);
      std::cout << "\ndisagreeable: "
                << (summary.predicates->disagreeable.disagreeable ? "true" : "false") << "\n";
    }
  }
  return 0;
}

int cmd_oracle(CommonOpts& o) {
  Graph g = parse_graph_file(o.file, o.config);
  OracleReport rep = run_oracle(g);
  Analysis a = run_analysis(g, o.config);
  bool agrees = rep.L == a.disagreeable.disagreeable && rep.K == a.sdis.value &&
                (a.verdict(Question::IH).status == Status::Certified) ==
                    (rep.L && rep.connects);
  Json out{{"schema", kSchema},
           {"L", rep.L},
           {"K", rep.K},
           {"connects", rep.connects},
           {"agrees_with_labeled", agrees}};
  if (o.config.format == OutputFormat::Json) {
    std::cout << dump_json(out);
  } else {
    std::cout << "L: " << (rep.L ? "true" : "false") << "\nK: " << (rep.K ? "true" : "false")
              << "\nconnects: " << (rep.connects ? "true" : "false")
              << "\nagrees_with_labeled: " << (agrees ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_fuzz(CommonOpts& o, int n, int size) {
  FuzzSummary s = run_fuzz(n, size, o.config.seed, o.config);
  if (o.config.format == OutputFormat::Json) {
    Json out{{"schema", kSchema},
             {"cases", s.cases},
             {"oracle_agreements", s.oracle_agreements},
             {"failures", s.failures}};
    if (!s.ok()) {
      out["first_failure"] = Json{{"reason", s.first_failure_reason},
                                  {"graph_lgr", s.first_failure_lgr}};
    }
    std::cout << dump_json(out);
  } else {
    std::cout << s.oracle_agreements << "/" << s.cases << " oracle agreements\n";
    if (!s.ok()) {
      std::cout << "FAILURE: " << s.first_failure_reason << "\n"
                << s.first_failure_lgr;
    }
  }
  return s.ok() ? 0 : 1;
}

int cmd_dot(CommonOpts& o) {
  Analysis a = run_analysis(parse_graph_file(o.file, o.config), o.config);
  std::cout << analysis_to_dot(a);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labelana: combinatorial analyzer for finite labeled graphs and the C*-algebras "
               "they present"};
  app.require_subcommand(1);

  CommonOpts analyze_o, check_o, ideals_o, quotient_o, oracle_o, fuzz_o, dot_o;
  std::string property, core_spec;
  int fuzz_n = 100, fuzz_size = 6;

  add_common(app.add_subcommand("analyze", "full analysis with verdicts"), analyze_o);
  {
    auto* c = app.add_subcommand("check", "evaluate one predicate");
    add_common(c, check_o);
    c->add_option("--property", property,
                  "disagreeable | strongly-disagreeable | strongly-cofinal | l-e | star | "
                  "connects | wlr")
        ->required();
  }
  add_common(app.add_subcommand("ideals", "hereditary saturated core lattice"), ideals_o);
  {
    auto* c = app.add_subcommand("quotient", "analyze the quotient by a core");
    add_common(c, quotient_o);
    c->add_option("--core", core_spec, "comma-separated vertices; closed to a hereditary "
                                       "saturated core")
        ->required();
  }
  add_common(app.add_subcommand("oracle", "classical checkers for injective labelings"),
             oracle_o);
  {
    auto* c = app.add_subcommand("fuzz", "differential testing on random graphs");
    add_common(c, fuzz_o, false);
    c->add_option("--n", fuzz_n, "number of cases");
    c->add_option("--size", fuzz_size, "max vertices per case");
  }
  add_common(app.add_subcommand("dot", "DOT export with atom colors"), dot_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("analyze")) {
      analyze_o.apply();
      return cmd_analyze(analyze_o);
    }
    if (app.got_subcommand("check")) {
      check_o.apply();
      return cmd_check(check_o, property);
    }
    if (app.got_subcommand("ideals")) {
      ideals_o.apply();
      return cmd_ideals(ideals_o);
    }
    if (app.got_subcommand("quotient")) {
      quotient_o.apply();
      return cmd_quotient(quotient_o, core_spec);
    }
    if (app.got_subcommand("oracle")) {
      oracle_o.apply();
      return cmd_oracle(oracle_o);
    }
    if (app.got_subcommand("fuzz")) {
      fuzz_o.apply();
      return cmd_fuzz(fuzz_o, fuzz_n, fuzz_size);
    }
    if (app.got_subcommand("dot")) {
      dot_o.apply();
      return cmd_dot(dot_o);
    }
  } catch (const Error& e) {
    emit_error(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error(LogicError(e.what()));
    return 1;
  }
  return 2;
}
