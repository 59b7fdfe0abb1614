// ohtsuki: evaluate split links into simple graphs and reproduce the
// finite-type relations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ohtsuki/chord_diagram.hpp"
#include "ohtsuki/engine.hpp"
#include "ohtsuki/filtration.hpp"
#include "ohtsuki/graph.hpp"
#include "ohtsuki/io.hpp"
#include "ohtsuki/verify.hpp"

namespace {

using namespace ohtsuki;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

bool trace_from_env() {
  const char* v = std::getenv("OHTSUKI_TRACE");
  return v != nullptr && std::string_view(v) == "1";
}

struct EvalArgs {
  std::string word, bracket, diagram, ambient;
  bool json = false, trace = false, strict = false;
};

int cmd_eval(const EvalArgs& a) {
  const int given = !a.word.empty() + !a.bracket.empty() + !a.diagram.empty();
  if (given != 1) {
    std::cerr << "eval: give exactly one of --word, --bracket, --diagram\n";
    return kExitUsage;
  }
  std::optional<ComponentSet> ambient;
  if (!a.ambient.empty()) ambient = parse_ambient(a.ambient);
  InputKind kind = !a.word.empty() ? InputKind::Word : !a.bracket.empty() ? InputKind::Bracket : InputKind::Diagram;
  const std::string& input = !a.word.empty() ? a.word : !a.bracket.empty() ? a.bracket : a.diagram;
  const Presentation p = presentation_from_input(kind, input, ambient);
  const bool trace = a.trace || trace_from_env();
  const EvalResult r = eval_presentation(p, {trace, a.strict});
  if (a.json) {
    std::cout << to_json(r, input, trace).dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(r.vector) << "\n";
  if (trace) {
    std::cerr << "presentation " << format_bracket(p) << " over {" << format_ambient(p.ambient()) << "}\n";
    for (const auto& t : r.trace) {
      if (t.pair)
        std::cerr << "  pair   " << to_string(p.circles()[t.i]) << " " << to_string(p.circles()[t.j]) << " ("
                  << to_string(t.pair_case) << ") x" << to_string(t.coefficient) << " -> " << t.outcome << "\n";
      else
        std::cerr << "  single " << to_string(p.circles()[t.i]) << " x" << to_string(t.coefficient) << " -> "
                  << t.outcome << "\n";
    }
  }
  return 0;
}

struct EnumArgs {
  std::string kind;
  int size = 0;
  bool drop_isolated = false, reflect = false, json = false;
};

int cmd_enum(const EnumArgs& a) {
  if (a.kind == "graphs") {
    const auto keys = enumerate_simple_graphs(a.size, a.drop_isolated);
    if (a.json) {
      Json out = Json::array();
      for (const auto& k : keys)
        out.push_back({{"key", k.hex()}, {"name", graph_name(k)}, {"graph", format_graph(graph_from_key(k))}});
      std::cout << Json{{"edges", a.size}, {"count", keys.size()}, {"classes", out}}.dump(2) << "\n";
    } else {
      for (const auto& k : keys) std::cout << graph_name(k) << "\t" << format_graph(graph_from_key(k)) << "\n";
      std::cout << keys.size() << " classes\n";
    }
    return 0;
  }
  if (a.kind == "diagrams") {
    const auto ds = enumerate_diagrams(a.size, a.reflect ? Symmetry::RotationReflection : Symmetry::Rotation);
    if (a.json) {
      Json out = Json::array();
      for (const auto& d : ds) out.push_back(to_json(d));
      std::cout << Json{{"chords", a.size}, {"count", ds.size()}, {"diagrams", out}}.dump(2) << "\n";
    } else {
      for (const auto& d : ds) std::cout << format_diagram(d) << "\n";
      std::cout << ds.size() << " classes\n";
    }
    return 0;
  }
  std::cerr << "enum: kind must be 'graphs' or 'diagrams'\n";
  return kExitUsage;
}

struct FourTArgs {
  int m = 0;
  bool json = false, csv = false;
};

int cmd_fourt(const FourTArgs& a) {
  if (a.csv) {
    RelationSystem rs;
    rs.add(harvest_4t(a.m));
    std::cout << rs.to_csv();
    return 0;
  }
  const auto rels = four_t_relations(a.m);
  const auto rows = harvest_4t(a.m);
  if (a.json) {
    Json out = Json::array();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      Json row = Json::object();
      for (const auto& [s, c] : rows[i].coeffs) row[s] = to_string(c);
      out.push_back({{"relation", to_json(rels[i])}, {"graph_row", row}});
    }
    std::cout << Json{{"chords", a.m}, {"count", rels.size()}, {"relations", out}}.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < rels.size(); ++i) {
    std::string line;
    for (const auto& [d, c] : rels[i].terms) {
      if (!line.empty()) line += c < 0 ? " - " : " + ";
      else if (c < 0) line += "-";
      line += to_string(c < 0 ? Rational(-c) : c) + "·" + format_diagram(d);
    }
    std::string graph;
    for (const auto& [s, c] : rows[i].coeffs) graph += (graph.empty() ? "" : " + ") + to_string(c) + "·" + s;
    std::cout << line << " = 0    =>    " << (graph.empty() ? "0" : graph) << " = 0\n";
  }
  std::cout << rels.size() << " relations\n";
  return 0;
}

struct VerifyArgs {
  std::string target = "all";
  int max_chords = 6;
  std::string fixtures;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.max_chords = a.max_chords;
  if (!a.fixtures.empty()) opts.fixtures = a.fixtures;
  const VerifyReport report = run_verify(parse_verify_target(a.target), opts);
  if (a.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.all_pass() ? 0 : kExitVerifyFailed;
}

struct RankArgs {
  std::string path;
  bool json = false;
};

int cmd_rank(const RankArgs& a) {
  std::ifstream in(a.path);
  if (!in) {
    std::cerr << "rank: cannot open " << a.path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const RelationSystem rs = RelationSystem::from_csv(buf.str());
  const SolveResult sol = solve(rs);
  if (a.json) {
    std::cout << to_json(sol, rs).dump(2) << "\n";
  } else {
    std::cout << "rank " << sol.rank << " over " << rs.unknowns().size() << " unknowns\n";
    for (const auto& s : sol.forced_zero) std::cout << "forced zero: " << s << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate algebraically split links into simple graphs"};
  app.set_version_flag("--version", std::string(ohtsuki::kVersion));
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a word, bracket expression or chord diagram");
  eval->add_option("--word", eval_args.word, "whitespace-separated signed generators, e.g. \"1 2 -1 -2\"");
  eval->add_option("--bracket", eval_args.bracket, "bracket expression, e.g. \"[1, 2 3][2, 3]\"");
  eval->add_option("--diagram", eval_args.diagram, "chord diagram, e.g. dc:+1,+2,-1,-2");
  eval->add_option("--ambient", eval_args.ambient, "link components, e.g. 0..4");
  eval->add_flag("--json", eval_args.json);
  eval->add_flag("--trace", eval_args.trace, "show pair/single bookkeeping (also OHTSUKI_TRACE=1)");
  eval->add_flag("--strict", eval_args.strict, "keep graph classes with an isolated edge");

  EnumArgs enum_args;
  auto* en = app.add_subcommand("enum", "Enumerate simple graphs or chord diagrams");
  en->add_option("kind", enum_args.kind, "graphs | diagrams")->required();
  en->add_option("size", enum_args.size, "edge count or chord count")->required();
  en->add_flag("--drop-isolated", enum_args.drop_isolated, "omit graphs with an isolated edge");
  en->add_flag("--reflect", enum_args.reflect, "identify mirror-image diagrams");
  en->add_flag("--json", enum_args.json);

  FourTArgs fourt_args;
  auto* fourt = app.add_subcommand("fourt", "List four-term relations and their graph rows");
  fourt->add_option("m", fourt_args.m, "chord count")->required();
  fourt->add_flag("--json", fourt_args.json);
  fourt->add_flag("--csv", fourt_args.csv, "emit the graph rows as relation CSV");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
  verify->add_option("target", verify_args.target, "lemma4_6 (bubble) | thm1_1 (vanishing) | thm1_2 (switch) | all");
  verify->add_option("--max-chords", verify_args.max_chords, "largest chord count for exhaustive checks")
      ->check(CLI::Range(5, 7));
  verify->add_option("--fixtures", verify_args.fixtures, "fixture file");
  verify->add_flag("--json", verify_args.json);

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Rank and forced zeros of a relation CSV");
  rank->add_option("relations", rank_args.path, "CSV with columns row,unknown_id,coeff")->required();
  rank->add_flag("--json", rank_args.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args);
    if (en->parsed()) return cmd_enum(enum_args);
    if (fourt->parsed()) return cmd_fourt(fourt_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (rank->parsed()) return cmd_rank(rank_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
