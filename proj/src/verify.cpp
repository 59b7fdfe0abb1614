#include "ohtsuki/verify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ohtsuki/engine.hpp"
#include "ohtsuki/error.hpp"
#include "ohtsuki/filtration.hpp"

#ifndef OHTSUKI_DEFAULT_FIXTURES
#define OHTSUKI_DEFAULT_FIXTURES "data/verify_fixtures.json"
#endif

namespace ohtsuki {

InputKind parse_input_kind(std::string_view text) {
  if (text == "word") return InputKind::Word;
  if (text == "bracket") return InputKind::Bracket;
  if (text == "diagram") return InputKind::Diagram;
  throw std::invalid_argument("unknown input kind '" + std::string(text) + "'");
}

Presentation presentation_from_input(InputKind kind, std::string_view text, const std::optional<ComponentSet>& ambient) {
  switch (kind) {
    case InputKind::Word: {
      const Word w = parse_word(text);
      return ambient ? canonical_presentation(w, *ambient) : canonical_presentation(w);
    }
    case InputKind::Bracket:
      return ambient ? parse_bracket(text, *ambient) : parse_bracket(text);
    case InputKind::Diagram: {
      const ChordDiagram c = parse_diagram(text);
      ComponentSet amb;
      for (int i = 0; i <= c.chords(); ++i) amb.insert(i);
      return canonical_presentation(diagram_word(c), ambient.value_or(amb));
    }
  }
  throw std::logic_error("unknown input kind");
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json VerifyReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name}, {"anchor", c.anchor}, {"expected", c.expected}, {"computed", c.computed},
                           {"pass", c.pass}});
  return {{"checks", std::move(checks_json)},
          {"environment", {{"version", version}, {"seed", seed}}},
          {"pass", all_pass()}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.anchor << "]\n"
        << "     expected: " << c.expected << "\n     computed: " << c.computed << "\n";
  std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

VerifyTarget parse_verify_target(std::string_view text) {
  if (text == "lemma4_6" || text == "bubble") return VerifyTarget::Bubble;
  if (text == "thm1_1" || text == "vanishing") return VerifyTarget::Vanishing;
  if (text == "thm1_2" || text == "switch") return VerifyTarget::Switch;
  if (text == "all") return VerifyTarget::All;
  throw std::invalid_argument("unknown verify target '" + std::string(text) + "'");
}

std::filesystem::path default_fixture_path() { return OHTSUKI_DEFAULT_FIXTURES; }

namespace {

std::string format_symbols(const std::map<std::string, Rational>& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : m) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "·" + s;
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + "]";
}

bool wants(VerifyTarget requested, std::string_view target) {
  return requested == VerifyTarget::All || parse_verify_target(target) == requested;
}

std::optional<ComponentSet> ambient_of(const Json& j) {
  if (!j.contains("ambient")) return std::nullopt;
  return parse_ambient(j.at("ambient").get<std::string>());
}

Presentation presentation_of(const Json& j, const std::optional<ComponentSet>& ambient) {
  return presentation_from_input(parse_input_kind(j.at("kind").get<std::string>()), j.at("input").get<std::string>(),
                                 ambient);
}

void fixture_checks(VerifyTarget target, const Json& fixtures, VerifyReport& report) {
  for (const auto& e : fixtures.value("evaluations", Json::array())) {
    if (!wants(target, e.at("target").get<std::string>())) continue;
    std::map<std::string, Rational> expected;
    for (const auto& [s, c] : e.at("expected").items()) expected[s] = parse_rational(c.get<std::string>());
    const auto computed = graph_symbols(eval_presentation(presentation_of(e, ambient_of(e))).vector);
    report.checks.push_back({"eval " + e.at("name").get<std::string>(), e.at("anchor").get<std::string>(),
                             format_symbols(expected), format_symbols(computed), computed == expected});
  }
  RelationSystem rs;
  std::vector<std::string> wanted;
  std::string anchor;
  for (const auto& p : fixtures.value("pairs", Json::array())) {
    if (!wants(target, p.at("target").get<std::string>())) continue;
    const auto amb = ambient_of(p);
    const RelationRow row =
        harvest_presentation_pair(presentation_of(p.at("first"), amb), presentation_of(p.at("second"), amb));
    report.checks.push_back({"relation " + p.at("name").get<std::string>(), p.at("anchor").get<std::string>(),
                             "nonzero row", format_symbols(row.coeffs) + " = 0", !row.is_zero()});
    rs.add(row);
    for (const auto& s : p.at("forces_zero")) wanted.push_back(s.get<std::string>());
    anchor = p.at("anchor").get<std::string>();
  }
  if (!wanted.empty()) {
    const SolveResult sol = solve(rs);
    bool ok = true;
    for (const auto& s : wanted) ok = ok && sol.forces_zero(s);
    report.checks.push_back({"presentation-pair rows force weights to zero", anchor, "forced zero ⊇ " + join(wanted),
                             "forced zero = " + join(sol.forced_zero) + ", rank " + std::to_string(sol.rank), ok});
  }
}

void bubble_checks(VerifyReport& report) {
  std::size_t candidates = 0;
  for (const auto& d : enumerate_diagrams(3)) candidates += !d.has_isolated_chord();
  report.checks.push_back({"3-chord diagrams without an isolated chord", "the chain and the fully interleaved diagram", "2", std::to_string(candidates),
                           candidates == 2});

  const auto graphs4 = enumerate_simple_graphs(4, true);
  std::vector<std::string> names;
  for (const auto& k : graphs4) names.push_back(graph_name(k));
  report.checks.push_back({"4-edge simple graphs without an isolated edge", "only the bubble", "[bubble]", join(names),
                           names == std::vector<std::string>{"bubble"}});

  RelationSystem rs;
  rs.add(harvest_4t(3));
  const SolveResult sol = solve(rs);
  report.checks.push_back({"4T rows with 3 chords force the bubble weight to zero", "no new weight at 3 chords",
                           "forced zero ⊇ [bubble]", "forced zero = " + join(sol.forced_zero), sol.forces_zero("bubble")});
}

void vanishing_checks(const VerifyOptions& opts, VerifyReport& report) {
  const GraphKey& sw = named_key(NamedGraph::Switch);
  std::size_t offenders = 0, total = 0;
  for (const auto& d : enumerate_diagrams(4)) {
    ++total;
    const auto v = eval_diagram(d).vector;
    offenders += !(v.tagged().empty() && (v.terms().empty() || (v.terms().size() == 1 && v.terms().begin()->first == sw)));
  }
  report.checks.push_back({"4-chord evaluations are multiples of the switch", "one-dimensional 4-chord weight space",
                           "0 of " + std::to_string(total) + " off the switch line",
                           std::to_string(offenders) + " of " + std::to_string(total), offenders == 0});

  std::size_t nonzero_rows = 0;
  const auto rows4 = harvest_4t(4);
  for (const auto& r : rows4) nonzero_rows += !r.is_zero();
  report.checks.push_back({"4T rows with 4 chords are satisfied by the evaluations", "consistent 4-chord weight system",
                           "0 nonzero of " + std::to_string(rows4.size()),
                           std::to_string(nonzero_rows) + " nonzero of " + std::to_string(rows4.size()),
                           nonzero_rows == 0});

  for (int m = 5; m <= opts.max_chords; ++m) {
    const auto diagrams = enumerate_diagrams(m);
    std::size_t nonzero = 0;
    for (const auto& d : diagrams) nonzero += !eval_diagram(d).vector.is_zero();
    report.checks.push_back({"every " + std::to_string(m) + "-chord diagram evaluates to zero",
                             "more than four chords leave an isolated edge", "0 nonzero of " + std::to_string(diagrams.size()),
                             std::to_string(nonzero) + " nonzero of " + std::to_string(diagrams.size()), nonzero == 0});
  }

  // Graph classes hit by any diagram evaluation, against the 5-edge listing.
  const auto graphs5 = enumerate_simple_graphs(5, true);
  std::set<GraphKey> produced;
  std::size_t case2 = 0;
  for (int m = 1; m <= std::min(opts.max_chords, 6); ++m)
    for (const auto& d : enumerate_diagrams(m)) {
      const auto v = eval_diagram(d).vector;
      for (const auto& [k, c] : v.terms()) produced.insert(k);
      if (m >= 3) case2 += v.tagged().size();
    }
  std::size_t extra_hits = 0;
  for (const auto& k : graphs5) extra_hits += (k != sw && produced.contains(k));
  const bool has_switch = std::find(graphs5.begin(), graphs5.end(), sw) != graphs5.end();
  report.checks.push_back({"5-edge simple graphs without an isolated edge", "the switch plus unused classes",
                           "contains switch; no extra class produced by evaluation",
                           std::to_string(graphs5.size()) + " classes (" + std::to_string(graphs5.size() - has_switch) +
                               " extra), switch " + (has_switch ? "present" : "missing") + ", " +
                               std::to_string(extra_hits) + " extra produced",
                           has_switch && extra_hits == 0});
  report.checks.push_back({"no doubled-circle terms from diagrams with 3 or more chords", "case-2 constants never needed",
                           "0", std::to_string(case2), case2 == 0});
}

Json load_fixtures(const VerifyOptions& opts) {
  const auto path = opts.fixtures.empty() ? default_fixture_path() : opts.fixtures;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path.string());
  return Json::parse(in);
}

}  // namespace

VerifyReport run_verify(VerifyTarget target, const VerifyOptions& opts) {
  VerifyReport report;
  const Json fixtures = load_fixtures(opts);
  fixture_checks(target, fixtures, report);
  if (target == VerifyTarget::Bubble || target == VerifyTarget::All) bubble_checks(report);
  if (target == VerifyTarget::Vanishing || target == VerifyTarget::All) vanishing_checks(opts, report);
  return report;
}

}  // namespace ohtsuki
