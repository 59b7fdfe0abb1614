// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ohtsuki/chord_diagram.hpp"
#include "ohtsuki/engine.hpp"
#include "ohtsuki/filtration.hpp"
#include "ohtsuki/graph.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ohtsuki;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kEvalLimit = 1.0;
constexpr double kRelationLimit = 5.0;
constexpr double kExhaustiveLimit = 60.0;
constexpr double kPropertyLimit = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit;
  const bool pass = out.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] AC%d %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              out.detail.c_str(), secs, limit, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

ComponentSet range(int lo, int hi) {
  ComponentSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

Outcome expect(const GraphVector& computed, const GraphVector& expected) {
  return {computed == expected, "computed " + to_string(computed) + ", expected " + to_string(expected)};
}

Outcome forced(const std::vector<RelationRow>& rows, const std::string& symbol) {
  RelationSystem rs;
  rs.add(rows);
  const auto sol = solve(rs);
  std::string zeros;
  for (const auto& s : sol.forced_zero) zeros += (zeros.empty() ? "" : ",") + s;
  return {sol.forces_zero(symbol), std::to_string(rs.rows().size()) + " nonzero rows, rank " + std::to_string(sol.rank) +
                                       ", forced zero {" + zeros + "}"};
}

// Property suites.

bool magnus_properties() {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word w = testing::random_word(rng, 1 + trial % 6, 2 + trial % 4);
    const Word u = testing::random_word(rng, 1 + (trial / 6) % 6, 4);
    const auto e = magnus_epsilon(w);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        if (e(i, j) != -e(j, i)) return false;
    if (magnus_epsilon(w * u) != e + magnus_epsilon(u)) return false;
    if (oracle::magnus_series_degree2(w) != e.entries()) return false;
    std::vector<Letter> rot = w.letters();
    for (std::size_t r = 0; r < rot.size(); ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (magnus_epsilon(Word(rot)) != e) return false;
    }
  }
  return true;
}

bool canonicalization_invariance() {
  std::mt19937 rng(2);
  for (int k = 1; k <= 6; ++k)
    for (const auto& g : oracle::simple_graph_classes(k)) {
      const GraphKey key = canonicalize(g);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges = g.relabeled(perm).edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        if (canonicalize(SimpleGraph(g.vertex_count(), edges)) != key) return false;
      }
    }
  return true;
}

std::vector<SimpleCommutator> all_circles(int generators) {
  std::vector<SimpleCommutator> out;
  for (int a = 1; a <= generators; ++a)
    for (int b = a + 1; b <= generators; ++b)
      for (int e : {1, -1}) out.push_back({a, b, e});
  return out;
}

bool degenerate_consistency() {
  for (int gens = 2; gens <= 4; ++gens) {
    const auto ambient = range(0, gens);
    if (!eval_presentation(Presentation({}, ambient)).vector.is_zero()) return false;
    for (const auto& a : all_circles(gens)) {
      if (eval_presentation(Presentation({a}, ambient)).vector != single_graph(a, ambient)) return false;
      for (const auto& b : all_circles(gens)) {
        const Presentation p({a, b}, ambient);
        const auto direct = pair_graph(a, b, ambient).vector;
        if (eval_presentation(p).vector != direct) return false;
        if (!oracle::same_vector(direct, oracle::eval_presentation(p))) return false;
      }
    }
  }
  return true;
}

bool moebius_involution() {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  for (int n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Rational> v(std::size_t{1} << n);
      for (auto& x : v) x = Rational(num(rng), den(rng));
      const SubsetAssignment sa(n, v);
      if (moebius_reconstruct(psi_table(sa)) != sa) return false;
      if (psi_table(moebius_reconstruct(sa)) != sa) return false;
      if (moebius_reconstruct(sa) != oracle::reconstruct_recursive(sa)) return false;
    }
  return true;
}

bool oracle_equivalence(std::size_t& checked) {
  const auto circles = all_circles(4);
  std::vector<std::size_t> idx;
  bool ok = true;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::vector<SimpleCommutator> cs;
    for (auto i : idx) cs.push_back(circles[i]);
    for (const auto& ambient : {range(0, 4), range(0, 5)}) {
      const Presentation p(cs, ambient);
      ok = ok && oracle::same_vector(eval_presentation(p).vector, oracle::eval_presentation(p));
      ++checked;
    }
    if (idx.size() == 4 || !ok) return;
    for (std::size_t i = from; i < circles.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  return ok;
}

}  // namespace

int main() {
  const auto bubble = named_key(NamedGraph::Bubble);
  const auto sw = named_key(NamedGraph::Switch);

  run(1, "3-chord diagrams", kEvalLimit, [&] {
    const auto c2 = eval_diagram(ChordDiagram::from_labels({1, 2, 3, 1, 2, 3})).vector;
    const auto c1 = eval_diagram(ChordDiagram::from_labels({1, 2, 1, 3, 2, 3})).vector;
    Outcome a = expect(c2, GraphVector::of(bubble, 3));
    Outcome b = expect(c1, GraphVector::of(bubble, 1));
    return Outcome{a.pass && b.pass, "interleaved " + a.detail + "; chain " + b.detail};
  });

  run(2, "4-chord fully interleaved diagram", kEvalLimit, [&] {
    return expect(eval_diagram(ChordDiagram::from_labels({1, 2, 3, 4, 1, 2, 3, 4})).vector, GraphVector::of(sw, 3));
  });

  run(3, "band-routed bracket", kEvalLimit, [&] {
    return expect(eval_presentation(parse_bracket("[1, 2 3 4][2, 3 4][3, 4][4, 2]", range(0, 4))).vector,
                  GraphVector::of(sw, 4));
  });

  run(4, "3-chord 4T rows force the bubble to zero", kRelationLimit, [&] { return forced(harvest_4t(3), "bubble"); });

  run(5, "presentation-pair rows force the switch to zero", kRelationLimit, [&] {
    const auto ambient = range(0, 4);
    const Word w = parse_word("1 2 3 4 -1 -2 -3 2 -4 -2");
    const auto row = harvest_presentation_pair(canonical_presentation(w, ambient),
                                               parse_bracket("[1, 2 3 4][2, 3 4][3, 4][4, 2]", ambient));
    return forced({row}, "switch");
  });

  run(6, "5- and 6-chord diagrams evaluate to zero", kExhaustiveLimit, [&] {
    std::size_t total = 0, nonzero = 0;
    for (int m = 5; m <= 6; ++m)
      for (const auto& d : enumerate_diagrams(m)) {
        ++total;
        nonzero += !eval_diagram(d).vector.is_zero();
      }
    return Outcome{nonzero == 0 && total > 0,
                   std::to_string(total) + " diagrams, " + std::to_string(nonzero) + " nonzero"};
  });

  run(7, "low-degree simple graphs", kExhaustiveLimit, [&] {
    const auto four = enumerate_simple_graphs(4, true);
    const auto five = enumerate_simple_graphs(5, true);
    std::set<GraphKey> extras(five.begin(), five.end());
    const bool has_switch = extras.erase(sw) == 1;
    std::size_t hits = 0;
    for (int m = 1; m <= 6; ++m)
      for (const auto& d : enumerate_diagrams(m)) {
        const auto r = eval_diagram(d);
        for (const auto* terms : {&r.vector.terms(), &r.vector.tagged()})
          for (const auto& [k, c] : *terms) hits += extras.contains(k);
      }
    const bool ok = four == std::vector<GraphKey>{bubble} && has_switch && hits == 0;
    return Outcome{ok, "4 edges: " + std::to_string(four.size()) + " class (" + graph_name(four.front()) +
                           "); 5 edges: switch " + (has_switch ? "present" : "missing") + ", " +
                           std::to_string(extras.size()) + " extra class, produced " + std::to_string(hits) +
                           " times by diagrams with m <= 6"};
  });

  run(8, "property suites", kPropertyLimit, [&] {
    std::size_t checked = 0;
    const bool a = magnus_properties();
    const bool b = canonicalization_invariance();
    const bool c = degenerate_consistency();
    const bool d = moebius_involution();
    const bool e = oracle_equivalence(checked);
    std::ostringstream s;
    s << "magnus " << (a ? "ok" : "FAILED") << ", relabeling " << (b ? "ok" : "FAILED") << ", degenerate sizes "
      << (c ? "ok" : "FAILED") << ", moebius " << (d ? "ok" : "FAILED") << ", oracle " << (e ? "ok" : "FAILED")
      << " (" << checked << " presentations)";
    return Outcome{a && b && c && d && e, s.str()};
  });

  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
