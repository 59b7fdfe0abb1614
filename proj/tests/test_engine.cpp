#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "ohtsuki/chord_diagram.hpp"
#include "ohtsuki/engine.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ohtsuki;

namespace {

ComponentSet range(int lo, int hi) {
  ComponentSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

const GraphKey& bubble() { return named_key(NamedGraph::Bubble); }
const GraphKey& switch_graph() { return named_key(NamedGraph::Switch); }

std::vector<SimpleCommutator> all_circles(int generators) {
  std::vector<SimpleCommutator> out;
  for (int a = 1; a <= generators; ++a)
    for (int b = a + 1; b <= generators; ++b)
      for (int e : {1, -1}) out.push_back({a, b, e});
  return out;
}

}  // namespace

TEST_CASE("classify pair cases", "[engine]") {
  using S = SimpleCommutator;
  CHECK(classify(S{1, 2, 1}, S{1, 2, -1}) == PairCase::Cancelling);
  CHECK(classify(S{1, 2, 1}, S{1, 2, 1}) == PairCase::Doubled);
  CHECK(classify(S{1, 2, 1}, S{2, 3, -1}) == PairCase::SharedIndex);
  CHECK(classify(S{1, 2, 1}, S{3, 4, 1}) == PairCase::Disjoint);
}

TEST_CASE("single_graph examples", "[engine]") {
  CHECK(single_graph({1, 2, 1}, range(0, 2)) == GraphVector::of(named_key(NamedGraph::Tripod)));
  CHECK(single_graph({1, 2, 1}, range(0, 3)).is_zero());
  CHECK(single_graph({1, 2, -1}, range(0, 2)) == GraphVector::of(named_key(NamedGraph::Tripod)));
}

TEST_CASE("pair_graph examples", "[engine]") {
  CHECK(pair_graph({1, 2, 1}, {3, 4, 1}, range(0, 4)).vector == GraphVector::of(switch_graph()));
  CHECK(pair_graph({1, 2, 1}, {1, 3, 1}, range(0, 3)).vector == GraphVector::of(bubble()));
  CHECK(pair_graph({2, 4, 1}, {2, 4, -1}, range(0, 4)).vector.is_zero());
  CHECK(pair_graph({2, 4, 1}, {2, 4, -1}, ComponentSet{0, 2, 4}).vector.is_zero());
  // Signs do not matter once normalized.
  CHECK(pair_graph({1, 3, 1}, {2, 4, -1}, range(0, 4)).vector == GraphVector::of(switch_graph()));
  CHECK(pair_graph({1, 2, -1}, {2, 3, -1}, range(0, 3)).vector == GraphVector::of(bubble()));
  CHECK(pair_graph({1, 2, 1}, {3, 4, 1}, range(0, 5)).vector.is_zero());

  const auto doubled = pair_graph({1, 2, 1}, {1, 2, 1}, range(0, 2));
  CHECK(doubled.vector.terms().empty());
  CHECK(doubled.case2_terms() == std::map<GraphKey, Rational>{{named_key(NamedGraph::Tripod), 1}});
  CHECK(pair_graph({1, 2, 1}, {1, 2, 1}, range(0, 3)).vector.is_zero());
}

TEST_CASE("eval_presentation examples", "[engine]") {
  CHECK(eval_presentation(parse_bracket("[1,2][1,3][2,3]")).vector == GraphVector::of(bubble(), 3));
  CHECK(eval_presentation(canonical_presentation(parse_word("1 2 3 4 -1 -2 -3 -4"))).vector ==
        GraphVector::of(switch_graph(), 3));
  CHECK(eval_presentation(parse_bracket("[1, 2 3 4][2, 3 4][3, 4][4, 2]", range(0, 4))).vector ==
        GraphVector::of(switch_graph(), 4));
  CHECK(eval_presentation(Presentation{}).vector.is_zero());
  CHECK(eval_presentation(Presentation({}, range(0, 3))).vector.is_zero());
}

TEST_CASE("degenerate sizes agree with direct construction", "[engine]") {
  for (int gens = 2; gens <= 4; ++gens) {
    const auto ambient = range(0, gens);
    const auto circles = all_circles(gens);
    for (const auto& a : circles) {
      REQUIRE(eval_presentation(Presentation({a}, ambient)).vector == single_graph(a, ambient));
      for (const auto& b : circles) {
        const Presentation p({a, b}, ambient);
        REQUIRE(eval_presentation(p).vector == pair_graph(a, b, ambient).vector);
        REQUIRE(oracle::same_vector(pair_graph(a, b, ambient).vector, oracle::eval_presentation(p)));
      }
    }
  }
}

TEST_CASE("evaluation agrees with the brute-force oracle", "[engine][property]") {
  // Every multiset of up to four circles on generators 1..4, over two ambients.
  const auto circles = all_circles(4);
  std::vector<std::size_t> idx;
  std::size_t checked = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::vector<SimpleCommutator> cs;
    for (auto i : idx) cs.push_back(circles[i]);
    for (const auto& ambient : {range(0, 4), range(0, 5)}) {
      const Presentation p(cs, ambient);
      REQUIRE(oracle::same_vector(eval_presentation(p).vector, oracle::eval_presentation(p)));
      ++checked;
    }
    if (idx.size() == 4) return;
    for (std::size_t i = from; i < circles.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  CHECK(checked == 2 * (1 + 12 + 78 + 364 + 1365));
}

TEST_CASE("evaluation ignores circle order", "[engine][property]") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<SimpleCommutator> cs;
    for (int k = 0; k < 1 + trial % 7; ++k) cs.push_back(testing::random_circle(rng, 4));
    const auto base = eval_presentation(Presentation(cs, range(0, 4))).vector;
    std::shuffle(cs.begin(), cs.end(), rng);
    REQUIRE(eval_presentation(Presentation(cs, range(0, 4))).vector == base);
  }
}

TEST_CASE("evaluation is equivariant under relabeling", "[engine][property]") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const int gens = 3 + trial % 3;
    std::vector<SimpleCommutator> cs;
    for (int k = 0; k < 1 + trial % 6; ++k) cs.push_back(testing::random_circle(rng, gens));
    std::vector<int> perm(gens + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<SimpleCommutator> renamed;
    for (const auto& c : cs) renamed.push_back(SimpleCommutator::make(perm[c.first], perm[c.second], c.exponent));
    REQUIRE(eval_presentation(Presentation(renamed, range(0, gens))).vector ==
            eval_presentation(Presentation(cs, range(0, gens))).vector);
  }
}

TEST_CASE("eval_diagram examples", "[engine]") {
  CHECK(eval_diagram(parse_diagram("dc:+1,+2,+3,-1,-2,-3")).vector == GraphVector::of(bubble(), 3));
  CHECK(eval_diagram(parse_diagram("dc:+1,+2,-1,+3,-2,-3")).vector == GraphVector::of(bubble(), 1));
  CHECK(eval_diagram(parse_diagram("dc:+1,+2,+3,+4,-1,-2,-3,-4")).vector == GraphVector::of(switch_graph(), 3));
  CHECK(eval_diagram(parse_diagram("dc:+1,+2,+3,+4,-1,-3,-2,-4")).vector == GraphVector::of(switch_graph(), 2));
  CHECK(eval_diagram(parse_diagram("dc:+1,+2,-1,+3,+4,-2,-3,-4")).vector == GraphVector::of(switch_graph(), 1));
  CHECK(eval_diagram(parse_diagram("dc:+1,-1")).vector.is_zero());
}

TEST_CASE("diagrams with many chords evaluate to zero", "[engine]") {
  for (int m = 5; m <= 6; ++m)
    for (const auto& d : enumerate_diagrams(m)) REQUIRE(eval_diagram(d).vector.is_zero());
}

TEST_CASE("diagram evaluations never need doubled-circle constants", "[engine]") {
  for (int m = 3; m <= 6; ++m)
    for (const auto& d : enumerate_diagrams(m)) REQUIRE(eval_diagram(d).case2_terms().empty());
}

TEST_CASE("trace records every pair and single", "[engine]") {
  const auto r = eval_presentation(parse_bracket("[1,2][1,3][2,3]"), {.trace = true});
  REQUIRE(r.trace.size() == 6);
  std::size_t pairs = 0;
  for (const auto& t : r.trace) {
    if (t.pair) {
      ++pairs;
      CHECK(t.pair_case == PairCase::SharedIndex);
      CHECK(t.outcome == "bubble");
      CHECK(t.coefficient == 1);
    } else {
      CHECK(t.coefficient == -1);
      CHECK(t.outcome == "0");
    }
  }
  CHECK(pairs == 3);
  CHECK(eval_presentation(parse_bracket("[1,2][1,3][2,3]")).trace.empty());
}

TEST_CASE("strict evaluation keeps isolated-edge classes", "[engine]") {
  const auto lax = eval_presentation(Presentation({{1, 2, 1}}, range(0, 3)));
  CHECK(lax.vector.is_zero());
  const auto strict = eval_presentation(Presentation({{1, 2, 1}}, range(0, 3)), {.strict = true});
  REQUIRE(strict.vector.terms().size() == 1);
  CHECK(strict.vector.terms().begin()->first.has_isolated_edge());
}
