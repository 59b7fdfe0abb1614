#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "ohtsuki/mu.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ohtsuki;

namespace {

ComponentSet range(int lo, int hi) {
  ComponentSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

// Random collection on {0..n-1} where every index sits in at most two nonzero triples.
MuCollection random_sparse(std::mt19937& rng, int n) {
  MuCollection mc(range(0, n - 1));
  std::uniform_int_distribution<int> idx(0, n - 1), val(-2, 2);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const int a = idx(rng), b = idx(rng), c = idx(rng);
    if (a == b || b == c || a == c || mc(a, b, c) != 0) continue;
    if (mc.occurrences(a) >= 2 || mc.occurrences(b) >= 2 || mc.occurrences(c) >= 2) continue;
    mc.set(a, b, c, val(rng));
  }
  return mc;
}

}  // namespace

TEST_CASE("mu queries follow the cyclic and sign rules", "[mu]") {
  MuCollection mc(range(0, 3));
  mc.set(1, 2, 3, 1);
  CHECK(mc(1, 2, 3) == 1);
  CHECK(mc(2, 3, 1) == 1);
  CHECK(mc(3, 1, 2) == 1);
  CHECK(mc(2, 1, 3) == -1);
  CHECK(mc(1, 3, 2) == -1);
  CHECK(mc(3, 2, 1) == -1);
  CHECK(mc(1, 1, 2) == 0);
  CHECK(mc(0, 1, 2) == 0);
  mc.set(3, 2, 1, 4);
  CHECK(mc(1, 2, 3) == -4);
  mc.add(1, 2, 3, 4);
  CHECK(mc.entries().empty());
  CHECK_THROWS_AS(mc.set(1, 2, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc.set(1, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("from_presentation", "[mu]") {
  const auto m1 = from_presentation(parse_bracket("[1,2][1,3][2,3]"));
  CHECK(m1(0, 1, 2) == 1);
  CHECK(m1(0, 1, 3) == 1);
  CHECK(m1(0, 2, 3) == 1);
  CHECK(m1.entries().size() == 3);
  CHECK(from_presentation(parse_bracket("[1,2][2,1]")).entries().empty());
  const auto m2 = from_presentation(parse_bracket("[1,2][1,2]"));
  CHECK(m2(0, 1, 2) == 2);
  CHECK(m2.ambient() == range(0, 2));
}

TEST_CASE("from_presentation ignores circle order", "[mu][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SimpleCommutator> cs;
    for (int k = 0; k < 1 + trial % 6; ++k) cs.push_back(testing::random_circle(rng, 5));
    const auto base = from_presentation(Presentation(cs, range(0, 5)));
    std::shuffle(cs.begin(), cs.end(), rng);
    REQUIRE(from_presentation(Presentation(cs, range(0, 5))) == base);
  }
}

TEST_CASE("flip_normalize examples", "[mu]") {
  MuCollection a(range(0, 4));
  a.set(0, 1, 3, 1);
  a.set(0, 2, 4, -1);
  const auto ra = flip_normalize(a);
  CHECK(ra.consistent());
  CHECK(ra.flips == ComponentSet{2});
  CHECK(ra.normalized(0, 1, 3) == 1);
  CHECK(ra.normalized(0, 2, 4) == 1);

  const auto m1 = from_presentation(parse_bracket("[1,2][1,3]"));
  const auto rb = flip_normalize(m1);
  CHECK(rb.flips.empty());
  CHECK(rb.normalized == m1);

  MuCollection c(range(0, 2));
  c.set(0, 1, 2, -2);
  const auto rc = flip_normalize(c);
  CHECK(rc.flips == ComponentSet{1});
  CHECK(rc.normalized(0, 1, 2) == 2);
}

TEST_CASE("flip_normalize solves cases greedy flipping misses", "[mu]") {
  // Increasing-order greedy flipping stalls here; a consistent flip set exists.
  MuCollection mc(range(1, 5));
  mc.set(1, 2, 3, -1);
  mc.set(1, 2, 4, 1);
  mc.set(3, 4, 5, 1);
  REQUIRE(oracle::flip_search(mc).has_value());
  const auto r = flip_normalize(mc);
  CHECK(r.consistent());
  for (const auto& [t, v] : r.normalized.entries()) CHECK(v > 0);
}

TEST_CASE("flip_normalize reports frustrated collections", "[mu]") {
  // Vertices of K4 with edges labelled 1..6, one vertex negative.
  MuCollection mc(range(1, 6));
  mc.set(1, 2, 3, -1);
  mc.set(1, 4, 5, 1);
  mc.set(2, 4, 6, 1);
  mc.set(3, 5, 6, 1);
  REQUIRE_FALSE(oracle::flip_search(mc).has_value());
  const auto r = flip_normalize(mc);
  CHECK_FALSE(r.consistent());
  CHECK(r.conflicts.size() == 1);
}

TEST_CASE("flip_normalize agrees with exhaustive search", "[mu][property]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + trial % 4;
    const MuCollection mc = random_sparse(rng, n);
    const auto brute = oracle::flip_search(mc);
    const auto r = flip_normalize(mc);
    REQUIRE(r.consistent() == brute.has_value());
    MuCollection replay = mc;
    for (Component i : r.flips) replay = replay.flipped(i);
    REQUIRE(replay == r.normalized);
    if (r.consistent())
      for (const auto& [t, v] : r.normalized.entries()) REQUIRE(v > 0);
    for (const auto& [t, v] : r.normalized.entries()) REQUIRE(std::abs(v) == std::abs(mc(t[0], t[1], t[2])));
  }
}

TEST_CASE("flip_normalize precondition", "[mu]") {
  MuCollection mc(range(0, 4));
  mc.set(0, 1, 2, 1);
  mc.set(0, 1, 3, 1);
  mc.set(0, 2, 3, 1);
  CHECK_THROWS_AS(flip_normalize(mc), std::invalid_argument);
}

TEST_CASE("to_graph examples", "[mu]") {
  MuCollection bubble(range(0, 3));
  bubble.set(0, 1, 2, 1);
  bubble.set(0, 1, 3, 1);
  CHECK(canonicalize(to_graph(bubble)) == named_key(NamedGraph::Bubble));

  MuCollection sw(range(0, 4));
  sw.set(0, 1, 2, 1);
  sw.set(0, 3, 4, 1);
  CHECK(canonicalize(to_graph(sw)) == named_key(NamedGraph::Switch));

  MuCollection tri(range(0, 2));
  tri.set(0, 1, 2, 1);
  const auto g = to_graph(tri);
  CHECK(canonicalize(g) == named_key(NamedGraph::Tripod));
  CHECK(g.trivalent_count() == 1);

  MuCollection extra(range(0, 3));
  extra.set(0, 1, 2, 1);
  CHECK(canonicalize(to_graph(extra)).has_isolated_edge());

  MuCollection two(range(0, 2));
  two.set(0, 1, 2, 2);
  CHECK_THROWS_AS(to_graph(two), std::invalid_argument);
  CHECK_THROWS_AS(to_graph(from_presentation(parse_bracket("[1,2][1,3][2,3]"))), std::invalid_argument);
}

TEST_CASE("to_graph has one edge per ambient component", "[mu][property]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    MuCollection mc = random_sparse(rng, 3 + trial % 5);
    MuCollection ones(mc.ambient());
    for (const auto& [t, v] : mc.entries()) ones.set(t[0], t[1], t[2], 1);
    const auto g = to_graph(ones);
    REQUIRE(g.edges().size() == ones.ambient().size());
    REQUIRE(g.trivalent_count() == static_cast<int>(ones.entries().size()));
  }
}
