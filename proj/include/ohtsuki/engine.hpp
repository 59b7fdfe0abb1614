#pragma once

// Evaluation of a commutator presentation of the localized component into
// simple graphs:
//   w_1 ... w_n = sum_{i<j} w_i w_j - (n - 2) sum_i w_i,
// each single- and two-circle link being read off from its triple invariants.

#include <string>
#include <vector>

#include "ohtsuki/chord_diagram.hpp"
#include "ohtsuki/graph.hpp"
#include "ohtsuki/word.hpp"

namespace ohtsuki {

/// How a two-circle link w_i w_j is resolved.
enum class PairCase {
  Cancelling,   // same pair, opposite exponents: trivial modulo weight 3
  Doubled,      // same pair, same exponent: mu = +-2, tagged
  SharedIndex,  // pairs share one generator
  Disjoint,     // pairs share nothing
};

std::string to_string(PairCase c);

struct TraceEntry {
  bool pair = false;       // false: single circle
  std::size_t i = 0;       // circle positions in the presentation
  std::size_t j = 0;       // == i for singles
  PairCase pair_case = PairCase::Disjoint;
  Rational coefficient;    // weight in the sum
  std::string outcome;     // graph name, "case2(<graph>)" or "0"
};

struct EvalResult {
  GraphVector vector;
  std::vector<TraceEntry> trace;

  /// Unresolved doubled-pair contributions, keyed by the value-1 graph.
  const std::map<GraphKey, Rational>& case2_terms() const noexcept { return vector.tagged(); }
};

PairCase classify(const SimpleCommutator& a, const SimpleCommutator& b);

/// The link with component 0 replaced by one circle. Zero unless ambient = {0, a, b}.
GraphVector single_graph(const SimpleCommutator& w, const ComponentSet& ambient);

/// The link with component 0 replaced by the band sum of two circles.
EvalResult pair_graph(const SimpleCommutator& wi, const SimpleCommutator& wj, const ComponentSet& ambient);

struct EvalOptions {
  bool trace = false;
  bool strict = false;  // keep isolated-edge classes
};

EvalResult eval_presentation(const Presentation& p, const EvalOptions& opts = {});

/// Canonical presentation of the outer-circle word over ambient {0, 1, ..., m}.
EvalResult eval_diagram(const ChordDiagram& c, const EvalOptions& opts = {});

}  // namespace ohtsuki
