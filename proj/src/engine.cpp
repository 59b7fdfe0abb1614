#include "ohtsuki/engine.hpp"

#include <stdexcept>

#include "ohtsuki/mu.hpp"

namespace ohtsuki {

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::Cancelling: return "cancelling";
    case PairCase::Doubled: return "doubled";
    case PairCase::SharedIndex: return "shared-index";
    case PairCase::Disjoint: return "disjoint";
  }
  return "?";
}

PairCase classify(const SimpleCommutator& a, const SimpleCommutator& b) {
  if (a.pair() == b.pair()) return a.exponent == b.exponent ? PairCase::Doubled : PairCase::Cancelling;
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
    return PairCase::SharedIndex;
  return PairCase::Disjoint;
}

namespace {

// Graph of a collection whose entries are all +-1 after normalization.
GraphKey normalized_graph_key(const MuCollection& mc) {
  const FlipResult fr = flip_normalize(mc);
  if (!fr.consistent()) throw std::logic_error("sign frustration in a collection with at most two triples");
  return canonicalize(to_graph(fr.normalized));
}

std::string outcome_name(const GraphVector& v) {
  if (v.is_zero()) return "0";
  if (!v.terms().empty()) return graph_name(v.terms().begin()->first);
  return "case2(" + graph_name(v.tagged().begin()->first) + ")";
}

GraphVector single_graph_impl(const SimpleCommutator& w, const ComponentSet& ambient, bool strict) {
  MuCollection mc(ambient);
  mc.add(0, w.first, w.second, w.exponent);
  GraphVector v(strict);
  v.add(normalized_graph_key(mc), 1);
  return v;
}

GraphVector pair_graph_impl(const SimpleCommutator& wi, const SimpleCommutator& wj, const ComponentSet& ambient,
                            bool strict) {
  GraphVector v(strict);
  MuCollection mc(ambient);
  mc.add(0, wi.first, wi.second, wi.exponent);
  mc.add(0, wj.first, wj.second, wj.exponent);
  switch (classify(wi, wj)) {
    case PairCase::Cancelling:
      break;
    case PairCase::Doubled: {
      MuCollection unit(ambient);
      unit.set(0, wi.first, wi.second, 1);
      v.add_tagged(normalized_graph_key(unit), 1);
      break;
    }
    case PairCase::SharedIndex:
    case PairCase::Disjoint:
      v.add(normalized_graph_key(mc), 1);
      break;
  }
  return v;
}

}  // namespace

GraphVector single_graph(const SimpleCommutator& w, const ComponentSet& ambient) {
  return single_graph_impl(w, ambient, false);
}

EvalResult pair_graph(const SimpleCommutator& wi, const SimpleCommutator& wj, const ComponentSet& ambient) {
  return {pair_graph_impl(wi, wj, ambient, false), {}};
}

EvalResult eval_presentation(const Presentation& p, const EvalOptions& opts) {
  EvalResult result{GraphVector(opts.strict), {}};
  const auto& w = p.circles();
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      GraphVector term = pair_graph_impl(w[i], w[j], p.ambient(), opts.strict);
      if (opts.trace) result.trace.push_back({true, i, j, classify(w[i], w[j]), 1, outcome_name(term)});
      result.vector += term;
    }
  const Rational single_weight = 2 - static_cast<long long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    GraphVector term = single_graph_impl(w[i], p.ambient(), opts.strict);
    if (opts.trace) result.trace.push_back({false, i, i, PairCase::Disjoint, single_weight, outcome_name(term)});
    result.vector += single_weight * term;
  }
  return result;
}

EvalResult eval_diagram(const ChordDiagram& c, const EvalOptions& opts) {
  ComponentSet ambient;
  for (int i = 0; i <= c.chords(); ++i) ambient.insert(i);
  return eval_presentation(canonical_presentation(diagram_word(c), ambient), opts);
}

}  // namespace ohtsuki
