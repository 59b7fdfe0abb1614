#pragma once

// Collections of triple Milnor invariants mu(abc) and the orientation-flip
// normal form; bridge from commutator presentations to simple graphs.

#include <array>
#include <map>
#include <vector>

#include "ohtsuki/graph.hpp"
#include "ohtsuki/word.hpp"

namespace ohtsuki {

/// Sorted 3-subset a < b < c; the stored value is mu(a b c).
using Triple = std::array<Component, 3>;

class MuCollection {
 public:
  MuCollection() = default;
  explicit MuCollection(ComponentSet ambient) : ambient_(std::move(ambient)) {}

  /// mu(a b c) in any order: cyclic rotations agree, transpositions negate.
  /// Zero when two indices coincide.
  int operator()(Component a, Component b, Component c) const;
  void set(Component a, Component b, Component c, int value);
  void add(Component a, Component b, Component c, int delta);

  const ComponentSet& ambient() const noexcept { return ambient_; }
  /// Nonzero entries keyed by sorted triple.
  const std::map<Triple, int>& entries() const noexcept { return entries_; }
  /// Number of nonzero entries that contain `i`.
  int occurrences(Component i) const;

  /// Reverse the orientation of component i: negates every entry containing i.
  MuCollection flipped(Component i) const;

  bool operator==(const MuCollection&) const = default;

 private:
  ComponentSet ambient_;
  std::map<Triple, int> entries_;
};

/// Circle [a,b]^e on component 0's disk contributes e to mu(0 a b).
MuCollection from_presentation(const Presentation& p);

struct FlipResult {
  MuCollection normalized;
  ComponentSet flips;
  /// Entries left negative when no flip set makes every entry positive.
  std::vector<Triple> conflicts;

  bool consistent() const noexcept { return conflicts.empty(); }
};

/// Flips component orientations so every nonzero entry is positive.
///
/// A flip set F works iff |F ∩ t| is odd exactly for the negative entries t,
/// a linear system over GF(2). It is solved by elimination with variables
/// ordered 1, 2, ..., max, then 0, and free variables set to 0, so the flip set
/// is deterministic and prefers the commutator generators over the localized
/// component. When the system is inconsistent the result is a strict-decrease
/// greedy pass, and the entries it leaves negative are reported.
///
/// Throws std::invalid_argument if some index is in three or more nonzero entries.
FlipResult flip_normalize(const MuCollection& mc);

/// One edge per ambient component and one trivalent vertex per nonzero entry;
/// unused edge ends become univalent. Edges carry the component as label.
/// Throws std::invalid_argument if an entry is not exactly 1 or an index is in
/// three or more nonzero entries.
SimpleGraph to_graph(const MuCollection& mc);

}  // namespace ohtsuki
