#pragma once

// Chord diagrams on an oriented circle, the outer-circle word of the
// associated link, enumeration up to symmetry, and four-term relations.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ohtsuki/rational.hpp"
#include "ohtsuki/word.hpp"

namespace ohtsuki {

enum class Polarity { Outgoing, Incoming };

struct Slot {
  int chord = 1;
  Polarity polarity = Polarity::Outgoing;
  auto operator<=>(const Slot&) const = default;
};

class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// Chords must be labelled 1..m, each with one outgoing and one incoming slot.
  explicit ChordDiagram(std::vector<Slot> slots);
  /// Chord labels per slot; the first occurrence of each chord is outgoing.
  static ChordDiagram from_labels(const std::vector<int>& labels);

  int chords() const noexcept { return static_cast<int>(slots_.size() / 2); }
  const std::vector<Slot>& slots() const noexcept { return slots_; }
  std::vector<int> labels() const;

  ChordDiagram rotated(int shift) const;
  ChordDiagram reflected() const;
  ChordDiagram with_flipped(int chord) const;
  /// True if the chord crosses no other chord.
  bool is_isolated(int chord) const;
  bool has_isolated_chord() const;

  bool operator==(const ChordDiagram&) const = default;
  auto operator<=>(const ChordDiagram&) const = default;

 private:
  std::vector<Slot> slots_;
};

enum class Symmetry { Rotation, RotationReflection };

/// Reading slots from 0: outgoing ends of chord i give +i, incoming ends -i.
Word diagram_word(const ChordDiagram& c);

/// Lexicographically least label sequence over rotations (and reflections),
/// chords relabelled by first appearance, first ends outgoing.
ChordDiagram canonical_diagram(const ChordDiagram& c, Symmetry sym = Symmetry::Rotation);

/// One representative per class, sorted. 1 <= m <= 7.
std::vector<ChordDiagram> enumerate_diagrams(int m, Symmetry sym = Symmetry::Rotation);

/// Raw four-term instance: moving endpoint e of one chord placed just before and
/// just after each endpoint P, Q of another chord,
///   D(e<P) - D(P<e) + D(e<Q) - D(Q<e) = 0.
struct FourTermInstance {
  std::array<ChordDiagram, 4> diagrams;
  static constexpr std::array<int, 4> signs{1, -1, 1, -1};
};

struct DiagramRelation {
  std::vector<std::pair<ChordDiagram, Rational>> terms;
  bool operator==(const DiagramRelation&) const = default;
};

/// Every instance generated from the rotation representatives with m chords.
std::vector<FourTermInstance> four_t_instances(int m);

/// Instances merged onto rotation representatives; trivial relations dropped,
/// duplicates (up to overall sign) removed. 1 <= m <= 6.
std::vector<DiagramRelation> four_t_relations(int m);

/// "dc:+1,+2,-1,-2".
ChordDiagram parse_diagram(std::string_view text);
std::string format_diagram(const ChordDiagram& c);

}  // namespace ohtsuki
