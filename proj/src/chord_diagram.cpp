#include "ohtsuki/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ohtsuki/error.hpp"

namespace ohtsuki {

namespace {

std::vector<int> relabel_by_first_appearance(const std::vector<int>& labels) {
  std::map<int, int> fresh;
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) {
    auto [it, inserted] = fresh.try_emplace(l, static_cast<int>(fresh.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

void check_range(int m, int hi) {
  if (m < 1 || m > hi)
    throw std::invalid_argument("chord count " + std::to_string(m) + " outside 1.." + std::to_string(hi));
}

}  // namespace

ChordDiagram::ChordDiagram(std::vector<Slot> slots) : slots_(std::move(slots)) {
  if (slots_.size() % 2 != 0) throw std::invalid_argument("odd number of chord endpoints");
  const int m = chords();
  std::vector<int> out(m + 1, 0), in(m + 1, 0);
  for (const auto& s : slots_) {
    if (s.chord < 1 || s.chord > m)
      throw std::invalid_argument("chord label " + std::to_string(s.chord) + " outside 1.." + std::to_string(m));
    (s.polarity == Polarity::Outgoing ? out : in)[s.chord]++;
  }
  for (int i = 1; i <= m; ++i)
    if (out[i] != 1 || in[i] != 1)
      throw std::invalid_argument("chord " + std::to_string(i) + " needs one outgoing and one incoming end");
}

ChordDiagram ChordDiagram::from_labels(const std::vector<int>& labels) {
  std::vector<Slot> slots;
  std::set<int> seen;
  for (int l : labels)
    slots.push_back({l, seen.insert(l).second ? Polarity::Outgoing : Polarity::Incoming});
  return ChordDiagram(std::move(slots));
}

std::vector<int> ChordDiagram::labels() const {
  std::vector<int> out;
  for (const auto& s : slots_) out.push_back(s.chord);
  return out;
}

ChordDiagram ChordDiagram::rotated(int shift) const {
  const int n = static_cast<int>(slots_.size());
  if (n == 0) return *this;
  shift = ((shift % n) + n) % n;
  std::vector<Slot> s(slots_.begin() + shift, slots_.end());
  s.insert(s.end(), slots_.begin(), slots_.begin() + shift);
  ChordDiagram c;
  c.slots_ = std::move(s);
  return c;
}

ChordDiagram ChordDiagram::reflected() const {
  ChordDiagram c;
  c.slots_.assign(slots_.rbegin(), slots_.rend());
  return c;
}

ChordDiagram ChordDiagram::with_flipped(int chord) const {
  ChordDiagram c = *this;
  for (auto& s : c.slots_)
    if (s.chord == chord)
      s.polarity = s.polarity == Polarity::Outgoing ? Polarity::Incoming : Polarity::Outgoing;
  return c;
}

bool ChordDiagram::is_isolated(int chord) const {
  std::vector<int> pos;
  for (int i = 0; i < static_cast<int>(slots_.size()); ++i)
    if (slots_[i].chord == chord) pos.push_back(i);
  std::map<int, int> inside;
  for (int i = pos[0] + 1; i < pos[1]; ++i) inside[slots_[i].chord]++;
  return std::all_of(inside.begin(), inside.end(), [](const auto& kv) { return kv.second == 2; });
}

bool ChordDiagram::has_isolated_chord() const {
  for (int i = 1; i <= chords(); ++i)
    if (is_isolated(i)) return true;
  return false;
}

Word diagram_word(const ChordDiagram& c) {
  std::vector<Letter> letters;
  letters.reserve(c.slots().size());
  for (const auto& s : c.slots()) letters.push_back({s.chord, s.polarity == Polarity::Outgoing ? 1 : -1});
  return Word(std::move(letters));
}

namespace {

std::vector<int> canonical_labels(const std::vector<int>& labels, Symmetry sym) {
  const std::size_t n = labels.size();
  std::vector<int> best;
  auto consider = [&](const std::vector<int>& seq) {
    std::vector<int> rot(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(i + r) % n];
      auto cand = relabel_by_first_appearance(rot);
      if (best.empty() || cand < best) best = std::move(cand);
    }
  };
  consider(labels);
  if (sym == Symmetry::RotationReflection) consider({labels.rbegin(), labels.rend()});
  return best;
}

// Fills the zero entries of `labels` with every perfect matching, chords numbered from `next`.
void each_matching(std::vector<int>& labels, int next, const std::function<void()>& f) {
  const auto first = std::find(labels.begin(), labels.end(), 0);
  if (first == labels.end()) {
    f();
    return;
  }
  *first = next;
  for (auto it = first + 1; it != labels.end(); ++it) {
    if (*it != 0) continue;
    *it = next;
    each_matching(labels, next + 1, f);
    *it = 0;
  }
  *first = 0;
}

}  // namespace

ChordDiagram canonical_diagram(const ChordDiagram& c, Symmetry sym) {
  if (c.slots().empty()) return c;
  return ChordDiagram::from_labels(canonical_labels(c.labels(), sym));
}

std::vector<ChordDiagram> enumerate_diagrams(int m, Symmetry sym) {
  check_range(m, 7);
  std::set<std::vector<int>> classes;
  std::vector<int> labels(2 * m, 0);
  each_matching(labels, 1, [&] { classes.insert(canonical_labels(labels, sym)); });
  std::vector<ChordDiagram> out;
  out.reserve(classes.size());
  for (const auto& l : classes) out.push_back(ChordDiagram::from_labels(l));
  return out;
}

std::vector<FourTermInstance> four_t_instances(int m) {
  check_range(m, 6);
  std::vector<FourTermInstance> out;
  for (const auto& base : enumerate_diagrams(m)) {
    const auto& slots = base.slots();
    for (std::size_t e = 0; e < slots.size(); ++e) {
      std::vector<Slot> rest(slots.begin(), slots.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
      std::set<int> others;
      for (const auto& s : rest)
        if (s.chord != slots[e].chord) others.insert(s.chord);
      for (int a : others) {
        std::vector<std::size_t> ends;
        for (std::size_t i = 0; i < rest.size(); ++i)
          if (rest[i].chord == a) ends.push_back(i);
        auto insert_at = [&](std::size_t pos) {
          std::vector<Slot> s = rest;
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), slots[e]);
          return ChordDiagram(std::move(s));
        };
        out.push_back({{insert_at(ends[0]), insert_at(ends[0] + 1), insert_at(ends[1]), insert_at(ends[1] + 1)}});
      }
    }
  }
  return out;
}

std::vector<DiagramRelation> four_t_relations(int m) {
  std::set<std::vector<std::pair<std::vector<int>, Rational>>> seen;
  std::vector<DiagramRelation> out;
  for (const auto& inst : four_t_instances(m)) {
    std::map<std::vector<int>, Rational> merged;
    for (std::size_t k = 0; k < 4; ++k)
      merged[canonical_diagram(inst.diagrams[k]).labels()] += FourTermInstance::signs[k];
    std::vector<std::pair<std::vector<int>, Rational>> terms;
    for (auto& [l, c] : merged)
      if (c != 0) terms.emplace_back(l, c);
    if (terms.empty()) continue;
    if (terms.front().second < 0)
      for (auto& t : terms) t.second = -t.second;
    if (!seen.insert(terms).second) continue;
    DiagramRelation rel;
    for (auto& [l, c] : terms) rel.terms.emplace_back(ChordDiagram::from_labels(l), c);
    out.push_back(std::move(rel));
  }
  return out;
}

ChordDiagram parse_diagram(std::string_view text) {
  if (text.substr(0, 3) != "dc:") throw ParseError("diagram must start with 'dc:'", 0);
  std::vector<Slot> slots;
  std::size_t pos = 3;
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (text[pos] != '+' && text[pos] != '-') throw ParseError("slot must start with '+' or '-'", pos);
    const Polarity pol = text[pos] == '+' ? Polarity::Outgoing : Polarity::Incoming;
    ++pos;
    int chord = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), chord);
    if (ec != std::errc() || chord < 1) throw ParseError("bad chord index", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    slots.push_back({chord, pol});
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
    }
  }
  try {
    return ChordDiagram(std::move(slots));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_diagram(const ChordDiagram& c) {
  std::string out = "dc:";
  bool first = true;
  for (const auto& s : c.slots()) {
    if (!first) out += ',';
    first = false;
    out += (s.polarity == Polarity::Outgoing ? '+' : '-') + std::to_string(s.chord);
  }
  return out;
}

}  // namespace ohtsuki
