#include "ohtsuki/mu.hpp"

#include <algorithm>
#include <stdexcept>

namespace ohtsuki {

namespace {

// Sorted triple and the sign of the permutation taking (a,b,c) to it.
std::pair<Triple, int> sort_with_sign(Component a, Component b, Component c) {
  Triple t{a, b, c};
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j + 1 < 3 - i; ++j)
      if (t[j] > t[j + 1]) {
        std::swap(t[j], t[j + 1]);
        sign = -sign;
      }
  return {t, sign};
}

bool distinct(Component a, Component b, Component c) { return a != b && b != c && a != c; }

}  // namespace

int MuCollection::operator()(Component a, Component b, Component c) const {
  if (!distinct(a, b, c)) return 0;
  const auto [t, sign] = sort_with_sign(a, b, c);
  const auto it = entries_.find(t);
  return it == entries_.end() ? 0 : sign * it->second;
}

void MuCollection::set(Component a, Component b, Component c, int value) {
  if (!distinct(a, b, c)) throw std::invalid_argument("mu needs three distinct indices");
  for (Component i : {a, b, c})
    if (!ambient_.contains(i)) throw std::invalid_argument("index " + std::to_string(i) + " outside ambient");
  const auto [t, sign] = sort_with_sign(a, b, c);
  if (value == 0)
    entries_.erase(t);
  else
    entries_[t] = sign * value;
}

void MuCollection::add(Component a, Component b, Component c, int delta) {
  set(a, b, c, (*this)(a, b, c) + delta);
}

int MuCollection::occurrences(Component i) const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [&](const auto& kv) {
    return std::find(kv.first.begin(), kv.first.end(), i) != kv.first.end();
  }));
}

MuCollection MuCollection::flipped(Component i) const {
  MuCollection out = *this;
  for (auto& [t, v] : out.entries_)
    if (std::find(t.begin(), t.end(), i) != t.end()) v = -v;
  return out;
}

MuCollection from_presentation(const Presentation& p) {
  MuCollection mc(p.ambient());
  for (const auto& c : p.circles()) mc.add(0, c.first, c.second, c.exponent);
  return mc;
}

namespace {

void check_at_most_two(const MuCollection& mc) {
  for (Component i : mc.ambient())
    if (mc.occurrences(i) > 2)
      throw std::invalid_argument("index " + std::to_string(i) + " appears in more than two nonzero triples");
}

int negatives(const MuCollection& mc) {
  return static_cast<int>(
      std::count_if(mc.entries().begin(), mc.entries().end(), [](const auto& kv) { return kv.second < 0; }));
}

}  // namespace

FlipResult flip_normalize(const MuCollection& mc) {
  check_at_most_two(mc);

  std::vector<Component> vars;
  for (Component i : mc.ambient())
    if (i != 0) vars.push_back(i);
  if (mc.ambient().contains(0)) vars.push_back(0);
  const std::size_t n = vars.size();
  auto column = [&](Component i) {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), i) - vars.begin());
  };

  // Row = incidence of one nonzero entry, last cell = 1 when the entry is negative.
  std::vector<std::vector<char>> rows;
  for (const auto& [t, v] : mc.entries()) {
    std::vector<char> row(n + 1, 0);
    for (Component i : t) row[column(i)] = 1;
    row[n] = v < 0;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r][col]) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != rank && rows[k][col])
        for (std::size_t c = 0; c <= n; ++c) rows[k][c] ^= rows[rank][c];
    pivot_of_row.push_back(col);
    ++rank;
  }
  const bool consistent = std::all_of(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                      [&](const auto& row) { return !row[n]; });

  FlipResult result;
  if (consistent) {
    for (std::size_t r = 0; r < rank; ++r)
      if (rows[r][n]) result.flips.insert(vars[pivot_of_row[r]]);
    result.normalized = mc;
    for (Component i : result.flips) result.normalized = result.normalized.flipped(i);
    return result;
  }

  MuCollection cur = mc;
  for (Component i : mc.ambient()) {
    MuCollection next = cur.flipped(i);
    if (negatives(next) < negatives(cur)) {
      cur = std::move(next);
      result.flips.insert(i);
    }
  }
  for (const auto& [t, v] : cur.entries())
    if (v < 0) result.conflicts.push_back(t);
  result.normalized = std::move(cur);
  return result;
}

SimpleGraph to_graph(const MuCollection& mc) {
  check_at_most_two(mc);
  std::map<Component, std::vector<int>> ends;  // component -> trivalent vertices on it
  int vertex = 0;
  for (const auto& [t, v] : mc.entries()) {
    if (v != 1) throw std::invalid_argument("to_graph needs every nonzero triple equal to 1");
    for (Component i : t) ends[i].push_back(vertex);
    ++vertex;
  }
  std::vector<Edge> edges;
  for (Component i : mc.ambient()) {
    std::vector<int> e = ends[i];
    while (e.size() < 2) e.push_back(vertex++);
    edges.push_back({e[0], e[1], i});
  }
  return {vertex, std::move(edges)};
}

}  // namespace ohtsuki
