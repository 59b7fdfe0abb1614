#include "ohtsuki/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ohtsuki/error.hpp"

namespace ohtsuki {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), valence_(vertex_count, 0) {
  for (const auto& e : edges_) {
    if (e.a < 0 || e.b < 0 || e.a >= vertex_count_ || e.b >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.a == e.b) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.a));
    ++valence_[e.a];
    ++valence_[e.b];
  }
  for (int v = 0; v < vertex_count_; ++v)
    if (valence_[v] != 1 && valence_[v] != 3)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has valence " + std::to_string(valence_[v]));
}

int SimpleGraph::trivalent_count() const {
  return static_cast<int>(std::count(valence_.begin(), valence_.end(), 3));
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
  std::vector<Edge> edges = edges_;
  for (auto& e : edges) {
    e.a = perm.at(e.a);
    e.b = perm.at(e.b);
  }
  return {vertex_count_, std::move(edges)};
}

int GraphKey::trivalent_count() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
int GraphKey::isolated_edges() const { return bytes_.size() < 2 ? 0 : static_cast<unsigned char>(bytes_[1]); }

std::string GraphKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes_) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

GraphKey GraphKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length graph key");
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(hex.data() + i, hex.data() + i + 2, value, 16);
    if (ec != std::errc() || ptr != hex.data() + i + 2) throw std::invalid_argument("bad hex in graph key");
    bytes += static_cast<char>(value);
  }
  GraphKey key(std::move(bytes));
  // Round-trip through a graph so malformed keys are rejected.
  if (canonicalize(graph_from_key(key)) != key) throw std::invalid_argument("graph key is not canonical");
  return key;
}

namespace {

struct Reduced {
  int t = 0;
  int isolated = 0;
  std::vector<int> leaves;                  // per trivalent vertex
  std::vector<std::vector<int>> mult;       // trivalent x trivalent
};

Reduced reduce(const SimpleGraph& g) {
  Reduced r;
  std::vector<int> index(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) == 3) index[v] = r.t++;
  r.leaves.assign(r.t, 0);
  r.mult.assign(r.t, std::vector<int>(r.t, 0));
  for (const auto& e : g.edges()) {
    const int a = index[e.a], b = index[e.b];
    if (a >= 0 && b >= 0) {
      ++r.mult[a][b];
      ++r.mult[b][a];
    } else if (a >= 0) {
      ++r.leaves[a];
    } else if (b >= 0) {
      ++r.leaves[b];
    } else {
      ++r.isolated;
    }
  }
  return r;
}

GraphKey encode_min(const Reduced& r) {
  std::vector<int> perm(r.t);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cand;
  do {
    cand.clear();
    for (int i = 0; i < r.t; ++i) cand += static_cast<char>(r.leaves[perm[i]]);
    for (int i = 0; i < r.t; ++i)
      for (int j = i + 1; j < r.t; ++j) cand += static_cast<char>(r.mult[perm[i]][perm[j]]);
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string bytes;
  bytes += static_cast<char>(r.t);
  bytes += static_cast<char>(r.isolated);
  return GraphKey(bytes + best);
}

}  // namespace

GraphKey canonicalize(const SimpleGraph& g) {
  const Reduced r = reduce(g);
  if (r.t > kMaxCertifiedTrivalent)
    throw std::invalid_argument("graph has " + std::to_string(r.t) + " trivalent vertices; canonical form is certified up to " +
                                std::to_string(kMaxCertifiedTrivalent));
  return encode_min(r);
}

SimpleGraph graph_from_key(const GraphKey& key) {
  const auto& b = key.bytes();
  const int t = key.trivalent_count();
  const std::size_t expected = 2 + static_cast<std::size_t>(t) + static_cast<std::size_t>(t * (t - 1) / 2);
  if (b.size() != expected) throw std::invalid_argument("malformed graph key");
  std::vector<Edge> edges;
  int next = t;
  for (int i = 0; i < t; ++i)
    for (int k = 0; k < static_cast<unsigned char>(b[2 + i]); ++k) edges.push_back({i, next++});
  std::size_t pos = 2 + t;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j, ++pos)
      for (int k = 0; k < static_cast<unsigned char>(b[pos]); ++k) edges.push_back({i, j});
  for (int k = 0; k < key.isolated_edges(); ++k) {
    edges.push_back({next, next + 1});
    next += 2;
  }
  return {next, std::move(edges)};
}

bool has_isolated_edge(const SimpleGraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.valence(e.a) == 1 && g.valence(e.b) == 1; });
}

std::vector<GraphKey> enumerate_simple_graphs(int k, bool drop_isolated) {
  if (k < 1 || k > 7) throw std::invalid_argument("edge count " + std::to_string(k) + " outside 1..7");
  std::set<GraphKey> classes;
  for (int t = 0; 3 * t <= 2 * k; ++t) {
    const int univalent = 2 * k - 3 * t;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) cells.emplace_back(i, j);
    Reduced r;
    r.t = t;
    r.mult.assign(t, std::vector<int>(t, 0));
    std::vector<int> rowsum(t, 0);
    // Fill the upper triangle cell by cell, keeping every row sum <= 3.
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
      if (c == cells.size()) {
        r.leaves.assign(t, 0);
        int leaf_total = 0;
        for (int i = 0; i < t; ++i) leaf_total += (r.leaves[i] = 3 - rowsum[i]);
        if (leaf_total > univalent || (univalent - leaf_total) % 2 != 0) return;
        r.isolated = (univalent - leaf_total) / 2;
        GraphKey key = encode_min(r);
        if (!drop_isolated || !key.has_isolated_edge()) classes.insert(std::move(key));
        return;
      }
      const auto [i, j] = cells[c];
      for (int m = 0; rowsum[i] + m <= 3 && rowsum[j] + m <= 3; ++m) {
        r.mult[i][j] = r.mult[j][i] = m;
        rowsum[i] += m;
        rowsum[j] += m;
        fill(c + 1);
        rowsum[i] -= m;
        rowsum[j] -= m;
      }
      r.mult[i][j] = r.mult[j][i] = 0;
    };
    fill(0);
  }
  return {classes.begin(), classes.end()};
}

SimpleGraph named_graph(NamedGraph name) {
  switch (name) {
    case NamedGraph::Tripod:
      return {4, {{0, 1}, {0, 2}, {0, 3}}};
    case NamedGraph::Bubble:
      return {4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}}};
    case NamedGraph::Switch:
      return {6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}};
    case NamedGraph::Theta:
      return {2, {{0, 1}, {0, 1}, {0, 1}}};
  }
  throw std::logic_error("unknown named graph");
}

const GraphKey& named_key(NamedGraph name) {
  static const GraphKey keys[] = {canonicalize(named_graph(NamedGraph::Tripod)),
                                  canonicalize(named_graph(NamedGraph::Bubble)),
                                  canonicalize(named_graph(NamedGraph::Switch)),
                                  canonicalize(named_graph(NamedGraph::Theta))};
  return keys[static_cast<int>(name)];
}

namespace {

constexpr std::pair<NamedGraph, const char*> kNames[] = {{NamedGraph::Tripod, "tripod"},
                                                         {NamedGraph::Bubble, "bubble"},
                                                         {NamedGraph::Switch, "switch"},
                                                         {NamedGraph::Theta, "theta"}};

}  // namespace

std::string graph_name(const GraphKey& key) {
  for (const auto& [g, n] : kNames)
    if (named_key(g) == key) return n;
  return format_graph(graph_from_key(key));
}

GraphKey parse_graph_symbol(std::string_view text) {
  for (const auto& [g, n] : kNames)
    if (text == n) return named_key(g);
  if (text.starts_with("g:")) return GraphKey::from_hex(text.substr(2));
  return canonicalize(parse_graph(text));
}

SimpleGraph parse_graph(std::string_view text) {
  if (!text.starts_with("sg:")) throw ParseError("graph must start with 'sg:'", 0);
  std::vector<std::pair<int, int>> raw;
  std::size_t pos = 3;
  auto read = [&](int& out) {
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), out);
    if (ec != std::errc() || out < 0) throw ParseError("expected a vertex name", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
  };
  while (pos < text.size()) {
    int a = 0, b = 0;
    read(a);
    if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-'", pos);
    ++pos;
    read(b);
    raw.emplace_back(a, b);
    if (pos < text.size()) {
      if (text[pos] != ';') throw ParseError("expected ';'", pos);
      ++pos;
    }
  }
  std::set<int> names;
  for (auto [a, b] : raw) names.insert({a, b});
  const std::vector<int> sorted(names.begin(), names.end());
  auto id = [&](int v) { return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()); };
  std::vector<Edge> edges;
  for (auto [a, b] : raw) edges.push_back({id(a), id(b)});
  try {
    return {static_cast<int>(sorted.size()), std::move(edges)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_graph(const SimpleGraph& g) {
  std::string out = "sg:";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  return out;
}

GraphVector GraphVector::of(const GraphKey& key, const Rational& c) {
  GraphVector v;
  v.add(key, c);
  return v;
}

void GraphVector::accumulate(std::map<GraphKey, Rational>& m, const GraphKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

void GraphVector::add(const GraphKey& key, const Rational& c) {
  if (!strict_ && key.has_isolated_edge()) return;
  accumulate(terms_, key, c);
}

void GraphVector::add_tagged(const GraphKey& key, const Rational& c) {
  if (!strict_ && key.has_isolated_edge()) return;
  accumulate(tagged_, key, c);
}

Rational GraphVector::coefficient(const GraphKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GraphVector::tagged_coefficient(const GraphKey& key) const {
  const auto it = tagged_.find(key);
  return it == tagged_.end() ? Rational(0) : it->second;
}

GraphVector& GraphVector::operator+=(const GraphVector& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  for (const auto& [k, c] : other.tagged_) add_tagged(k, c);
  return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  for (const auto& [k, c] : other.tagged_) add_tagged(k, -c);
  return *this;
}

GraphVector& GraphVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    tagged_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  for (auto& [k, v] : tagged_) v *= c;
  return *this;
}

std::string to_string(const GraphVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (out.empty()) {
      out += (c < 0 ? "-" : "");
    } else {
      out += (c < 0 ? " - " : " + ");
    }
    out += to_string(c < 0 ? Rational(-c) : c) + "·" + name;
  };
  for (const auto& [k, c] : v.terms()) emit(c, graph_name(k));
  for (const auto& [k, c] : v.tagged()) emit(c, "case2(" + graph_name(k) + ")");
  return out;
}

}  // namespace ohtsuki
