#pragma once

// Unitrivalent multigraphs ("simple graphs": every vertex of valence 1 or 3,
// no self-loops), canonical keys and exact formal linear combinations.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohtsuki/rational.hpp"

namespace ohtsuki {

struct Edge {
  int a = 0;
  int b = 0;
  int label = -1;  // link component the edge came from, if any
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Vertices are 0..vertex_count-1. Throws std::invalid_argument on a
  /// self-loop, an out-of-range endpoint, or a valence other than 1 or 3.
  SimpleGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int valence(int v) const { return valence_.at(v); }
  int trivalent_count() const;

  /// Same graph with vertex v renamed perm[v].
  SimpleGraph relabeled(const std::vector<int>& perm) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> valence_;
};

/// Canonical byte string of an isomorphism class. Layout: trivalent count t,
/// isolated-edge count, t leaf counts, then the strict upper triangle of the
/// trivalent multiplicity matrix, minimized over orderings of the trivalent vertices.
class GraphKey {
 public:
  GraphKey() = default;
  explicit GraphKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  int trivalent_count() const;
  int isolated_edges() const;
  bool has_isolated_edge() const { return isolated_edges() > 0; }

  std::string hex() const;
  static GraphKey from_hex(std::string_view hex);

  auto operator<=>(const GraphKey&) const = default;

 private:
  std::string bytes_;
};

inline constexpr int kMaxCertifiedTrivalent = 9;

/// Throws std::invalid_argument if the graph has more than kMaxCertifiedTrivalent trivalent vertices.
GraphKey canonicalize(const SimpleGraph& g);
/// A representative graph of the class.
SimpleGraph graph_from_key(const GraphKey& key);

bool has_isolated_edge(const SimpleGraph& g);

/// All classes with k edges, sorted by key. 1 <= k <= 7.
std::vector<GraphKey> enumerate_simple_graphs(int k, bool drop_isolated);

enum class NamedGraph { Tripod, Bubble, Switch, Theta };
SimpleGraph named_graph(NamedGraph name);
const GraphKey& named_key(NamedGraph name);

/// "tripod", "bubble", "switch", "theta", or "sg:..." for anything else.
std::string graph_name(const GraphKey& key);
/// Inverse of graph_name; also accepts any "sg:" edge list and "g:<hex>".
GraphKey parse_graph_symbol(std::string_view text);

/// "sg:0-1;0-1;0-2;1-3". Vertex names are arbitrary nonnegative integers.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

/// Exact linear combination of graph classes. In the default mode classes with
/// an isolated edge are dropped on insertion; they vanish under every
/// alternating-sum functional. Tagged terms hold contributions whose scalar
/// multiple of the normal basis element is not known.
class GraphVector {
 public:
  GraphVector() = default;
  explicit GraphVector(bool strict) : strict_(strict) {}

  static GraphVector of(const GraphKey& key, const Rational& c = 1);

  void add(const GraphKey& key, const Rational& c);
  void add(const SimpleGraph& g, const Rational& c) { add(canonicalize(g), c); }
  void add_tagged(const GraphKey& key, const Rational& c);

  Rational coefficient(const GraphKey& key) const;
  Rational tagged_coefficient(const GraphKey& key) const;

  const std::map<GraphKey, Rational>& terms() const noexcept { return terms_; }
  const std::map<GraphKey, Rational>& tagged() const noexcept { return tagged_; }
  bool strict() const noexcept { return strict_; }
  bool is_zero() const noexcept { return terms_.empty() && tagged_.empty(); }

  GraphVector& operator+=(const GraphVector& other);
  GraphVector& operator-=(const GraphVector& other);
  GraphVector& operator*=(const Rational& c);
  friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
  friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
  friend GraphVector operator*(const Rational& c, GraphVector v) { return v *= c; }
  bool operator==(const GraphVector& other) const {
    return terms_ == other.terms_ && tagged_ == other.tagged_;
  }

 private:
  static void accumulate(std::map<GraphKey, Rational>& m, const GraphKey& key, const Rational& c);

  std::map<GraphKey, Rational> terms_;
  std::map<GraphKey, Rational> tagged_;
  bool strict_ = false;
};

/// "3·bubble - 2·switch"; "0" for the zero vector. Tagged terms print as "case2(tripod)".
std::string to_string(const GraphVector& v);

}  // namespace ohtsuki
