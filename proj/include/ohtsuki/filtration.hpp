#pragma once

// Alternating sums over sublinks, their inversion, and exact linear relations
// among graph weights harvested from the evaluation engine.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohtsuki/engine.hpp"
#include "ohtsuki/rational.hpp"
#include "ohtsuki/word.hpp"

namespace ohtsuki {

/// A value on every sublink of an n-component link. Subsets are bitmasks:
/// bit i-1 set means component i is in the sublink.
class SubsetAssignment {
 public:
  explicit SubsetAssignment(int n);
  SubsetAssignment(int n, std::vector<Rational> values);

  int components() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t subset) const { return values_.at(subset); }
  Rational& operator[](std::size_t subset) { return values_.at(subset); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  bool operator==(const SubsetAssignment&) const = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

inline constexpr int kMaxSubsetComponents = 20;

/// sum over S of (-1)^|S| values(S).
Rational psi(const SubsetAssignment& sa);

/// psi of every sublink: entry S is sum over T ⊆ S of (-1)^|T| values(T).
SubsetAssignment psi_table(const SubsetAssignment& sa);

/// lambda(S) = sum over T ⊆ S of (-1)^|T| psi(T); inverse of psi_table.
SubsetAssignment moebius_reconstruct(const SubsetAssignment& psi_values);

struct RelationRow {
  std::map<std::string, Rational> coeffs;  // symbol -> coefficient, no zeros
  std::string origin;
  bool conjectural = false;

  bool is_zero() const noexcept { return coeffs.empty(); }
};

/// Row over graph symbols of a graph vector; tagged terms become "case2(<name>)".
std::map<std::string, Rational> graph_symbols(const GraphVector& v);

/// eval(p1) - eval(p2) for two presentations of the same surgery class.
/// Throws std::invalid_argument unless the epsilon matrices and ambient sets agree.
/// Rows with more than five components are marked conjectural.
RelationRow harvest_presentation_pair(const Presentation& p1, const Presentation& p2);

/// One row per 4T relation with m chords, each diagram replaced by its evaluation.
/// Zero rows are kept so callers can see every relation was satisfied.
std::vector<RelationRow> harvest_4t(int m);

class RelationSystem {
 public:
  /// Index of a symbol, registering it if new.
  std::size_t unknown(const std::string& symbol);
  const std::vector<std::string>& unknowns() const noexcept { return unknowns_; }

  /// Zero rows are ignored.
  void add(const RelationRow& row);
  void add(const std::vector<RelationRow>& rows) {
    for (const auto& r : rows) add(r);
  }
  const std::vector<RelationRow>& rows() const noexcept { return rows_; }
  std::size_t conjectural_rows() const;

  std::string to_csv() const;
  /// Reads "row,unknown_id,coeff" lines (header optional). Throws ParseError.
  static RelationSystem from_csv(std::string_view text);

 private:
  std::vector<std::string> unknowns_;
  std::map<std::string, std::size_t> index_;
  std::vector<RelationRow> rows_;
};

struct SolveResult {
  std::size_t rank = 0;
  std::vector<std::string> forced_zero;  // in unknown order
  std::vector<std::map<std::string, Rational>> kernel_basis;
  std::vector<std::vector<Rational>> rref;  // rank rows, one column per unknown
  std::vector<std::size_t> pivots;

  bool forces_zero(const std::string& symbol) const;
};

/// Exact reduced row echelon form over the rationals. An unknown is forced to
/// zero iff its unit vector lies in the row space.
SolveResult solve(const RelationSystem& rs);

}  // namespace ohtsuki
