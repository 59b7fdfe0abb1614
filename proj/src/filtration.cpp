#include "ohtsuki/filtration.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "ohtsuki/error.hpp"

namespace ohtsuki {

SubsetAssignment::SubsetAssignment(int n) : n_(n) {
  if (n < 0 || n > kMaxSubsetComponents) throw std::invalid_argument("subset table size out of range");
  values_.assign(std::size_t{1} << n, Rational(0));
}

SubsetAssignment::SubsetAssignment(int n, std::vector<Rational> values) : SubsetAssignment(n) {
  if (values.size() != values_.size()) throw std::invalid_argument("subset table needs 2^n values");
  values_ = std::move(values);
}

namespace {

int parity_sign(std::size_t subset) { return std::popcount(subset) % 2 == 0 ? 1 : -1; }

// f -> (S -> sum over T ⊆ S of (-1)^|T| f(T)), an involution.
SubsetAssignment signed_zeta(const SubsetAssignment& sa) {
  std::vector<Rational> out(sa.size());
  for (std::size_t s = 0; s < sa.size(); ++s) {
    Rational acc = 0;
    // Walk all submasks of s, including 0.
    for (std::size_t t = s;; t = (t - 1) & s) {
      acc += parity_sign(t) * sa[t];
      if (t == 0) break;
    }
    out[s] = std::move(acc);
  }
  return {sa.components(), std::move(out)};
}

}  // namespace

Rational psi(const SubsetAssignment& sa) {
  Rational acc = 0;
  for (std::size_t s = 0; s < sa.size(); ++s) acc += parity_sign(s) * sa[s];
  return acc;
}

SubsetAssignment psi_table(const SubsetAssignment& sa) { return signed_zeta(sa); }

SubsetAssignment moebius_reconstruct(const SubsetAssignment& psi_values) { return signed_zeta(psi_values); }

std::map<std::string, Rational> graph_symbols(const GraphVector& v) {
  std::map<std::string, Rational> out;
  for (const auto& [k, c] : v.terms()) out[graph_name(k)] += c;
  for (const auto& [k, c] : v.tagged()) out["case2(" + graph_name(k) + ")"] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RelationRow harvest_presentation_pair(const Presentation& p1, const Presentation& p2) {
  if (p1.ambient() != p2.ambient()) throw std::invalid_argument("presentations have different ambient sets");
  if (presentation_epsilon(p1) != presentation_epsilon(p2))
    throw std::invalid_argument("presentations have different epsilon matrices; not the same surgery class");
  RelationRow row;
  row.coeffs = graph_symbols(eval_presentation(p1).vector - eval_presentation(p2).vector);
  row.origin = "pair:" + format_bracket(p1) + " ~ " + format_bracket(p2);
  row.conjectural = p1.ambient().size() > 5;
  return row;
}

std::vector<RelationRow> harvest_4t(int m) {
  std::map<ChordDiagram, GraphVector> cache;
  auto eval = [&](const ChordDiagram& d) -> const GraphVector& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, eval_diagram(d).vector).first;
    return it->second;
  };
  std::vector<RelationRow> rows;
  for (const auto& rel : four_t_relations(m)) {
    GraphVector sum;
    std::string origin = "4T:";
    for (const auto& [d, c] : rel.terms) {
      sum += c * eval(d);
      origin += " " + to_string(c) + "*" + format_diagram(d);
    }
    rows.push_back({graph_symbols(sum), std::move(origin), false});
  }
  return rows;
}

std::size_t RelationSystem::unknown(const std::string& symbol) {
  auto [it, inserted] = index_.try_emplace(symbol, unknowns_.size());
  if (inserted) unknowns_.push_back(symbol);
  return it->second;
}

void RelationSystem::add(const RelationRow& row) {
  RelationRow clean = row;
  std::erase_if(clean.coeffs, [](const auto& kv) { return kv.second == 0; });
  if (clean.is_zero()) return;
  for (const auto& [s, c] : clean.coeffs) unknown(s);
  rows_.push_back(std::move(clean));
}

std::size_t RelationSystem::conjectural_rows() const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const auto& r) { return r.conjectural; }));
}

std::string RelationSystem::to_csv() const {
  std::ostringstream out;
  out << "row,unknown_id,coeff\n";
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [s, c] : rows_[r].coeffs) out << r << ',' << s << ',' << to_string(c) << '\n';
  return out.str();
}

RelationSystem RelationSystem::from_csv(std::string_view text) {
  std::map<long long, RelationRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || (line_no == 1 && line.starts_with("row,"))) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.rfind(',');
    if (c1 == std::string_view::npos || c1 == c2) throw ParseError("expected row,unknown_id,coeff", line_start);
    long long row = 0;
    try {
      row = std::stoll(std::string(line.substr(0, c1)));
      rows[row].coeffs[std::string(line.substr(c1 + 1, c2 - c1 - 1))] += parse_rational(line.substr(c2 + 1));
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad relation line: ") + e.what(), line_start);
    }
  }
  RelationSystem rs;
  for (auto& [id, r] : rows) {
    r.origin = "csv:" + std::to_string(id);
    rs.add(r);
  }
  return rs;
}

bool SolveResult::forces_zero(const std::string& symbol) const {
  return std::find(forced_zero.begin(), forced_zero.end(), symbol) != forced_zero.end();
}

SolveResult solve(const RelationSystem& rs) {
  const std::size_t cols = rs.unknowns().size();
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rs.rows()) {
    std::vector<Rational> dense(cols, Rational(0));
    for (const auto& [s, c] : row.coeffs)
      dense[static_cast<std::size_t>(std::find(rs.unknowns().begin(), rs.unknowns().end(), s) - rs.unknowns().begin())] = c;
    m.push_back(std::move(dense));
  }

  SolveResult out;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t r = rank;
    while (r < m.size() && m[r][col] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[rank]);
    const Rational inv = 1 / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == rank || m[k][col] == 0) continue;
      const Rational f = m[k][col];
      for (std::size_t c = 0; c < cols; ++c) m[k][c] -= f * m[rank][c];
    }
    out.pivots.push_back(col);
    ++rank;
  }
  m.resize(rank);
  out.rank = rank;

  for (std::size_t r = 0; r < rank; ++r) {
    const auto nonzero = std::count_if(m[r].begin(), m[r].end(), [](const Rational& x) { return x != 0; });
    if (nonzero == 1) out.forced_zero.push_back(rs.unknowns()[out.pivots[r]]);
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::map<std::string, Rational> v;
    v[rs.unknowns()[free]] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      if (m[r][free] != 0) v[rs.unknowns()[out.pivots[r]]] = -m[r][free];
    out.kernel_basis.push_back(std::move(v));
  }
  out.rref = std::move(m);
  return out;
}

}  // namespace ohtsuki
