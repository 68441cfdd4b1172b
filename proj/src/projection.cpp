#include "cbirk/projection.hpp"

#include <algorithm>
#include <optional>

#include "cbirk/errors.hpp"

namespace cbirk {

ProjectionIndex::ProjectionIndex(int n, std::vector<Cell> entries)
    : n_(n), entries_(std::move(entries)), position_((n + 1) * (n + 1), 0) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    Cell e = entries_[k];
    if (e.row < 1 || e.row > n + 1 || e.col < 1 || e.col > n + 1)
      throw InvalidInput("projection cell outside the matrix");
    int& slot = position_[(e.row - 1) * (n + 1) + (e.col - 1)];
    if (slot != 0) throw InvalidInput("projection reads a cell twice");
    slot = static_cast<int>(k) + 1;
  }
}

int ProjectionIndex::position_of(Cell cell) const {
  if (cell.row < 1 || cell.row > n_ + 1 || cell.col < 1 || cell.col > n_ + 1) return 0;
  return position_[(cell.row - 1) * (n_ + 1) + (cell.col - 1)];
}

ProjectionIndex projection_indices(const CoxeterElement& c) {
  const int n = c.rank();
  std::vector<Cell> cells;
  for (int d : c.lower())
    for (int i = d - 1; i >= 1; --i) cells.push_back({i, d});
  for (int i = n; i >= 1; --i) cells.push_back({i, n + 1});
  for (auto it = c.upper().rbegin(); it != c.upper().rend(); ++it) {
    const int u = *it;
    const int m = std::min(u - 1, n + 1 - u);
    for (int k = 1; k <= m; ++k) cells.push_back({n + 2 - k, c_power(c, k, u)});
    if (2 * u > n + 2)
      for (int i = u - 1; i >= m + 1; --i) cells.push_back({i, u});
  }
  std::reverse(cells.begin(), cells.end());
  return ProjectionIndex(n, std::move(cells));
}

namespace {

class Solver {
 public:
  Solver(const CoxeterElement& c, const ProjectionIndex& p, std::span<const Rational> v)
      : c_(c), n_(c.rank()), known_((n_ + 1) * (n_ + 1)) {
    if (v.size() != p.size())
      throw InvalidInput("projection vector has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(p.size()));
    for (std::size_t k = 0; k < v.size(); ++k) set(p.entries()[k], v[k]);
    for (Cell z : zero_entries(c)) {
      if (known(z) && *at(z) != 0) throw InconsistentProjection("projected entry on a forced zero");
      set(z, 0);
    }
  }

  RatMatrix run() {
    const int n = n_;
    int top_last = 0;
    for (int k = 1; 2 * k < n + 2 || (2 * k == n + 2 && c_.is_lower(k)); ++k) top_last = k;
    for (int k = 1; k <= top_last; ++k) {
      std::vector<LinearRelation> eqs;
      if (k == 1)
        eqs.push_back(row_relation(n, 1));
      else
        for (int z = 0; z < k; ++z) eqs.push_back(top_sum_relation(c_, k, z));
      solve_row(k, eqs);
    }
    for (int k = n + 1; k > top_last; --k) {
      std::vector<LinearRelation> eqs{column_relation(n, k)};
      const int y = n + 2 - k;
      if (y == 1)
        eqs.push_back(row_relation(n, n + 1));
      else
        for (int z = 0; z < y; ++z) eqs.push_back(bottom_sum_relation(c_, y, z));
      solve_row(k, eqs);
    }
    RatMatrix x(n + 1, n + 1);
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; j <= n + 1; ++j) x(i - 1, j - 1) = *at({i, j});
    return x;
  }

 private:
  std::optional<Rational>& at(Cell e) { return known_[(e.row - 1) * (n_ + 1) + (e.col - 1)]; }
  bool known(Cell e) { return at(e).has_value(); }
  void set(Cell e, const Rational& q) { at(e) = q; }

  // Solves for the unknown cells of row k using the relations whose other
  // cells are all known already. Relations touching other unknowns are skipped.
  void solve_row(int k, const std::vector<LinearRelation>& eqs) {
    std::vector<Cell> unknown;
    for (int j = 1; j <= n_ + 1; ++j)
      if (!known({k, j})) unknown.push_back({k, j});
    if (unknown.empty()) return;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& rel : eqs) {
      std::vector<Rational> coef(unknown.size(), Rational(0));
      Rational b = rel.rhs;
      bool usable = true;
      for (const auto& [cell, a] : rel.coeffs) {
        auto it = std::find(unknown.begin(), unknown.end(), cell);
        if (it != unknown.end()) {
          coef[it - unknown.begin()] += a;
        } else if (known(cell)) {
          b -= a * *at(cell);
        } else {
          usable = false;
          break;
        }
      }
      if (!usable) continue;
      rows.push_back(std::move(coef));
      rhs.push_back(std::move(b));
    }
    RatMatrix a(rows.size(), unknown.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < unknown.size(); ++j) a(i, j) = rows[i][j];
    SolveResult r = solve(std::move(a), std::move(rhs));
    if (r.status == SolveStatus::inconsistent)
      throw InconsistentProjection("no matrix in the affine span has this projection (row " +
                                   std::to_string(k) + ")");
    if (r.status == SolveStatus::underdetermined)
      throw TheoremViolation("projection is not injective",
                             "{\"row\":" + std::to_string(k) + ",\"c\":\"" + c_.to_string() + "\"}");
    for (std::size_t j = 0; j < unknown.size(); ++j) set(unknown[j], r.x[j]);
  }

  const CoxeterElement& c_;
  int n_;
  std::vector<std::optional<Rational>> known_;
};

}  // namespace

RatMatrix reconstruct(const CoxeterElement& c, const ProjectionIndex& p,
                      std::span<const Rational> v) {
  RatMatrix x = Solver(c, p, v).run();
  // Rows solved from the sum systems alone; the remaining relations of the
  // span must hold as well.
  std::vector<LinearRelation> all = row_col_relations(c.rank());
  for (auto& r : all_top_sum_relations(c)) all.push_back(std::move(r));
  for (auto& r : all_bottom_sum_relations(c)) all.push_back(std::move(r));
  for (const auto& rel : all)
    if (!holds(rel, x))
      throw InconsistentProjection("vector lies outside the projected span (" +
                                   to_string(rel.kind) + " relation fails)");
  return x;
}

RatMatrix reconstruct(const CoxeterElement& c, std::span<const Rational> v) {
  return reconstruct(c, projection_indices(c), v);
}

}  // namespace cbirk
