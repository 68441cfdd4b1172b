#include "cbirk/relations.hpp"

#include <algorithm>

#include "cbirk/errors.hpp"

namespace cbirk {

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::row: return "row";
    case RelationKind::column: return "column";
    case RelationKind::zero: return "zero";
    case RelationKind::top_sum: return "top_sum";
    case RelationKind::bottom_sum: return "bottom_sum";
  }
  return "?";
}

LinearRelation row_relation(int n, int i) {
  LinearRelation rel{RelationKind::row, {i, 0}, {}, 1};
  for (int j = 1; j <= n + 1; ++j) rel.coeffs[{i, j}] = 1;
  return rel;
}

LinearRelation column_relation(int n, int j) {
  LinearRelation rel{RelationKind::column, {j, 0}, {}, 1};
  for (int i = 1; i <= n + 1; ++i) rel.coeffs[{i, j}] = 1;
  return rel;
}

std::vector<LinearRelation> row_col_relations(int n) {
  std::vector<LinearRelation> out;
  for (int i = 1; i <= n + 1; ++i) out.push_back(row_relation(n, i));
  for (int j = 1; j <= n + 1; ++j) out.push_back(column_relation(n, j));
  return out;
}

std::vector<Cell> zero_entries(const CoxeterElement& c) {
  const int n = c.rank();
  std::vector<Cell> out;
  for (int u : c.upper())
    for (int i = 1; i <= std::min(u - 1, n + 1 - u); ++i) out.push_back({i, u});
  for (int d : c.lower())
    for (int i = std::max(d + 1, n + 3 - d); i <= n + 1; ++i) out.push_back({i, d});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearRelation> zero_relations(const CoxeterElement& c) {
  std::vector<LinearRelation> out;
  for (Cell z : zero_entries(c)) out.push_back({RelationKind::zero, {z.row, z.col}, {{z, 1}}, 0});
  return out;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool boundary_ok(const CoxeterElement& c, int y, bool top) {
  const int n = c.rank();
  if (y < 2) return false;
  if (2 * y < n + 2) return true;
  if (2 * y == n + 2) return top ? c.is_lower(y) : c.is_upper(y);
  return false;
}

LinearRelation band_sum(const CoxeterElement& labels, int n, int y, int z, int first_row,
                        RelationKind kind) {
  LinearRelation rel{kind, {y, z}, {}, 1};
  for (int j = 1; j <= n + 1; ++j)
    if (mod(nu(labels, j), y) == mod(z, y))
      for (int i = first_row; i < first_row + y; ++i) rel.coeffs[{i, j}] = 1;
  return rel;
}

}  // namespace

bool top_sum_admissible(const CoxeterElement& c, int y) { return boundary_ok(c, y, true); }
bool bottom_sum_admissible(const CoxeterElement& c, int y) { return boundary_ok(c, y, false); }

LinearRelation top_sum_relation(const CoxeterElement& c, int y, int z) {
  if (!top_sum_admissible(c, y)) throw InvalidInput("top sum: y = " + std::to_string(y) + " not admissible");
  return band_sum(c, c.rank(), y, z, 1, RelationKind::top_sum);
}

LinearRelation bottom_sum_relation(const CoxeterElement& c, int y, int z) {
  if (!bottom_sum_admissible(c, y))
    throw InvalidInput("bottom sum: y = " + std::to_string(y) + " not admissible");
  const int n = c.rank();
  return band_sum(inverse_coxeter(c), n, y, z, n + 2 - y, RelationKind::bottom_sum);
}

std::vector<LinearRelation> all_top_sum_relations(const CoxeterElement& c) {
  std::vector<LinearRelation> out;
  for (int y = 2; 2 * y <= c.rank() + 2; ++y)
    if (top_sum_admissible(c, y))
      for (int z = 0; z < y; ++z) out.push_back(top_sum_relation(c, y, z));
  return out;
}

std::vector<LinearRelation> all_bottom_sum_relations(const CoxeterElement& c) {
  std::vector<LinearRelation> out;
  for (int y = 2; 2 * y <= c.rank() + 2; ++y)
    if (bottom_sum_admissible(c, y))
      for (int z = 0; z < y; ++z) out.push_back(bottom_sum_relation(c, y, z));
  return out;
}

std::vector<LinearRelation> independent_relation_set(const CoxeterElement& c) {
  const int n = c.rank();
  std::vector<LinearRelation> out;
  for (int i = 1; i <= n + 1; ++i) out.push_back(row_relation(n, i));
  for (int j = 2; j <= n + 1; ++j) out.push_back(column_relation(n, j));
  for (auto& z : zero_relations(c)) out.push_back(std::move(z));
  for (int y = 2; 2 * y <= n + 1; ++y)
    for (int x = 2; x <= y; ++x) out.push_back(top_sum_relation(c, y, nu(c, x)));
  const CoxeterElement ci = inverse_coxeter(c);
  for (int y = 2; 2 * y <= n; ++y)
    for (int x = 2; x <= y; ++x) out.push_back(bottom_sum_relation(c, y, nu(ci, x)));
  return out;
}

RatMatrix relation_matrix(int n, const std::vector<LinearRelation>& rels, bool augmented) {
  const std::size_t m = static_cast<std::size_t>(n + 1);
  RatMatrix a(rels.size(), m * m + (augmented ? 1 : 0));
  for (std::size_t k = 0; k < rels.size(); ++k) {
    for (const auto& [cell, coef] : rels[k].coeffs)
      a(k, (cell.row - 1) * m + (cell.col - 1)) = coef;
    if (augmented) a(k, m * m) = rels[k].rhs;
  }
  return a;
}

}  // namespace cbirk
