// Linear relations satisfied by every permutation matrix of a c-singleton.
#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cbirk/coxeter.hpp"
#include "cbirk/exact.hpp"

namespace cbirk {

/// Matrix position, 1-based.
struct Cell {
  int row = 0, col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class RelationKind { row, column, zero, top_sum, bottom_sum };

std::string to_string(RelationKind k);

/// sum coeffs[cell] * X(cell) = rhs. params: row/column -> {index, 0};
/// zero -> {i, j}; top/bottom sums -> {y, z}.
struct LinearRelation {
  RelationKind kind = RelationKind::row;
  std::array<int, 2> params{0, 0};
  std::map<Cell, Rational> coeffs;
  Rational rhs;
};

LinearRelation row_relation(int n, int i);
LinearRelation column_relation(int n, int j);
/// Every row and column sum is 1: 2n+2 relations.
std::vector<LinearRelation> row_col_relations(int n);

/// Forced zeros, sorted by (row, col).
std::vector<Cell> zero_entries(const CoxeterElement& c);
std::vector<LinearRelation> zero_relations(const CoxeterElement& c);

/// Rows 1..y over the columns j with nu_c(j) = z (mod y).
/// Requires 2 <= y < (n+2)/2, or y = (n+2)/2 with (n+2)/2 lower-barred.
LinearRelation top_sum_relation(const CoxeterElement& c, int y, int z);
/// Rows n+2-y..n+1 over the columns j with nu_{c^-1}(j) = z (mod y).
/// Requires 2 <= y < (n+2)/2, or y = (n+2)/2 with (n+2)/2 upper-barred.
LinearRelation bottom_sum_relation(const CoxeterElement& c, int y, int z);
bool top_sum_admissible(const CoxeterElement& c, int y);
bool bottom_sum_admissible(const CoxeterElement& c, int y);
/// Every admissible (y, z) with z in [0, y-1].
std::vector<LinearRelation> all_top_sum_relations(const CoxeterElement& c);
std::vector<LinearRelation> all_bottom_sum_relations(const CoxeterElement& c);

/// Rows, columns 2..n+1, zeros, top sums for y in [2, (n+1)/2] and bottom
/// sums for y in [2, n/2], each with the y-1 classes nu(x), x in [2,y].
/// Exactly C(n+1,2) cells remain free.
std::vector<LinearRelation> independent_relation_set(const CoxeterElement& c);

/// Coefficient matrix, one row per relation, columns in row-major cell order.
/// The last column holds the right-hand side when `augmented`.
RatMatrix relation_matrix(int n, const std::vector<LinearRelation>& rels, bool augmented = false);

template <class T>
Rational evaluate(const LinearRelation& rel, const Matrix<T>& x) {
  Rational s = 0;
  for (const auto& [cell, coef] : rel.coeffs) s += coef * x(cell.row - 1, cell.col - 1);
  return s;
}

template <class T>
bool holds(const LinearRelation& rel, const Matrix<T>& x) {
  return evaluate(rel, x) == rel.rhs;
}

}  // namespace cbirk
