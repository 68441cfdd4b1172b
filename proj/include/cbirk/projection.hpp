// Coordinate projection onto C(n+1,2) matrix entries, and its exact inverse
// on the affine span of the c-Birkhoff polytope.
#pragma once

#include <span>
#include <vector>

#include "cbirk/coxeter.hpp"
#include "cbirk/relations.hpp"

namespace cbirk {

class ProjectionIndex {
 public:
  ProjectionIndex(int n, std::vector<Cell> entries);

  int rank() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  /// 1-based: the k-th coordinate reads entries()[k-1].
  const std::vector<Cell>& entries() const { return entries_; }
  /// 1-based coordinate of `cell`, or 0 when it is not read.
  int position_of(Cell cell) const;

 private:
  int n_;
  std::vector<Cell> entries_;
  std::vector<int> position_;  // row-major over (n+1)^2 cells
};

ProjectionIndex projection_indices(const CoxeterElement& c);

template <class T>
std::vector<T> project(const ProjectionIndex& p, const Matrix<T>& x) {
  std::vector<T> v;
  v.reserve(p.size());
  for (Cell cell : p.entries()) v.push_back(x(cell.row - 1, cell.col - 1));
  return v;
}

/// Unique matrix in the affine span with the given projection. Throws
/// InconsistentProjection when no such matrix exists.
RatMatrix reconstruct(const CoxeterElement& c, const ProjectionIndex& p,
                      std::span<const Rational> v);
RatMatrix reconstruct(const CoxeterElement& c, std::span<const Rational> v);

}  // namespace cbirk
