// Order polytopes of heaps, affine dimension of point clouds, and the probe
// for whether a reduced word's permutation cloud matches its order polytope.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "cbirk/heap.hpp"

namespace cbirk {

/// Vertices are the ideal indicator vectors, in element order.
struct OrderPolytope {
  int dimension = 0;
  std::vector<std::vector<int>> vertices;
};

OrderPolytope order_polytope(const Heap& h, std::size_t guard = kDefaultIdealGuard);
/// 0 <= x_i <= 1, and x_y <= x_x whenever x precedes y.
bool membership(const Heap& h, std::span<const Rational> x);
/// e(H), the normalized volume of the order polytope.
Integer normalized_volume(const Heap& h, std::size_t guard = kDefaultIdealGuard);

struct VertexCloud {
  int ambient = 0;
  std::vector<std::vector<Integer>> points;
};

/// Rank of the differences from the first point. Throws on an empty cloud.
int affine_dimension(const VertexCloud& cloud);
/// Flattened permutation matrices, one point per permutation.
VertexCloud matrix_cloud(const std::vector<Permutation>& perms);

enum class Q81Verdict { possible_equivalent, counterexample };
std::string to_string(Q81Verdict v);

struct Q81Report {
  Word word;
  std::size_t ideals = 0;
  std::size_t distinct_matrices = 0;
  int cloud_dimension = 0;
  int length = 0;
  Q81Verdict verdict = Q81Verdict::counterexample;
  /// One entry per ideal, in bitset order.
  std::vector<Permutation> permutations;
};

/// Compares conv{X(v) : v the permutation of an ideal of Heap(u)} with the
/// order polytope of Heap(u): equal vertex count and equal dimension are
/// necessary for an affine isomorphism.
Q81Report question81_probe(const Word& u, std::size_t guard = kDefaultIdealGuard);

/// Every reduced word of w, via braid and commutation moves, sorted.
std::vector<Word> reduced_words(const Permutation& w, std::size_t cap = 1'000'000);

}  // namespace cbirk
