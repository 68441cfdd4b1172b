// The unitriangular map U_c that carries the projected c-Birkhoff polytope
// onto the order polytope of the grid heap H_c.
#pragma once

#include <string>
#include <vector>

#include "cbirk/cambrian.hpp"
#include "cbirk/projection.hpp"

namespace cbirk {

/// Everything about one c that the transfer needs, built once.
struct CoxeterData {
  explicit CoxeterData(const CoxeterElement& c, std::size_t guard = kDefaultIdealGuard);

  CoxeterElement c;
  Heap grid;                        // H_c, elements in reading-word order
  ProjectionIndex proj;
  std::vector<Singleton> singletons;  // ideals of `grid`
  int length() const { return grid.size(); }
};

/// b_1, ..., b_N: permutations of the reading-word prefixes.
std::vector<Permutation> prefix_singletons(const CoxeterElement& c);
/// Reversed indicator vector of an ideal of a heap with `length` elements.
std::vector<Integer> o_vector(int length, OrderIdeal f);
std::vector<Integer> o_vector(const CoxeterData& d, const Permutation& w);
std::vector<Integer> projected(const CoxeterData& d, const Permutation& w);

IntMatrix compute_U(const CoxeterData& d);
IntMatrix compute_U(const CoxeterElement& c);
/// Test oracle: U = O M^{-1} by generic rational inversion.
IntMatrix compute_U_by_inverse(const CoxeterData& d);

struct TransferCertificate {
  explicit TransferCertificate(CoxeterElement elem) : c(std::move(elem)) {}

  CoxeterElement c;
  int N = 0;
  std::size_t singletons = 0;
  Integer volume;
  bool vertex_map_ok = false;   // U Pi X(w) = o(w) for every singleton
  bool bijection_ok = false;    // f recovered independently from sort_c(w)
  bool round_trip_ok = false;   // reconstruct(Pi X(w)) = X(w)
  bool ok = false;
  IntMatrix U;
  std::string failure;          // first failing singleton, if any
};

TransferCertificate verify_main_theorem(const CoxeterData& d);
TransferCertificate verify_main_theorem(const CoxeterElement& c,
                                        std::size_t guard = kDefaultIdealGuard);

struct IdentityCheck {
  bool ok = false;
  bool contains_first = false;
  std::vector<int> sequence;   // the a-sequence used (of w or of w s_q)
  std::string diff;            // first mismatching cell, if any
};

/// Checks the alternating prefix identity for X(w), and for o(w). When the
/// ideal misses the first element, uses w' = w s_q and checks agreement off
/// the diagonal plus X(b_1) - X(w') + X(w) = I.
IdentityCheck verify_a_sequence_identity(const CoxeterData& d, const Permutation& w);

}  // namespace cbirk
