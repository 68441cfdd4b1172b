// Whole-rank checks. Each kernel has a serial reference and an OpenMP
// version that splits the work across Coxeter elements or permutations.
#pragma once

#include <vector>

#include "cbirk/relations.hpp"
#include "cbirk/transfer.hpp"

namespace cbirk {

struct RelationReport {
  explicit RelationReport(CoxeterElement elem) : c(std::move(elem)) {}

  CoxeterElement c;
  std::size_t singletons = 0;
  std::size_t relations_checked = 0;  // full family: rows, columns, zeros, all sums
  bool all_hold = false;
  std::size_t independent_size = 0;
  std::size_t independent_rank = 0;
  std::size_t family_rank = 0;        // rank of the full family
  int singleton_dimension = 0;        // affine dimension of {X(w)}
  bool ok = false;
  std::string failure;
};

RelationReport check_relations(const CoxeterElement& c);

/// Results come back in all_coxeter_elements order. threads <= 0 leaves the
/// count to the OpenMP runtime.
std::vector<TransferCertificate> verify_sweep_serial(int n);
std::vector<TransferCertificate> verify_sweep_parallel(int n, int threads = 0);

std::vector<RelationReport> relation_sweep_serial(int n);
std::vector<RelationReport> relation_sweep_parallel(int n, int threads = 0);

/// One flag per permutation of all_permutations(n).
std::vector<char> classify_singletons_serial(const CoxeterElement& c);
std::vector<char> classify_singletons_parallel(const CoxeterElement& c, int threads = 0);

/// Whether this build has OpenMP.
bool parallel_available();

}  // namespace cbirk
