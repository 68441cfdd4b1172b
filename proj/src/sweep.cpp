#include "cbirk/sweep.hpp"

#include <exception>

#include "cbirk/polytope.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cbirk {

RelationReport check_relations(const CoxeterElement& c) {
  const int n = c.rank();
  RelationReport rep(c);
  auto family = row_col_relations(n);
  for (auto& r : zero_relations(c)) family.push_back(std::move(r));
  for (auto& r : all_top_sum_relations(c)) family.push_back(std::move(r));
  for (auto& r : all_bottom_sum_relations(c)) family.push_back(std::move(r));
  rep.relations_checked = family.size();

  auto singles = grid_singletons(c);
  rep.singletons = singles.size();
  std::vector<Permutation> perms;
  rep.all_hold = true;
  for (const auto& s : singles) {
    perms.push_back(s.perm);
    IntMatrix x = permutation_matrix(s.perm);
    for (const auto& rel : family)
      if (!holds(rel, x)) {
        rep.all_hold = false;
        if (rep.failure.empty())
          rep.failure = to_string(rel.kind) + " relation fails on " + s.perm.to_string();
      }
  }
  auto indep = independent_relation_set(c);
  rep.independent_size = indep.size();
  rep.independent_rank = rank(relation_matrix(n, indep));
  rep.family_rank = rank(relation_matrix(n, family));
  rep.singleton_dimension = affine_dimension(matrix_cloud(perms));
  const int free_cells = n * (n + 1) / 2;
  const bool counts = rep.independent_rank == rep.independent_size &&
                      rep.family_rank == rep.independent_size &&
                      static_cast<int>((n + 1) * (n + 1) - rep.independent_size) == free_cells &&
                      rep.singleton_dimension == free_cells;
  if (!counts && rep.failure.empty()) rep.failure = "rank or dimension count mismatch";
  rep.ok = rep.all_hold && counts;
  return rep;
}

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

// Runs body(k) for k in [0, count) across threads. The first exception is
// rethrown after the loop.
template <class Body>
void parallel_for(int count, int threads, Body&& body) {
  set_threads(threads);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(cbirk_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<TransferCertificate> verify_sweep_serial(int n) {
  std::vector<TransferCertificate> out;
  for (const auto& c : all_coxeter_elements(n)) out.push_back(verify_main_theorem(c));
  return out;
}

std::vector<TransferCertificate> verify_sweep_parallel(int n, int threads) {
  const auto elems = all_coxeter_elements(n);
  std::vector<TransferCertificate> out(elems.size(), TransferCertificate(elems.front()));
  parallel_for(static_cast<int>(elems.size()), threads,
               [&](int k) { out[k] = verify_main_theorem(elems[k]); });
  return out;
}

std::vector<RelationReport> relation_sweep_serial(int n) {
  std::vector<RelationReport> out;
  for (const auto& c : all_coxeter_elements(n)) out.push_back(check_relations(c));
  return out;
}

std::vector<RelationReport> relation_sweep_parallel(int n, int threads) {
  const auto elems = all_coxeter_elements(n);
  std::vector<RelationReport> out(elems.size(), RelationReport(elems.front()));
  parallel_for(static_cast<int>(elems.size()), threads,
               [&](int k) { out[k] = check_relations(elems[k]); });
  return out;
}

std::vector<char> classify_singletons_serial(const CoxeterElement& c) {
  std::vector<char> out;
  for (const auto& w : all_permutations(c.rank())) out.push_back(is_c_singleton(c, w) ? 1 : 0);
  return out;
}

std::vector<char> classify_singletons_parallel(const CoxeterElement& c, int threads) {
  const auto perms = all_permutations(c.rank());
  std::vector<char> out(perms.size(), 0);
  parallel_for(static_cast<int>(perms.size()), threads,
               [&](int k) { out[k] = is_c_singleton(c, perms[k]) ? 1 : 0; });
  return out;
}

}  // namespace cbirk
