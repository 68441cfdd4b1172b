// c-sorting words, c-singletons, and the grid heap of the diagonal reading word.
#pragma once

#include <vector>

#include "cbirk/coxeter.hpp"
#include "cbirk/heap.hpp"

namespace cbirk {

struct SortingWord {
  Word word;
  /// blocks[k] lists the letters of the k-th pass over c, in c order.
  std::vector<std::vector<int>> blocks;
};

/// Greedy passes over the letters of c, each taking a left descent.
SortingWord c_sorting(const CoxeterElement& c, const Permutation& w);
Word c_sorting_word(const CoxeterElement& c, const Permutation& w);
/// Blocks of the c-sorting word are nested as sets.
bool is_c_sortable(const CoxeterElement& c, const Permutation& w);
/// Avoids 31(2 lower) and (2 upper)31.
bool is_c_sortable_by_patterns(const CoxeterElement& c, const Permutation& w);
/// Per-value test: every lower-barred d has all smaller or all larger values
/// after it; every upper-barred u has all smaller or all larger values before.
bool is_c_singleton(const CoxeterElement& c, const Permutation& w);
/// Sortable and also avoids 13(2 lower) and (2 upper)13.
bool is_c_singleton_by_patterns(const CoxeterElement& c, const Permutation& w);

/// [(d_1-1)..1] ... [(d_r-1)..1] [n..1] [n..(n-u_s+2)] ... [n..(n-u_1+2)].
Word diagonal_reading_word(const CoxeterElement& c);
/// Heap of the diagonal reading word, with each element at grid point (a,b).
Heap heap_grid(const CoxeterElement& c);

struct Singleton {
  Permutation perm;
  OrderIdeal ideal;
};

/// One singleton per ideal of Heap(sort_c(w0)), sorted by ideal bitset.
std::vector<Singleton> singletons(const CoxeterElement& c,
                                  std::size_t guard = kDefaultIdealGuard);
/// Same, indexed by the grid heap; ideal bits follow reading-word positions.
std::vector<Singleton> grid_singletons(const CoxeterElement& c,
                                       std::size_t guard = kDefaultIdealGuard);

/// f(w) inside the heap `h` (the grid heap or Heap(sort_c(w0))), taken from
/// sort_c(w). Throws NotSingleton when w is not a c-singleton.
OrderIdeal ideal_of_singleton(const Heap& h, const CoxeterElement& c, const Permutation& w);

/// a_0 > a_1 > ... for a singleton whose ideal contains the first reading-word
/// element. Positions are 1-based in the diagonal reading word.
std::vector<int> a_sequence(const CoxeterElement& c, const Permutation& w);
std::vector<int> a_sequence(OrderIdeal f);

/// Independent membership test: prefixes of every word commutation-equivalent
/// to sort_c(w0). Limited to n <= 5.
bool is_c_singleton_oracle(const CoxeterElement& c, const Permutation& w);
/// The full set used by the oracle, sorted.
std::vector<Permutation> commutation_prefix_set(const CoxeterElement& c);

}  // namespace cbirk
