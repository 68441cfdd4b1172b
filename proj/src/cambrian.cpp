#include "cbirk/cambrian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "cbirk/errors.hpp"

namespace cbirk {

SortingWord c_sorting(const CoxeterElement& c, const Permutation& w) {
  if (w.rank() != c.rank()) throw InvalidInput("rank mismatch between c and w");
  SortingWord out;
  std::vector<int> letters;
  Permutation cur = w;
  const Permutation id = Permutation::identity(w.rank());
  while (cur != id) {
    std::vector<int> block;
    for (int q : c.word()) {
      if (cur.has_left_descent(q)) {
        block.push_back(q);
        letters.push_back(q);
        cur = cur.simple_times(q);
      }
    }
    out.blocks.push_back(std::move(block));
  }
  out.word = Word(w.rank(), std::move(letters));
  return out;
}

Word c_sorting_word(const CoxeterElement& c, const Permutation& w) {
  return c_sorting(c, w).word;
}

bool is_c_sortable(const CoxeterElement& c, const Permutation& w) {
  auto blocks = c_sorting(c, w).blocks;
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    std::set<int> prev(blocks[k - 1].begin(), blocks[k - 1].end());
    for (int q : blocks[k])
      if (!prev.count(q)) return false;
  }
  return true;
}

bool is_c_sortable_by_patterns(const CoxeterElement& c, const Permutation& w) {
  auto low = [&](int v) { return c.is_lower(v); };
  auto up = [&](int v) { return c.is_upper(v); };
  return !contains_pattern(w, "312", low) && !contains_pattern(w, "231", up);
}

bool is_c_singleton(const CoxeterElement& c, const Permutation& w) {
  if (w.rank() != c.rank()) throw InvalidInput("rank mismatch between c and w");
  const int m = w.rank() + 1;
  for (int v = 2; v <= w.rank(); ++v) {
    const int p = w.position_of(v);
    bool smaller_after = true, larger_after = true;
    bool smaller_before = true, larger_before = true;
    for (int x = 1; x <= m; ++x) {
      if (x == v) continue;
      bool after = w.position_of(x) > p;
      if (x < v) {
        smaller_after &= after;
        smaller_before &= !after;
      } else {
        larger_after &= after;
        larger_before &= !after;
      }
    }
    if (c.is_lower(v) && !smaller_after && !larger_after) return false;
    if (c.is_upper(v) && !smaller_before && !larger_before) return false;
  }
  return true;
}

bool is_c_singleton_by_patterns(const CoxeterElement& c, const Permutation& w) {
  auto low = [&](int v) { return c.is_lower(v); };
  auto up = [&](int v) { return c.is_upper(v); };
  return is_c_sortable_by_patterns(c, w) && !contains_pattern(w, "132", low) &&
         !contains_pattern(w, "213", up);
}

namespace {

struct Run {
  int sum;                  // a + b on this diagonal
  std::vector<int> letters;  // descending
};

std::vector<Run> reading_runs(const CoxeterElement& c) {
  const int n = c.rank();
  const int r = static_cast<int>(c.lower().size());
  const int s = static_cast<int>(c.upper().size());
  std::vector<Run> runs;
  for (int i = 1; i <= r; ++i) {
    Run run{n - r + i, {}};
    for (int a = c.lower()[i - 1] - 1; a >= 1; --a) run.letters.push_back(a);
    runs.push_back(std::move(run));
  }
  Run mid{n + 1, {}};
  for (int a = n; a >= 1; --a) mid.letters.push_back(a);
  runs.push_back(std::move(mid));
  for (int i = s; i >= 1; --i) {
    Run run{n + 2 + s - i, {}};
    for (int a = n; a >= n - c.upper()[i - 1] + 2; --a) run.letters.push_back(a);
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace

Word diagonal_reading_word(const CoxeterElement& c) {
  std::vector<int> letters;
  for (const auto& run : reading_runs(c))
    letters.insert(letters.end(), run.letters.begin(), run.letters.end());
  return Word(c.rank(), std::move(letters));
}

Heap heap_grid(const CoxeterElement& c) {
  std::vector<int> letters;
  std::vector<Coord> coords;
  for (const auto& run : reading_runs(c))
    for (int a : run.letters) {
      letters.push_back(a);
      coords.push_back({a, run.sum - a});
    }
  return Heap(Word(c.rank(), std::move(letters)), std::move(coords));
}

namespace {

std::vector<Singleton> singletons_of(const Heap& h, std::size_t guard) {
  std::vector<Singleton> out;
  for (OrderIdeal i : order_ideals(h, guard)) out.push_back({word_to_perm(subword(h, i)), i});
  return out;
}

}  // namespace

std::vector<Singleton> singletons(const CoxeterElement& c, std::size_t guard) {
  Word w0 = c_sorting_word(c, Permutation::longest(c.rank()));
  return singletons_of(Heap(w0), guard);
}

std::vector<Singleton> grid_singletons(const CoxeterElement& c, std::size_t guard) {
  return singletons_of(heap_grid(c), guard);
}

OrderIdeal ideal_of_singleton(const Heap& h, const CoxeterElement& c, const Permutation& w) {
  Word sw = c_sorting_word(c, w);
  OrderIdeal i = occurrence_prefix(h, sw);
  if (!is_order_ideal(h, i) || word_to_perm(subword(h, i)) != w)
    throw NotSingleton(w.to_string() + " is not a c-singleton for c = " + c.to_string());
  return i;
}

std::vector<int> a_sequence(OrderIdeal f) {
  if (!f.contains(1)) throw InvalidInput("a-sequence needs the first element in the ideal");
  auto members = f.members();
  std::vector<int> a{members.back()};
  auto holds_prefix = [&](int top) {
    for (int x = 1; x <= top; ++x)
      if (!f.contains(x)) return false;
    return true;
  };
  while (!holds_prefix(a.back())) {
    int gap = a.back() - 1;
    while (f.contains(gap)) --gap;
    int back = gap - 1;
    while (!f.contains(back)) --back;
    a.push_back(gap);
    a.push_back(back);
  }
  return a;
}

std::vector<int> a_sequence(const CoxeterElement& c, const Permutation& w) {
  Heap grid = heap_grid(c);
  return a_sequence(ideal_of_singleton(grid, c, w));
}

namespace {

struct OracleCache {
  std::mutex mu;
  std::map<std::pair<int, std::vector<int>>, std::vector<Permutation>> sets;
};

OracleCache& oracle_cache() {
  static OracleCache cache;
  return cache;
}

}  // namespace

std::vector<Permutation> commutation_prefix_set(const CoxeterElement& c) {
  if (c.rank() > 5) throw GuardExceeded("commutation oracle limited to n <= 5");
  auto key = std::make_pair(c.rank(), c.lower());
  auto& cache = oracle_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.sets.find(key); it != cache.sets.end()) return it->second;
  }
  Word w0 = c_sorting_word(c, Permutation::longest(c.rank()));
  std::set<Permutation> found;
  for (const Word& v : commutation_class(w0)) {
    std::vector<int> v_one_line(c.rank() + 1);
    for (int i = 0; i <= c.rank(); ++i) v_one_line[i] = i + 1;
    found.insert(Permutation(v_one_line));
    for (int a : v) {
      std::swap(v_one_line[a - 1], v_one_line[a]);
      found.insert(Permutation(v_one_line));
    }
  }
  std::vector<Permutation> out(found.begin(), found.end());
  std::lock_guard lock(cache.mu);
  cache.sets.emplace(key, out);
  return out;
}

bool is_c_singleton_oracle(const CoxeterElement& c, const Permutation& w) {
  auto set = commutation_prefix_set(c);
  return std::binary_search(set.begin(), set.end(), w);
}

}  // namespace cbirk
