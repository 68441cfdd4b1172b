// Slow, independent reference computations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cbirk/heap.hpp"
#include "cbirk/permutation.hpp"

namespace oracle {

using namespace cbirk;

/// s_{a_1} o s_{a_2} o ... as functions on {1..n+1}.
inline std::vector<int> compose_transpositions(int n, const std::vector<int>& letters) {
  std::vector<int> out(n + 1);
  for (int x = 1; x <= n + 1; ++x) {
    int y = x;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (y == *it)
        y = *it + 1;
      else if (y == *it + 1)
        y = *it;
    }
    out[x - 1] = y;
  }
  return out;
}

/// Relation straight from the definition: x below y iff a chain of
/// neighbouring-letter steps leads from x up to y.
inline bool heap_less(const Word& w, int x, int y) {
  if (x >= y) return false;
  std::vector<bool> reach(w.size() + 1, false);
  reach[x] = true;
  for (int z = x + 1; z <= y; ++z)
    for (int t = x; t < z; ++t)
      if (reach[t] && std::abs(w[t - 1] - w[z - 1]) <= 1) reach[z] = true;
  return reach[y];
}

inline std::vector<std::uint64_t> brute_ideals(const Word& w) {
  const int len = static_cast<int>(w.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << len); ++s) {
    bool ok = true;
    for (int y = 1; y <= len && ok; ++y) {
      if (!(s >> (y - 1) & 1u)) continue;
      for (int x = 1; x < y && ok; ++x)
        if (heap_less(w, x, y) && !(s >> (x - 1) & 1u)) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// Orderings of the positions that respect the heap relation.
inline long brute_linear_extensions(const Word& w) {
  const int len = static_cast<int>(w.size());
  std::vector<int> p(len);
  std::iota(p.begin(), p.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < len && ok; ++i)
      for (int j = i + 1; j < len && ok; ++j)
        if (heap_less(w, p[j], p[i])) ok = false;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Textbook rank over Q with no fraction-free tricks.
inline std::size_t gauss_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// A random reduced word: repeatedly append a letter that is an ascent.
inline Word random_reduced_word(int n, int max_len, std::mt19937& rng) {
  Permutation w = Permutation::identity(n);
  std::vector<int> letters;
  std::uniform_int_distribution<int> pick(1, n);
  for (int k = 0; k < max_len; ++k) {
    std::vector<int> asc;
    for (int i = 1; i <= n; ++i)
      if (w(i) < w(i + 1)) asc.push_back(i);
    if (asc.empty()) break;
    int a = asc[std::uniform_int_distribution<std::size_t>(0, asc.size() - 1)(rng)];
    letters.push_back(a);
    w = w.times_simple(a);
  }
  (void)pick;
  return Word(n, letters);
}

}  // namespace oracle
