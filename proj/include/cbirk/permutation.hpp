// Symmetric group S_{n+1} as the Coxeter group A_n: permutations in one-line
// notation, words in the simple transpositions, and 0/1 permutation matrices.
#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cbirk/exact.hpp"

namespace cbirk {

/// A word in the letters 1..n. Letter i stands for s_i = (i i+1).
class Word {
 public:
  Word() = default;
  Word(int n, std::vector<int> letters);

  int rank() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<int>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Digits when every letter is at most 9, otherwise comma separated.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation of a permutation of {1..m}; rank is m-1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// w0 = (n+1) n ... 1.
  static Permutation longest(int n);

  int rank() const { return static_cast<int>(image_.size()) - 1; }
  int operator()(int i) const { return image_[i - 1]; }
  int position_of(int value) const { return where_[value - 1]; }
  const std::vector<int>& one_line() const { return image_; }

  Permutation inverse() const;
  /// w * s_i: swaps the entries in positions i and i+1.
  Permutation times_simple(int i) const;
  /// s_q * w: swaps the values q and q+1.
  Permutation simple_times(int q) const;
  /// True when q+1 precedes q, so s_q is a left descent.
  bool has_left_descent(int q) const { return position_of(q + 1) < position_of(q); }

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
  std::vector<int> where_;
};

/// Parses "2413" or "2,4,1,3". A bare digit string is one letter per digit.
std::vector<int> parse_letters(std::string_view text);

/// Left-to-right product of the letters, each acting on positions.
Permutation word_to_perm(const Word& w);
int coxeter_length(const Permutation& w);
bool is_reduced(const Word& w);
/// X(w) with a 1 in row i, column w(i).
IntMatrix permutation_matrix(const Permutation& w);
Permutation reverse_perm(const Permutation& w);
/// Sorted set of letters. Throws InvalidInput on a non-reduced word.
std::vector<int> support(const Word& w);
/// All of S_{n+1} in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Looks for an occurrence of a 3-letter pattern such as "312". The value
/// playing the role of 2 must satisfy `middle`.
bool contains_pattern(const Permutation& w, std::string_view pattern,
                      const std::function<bool(int)>& middle);

}  // namespace cbirk
