// Heaps of reduced words, their order ideals and linear extensions.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cbirk/exact.hpp"
#include "cbirk/permutation.hpp"

namespace cbirk {

struct Coord {
  int a = 0, b = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

inline constexpr std::size_t kDefaultIdealGuard = 1'000'000;

/// Poset on positions 1..len of a word: x precedes y when x < y and their
/// letters differ by at most one, closed under transitivity. At most 64
/// elements so that ideals fit a machine word.
class Heap {
 public:
  explicit Heap(const Word& w, std::optional<std::vector<Coord>> coords = std::nullopt);

  int size() const { return static_cast<int>(word_.size()); }
  int rank() const { return word_.rank(); }
  const Word& word() const { return word_; }
  int label(int x) const { return word_[x - 1]; }
  bool less(int x, int y) const { return x != y && (below_[y - 1] >> (x - 1) & 1u); }
  bool leq(int x, int y) const { return x == y || less(x, y); }
  /// Bit x-1 is set for every x strictly below y.
  std::uint64_t below(int y) const { return below_[y - 1]; }
  std::vector<std::pair<int, int>> covers() const;
  const std::optional<std::vector<Coord>>& coords() const { return coords_; }

 private:
  Word word_;
  std::vector<std::uint64_t> below_;
  std::optional<std::vector<Coord>> coords_;
};

/// Downward-closed subset of a heap, as a bitset over elements (bit x-1).
struct OrderIdeal {
  std::uint64_t bits = 0;

  bool contains(int x) const { return bits >> (x - 1) & 1u; }
  int size() const { return __builtin_popcountll(bits); }
  std::vector<int> members() const;
  static OrderIdeal from_members(const std::vector<int>& xs);

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
  friend auto operator<=>(const OrderIdeal&, const OrderIdeal&) = default;
};

/// Throws InvalidInput if `w` is not reduced or longer than 64.
Heap heap_of_word(const Word& w);
bool is_order_ideal(const Heap& h, OrderIdeal i);
/// Letters of the heap word at the positions in `i`, in position order.
Word subword(const Heap& h, OrderIdeal i);

/// J(H) sorted by bitset value.
std::vector<OrderIdeal> order_ideals(const Heap& h, std::size_t guard = kDefaultIdealGuard);
/// e(H), counted as maximal chains of J(H).
Integer count_linear_extensions(const Heap& h, std::size_t guard = kDefaultIdealGuard);
/// Distinct label sequences of the linear extensions, sorted.
std::vector<Word> labeled_linear_extensions(const Heap& h, int guard = 16);

/// All words reachable by swapping adjacent commuting letters, sorted.
std::vector<Word> commutation_class(const Word& w, std::size_t cap = 1'000'000);
/// Smallest word of the commutation class in lexicographic order.
Word canonical_word(const Word& w);

/// Same labeled poset once the k-th occurrence of each letter in one word is
/// matched with the k-th occurrence in the other.
bool same_labeled_poset(const Heap& a, const Heap& b);

/// Ideal of `h` made of the first m_a occurrences of each letter a, where m_a
/// counts letter a in `w`. No check that the result is an ideal.
OrderIdeal occurrence_prefix(const Heap& h, const Word& w);

}  // namespace cbirk
