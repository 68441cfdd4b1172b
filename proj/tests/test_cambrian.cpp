#include <doctest.h>

#include <algorithm>
#include <set>

#include "cbirk/cambrian.hpp"
#include "cbirk/errors.hpp"
#include "fixtures.hpp"

using namespace cbirk;

namespace {
Permutation P(std::string_view s) {
  std::vector<int> v;
  for (char ch : s) v.push_back(ch - '0');
  return Permutation(v);
}
CoxeterElement C(int n, const std::string& s) {
  return CoxeterElement::from_word(Word(n, parse_letters(s)));
}
}  // namespace

TEST_SUITE("cambrian") {

TEST_CASE("sorting words") {
  auto c = tamari(4);
  auto s = c_sorting(c, P("42351"));
  CHECK(s.word.to_string() == "123421");
  CHECK(s.blocks == std::vector<std::vector<int>>{{1, 2, 3, 4}, {2}, {1}});
  CHECK(c_sorting_word(c, P("43215")).to_string() == "123121");
  CHECK_FALSE(is_c_sortable(c, P("42351")));
  CHECK(is_c_sortable(c, P("43215")));
  CHECK(is_c_sortable(c, Permutation::identity(4)));
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> want;
    for (int k = n; k >= 1; --k)
      for (int i = 1; i <= k; ++i) want.push_back(i);
    CHECK(c_sorting_word(tamari(n), Permutation::longest(n)).letters() == want);
  }
}

TEST_CASE("sorting words are reduced words for w") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : all_coxeter_elements(n))
      for (const auto& w : all_permutations(n)) {
        Word s = c_sorting_word(c, w);
        CHECK(word_to_perm(s) == w);
        CHECK(static_cast<int>(s.size()) == coxeter_length(w));
      }
}

TEST_CASE("sortable: block nesting agrees with pattern avoidance") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_coxeter_elements(n))
      for (const auto& w : all_permutations(n))
        CHECK(is_c_sortable(c, w) == is_c_sortable_by_patterns(c, w));
}

TEST_CASE("singleton examples") {
  auto c = C(6, "125436");
  CHECK_FALSE(is_c_singleton(c, P("2167345")));
  CHECK_FALSE(is_c_singleton_by_patterns(c, P("2167345")));
  CHECK(is_c_singleton(c, P("3672145")));
  CHECK(is_c_singleton_by_patterns(c, P("3672145")));
  for (int n = 1; n <= 5; ++n)
    for (const auto& cc : all_coxeter_elements(n)) {
      CHECK(is_c_singleton(cc, Permutation::identity(n)));
      CHECK(is_c_singleton(cc, Permutation::longest(n)));
    }
}

TEST_CASE("singletons for c = 132") {
  auto c = C(3, "132");
  std::set<Permutation> want;
  for (auto s : fixtures::kSingletons132) want.insert(P(s));
  std::set<Permutation> got;
  for (const auto& s : singletons(c)) got.insert(s.perm);
  CHECK(got == want);
  std::set<Permutation> by_pattern;
  for (const auto& w : all_permutations(3))
    if (is_c_singleton_by_patterns(c, w)) by_pattern.insert(w);
  CHECK(by_pattern == want);
}

TEST_CASE("Tamari has 2^n singletons") {
  for (int n = 1; n <= 7; ++n) CHECK(singletons(tamari(n)).size() == (std::size_t{1} << n));
}

TEST_CASE("three descriptions of singletons agree, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : all_coxeter_elements(n)) {
      std::set<Permutation> from_ideals;
      for (const auto& s : singletons(c)) from_ideals.insert(s.perm);
      auto prefixes = commutation_prefix_set(c);
      CHECK(std::set<Permutation>(prefixes.begin(), prefixes.end()) == from_ideals);
      for (const auto& w : all_permutations(n)) {
        bool a = is_c_singleton(c, w);
        CHECK(a == is_c_singleton_by_patterns(c, w));
        CHECK(a == is_c_singleton_oracle(c, w));
        CHECK(a == (from_ideals.count(w) == 1));
      }
    }
}

TEST_CASE("ideal of a singleton re-derives from its sorting word") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_coxeter_elements(n)) {
      Heap h = heap_of_word(c_sorting_word(c, Permutation::longest(n)));
      for (const auto& s : singletons(c)) {
        CHECK(ideal_of_singleton(h, c, s.perm) == s.ideal);
        CHECK(same_labeled_poset(heap_of_word(c_sorting_word(c, s.perm)),
                                 Heap(subword(h, s.ideal))));
      }
    }
  CHECK_THROWS_AS(ideal_of_singleton(heap_grid(tamari(3)), tamari(3), P("1324")), NotSingleton);
}

TEST_CASE("diagonal reading words") {
  CHECK(diagonal_reading_word(C(7, "4321657")).to_string() ==
        "4321654321765432176543765767");
  CHECK(diagonal_reading_word(C(2, "12")).to_string() == "121");
  CHECK(diagonal_reading_word(C(7, "1432657")).to_string() ==
        "1432165432176543217654376576");
}

TEST_CASE("grid heap has the labeled poset of the w0 sorting word") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : all_coxeter_elements(n)) {
      Heap g = heap_grid(c);
      Heap s = heap_of_word(c_sorting_word(c, Permutation::longest(n)));
      CHECK(same_labeled_poset(g, s));
      CHECK(word_to_perm(g.word()) == Permutation::longest(n));
    }
}

TEST_CASE("a-sequence of the worked example") {
  auto c = C(8, "21365487");
  Heap g = heap_grid(c);
  auto f = OrderIdeal::from_members({1, 6, 7, 12, 13, 14, 20, 21, 27});
  REQUIRE(is_order_ideal(g, f));
  Permutation w = word_to_perm(subword(g, f));
  CHECK(is_c_singleton(c, w));
  CHECK(ideal_of_singleton(g, c, w) == f);
  std::vector<int> want{27, 26, 21, 19, 14, 11, 7, 5, 1};
  CHECK(a_sequence(c, w) == want);
  CHECK(a_sequence(f) == want);
  CHECK(a_sequence(OrderIdeal::from_members({1, 2, 3, 4})) == std::vector<int>{4});
}

}
