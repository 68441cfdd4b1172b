#include <doctest.h>

#include <random>

#include "cbirk/errors.hpp"
#include "cbirk/permutation.hpp"
#include "oracles.hpp"

using namespace cbirk;

namespace {
Permutation P(const std::string& s) {
  std::vector<int> v;
  for (char ch : s) v.push_back(ch - '0');
  return Permutation(v);
}
}  // namespace

TEST_SUITE("permutation") {

TEST_CASE("word_to_perm examples") {
  CHECK(word_to_perm(Word(3, {})) == P("1234"));
  CHECK(word_to_perm(Word(3, {1, 3, 2})) == P("2413"));
  CHECK(word_to_perm(Word(2, {1, 2, 1})) == P("321"));
}

TEST_CASE("word_to_perm agrees with composing transpositions") {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    int n = std::uniform_int_distribution<int>(1, 7)(rng);
    int len = std::uniform_int_distribution<int>(0, 15)(rng);
    std::vector<int> letters;
    for (int k = 0; k < len; ++k) letters.push_back(std::uniform_int_distribution<int>(1, n)(rng));
    Word w(n, letters);
    CHECK(word_to_perm(w).one_line() == oracle::compose_transpositions(n, letters));
  }
}

TEST_CASE("length") {
  CHECK(coxeter_length(P("1234")) == 0);
  CHECK(coxeter_length(P("51342")) == 6);
  for (int n = 1; n <= 8; ++n)
    CHECK(coxeter_length(Permutation::longest(n)) == (n + 1) * n / 2);
}

TEST_CASE("length changes by one under a simple reflection") {
  for (const auto& w : all_permutations(4))
    for (int i = 1; i <= 4; ++i) {
      int d = coxeter_length(w.times_simple(i)) - coxeter_length(w);
      CHECK((d == 1 || d == -1));
      CHECK((d == -1) == (w(i) > w(i + 1)));
      CHECK((coxeter_length(w.simple_times(i)) < coxeter_length(w)) == w.has_left_descent(i));
    }
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(Word(2, {1, 2, 1})));
  CHECK_FALSE(is_reduced(Word(2, {1, 1})));
  CHECK(is_reduced(Word(4, {4, 2, 3, 2, 4, 1})));
  CHECK(is_reduced(Word(3, {})));
}

TEST_CASE("permutation matrices") {
  CHECK(permutation_matrix(Permutation::identity(3)) == IntMatrix::identity(4));
  auto m = permutation_matrix(P("2413"));
  std::vector<std::pair<int, int>> ones;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m(i, j) == 1) ones.push_back({i + 1, j + 1});
  CHECK(ones == std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 1}, {4, 3}});

  auto b = permutation_matrix(word_to_perm(Word(7, {1, 4, 3, 2})));
  std::vector<std::pair<int, int>> want{{1, 2}, {2, 5}, {3, 1}, {4, 3},
                                        {5, 4}, {6, 6}, {7, 7}, {8, 8}};
  for (auto [i, j] : want) CHECK(b(i - 1, j - 1) == 1);
  for (const auto& w : all_permutations(3)) {
    auto x = permutation_matrix(w);
    for (int i = 0; i < 4; ++i) {
      Integer rs = 0, cs = 0;
      for (int j = 0; j < 4; ++j) rs += x(i, j), cs += x(j, i);
      CHECK(rs == 1);
      CHECK(cs == 1);
    }
  }
}

TEST_CASE("reverse") {
  CHECK(reverse_perm(P("1234")) == P("4321"));
  CHECK(reverse_perm(P("2413")) == P("3142"));
  for (const auto& w : all_permutations(4)) {
    CHECK(reverse_perm(reverse_perm(w)) == w);
    CHECK(coxeter_length(reverse_perm(w)) == 10 - coxeter_length(w));
  }
}

TEST_CASE("support") {
  CHECK(support(Word(4, {4, 2, 3, 2, 4, 1})) == std::vector<int>{1, 2, 3, 4});
  CHECK(support(Word(3, {})).empty());
  CHECK(support(Word(3, {2})) == std::vector<int>{2});
  CHECK_THROWS_AS(support(Word(3, {2, 2})), InvalidInput);
}

TEST_CASE("inverse and value/position swaps") {
  for (const auto& w : all_permutations(4)) {
    CHECK(w.inverse().inverse() == w);
    for (int i = 1; i <= 5; ++i) CHECK(w.inverse()(w(i)) == i);
    for (int q = 1; q <= 4; ++q)
      CHECK(w.simple_times(q) == w.inverse().times_simple(q).inverse());
  }
}

TEST_CASE("enumeration and patterns") {
  auto all = all_permutations(3);
  CHECK(all.size() == 24);
  CHECK(std::is_sorted(all.begin(), all.end()));
  auto any = [](int) { return true; };
  CHECK_FALSE(contains_pattern(P("2431"), "312", any));
  CHECK(contains_pattern(P("2413"), "312", any));
  CHECK(contains_pattern(P("4132"), "312", [](int v) { return v == 3; }));
  CHECK_FALSE(contains_pattern(P("4132"), "312", [](int v) { return v == 4; }));
  CHECK(contains_pattern(P("4132"), "312", [](int v) { return v == 2; }));
}

TEST_CASE("parsing and invalid input") {
  CHECK(parse_letters("2413") == std::vector<int>{2, 4, 1, 3});
  CHECK(parse_letters("1,4,3,2,5,7,6,9,8,10") ==
        std::vector<int>{1, 4, 3, 2, 5, 7, 6, 9, 8, 10});
  CHECK(Word(10, {1, 10}).to_string() == "1,10");
  CHECK(Word(3, {1, 3, 2}).to_string() == "132");
  CHECK_THROWS_AS(Word(3, {4}), InvalidInput);
  CHECK_THROWS_AS(Word(0, {}), InvalidInput);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(Permutation({1}), InvalidInput);
}

}
