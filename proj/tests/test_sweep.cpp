#include <doctest.h>

#include "cbirk/cambrian.hpp"
#include "cbirk/sweep.hpp"

using namespace cbirk;

TEST_SUITE("sweep") {

TEST_CASE("parallel verify sweep matches the serial reference") {
  for (int n = 1; n <= 4; ++n) {
    auto s = verify_sweep_serial(n);
    auto p = verify_sweep_parallel(n, 4);
    REQUIRE(s.size() == p.size());
    CHECK(s.size() == (std::size_t{1} << (n - 1)));
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(s[k].c == p[k].c);
      CHECK(s[k].ok == p[k].ok);
      CHECK(s[k].ok);
      CHECK(s[k].volume == p[k].volume);
      CHECK(s[k].singletons == p[k].singletons);
      CHECK(s[k].U == p[k].U);
    }
  }
}

TEST_CASE("parallel relation sweep matches the serial reference") {
  for (int n = 1; n <= 4; ++n) {
    auto s = relation_sweep_serial(n);
    auto p = relation_sweep_parallel(n, 3);
    REQUIRE(s.size() == p.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(s[k].ok);
      CHECK(s[k].ok == p[k].ok);
      CHECK(s[k].relations_checked == p[k].relations_checked);
      CHECK(s[k].family_rank == p[k].family_rank);
      CHECK(s[k].independent_rank == s[k].independent_size);
      CHECK(s[k].singleton_dimension == n * (n + 1) / 2);
    }
  }
}

TEST_CASE("parallel classification matches the serial reference") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_coxeter_elements(n)) {
      auto s = classify_singletons_serial(c);
      CHECK(s == classify_singletons_parallel(c, 4));
      std::size_t count = 0;
      auto perms = all_permutations(n);
      for (std::size_t k = 0; k < perms.size(); ++k) {
        CHECK(static_cast<bool>(s[k]) == is_c_singleton(c, perms[k]));
        count += s[k];
      }
      CHECK(count == singletons(c).size());
    }
}

TEST_CASE("default thread count") {
  CHECK(verify_sweep_parallel(3).size() == 4);
}

}
