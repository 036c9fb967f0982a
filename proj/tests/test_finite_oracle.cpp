#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gpif/finite_oracle.hpp"

using namespace gpif;

namespace {

FiniteSubmodule whole(const FiniteModule& m) {
  FiniteSubmodule s;
  for (int i = 0; i < m.size(); ++i) s.elems.push_back(i);
  return s;
}

FiniteSubmodule zero_sub() { return FiniteSubmodule{{0}}; }

}  // namespace

TEST_CASE("arithmetic and indexing") {
  FiniteModule m({2, 3});
  CHECK(m.size() == 6);
  CHECK(m.exponent() == 6);
  for (int i = 0; i < m.size(); ++i) {
    CHECK(m.index(m.tuple(i)) == i);
    CHECK(m.add(i, 0) == i);
    CHECK(m.smul(0, i) == 0);
    CHECK(m.smul(1, i) == i);
    CHECK(m.smul(7, i) == i);  // 7 = 1 mod exponent
  }
  // addition is componentwise mod divisors
  int a = m.index({1, 2}), b = m.index({1, 2});
  CHECK(m.add(a, b) == m.index({0, 1}));
}

TEST_CASE("closure and submodule enumeration") {
  SUBCASE("Z/4 has 3 submodules") {
    FiniteModule m({4});
    auto subs = enumerate_submodules(m);
    CHECK(subs.size() == 3);
    CHECK(closure(m, {2}).size() == 2);
    CHECK(closure(m, {3}).size() == 4);
  }
  SUBCASE("Z/2 x Z/2 has 5 submodules") {
    FiniteModule m({2, 2});
    CHECK(enumerate_submodules(m).size() == 5);
  }
  SUBCASE("trivial module") {
    FiniteModule m({1});
    CHECK(m.size() == 1);
    CHECK(enumerate_submodules(m).size() == 1);
  }
  SUBCASE("every enumerated set is closed and distinct") {
    FiniteModule m({2, 4});
    auto subs = enumerate_submodules(m);
    std::set<FiniteSubmodule> seen(subs.begin(), subs.end());
    CHECK(seen.size() == subs.size());
    for (auto& s : subs) {
      CHECK(s.contains(0));
      for (int x : s.elems)
        for (int y : s.elems) CHECK(s.contains(m.add(x, y)));
    }
  }
}

TEST_CASE("colon_int") {
  FiniteModule m({8});
  auto n = closure(m, {4});  // {0, 4}
  auto k = closure(m, {2});  // {0, 2, 4, 6}
  CHECK(colon_int(m, n, k) == 2);
  CHECK(colon_int(m, n, n) == 1);
  CHECK(colon_int(m, zero_sub(), whole(m)) == 8);
}

TEST_CASE("is_prime_submodule") {
  SUBCASE("in Z/4") {
    FiniteModule m({4});
    auto two = closure(m, {2});
    CHECK(is_prime_submodule(m, two, whole(m)) == 2);
    // 0 is not prime in Z/4: 2*2 = 0 but 2 not in {0} and (0:Z/4) = 4 nonprime
    CHECK_FALSE(is_prime_submodule(m, zero_sub(), whole(m)).has_value());
    CHECK(is_prime_submodule(m, zero_sub(), two) == 2);
  }
  SUBCASE("in Z/6") {
    FiniteModule m({6});
    CHECK(is_prime_submodule(m, closure(m, {2}), whole(m)) == 2);
    CHECK(is_prime_submodule(m, closure(m, {3}), whole(m)) == 3);
    CHECK_FALSE(is_prime_submodule(m, zero_sub(), whole(m)).has_value());
  }
}

TEST_CASE("brute_ass") {
  SUBCASE("Z/6 from 0") {
    FiniteModule m({6});
    auto ass = brute_ass(m, zero_sub());
    std::sort(ass.begin(), ass.end());
    CHECK(ass == std::vector<std::int64_t>{2, 3});
  }
  SUBCASE("Z/4 from 0") {
    FiniteModule m({4});
    CHECK(brute_ass(m, zero_sub()) == std::vector<std::int64_t>{2});
  }
  SUBCASE("Z/2 x Z/2 from 0") {
    FiniteModule m({2, 2});
    CHECK(brute_ass(m, zero_sub()) == std::vector<std::int64_t>{2});
  }
}

TEST_CASE("maximal_prime_extension") {
  FiniteModule m({4});
  auto subs = enumerate_submodules(m);
  auto ext = maximal_prime_extension(m, subs, zero_sub(), 2);
  CHECK(ext == closure(m, {2}));  // {x : 2x = 0} in Z/4

  FiniteModule m6({6});
  auto subs6 = enumerate_submodules(m6);
  CHECK(maximal_prime_extension(m6, subs6, zero_sub(), 2) == closure(m6, {3}));
  CHECK(maximal_prime_extension(m6, subs6, zero_sub(), 3) == closure(m6, {2}));
}

TEST_CASE("all_rpe_filtrations") {
  SUBCASE("Z/4: single chain with primes (2),(2)") {
    FiniteModule m({4});
    auto fs = all_rpe_filtrations(m, zero_sub());
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].steps.size() == 2);
    CHECK(fs[0].steps[0].first == 2);
    CHECK(fs[0].steps[1].first == 2);
    CHECK(fs[0].steps.back().second == whole(m));
  }
  SUBCASE("Z/6: two chains, both orderings of (2),(3)") {
    FiniteModule m({6});
    auto fs = all_rpe_filtrations(m, zero_sub());
    REQUIRE(fs.size() == 2);
    std::set<std::vector<std::int64_t>> orders;
    for (auto& f : fs) {
      std::vector<std::int64_t> ps;
      for (auto& [p, s] : f.steps) ps.push_back(p);
      orders.insert(ps);
      CHECK(f.steps.back().second == whole(m));
    }
    CHECK(orders == std::set<std::vector<std::int64_t>>{{2, 3}, {3, 2}});
  }
  SUBCASE("Z/2 x Z/2: one step") {
    FiniteModule m({2, 2});
    auto fs = all_rpe_filtrations(m, zero_sub());
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].steps.size() == 1);
    CHECK(fs[0].steps[0].first == 2);
  }
  SUBCASE("factorization is the same multiset along every chain") {
    for (auto divisors : std::vector<std::vector<std::int64_t>>{{12}, {2, 6}, {4, 4}, {18}}) {
      FiniteModule m(divisors);
      for (auto& start : enumerate_submodules(m)) {
        if (start.size() == m.size()) continue;
        auto fs = all_rpe_filtrations(m, start);
        REQUIRE(!fs.empty());
        auto expected = oracle_factorization(fs[0]);
        for (auto& f : fs) CHECK(multiset_equal(oracle_factorization(f), expected));
      }
    }
  }
}
