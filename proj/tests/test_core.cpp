#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpif/core.hpp"

using namespace gpif;

namespace {

// every nonempty subset of {0,...,nvars-1}
std::vector<PrimeIdeal> all_monomial_primes(int nvars) {
  std::vector<PrimeIdeal> out;
  for (unsigned mask = 1; mask < (1u << nvars); ++mask) {
    std::vector<int> vars;
    for (int v = 0; v < nvars; ++v)
      if (mask & (1u << v)) vars.push_back(v);
    out.push_back(PrimeIdeal::monomial(vars));
  }
  return out;
}

}  // namespace

TEST_CASE("prime_contains on examples") {
  auto xyz = PrimeIdeal::monomial({0, 1, 2});
  auto xy = PrimeIdeal::monomial({0, 1});
  auto xz = PrimeIdeal::monomial({0, 2});
  CHECK(prime_contains(xyz, xy));
  CHECK_FALSE(prime_contains(xy, xyz));
  CHECK_FALSE(prime_contains(xy, xz));
  CHECK_FALSE(prime_contains(xz, xy));

  auto two = PrimeIdeal::integer(2);
  auto zero = PrimeIdeal::integer(0);
  CHECK(prime_contains(two, zero));
  CHECK_FALSE(prime_contains(zero, two));
  CHECK(prime_contains(zero, zero));

  CHECK_THROWS_AS((void)prime_contains(xy, two), BackendMismatchError);
}

TEST_CASE("integer prime validation") {
  CHECK_THROWS_AS(PrimeIdeal::integer(4), PreconditionError);
  CHECK_THROWS_AS(PrimeIdeal::integer(1), PreconditionError);
  CHECK_NOTHROW(PrimeIdeal::integer(0));
  CHECK_NOTHROW(PrimeIdeal::integer(97));
  CHECK_THROWS_AS(PrimeIdeal::monomial({}), PreconditionError);
  CHECK_THROWS_AS(PrimeIdeal::monomial({1, 1}), PreconditionError);
}

TEST_CASE("prime_contains is a partial order (exhaustive, 5 variables)") {
  auto primes = all_monomial_primes(5);
  for (auto& p : primes) CHECK(prime_contains(p, p));
  for (auto& p : primes)
    for (auto& q : primes)
      if (prime_contains(p, q) && prime_contains(q, p)) CHECK(p == q);
  for (auto& p : primes)
    for (auto& q : primes)
      for (auto& r : primes)
        if (prime_contains(p, q) && prime_contains(q, r)) CHECK(prime_contains(p, r));
}

TEST_CASE("canonical display order") {
  PrimeOrder lt;
  auto xyz = PrimeIdeal::monomial({0, 1, 2});
  auto xy = PrimeIdeal::monomial({0, 1});
  auto xz = PrimeIdeal::monomial({0, 2});
  CHECK(lt(xyz, xy));  // cardinality descending
  CHECK(lt(xy, xz));   // then lexicographic
  CHECK(lt(PrimeIdeal::integer(2), PrimeIdeal::integer(3)));
  CHECK(lt(PrimeIdeal::integer(3), PrimeIdeal::integer(0)));  // (0) last
  CHECK(show_prime(xy, {"x", "y", "z"}) == "(x,y)");
  CHECK(show_prime(PrimeIdeal::integer(0)) == "(0)");
}

TEST_CASE("multiset equality and is_multiple on examples") {
  auto xy = PrimeIdeal::monomial({0, 1});
  auto xyz = PrimeIdeal::monomial({0, 1, 2});

  FactorizationMultiset a, b;
  a.add(xy, 2);
  b.add(xy, 2);
  CHECK(multiset_equal(a, b));

  FactorizationMultiset c, d;
  c.add(PrimeIdeal::integer(2));
  c.add(PrimeIdeal::integer(0));
  d.add(PrimeIdeal::integer(0));
  CHECK_FALSE(multiset_equal(c, d));

  CHECK(multiset_equal(FactorizationMultiset{}, FactorizationMultiset{}));

  FactorizationMultiset big;
  big.add(xyz, 1);
  big.add(xy, 2);
  CHECK(is_multiple(big, a));
  CHECK(is_multiple(a, a));
  FactorizationMultiset one;
  one.add(xy, 1);
  CHECK_FALSE(is_multiple(one, a));
  CHECK(is_multiple(a, one));
}

TEST_CASE("is_multiple is a partial order with multiset equality as its core") {
  auto primes = all_monomial_primes(3);
  std::vector<FactorizationMultiset> sets;
  // a small systematic family
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i; j < primes.size(); ++j) {
      FactorizationMultiset f;
      f.add(primes[i]);
      f.add(primes[j]);
      sets.push_back(f);
    }
  for (auto& f : sets) CHECK(is_multiple(f, f));
  for (auto& f : sets)
    for (auto& g : sets)
      if (is_multiple(f, g) && is_multiple(g, f)) CHECK(multiset_equal(f, g));
  for (auto& f : sets)
    for (auto& g : sets)
      for (auto& h : sets)
        if (is_multiple(f, g) && is_multiple(g, h)) CHECK(is_multiple(f, h));
}

TEST_CASE("pairwise_incomparable") {
  auto xy = PrimeIdeal::monomial({0, 1});
  auto xz = PrimeIdeal::monomial({0, 2});
  auto xyz = PrimeIdeal::monomial({0, 1, 2});
  CHECK(pairwise_incomparable({xy, xz}));
  CHECK_FALSE(pairwise_incomparable({xyz, xy}));
  CHECK(pairwise_incomparable({PrimeIdeal::integer(2), PrimeIdeal::integer(3)}));
  CHECK_FALSE(pairwise_incomparable({PrimeIdeal::integer(2), PrimeIdeal::integer(0)}));
}

TEST_CASE("factorization display") {
  FactorizationMultiset f;
  f.add(PrimeIdeal::monomial({0, 1, 2}));
  f.add(PrimeIdeal::monomial({0, 1}), 2);
  CHECK(f.to_string({"x", "y", "z"}) == "(x,y,z)*(x,y)^2");
  CHECK(f.degree() == 3);
}
