#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gpif/monomial.hpp"

using namespace gpif;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

// every monomial in `vars` variables of total degree <= maxdeg
std::vector<Monomial> monomials_up_to(int vars, int maxdeg) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  while (true) {
    if (Monomial(e).degree() <= maxdeg) out.emplace_back(e);
    int k = 0;
    while (k < vars && e[static_cast<std::size_t>(k)] == maxdeg) e[static_cast<std::size_t>(k++)] = 0;
    if (k == vars) break;
    ++e[static_cast<std::size_t>(k)];
  }
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int vars, int maxdeg, int maxgens) {
  std::uniform_int_distribution<int> ngens(1, maxgens), expo(0, maxdeg);
  std::vector<Monomial> gens;
  int n = ngens(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    int budget = maxdeg;
    for (int v = 0; v < vars; ++v) {
      e[static_cast<std::size_t>(v)] = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e[static_cast<std::size_t>(v)];
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(vars, std::move(gens));
}

}  // namespace

TEST_CASE("divides") {
  CHECK(divides(m({1, 0}), m({2, 0})));
  CHECK_FALSE(divides(m({1, 1}), m({1, 0})));  // xy | xz fails
  for (auto& mm : monomials_up_to(2, 3)) CHECK(divides(m({0, 0}), mm));
}

TEST_CASE("minimalize") {
  MonomialIdeal i(2, {m({2, 0}), m({1, 0}), m({1, 1})});
  CHECK(i.gens() == std::vector<Monomial>{m({1, 0})});

  MonomialIdeal j(2, {m({2, 0}), m({1, 1}), m({0, 2})});
  CHECK(j.gens().size() == 3);  // (x^2, xy, y^2) is already minimal

  CHECK(MonomialIdeal(2, {}).is_zero());
  // idempotent
  CHECK(MonomialIdeal(2, j.gens()) == j);
}

TEST_CASE("intersect_ideal") {
  MonomialIdeal x(2, {m({1, 0})}), y(2, {m({0, 1})});
  CHECK(intersect_ideal(x, y) == MonomialIdeal(2, {m({1, 1})}));

  // section 2 worked example in k[x,y,z]
  MonomialIdeal a(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0}), m({1, 0, 1})});
  MonomialIdeal b(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0}), m({0, 1, 1})});
  MonomialIdeal expected(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0})});
  CHECK(intersect_ideal(a, b) == expected);

  CHECK(intersect_ideal(a, MonomialIdeal::whole(3)) == a);
}

TEST_CASE("intersection membership agrees with both (exhaustive, bounded degree)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto i = random_ideal(rng, 3, 3, 3);
    auto j = random_ideal(rng, 3, 3, 3);
    auto meet = intersect_ideal(i, j);
    for (auto& mm : monomials_up_to(3, 5)) {
      CHECK(meet.contains(mm) == (i.contains(mm) && j.contains(mm)));
      if (meet.contains(mm)) {
        CHECK(i.contains(mm));
        CHECK(j.contains(mm));
      }
    }
  }
}

TEST_CASE("colon_mono examples with membership oracle") {
  // ((x^2, y) : x) = (x, y)
  MonomialIdeal i(2, {m({2, 0}), m({0, 1})});
  CHECK(colon_mono(i, m({1, 0})) == MonomialIdeal(2, {m({1, 0}), m({0, 1})}));

  // ((x^2,y^2,xy,xz) : z) = (x, y^2)
  MonomialIdeal a(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0}), m({1, 0, 1})});
  CHECK(colon_mono(a, m({0, 0, 1})) == MonomialIdeal(3, {m({1, 0, 0}), m({0, 2, 0})}));

  CHECK(colon_mono(a, m({0, 0, 0})) == a);
}

TEST_CASE("colon adjunction: u*f in I iff f in (I : u)") {
  std::mt19937_64 rng(11);
  auto probes = monomials_up_to(3, 4);
  for (int trial = 0; trial < 50; ++trial) {
    auto i = random_ideal(rng, 3, 3, 3);
    auto u = probes[std::uniform_int_distribution<std::size_t>(0, probes.size() - 1)(rng)];
    auto q = colon_mono(i, u);
    for (auto& f : probes) CHECK(q.contains(f) == i.contains(product(u, f)));
  }
}

TEST_CASE("colon_prime_ideal examples") {
  MonomialIdeal a(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0}), m({1, 0, 1})});
  auto xyz = PrimeIdeal::monomial({0, 1, 2});
  CHECK(colon_prime_ideal(a, xyz) == MonomialIdeal(3, {m({1, 0, 0}), m({0, 2, 0})}));

  MonomialIdeal i(2, {m({2, 0}), m({0, 1})});
  auto xy = PrimeIdeal::monomial({0, 1});
  CHECK(colon_prime_ideal(i, xy) == MonomialIdeal(2, {m({1, 0}), m({0, 1})}));

  // ((x,y) : (x,y)) = R since x already lies in (x,y)
  MonomialIdeal p(2, {m({1, 0}), m({0, 1})});
  CHECK(colon_prime_ideal(p, xy).is_whole());
}

TEST_CASE("irreducible decomposition") {
  // (x^2, xy) = (x) n (x^2, y)
  MonomialIdeal i(2, {m({2, 0}), m({1, 1})});
  auto comps = irreducible_decomposition(i);
  REQUIRE(comps.size() == 2);
  MonomialIdeal meet = MonomialIdeal::whole(2);
  for (auto& c : comps) meet = intersect_ideal(meet, c);
  CHECK(meet == i);

  MonomialIdeal a(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0}), m({1, 0, 1})});
  auto ca = irreducible_decomposition(a);
  REQUIRE(ca.size() == 2);
  meet = MonomialIdeal::whole(3);
  for (auto& c : ca) meet = intersect_ideal(meet, c);
  CHECK(meet == a);

  // already irreducible
  MonomialIdeal pure(2, {m({2, 0}), m({0, 1})});
  CHECK(irreducible_decomposition(pure) == std::vector<MonomialIdeal>{pure});

  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(2)), PreconditionError);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::whole(2)), PreconditionError);
}

TEST_CASE("decomposition intersects back to the input (randomized)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto i = random_ideal(rng, 3, 4, 4);
    if (i.is_zero() || i.is_whole()) continue;
    auto comps = irreducible_decomposition(i);
    MonomialIdeal meet = MonomialIdeal::whole(3);
    for (auto& c : comps) meet = intersect_ideal(meet, c);
    CHECK(meet == i);
  }
}

TEST_CASE("ass_ideal examples") {
  MonomialIdeal a(3, {m({2, 0, 0}), m({0, 2, 0}), m({1, 1, 0}), m({1, 0, 1})});
  auto ass = ass_ideal(a);
  REQUIRE(ass.size() == 2);
  CHECK(ass[0] == PrimeIdeal::monomial({0, 1, 2}));
  CHECK(ass[1] == PrimeIdeal::monomial({0, 1}));

  MonomialIdeal i(2, {m({2, 0}), m({0, 1})});
  CHECK(ass_ideal(i) == std::vector<PrimeIdeal>{PrimeIdeal::monomial({0, 1})});

  MonomialIdeal x(2, {m({1, 0})});
  CHECK(ass_ideal(x) == std::vector<PrimeIdeal>{PrimeIdeal::monomial({0})});

  CHECK_THROWS_AS(ass_ideal(MonomialIdeal::whole(2)), PreconditionError);
}

TEST_CASE("ass_ideal equals brute-force {(I:m) prime} (randomized small ideals)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    auto i = random_ideal(rng, 3, 3, 4);
    if (i.is_zero() || i.is_whole()) continue;

    // oracle: scan divisors of lcm(gens), exponentwise capped one above
    Monomial top(std::vector<int>(3, 0));
    for (auto& g : i.gens()) top = lcm(top, g);
    for (auto& e : top.exp) e += 1;
    std::vector<PrimeIdeal> expect;
    std::vector<int> e(3, 0);
    while (true) {
      auto q = colon_mono(i, Monomial(e));
      if (!q.is_whole() && !q.is_zero()) {
        bool prime = true;
        std::vector<int> vars;
        for (auto& g : q.gens()) {
          if (g.degree() != 1) prime = false;
          for (int v = 0; v < 3; ++v)
            if (g.exp[static_cast<std::size_t>(v)] == 1) vars.push_back(v);
        }
        if (prime) {
          auto p = PrimeIdeal::monomial(vars);
          if (std::find(expect.begin(), expect.end(), p) == expect.end()) expect.push_back(p);
        }
      }
      int k = 0;
      while (k < 3 && e[static_cast<std::size_t>(k)] == top.exp[static_cast<std::size_t>(k)])
        e[static_cast<std::size_t>(k++)] = 0;
      if (k == 3) break;
      ++e[static_cast<std::size_t>(k)];
    }
    std::sort(expect.begin(), expect.end(), PrimeOrder{});
    CHECK(ass_ideal(i) == expect);
  }
}

TEST_CASE("submodule operations") {
  MonomialBackend mod(2, 2, {"x", "y"});
  MonomialIdeal i1(2, {m({2, 0}), m({0, 1})});  // (x^2, y)
  MonomialIdeal i2(2, {m({1, 0}), m({0, 2})});  // (x, y^2)
  auto n = mod.make({i1, i2});

  SUBCASE("annihilator is the intersection of the components") {
    auto ann = mod.annihilator(n);
    CHECK(ann.comps[0] == intersect_ideal(i1, i2));
  }
  SUBCASE("rank-1 annihilator is the ideal itself") {
    MonomialBackend ring(2, 1, {"x", "y"});
    auto sub = ring.embed_ideal(i1);
    CHECK(ring.annihilator(sub).comps[0] == i1);
  }
  SUBCASE("whole-ring components contribute nothing to Ass") {
    MonomialBackend mod2(2, 2);
    auto nn = mod2.make({MonomialIdeal(2, {m({1, 0})}), MonomialIdeal::whole(2)});
    CHECK(mod2.ass(nn) == std::vector<PrimeIdeal>{PrimeIdeal::monomial({0})});
  }
  SUBCASE("componentwise partial order and intersection") {
    auto meet = mod.intersect(n, mod.whole());
    CHECK(mod.eq(meet, n));
    CHECK(mod.leq(n, mod.whole()));
    CHECK_FALSE(mod.leq(mod.whole(), n));
  }
  SUBCASE("rank mismatch is rejected") {
    MonomialBackend other(2, 3);
    CHECK_THROWS_AS((void)other.ass(n), PreconditionError);
  }
  SUBCASE("scale multiplies every component by the prime") {
    auto scaled = mod.scale(PrimeIdeal::monomial({0}), n);
    CHECK(scaled.comps[0] == product_ideal(MonomialIdeal(2, {m({1, 0})}), i1));
  }
}
