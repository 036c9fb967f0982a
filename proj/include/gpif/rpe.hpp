#ifndef GPIF_RPE_HPP
#define GPIF_RPE_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gpif/core.hpp"

namespace gpif {

// N = M_0 c M_1 c ... c M_n = M with the prime of each step.  The base is
// stored explicitly; steps run from i = 1 to n.
template <class Sub>
struct Filtration {
  Sub base;
  std::vector<std::pair<PrimeIdeal, Sub>> steps;

  FactorizationMultiset factor_multiset() const {
    FactorizationMultiset out;
    for (auto& [p, sub] : steps) out.add(p);
    return out;
  }
  std::vector<PrimeIdeal> primes() const {
    std::vector<PrimeIdeal> out;
    for (auto& [p, sub] : steps) out.push_back(p);
    return out;
  }
};

enum class TieBreak { Canonical, Random };

namespace detail {

template <class B>
std::vector<PrimeIdeal> maximal_elements(const B&, const std::vector<PrimeIdeal>& ass) {
  std::vector<PrimeIdeal> out;
  for (auto& p : ass) {
    bool maximal = std::none_of(ass.begin(), ass.end(), [&](const PrimeIdeal& q) {
      return prime_contains_strictly(q, p);
    });
    if (maximal) out.push_back(p);
  }
  return out;
}

}  // namespace detail

// The regular p-prime extension (N : p).  Requires N proper and p maximal
// in Ass(M/N).
template <class B>
typename B::Sub regular_extension(const B& backend, const typename B::Sub& n, const PrimeIdeal& p) {
  auto ass = backend.ass(n);
  if (std::find(ass.begin(), ass.end(), p) == ass.end())
    throw PreconditionError("prime " + show_prime(p) + " is not associated to M/N");
  for (auto& q : ass)
    if (prime_contains_strictly(q, p))
      throw PreconditionError("prime " + show_prime(p) + " is not maximal in Ass(M/N)");
  auto k = backend.colon_prime(n, p);
  if (!backend.leq(n, k) || backend.eq(n, k))
    throw InternalVerificationError("regular extension did not strictly grow");
  return k;
}

template <class B>
Filtration<typename B::Sub> rpe_filtration(const B& backend, const typename B::Sub& n,
                                           TieBreak tie = TieBreak::Canonical,
                                           std::uint64_t seed = 0) {
  if (backend.is_whole(n)) throw PreconditionError("N must be a proper submodule");
  std::mt19937_64 rng(seed);
  Filtration<typename B::Sub> out;
  out.base = n;
  auto cur = n;
  const std::size_t cap = backend.step_cap(n);
  while (!backend.is_whole(cur)) {
    if (out.steps.size() > cap)
      throw InternalVerificationError("filtration exceeded its step cap");
    auto maxima = detail::maximal_elements(backend, backend.ass(cur));
    // maxima come back in canonical display order; in random mode the
    // uniqueness theorem is exercised rather than assumed
    PrimeIdeal p = (tie == TieBreak::Canonical)
                       ? maxima.front()
                       : maxima[std::uniform_int_distribution<std::size_t>(0, maxima.size() - 1)(rng)];
    auto next = regular_extension(backend, cur, p);
    out.steps.emplace_back(p, next);
    cur = next;
  }
  return out;
}

template <class B>
FactorizationMultiset factorization(const B& backend, const typename B::Sub& n) {
  return rpe_filtration(backend, n).factor_multiset();
}

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;  // first failure, empty when ok

  explicit operator bool() const { return ok; }
};

// Checks every regularity condition of a filtration: each prime associated
// and maximal at its step, each submodule the colon of the previous one,
// strict growth, last step the whole module, and the Ass tail identity
// Ass(M/M_{i-1}) = {p_i, ..., p_n}.
template <class B>
VerifyResult verify_filtration(const B& backend, const Filtration<typename B::Sub>& f) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  if (f.steps.empty()) return fail("empty filtration");
  auto cur = f.base;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& [p, next] = f.steps[i];
    const std::string at = "step " + std::to_string(i + 1);
    if (backend.is_whole(cur)) return fail(at + ": previous submodule is already M");
    auto ass = backend.ass(cur);
    if (std::find(ass.begin(), ass.end(), p) == ass.end())
      return fail(at + ": " + show_prime(p) + " not in Ass(M/M_{i-1})");
    for (auto& q : ass)
      if (prime_contains_strictly(q, p))
        return fail(at + ": " + show_prime(p) + " not maximal in Ass(M/M_{i-1})");
    if (!backend.eq(next, backend.colon_prime(cur, p)))
      return fail(at + ": M_i != (M_{i-1} : p_i)");
    if (!backend.leq(cur, next) || backend.eq(cur, next))
      return fail(at + ": inclusion not strict");
    // Ass tail identity
    std::vector<PrimeIdeal> tail;
    for (std::size_t j = i; j < f.steps.size(); ++j) {
      if (std::find(tail.begin(), tail.end(), f.steps[j].first) == tail.end())
        tail.push_back(f.steps[j].first);
    }
    if (ass.size() != tail.size() ||
        !std::all_of(ass.begin(), ass.end(), [&](const PrimeIdeal& q) {
          return std::find(tail.begin(), tail.end(), q) != tail.end();
        }))
      return fail(at + ": Ass(M/M_{i-1}) != {p_i,...,p_n}");
    cur = next;
  }
  if (!backend.is_whole(cur)) return fail("last submodule is not M");
  return {};
}

// Swaps the primes of steps i and i+1 (1-based i) via K_i = (M_{i-1} : p_{i+1}).
// Requires p_{i+1} not strictly below p_i.
template <class B>
Filtration<typename B::Sub> interchange(const B& backend, const Filtration<typename B::Sub>& f,
                                        std::size_t i) {
  if (i < 1 || i >= f.steps.size()) throw PreconditionError("interchange position out of range");
  const PrimeIdeal& pi = f.steps[i - 1].first;
  const PrimeIdeal& pnext = f.steps[i].first;
  if (prime_contains_strictly(pi, pnext))
    throw PreconditionError("cannot interchange: " + show_prime(pnext) + " is strictly below " +
                            show_prime(pi));
  Filtration<typename B::Sub> out = f;
  const auto& prev = (i == 1) ? f.base : f.steps[i - 2].second;
  out.steps[i - 1] = {pnext, backend.colon_prime(prev, pnext)};
  out.steps[i] = {pi, f.steps[i].second};
  if (auto v = verify_filtration(backend, out); !v)
    throw InternalVerificationError("interchanged filtration failed verification: " + v.diagnostic);
  return out;
}

// Builds the filtration realizing the requested prime order by iterated
// colon from the base.  The order must be a permutation of the
// factorization; orders that do not verify are rejected as unrealizable.
template <class B>
Filtration<typename B::Sub> reorder(const B& backend, const typename B::Sub& n,
                                    const std::vector<PrimeIdeal>& target_order) {
  FactorizationMultiset want;
  for (auto& p : target_order) want.add(p);
  if (!multiset_equal(want, factorization(backend, n)))
    throw PreconditionError("target order is not a permutation of the factorization");
  Filtration<typename B::Sub> out;
  out.base = n;
  auto cur = n;
  for (auto& p : target_order) {
    cur = backend.colon_prime(cur, p);
    out.steps.emplace_back(p, cur);
  }
  if (auto v = verify_filtration(backend, out); !v)
    throw PreconditionError("order not realizable: " + v.diagnostic);
  return out;
}

// An order is admissible when no earlier prime is strictly below a later
// one; admissible orders are always realizable.
inline bool admissible_order(const std::vector<PrimeIdeal>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (prime_contains_strictly(order[j], order[i])) return false;
  return true;
}

// For each factor prime containing no other factor prime, dropping one copy
// of it from the product and applying the rest to M must escape N.
template <class B>
bool product_escape_check(const B& backend, const typename B::Sub& n) {
  FactorizationMultiset f = factorization(backend, n);
  auto primes = f.distinct_primes();
  for (auto& p : primes) {
    bool contains_other = std::any_of(primes.begin(), primes.end(), [&](const PrimeIdeal& q) {
      return prime_contains_strictly(p, q);
    });
    if (contains_other) continue;
    auto scaled = backend.whole();
    for (auto& q : primes) {
      int reps = f.multiplicity(q) - (q == p ? 1 : 0);
      for (int r = 0; r < reps; ++r) scaled = backend.scale(q, scaled);
    }
    if (backend.leq(scaled, n)) return false;
  }
  return true;
}

struct IntersectionVerdict {
  FactorizationMultiset p_n;             // = P(K) by precondition
  FactorizationMultiset p_intersection;  // P(N n K)
  bool equal = false;
  bool guaranteed = false;  // Prop. 2.1 or Prop. 2.2 hypothesis holds
};

template <class B>
IntersectionVerdict factor_intersection(const B& backend, const typename B::Sub& n,
                                        const typename B::Sub& k) {
  IntersectionVerdict v;
  v.p_n = factorization(backend, n);
  if (!multiset_equal(v.p_n, factorization(backend, k)))
    throw PreconditionError("inputs not comparable: factorizations differ");
  v.p_intersection = factorization(backend, backend.intersect(n, k));
  v.equal = multiset_equal(v.p_intersection, v.p_n);
  bool two_factor_ideals = backend.is_ring() && v.p_n.degree() <= 2;
  v.guaranteed = two_factor_ideals || pairwise_incomparable(v.p_n.distinct_primes());
  if (v.guaranteed && !v.equal)
    throw TheoremViolation("P(N n K) != P(N) although the hypothesis holds: got " +
                           v.p_intersection.to_string() + " vs " + v.p_n.to_string());
  return v;
}

struct AnnihilatorVerdict {
  FactorizationMultiset pm;  // P_M(N)
  FactorizationMultiset pr;  // P_R(ann(M/N))
  bool multiple = false;
  bool isolated = false;
  bool equal = false;
};

template <class B>
AnnihilatorVerdict annihilator_compare(const B& backend, const typename B::Sub& n) {
  AnnihilatorVerdict v;
  v.pm = factorization(backend, n);
  B ring = backend.ring_module();
  auto a = backend.annihilator(n);
  v.pr = ring.is_whole(a) ? FactorizationMultiset{} : factorization(ring, a);
  v.multiple = is_multiple(v.pm, v.pr);
  v.isolated = pairwise_incomparable(backend.ass(n));
  v.equal = multiset_equal(v.pm, v.pr);
  if (!v.multiple)
    throw TheoremViolation("P_M(N) = " + v.pm.to_string() + " is not a multiple of P_R(ann) = " +
                           v.pr.to_string());
  if (v.isolated && !v.equal)
    throw TheoremViolation("Ass(M/N) isolated but P_M(N) = " + v.pm.to_string() +
                           " != P_R(ann) = " + v.pr.to_string());
  return v;
}

struct ColonPowerVerdict {
  bool applicable = false;  // factorization of N is a single prime power
  int n = 0, r = 0;         // exponents when applicable
  bool ass_included = true;  // Ass(R/(N:K)) in Ass(M/N), checked always
};

template <class B>
ColonPowerVerdict colon_power_check(const B& backend, const typename B::Sub& n,
                                    const typename B::Sub& k) {
  ColonPowerVerdict v;
  FactorizationMultiset pm = factorization(backend, n);
  B ring = backend.ring_module();
  auto nk = backend.colon_submodule(n, k);
  FactorizationMultiset pnk =
      ring.is_whole(nk) ? FactorizationMultiset{} : factorization(ring, nk);
  // Lemma on colon associated primes holds with no hypothesis on P(N)
  if (!ring.is_whole(nk)) {
    auto ass_nk = ring.ass(nk);
    auto ass_n = backend.ass(n);
    v.ass_included = std::all_of(ass_nk.begin(), ass_nk.end(), [&](const PrimeIdeal& p) {
      return std::find(ass_n.begin(), ass_n.end(), p) != ass_n.end();
    });
    if (!v.ass_included)
      throw TheoremViolation("Ass(R/(N:K)) not contained in Ass(M/N)");
  }
  if (pm.entries().size() != 1) return v;  // hypothesis not met, vacuous pass
  v.applicable = true;
  v.n = pm.degree();
  v.r = pnk.degree();
  const PrimeIdeal& p = pm.entries().begin()->first;
  if (pnk.degree() != pnk.multiplicity(p))
    throw TheoremViolation("P_R((N:K)) is not a power of " + show_prime(p));
  if (v.r > v.n)
    throw TheoremViolation("P_R((N:K)) exponent exceeds that of P_M(N)");
  return v;
}

}  // namespace gpif

#endif
