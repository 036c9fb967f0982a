#ifndef GPIF_FINITE_ORACLE_HPP
#define GPIF_FINITE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gpif/core.hpp"

namespace gpif {

// Z/d_1 x ... x Z/d_k with componentwise addition; elements are indexed in
// mixed radix so submodules are plain index sets.  Everything here is
// definition-level brute force: this module is the ground truth the fast
// backends are checked against.
class FiniteModule {
 public:
  static constexpr int kDefaultBound = 512;

  explicit FiniteModule(std::vector<std::int64_t> divisors, int bound = kDefaultBound);

  const std::vector<std::int64_t>& divisors() const { return divisors_; }
  int size() const { return size_; }
  std::int64_t exponent() const { return exponent_; }

  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  int smul(std::int64_t a, int x) const;
  std::vector<std::int64_t> tuple(int index) const;
  int index(const std::vector<std::int64_t>& tuple) const;

 private:
  std::vector<std::int64_t> divisors_;
  int size_;
  std::int64_t exponent_;
  std::vector<int> add_;
};

// Sorted element-index set, closed under addition (hence under the Z-action).
struct FiniteSubmodule {
  std::vector<int> elems;

  bool contains(int x) const;
  int size() const { return static_cast<int>(elems.size()); }
  bool operator==(const FiniteSubmodule&) const = default;
  bool operator<(const FiniteSubmodule& o) const { return elems < o.elems; }
};

FiniteSubmodule closure(const FiniteModule& m, const std::vector<int>& seed);
FiniteSubmodule intersect(const FiniteSubmodule& a, const FiniteSubmodule& b);
bool subset(const FiniteSubmodule& a, const FiniteSubmodule& b);

// All submodules, by closure fixpoint over one-element extensions.
std::vector<FiniteSubmodule> enumerate_submodules(const FiniteModule& m);

// (N : K) = (t), the least positive t with t*K in N; t always divides the
// module exponent.  Requires K nonempty.
std::int64_t colon_int(const FiniteModule& m, const FiniteSubmodule& n, const FiniteSubmodule& k);

// Definition-level check that N is a prime submodule of K; returns the prime
// (N : K) when it is, nullopt otherwise.  Requires N strictly below K.
std::optional<std::int64_t> is_prime_submodule(const FiniteModule& m, const FiniteSubmodule& n,
                                               const FiniteSubmodule& k);

// {ann(x + N) : x not in N, ann prime}; never contains (0) on finite modules.
std::vector<std::int64_t> brute_ass(const FiniteModule& m, const FiniteSubmodule& n);

// The largest K with is_prime_submodule(N, K) = (p), by exhaustive search
// over all submodules; verified against {x : p x in N}.  Requires p in
// brute_ass(M, N) (all finite primes are maximal there).
FiniteSubmodule maximal_prime_extension(const FiniteModule& m,
                                        const std::vector<FiniteSubmodule>& all_subs,
                                        const FiniteSubmodule& n, std::int64_t p);

struct OracleFiltration {
  std::vector<std::pair<std::int64_t, FiniteSubmodule>> steps;  // (prime, submodule)
};

// Every RPE filtration from N to M, branching over all maximal associated
// primes at each step.
std::vector<OracleFiltration> all_rpe_filtrations(const FiniteModule& m, const FiniteSubmodule& n);

FactorizationMultiset oracle_factorization(const OracleFiltration& f);

}  // namespace gpif

#endif
