#ifndef GPIF_CORE_HPP
#define GPIF_CORE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpif/errors.hpp"

namespace gpif {

enum class BackendTag { Monomial, Integer };

// A prime ideal in one of the two supported coefficient settings:
//   Monomial: ({x_i : i in vars}), vars a nonempty strictly increasing index set.
//   Integer:  (p) for a rational prime p, or (0).
struct PrimeIdeal {
  BackendTag tag;
  std::vector<int> vars;  // monomial payload
  std::int64_t p = 0;     // integer payload

  static PrimeIdeal monomial(std::vector<int> vars);
  static PrimeIdeal integer(std::int64_t p);

  bool operator==(const PrimeIdeal&) const = default;
};

bool is_prime_number(std::int64_t n);

// q subseteq p.  Throws BackendMismatchError on mixed tags.
bool prime_contains(const PrimeIdeal& p, const PrimeIdeal& q);

// Strict containment q subsetneq p.
bool prime_contains_strictly(const PrimeIdeal& p, const PrimeIdeal& q);

// Canonical display order: monomial primes by (cardinality desc, lex index
// set); integer primes numeric ascending with (0) last.
struct PrimeOrder {
  bool operator()(const PrimeIdeal& a, const PrimeIdeal& b) const;
};

// true iff no distinct pair in the set is comparable under containment.
bool pairwise_incomparable(const std::vector<PrimeIdeal>& primes);

// Renders "(x,y)" / "(2)" / "(0)".  Monomial indices fall back to x0,x1,...
// when no name table is given.
std::string show_prime(const PrimeIdeal& p, const std::vector<std::string>& names = {});

// The product p1^n1 * ... * pk^nk as a multiset; order-free equality is the
// contract, the display order above only fixes printing.
class FactorizationMultiset {
 public:
  FactorizationMultiset() = default;

  void add(const PrimeIdeal& p, int mult = 1);
  int multiplicity(const PrimeIdeal& p) const;
  int degree() const;  // sum of multiplicities
  bool empty() const { return mult_.empty(); }

  const std::map<PrimeIdeal, int, PrimeOrder>& entries() const { return mult_; }
  std::vector<PrimeIdeal> distinct_primes() const;

  bool operator==(const FactorizationMultiset&) const = default;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::map<PrimeIdeal, int, PrimeOrder> mult_;
};

bool multiset_equal(const FactorizationMultiset& a, const FactorizationMultiset& b);

// true iff a is a multiple of b: mult_b(q) <= mult_a(q) for every prime q.
bool is_multiple(const FactorizationMultiset& a, const FactorizationMultiset& b);

}  // namespace gpif

#endif
