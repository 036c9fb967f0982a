#ifndef GPIF_MONOMIAL_HPP
#define GPIF_MONOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gpif/core.hpp"

namespace gpif {

// A monomial in d variables as its exponent vector.  The all-zeros vector
// is the unit 1.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::vector<int> e);

  int vars() const { return static_cast<int>(exp.size()); }
  int degree() const;
  bool is_unit() const;

  bool operator==(const Monomial&) const = default;
  // (degree, lex) order; fixes the canonical generator ordering.
  bool operator<(const Monomial& o) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;
};

bool divides(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
// lcm(m, u) / u, i.e. componentwise max(m - u, 0).
Monomial colon(const Monomial& m, const Monomial& u);
Monomial product(const Monomial& u, const Monomial& v);

// A monomial ideal held by its unique minimal generating set.  Empty
// generator list = the zero ideal; {1} = the whole ring.
class MonomialIdeal {
 public:
  MonomialIdeal() : vars_(0) {}
  // Minimalizes and sorts; any generator list is accepted.
  MonomialIdeal(int vars, std::vector<Monomial> gens);

  static MonomialIdeal zero(int vars) { return MonomialIdeal(vars, {}); }
  static MonomialIdeal whole(int vars);
  // The prime ideal ({x_i : i in p.vars}).
  static MonomialIdeal from_prime(int vars, const PrimeIdeal& p);

  int vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_whole() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  bool contains(const Monomial& m) const;  // membership
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int vars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int vars, std::vector<Monomial> gens);
MonomialIdeal intersect_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_mono(const MonomialIdeal& i, const Monomial& u);
// (I : J) = intersection over generators of J; (I : 0) = R, (I : R) = I.
MonomialIdeal colon_ideal(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal colon_prime_ideal(const MonomialIdeal& i, const PrimeIdeal& p);

// Irredundant decomposition into irreducible ideals (ones generated by pure
// variable powers).  Requires i proper and nonzero.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i);

// Ass(R/I) as monomial primes, via irreducible decomposition; every prime is
// re-verified by a monomial witness m with (I : m) = p.  Requires I proper
// and nonzero (Ass of R/0 contains (0), which is not a monomial prime).
std::vector<PrimeIdeal> ass_ideal(const MonomialIdeal& i);

// N = I_1 e_1 + ... + I_k e_k inside R^k, one ideal per coordinate.
struct MonomialSubmodule {
  std::vector<MonomialIdeal> comps;

  int rank() const { return static_cast<int>(comps.size()); }
  bool operator==(const MonomialSubmodule&) const = default;
};

// The ambient free module R^rank over a polynomial ring in `vars`
// variables; all submodule operations hang off this context.
class MonomialBackend {
 public:
  using Sub = MonomialSubmodule;

  MonomialBackend(int vars, int rank, std::vector<std::string> names = {});

  int vars() const { return vars_; }
  int rank() const { return rank_; }
  const std::vector<std::string>& names() const { return names_; }
  BackendTag tag() const { return BackendTag::Monomial; }

  Sub make(std::vector<MonomialIdeal> comps) const;
  Sub whole() const;
  Sub embed_ideal(const MonomialIdeal& i) const;  // rank-1 contexts only

  bool is_ring() const { return rank_ == 1; }
  MonomialBackend ring_module() const { return MonomialBackend(vars_, 1, names_); }

  bool eq(const Sub& a, const Sub& b) const { return a == b; }
  bool leq(const Sub& a, const Sub& b) const;
  bool is_whole(const Sub& n) const;
  Sub intersect(const Sub& a, const Sub& b) const;
  std::vector<PrimeIdeal> ass(const Sub& n) const;  // requires n proper
  Sub colon_prime(const Sub& n, const PrimeIdeal& p) const;
  // (N : K) as a rank-1 submodule (ideal) of ring_module().
  Sub colon_submodule(const Sub& n, const Sub& k) const;
  Sub annihilator(const Sub& n) const { return colon_submodule(n, whole()); }
  Sub scale(const PrimeIdeal& p, const Sub& n) const;

  std::size_t step_cap(const Sub& n) const;

  std::string show(const Sub& n) const;

 private:
  void check(const Sub& n) const;
  int vars_, rank_;
  std::vector<std::string> names_;
};

}  // namespace gpif

#endif
