#ifndef GPIF_ZMODULE_HPP
#define GPIF_ZMODULE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gpif/core.hpp"

namespace gpif {

using Int = boost::multiprecision::cpp_int;

// Exact integer matrix, column major in spirit: columns are lattice
// generators throughout this module.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_columns(int rows, const std::vector<std::vector<Int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Int> column(int j) const;
  IntMatrix concat(const IntMatrix& other) const;  // side by side

  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Canonical column-style Hermite normal form: pivot rows strictly increase
// down the columns, pivots positive, entries left of a pivot reduced into
// [0, pivot); zero columns dropped.  Column span over Z is preserved.
IntMatrix hnf(const IntMatrix& a);

// Z-basis of {x : A x = 0} as columns.
IntMatrix kernel(const IntMatrix& a);

// v in the column span of H over Z?  H must be in canonical HNF.
bool hnf_member(const IntMatrix& h, const std::vector<Int>& v);

struct SmithForm {
  std::vector<Int> divisors;  // d_1 | d_2 | ..., all positive (1s kept)
  int free_rank = 0;          // rows(A) - #divisors
  IntMatrix left;             // unimodular U with U*A*V diagonal
};

// Elementary divisors of Z^rows(A) / colspan(A) plus the left transform,
// so quotient coordinates of a vector x are (U x) mod divisors.
SmithForm smith(const IntMatrix& a);

struct SnfDivisors {
  std::vector<Int> divisors;
  int free_rank;
};
SnfDivisors snf_divisors(const IntMatrix& a);

// A submodule of Z^n / relations, stored as the full preimage lattice in
// Z^n (user generators united with the relation columns) in canonical HNF.
struct ZSubmodule {
  IntMatrix lattice;
  bool operator==(const ZSubmodule&) const = default;
};

// The ambient module Z^n / colspan(relations).
class ZBackend {
 public:
  using Sub = ZSubmodule;

  explicit ZBackend(int n, IntMatrix relations = IntMatrix());

  int ambient_rank() const { return n_; }
  const IntMatrix& relations() const { return relations_; }
  BackendTag tag() const { return BackendTag::Integer; }

  Sub make(const std::vector<std::vector<Int>>& generator_columns) const;
  Sub zero() const;
  Sub whole() const;

  bool is_ring() const { return n_ == 1 && relations_.cols() == 0; }
  ZBackend ring_module() const { return ZBackend(1); }

  bool eq(const Sub& a, const Sub& b) const { return a == b; }
  bool leq(const Sub& a, const Sub& b) const;
  bool is_whole(const Sub& n) const;
  Sub intersect(const Sub& a, const Sub& b) const;
  std::vector<PrimeIdeal> ass(const Sub& n) const;  // requires n proper
  Sub colon_prime(const Sub& n, const PrimeIdeal& p) const;
  // (N : K) = (m) as a rank-1 submodule of ring_module(); m = 0 when no
  // positive multiplier sends K into N.
  Sub colon_submodule(const Sub& n, const Sub& k) const;
  Sub annihilator(const Sub& n) const { return colon_submodule(n, whole()); }
  Sub scale(const PrimeIdeal& p, const Sub& n) const;

  // Quotient data of M/N.
  SnfDivisors quotient_divisors(const Sub& n) const;
  // Exponent of M/N: 0 when the quotient has free rank, else lcm of divisors.
  Int exponent(const Sub& n) const;
  bool member(const Sub& n, const std::vector<Int>& v) const;

  std::size_t step_cap(const Sub& n) const;
  std::string show(const Sub& n) const;

 private:
  void check(const Sub& n) const;
  int n_;
  IntMatrix relations_;  // canonical HNF
};

}  // namespace gpif

#endif
