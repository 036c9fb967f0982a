#include "gpif/core.hpp"

#include <algorithm>

namespace gpif {

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeIdeal PrimeIdeal::monomial(std::vector<int> vars) {
  if (vars.empty()) throw PreconditionError("monomial prime needs a nonempty variable set");
  std::sort(vars.begin(), vars.end());
  for (std::size_t i = 0; i + 1 < vars.size(); ++i)
    if (vars[i] == vars[i + 1]) throw PreconditionError("monomial prime has a repeated variable");
  if (vars.front() < 0) throw PreconditionError("negative variable index");
  PrimeIdeal p;
  p.tag = BackendTag::Monomial;
  p.vars = std::move(vars);
  return p;
}

PrimeIdeal PrimeIdeal::integer(std::int64_t n) {
  if (n != 0 && !is_prime_number(n))
    throw PreconditionError("(" + std::to_string(n) + ") is not a prime ideal of Z");
  PrimeIdeal p;
  p.tag = BackendTag::Integer;
  p.p = n;
  return p;
}

static void require_same_tag(const PrimeIdeal& p, const PrimeIdeal& q) {
  if (p.tag != q.tag)
    throw BackendMismatchError("cannot compare primes from different backends");
}

bool prime_contains(const PrimeIdeal& p, const PrimeIdeal& q) {
  require_same_tag(p, q);
  if (p.tag == BackendTag::Monomial)
    return std::includes(p.vars.begin(), p.vars.end(), q.vars.begin(), q.vars.end());
  // (q) subseteq (p) in Z: q = 0, or p = q.
  return q.p == 0 || p.p == q.p;
}

bool prime_contains_strictly(const PrimeIdeal& p, const PrimeIdeal& q) {
  return prime_contains(p, q) && !(p == q);
}

bool PrimeOrder::operator()(const PrimeIdeal& a, const PrimeIdeal& b) const {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (a.tag == BackendTag::Monomial) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() > b.vars.size();
    return a.vars < b.vars;
  }
  if ((a.p == 0) != (b.p == 0)) return b.p == 0;  // (0) last
  return a.p < b.p;
}

bool pairwise_incomparable(const std::vector<PrimeIdeal>& primes) {
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j && prime_contains_strictly(primes[i], primes[j])) return false;
  return true;
}

std::string show_prime(const PrimeIdeal& p, const std::vector<std::string>& names) {
  if (p.tag == BackendTag::Integer) return "(" + std::to_string(p.p) + ")";
  std::string out = "(";
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    if (i) out += ",";
    int v = p.vars[i];
    if (v >= 0 && static_cast<std::size_t>(v) < names.size())
      out += names[v];
    else
      out += "x" + std::to_string(v);
  }
  return out + ")";
}

void FactorizationMultiset::add(const PrimeIdeal& p, int mult) {
  if (mult <= 0) throw PreconditionError("multiplicity must be positive");
  if (!mult_.empty() && mult_.begin()->first.tag != p.tag)
    throw BackendMismatchError("mixed backends in one factorization");
  mult_[p] += mult;
}

int FactorizationMultiset::multiplicity(const PrimeIdeal& p) const {
  auto it = mult_.find(p);
  return it == mult_.end() ? 0 : it->second;
}

int FactorizationMultiset::degree() const {
  int n = 0;
  for (auto& [p, m] : mult_) n += m;
  return n;
}

std::vector<PrimeIdeal> FactorizationMultiset::distinct_primes() const {
  std::vector<PrimeIdeal> out;
  out.reserve(mult_.size());
  for (auto& [p, m] : mult_) out.push_back(p);
  return out;
}

std::string FactorizationMultiset::to_string(const std::vector<std::string>& names) const {
  if (mult_.empty()) return "1";
  std::string out;
  for (auto& [p, m] : mult_) {
    if (!out.empty()) out += "*";
    out += show_prime(p, names);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

bool multiset_equal(const FactorizationMultiset& a, const FactorizationMultiset& b) {
  if (!a.empty() && !b.empty() &&
      a.entries().begin()->first.tag != b.entries().begin()->first.tag)
    throw BackendMismatchError("comparing factorizations from different backends");
  return a.entries() == b.entries();
}

bool is_multiple(const FactorizationMultiset& a, const FactorizationMultiset& b) {
  for (auto& [p, m] : b.entries())
    if (a.multiplicity(p) < m) return false;
  return true;
}

}  // namespace gpif
