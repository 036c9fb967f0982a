#include "gpif/finite_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gpif {

FiniteModule::FiniteModule(std::vector<std::int64_t> divisors, int bound)
    : divisors_(std::move(divisors)) {
  std::int64_t size = 1, expo = 1;
  for (auto d : divisors_) {
    if (d < 1) throw PreconditionError("divisors must be positive");
    size *= d;
    expo = std::lcm(expo, d);
    if (size > bound) throw PreconditionError("finite module exceeds the size bound");
  }
  size_ = static_cast<int>(size);
  exponent_ = expo;
  add_.resize(static_cast<std::size_t>(size_) * size_);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      auto ta = tuple(a), tb = tuple(b);
      for (std::size_t j = 0; j < divisors_.size(); ++j) ta[j] = (ta[j] + tb[j]) % divisors_[j];
      add_[static_cast<std::size_t>(a) * size_ + b] = index(ta);
    }
}

std::vector<std::int64_t> FiniteModule::tuple(int index) const {
  std::vector<std::int64_t> t(divisors_.size());
  for (std::size_t j = 0; j < divisors_.size(); ++j) {
    t[j] = index % divisors_[j];
    index = static_cast<int>(index / divisors_[j]);
  }
  return t;
}

int FiniteModule::index(const std::vector<std::int64_t>& tuple) const {
  std::int64_t idx = 0, stride = 1;
  for (std::size_t j = 0; j < divisors_.size(); ++j) {
    idx += (tuple[j] % divisors_[j]) * stride;
    stride *= divisors_[j];
  }
  return static_cast<int>(idx);
}

int FiniteModule::smul(std::int64_t a, int x) const {
  auto t = tuple(x);
  for (std::size_t j = 0; j < divisors_.size(); ++j) {
    t[j] = (t[j] * (a % divisors_[j])) % divisors_[j];
    if (t[j] < 0) t[j] += divisors_[j];
  }
  return index(t);
}

bool FiniteSubmodule::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

FiniteSubmodule closure(const FiniteModule& m, const std::vector<int>& seed) {
  std::vector<char> in(static_cast<std::size_t>(m.size()), 0);
  std::vector<int> work{0};
  in[0] = 1;
  for (int x : seed)
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      work.push_back(x);
    }
  // a finite set containing 0 and closed under addition is a subgroup
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      int s = m.add(work[i], work[j]);
      if (!in[static_cast<std::size_t>(s)]) {
        in[static_cast<std::size_t>(s)] = 1;
        work.push_back(s);
      }
    }
  FiniteSubmodule out;
  for (int x = 0; x < m.size(); ++x)
    if (in[static_cast<std::size_t>(x)]) out.elems.push_back(x);
  return out;
}

FiniteSubmodule intersect(const FiniteSubmodule& a, const FiniteSubmodule& b) {
  FiniteSubmodule out;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(out.elems));
  return out;
}

bool subset(const FiniteSubmodule& a, const FiniteSubmodule& b) {
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(), a.elems.end());
}

std::vector<FiniteSubmodule> enumerate_submodules(const FiniteModule& m) {
  std::set<FiniteSubmodule> found;
  std::vector<FiniteSubmodule> work{closure(m, {})};
  found.insert(work[0]);
  while (!work.empty()) {
    FiniteSubmodule s = std::move(work.back());
    work.pop_back();
    for (int x = 0; x < m.size(); ++x) {
      if (s.contains(x)) continue;
      auto seed = s.elems;
      seed.push_back(x);
      FiniteSubmodule bigger = closure(m, seed);
      if (found.insert(bigger).second) work.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

std::int64_t colon_int(const FiniteModule& m, const FiniteSubmodule& n, const FiniteSubmodule& k) {
  for (std::int64_t t = 1; t <= m.exponent(); ++t) {
    if (m.exponent() % t != 0) continue;
    bool ok = true;
    for (int x : k.elems)
      if (!n.contains(m.smul(t, x))) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return m.exponent();  // t = exponent always works
}

std::optional<std::int64_t> is_prime_submodule(const FiniteModule& m, const FiniteSubmodule& n,
                                               const FiniteSubmodule& k) {
  if (n == k) throw PreconditionError("is_prime_submodule needs N strictly below K");
  if (!subset(n, k)) throw PreconditionError("N must be a submodule of K");
  std::int64_t t = colon_int(m, n, k);
  if (!is_prime_number(t)) return std::nullopt;
  // a x in N for x in K must force t | a or x in N
  for (std::int64_t a = 0; a < m.exponent(); ++a) {
    if (a % t == 0) continue;
    for (int x : k.elems)
      if (!n.contains(x) && n.contains(m.smul(a, x))) return std::nullopt;
  }
  return t;
}

std::vector<std::int64_t> brute_ass(const FiniteModule& m, const FiniteSubmodule& n) {
  std::set<std::int64_t> out;
  for (int x = 0; x < m.size(); ++x) {
    if (n.contains(x)) continue;
    std::int64_t ann = m.exponent();
    for (std::int64_t a = 1; a <= m.exponent(); ++a)
      if (n.contains(m.smul(a, x))) {
        ann = a;
        break;
      }
    if (is_prime_number(ann)) out.insert(ann);
  }
  return {out.begin(), out.end()};
}

namespace {

FiniteSubmodule colon_prime_set(const FiniteModule& m, const FiniteSubmodule& n, std::int64_t p) {
  FiniteSubmodule out;
  for (int x = 0; x < m.size(); ++x)
    if (n.contains(m.smul(p, x))) out.elems.push_back(x);
  return out;
}

}  // namespace

FiniteSubmodule maximal_prime_extension(const FiniteModule& m,
                                        const std::vector<FiniteSubmodule>& all_subs,
                                        const FiniteSubmodule& n, std::int64_t p) {
  auto ass = brute_ass(m, n);
  if (std::find(ass.begin(), ass.end(), p) == ass.end())
    throw PreconditionError("(" + std::to_string(p) + ") is not maximal in Ass(M/N)");
  std::vector<FiniteSubmodule> exts;
  for (const auto& k : all_subs) {
    if (!subset(n, k) || n == k) continue;
    if (is_prime_submodule(m, n, k) == std::optional<std::int64_t>(p)) exts.push_back(k);
  }
  if (exts.empty()) throw InternalVerificationError("no p-prime extension found");
  // the maximal extension must contain every other one
  for (const auto& top : exts) {
    bool contains_all = std::all_of(exts.begin(), exts.end(),
                                    [&](const FiniteSubmodule& k) { return subset(k, top); });
    if (!contains_all) continue;
    if (!(top == colon_prime_set(m, n, p)))
      throw InternalVerificationError("maximal p-prime extension differs from (N : p)");
    return top;
  }
  throw InternalVerificationError("p-prime extensions have no greatest element");
}

namespace {

void extend_filtrations(const FiniteModule& m, const FiniteSubmodule& cur,
                        OracleFiltration& path, std::vector<OracleFiltration>& out) {
  if (cur.size() == m.size()) {
    out.push_back(path);
    return;
  }
  // all finite primes are positive and pairwise incomparable, so every
  // associated prime is maximal
  for (std::int64_t p : brute_ass(m, cur)) {
    FiniteSubmodule next = colon_prime_set(m, cur, p);
    if (!(subset(cur, next)) || cur == next)
      throw InternalVerificationError("regular extension did not grow");
    path.steps.emplace_back(p, next);
    extend_filtrations(m, next, path, out);
    path.steps.pop_back();
  }
}

}  // namespace

std::vector<OracleFiltration> all_rpe_filtrations(const FiniteModule& m, const FiniteSubmodule& n) {
  if (n.size() == m.size()) throw PreconditionError("N must be proper");
  std::vector<OracleFiltration> out;
  OracleFiltration path;
  extend_filtrations(m, n, path, out);
  return out;
}

FactorizationMultiset oracle_factorization(const OracleFiltration& f) {
  FactorizationMultiset out;
  for (auto& [p, sub] : f.steps) out.add(PrimeIdeal::integer(p));
  return out;
}

}  // namespace gpif
