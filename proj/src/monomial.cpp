#include "gpif/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gpif {

Monomial::Monomial(std::vector<int> e) : exp(std::move(e)) {
  for (int x : exp)
    if (x < 0) throw PreconditionError("negative exponent");
}

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

bool Monomial::is_unit() const {
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

bool Monomial::operator<(const Monomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return exp > o.exp;  // higher power of an earlier variable first: x^2 < x*y < y^2
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (int i = 0; i < vars(); ++i) {
    if (exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += (static_cast<std::size_t>(i) < names.size()) ? names[i] : "x" + std::to_string(i);
    if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
  }
  return out.empty() ? "1" : out;
}

static void require_same_vars(const Monomial& u, const Monomial& v) {
  if (u.vars() != v.vars()) throw PreconditionError("monomials from different rings");
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_vars(u, v);
  for (int i = 0; i < u.vars(); ++i)
    if (u.exp[i] > v.exp[i]) return false;
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_vars(u, v);
  std::vector<int> e(u.exp.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u.exp[i], v.exp[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& m, const Monomial& u) {
  require_same_vars(m, u);
  std::vector<int> e(m.exp.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(m.exp[i] - u.exp[i], 0);
  return Monomial(std::move(e));
}

Monomial product(const Monomial& u, const Monomial& v) {
  require_same_vars(u, v);
  std::vector<int> e(u.exp.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u.exp[i] + v.exp[i];
  return Monomial(std::move(e));
}

MonomialIdeal minimalize(int vars, std::vector<Monomial> gens) {
  return MonomialIdeal(vars, std::move(gens));
}

MonomialIdeal::MonomialIdeal(int vars, std::vector<Monomial> gens) : vars_(vars) {
  for (auto& g : gens)
    if (g.vars() != vars) throw PreconditionError("generator has wrong variable count");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i]) && !(gens[j] == gens[i] && j > i))
        redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

MonomialIdeal MonomialIdeal::whole(int vars) {
  return MonomialIdeal(vars, {Monomial(std::vector<int>(vars, 0))});
}

MonomialIdeal MonomialIdeal::from_prime(int vars, const PrimeIdeal& p) {
  if (p.tag != BackendTag::Monomial)
    throw BackendMismatchError("expected a monomial prime");
  std::vector<Monomial> gens;
  for (int v : p.vars) {
    if (v >= vars) throw PreconditionError("prime variable outside the ring");
    std::vector<int> e(vars, 0);
    e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(vars, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "(0)";
  if (is_whole()) return "R";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += gens_[i].to_string(names);
  }
  return out + ")";
}

static void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars() != b.vars()) throw PreconditionError("ideals from different rings");
}

MonomialIdeal intersect_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  for (auto& m : a.gens())
    for (auto& n : b.gens()) gens.push_back(lcm(m, n));
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal sum_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal product_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  for (auto& m : a.gens())
    for (auto& n : b.gens()) gens.push_back(product(m, n));
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal colon_mono(const MonomialIdeal& i, const Monomial& u) {
  std::vector<Monomial> gens;
  for (auto& g : i.gens()) gens.push_back(colon(g, u));
  return MonomialIdeal(i.vars(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j);
  if (j.is_zero()) return MonomialIdeal::whole(i.vars());
  MonomialIdeal out = colon_mono(i, j.gens()[0]);
  for (std::size_t k = 1; k < j.gens().size(); ++k)
    out = intersect_ideal(out, colon_mono(i, j.gens()[k]));
  return out;
}

MonomialIdeal colon_prime_ideal(const MonomialIdeal& i, const PrimeIdeal& p) {
  return colon_ideal(i, MonomialIdeal::from_prime(i.vars(), p));
}

namespace {

bool is_pure_power(const Monomial& m) {
  int support = 0;
  for (int e : m.exp)
    if (e > 0) ++support;
  return support == 1;
}

bool is_irreducible(const MonomialIdeal& i) {
  return std::all_of(i.gens().begin(), i.gens().end(), is_pure_power);
}

void split_components(const MonomialIdeal& i, std::vector<MonomialIdeal>& out) {
  if (is_irreducible(i)) {
    out.push_back(i);
    return;
  }
  // Split on the first mixed generator at its first variable boundary.
  for (auto& m : i.gens()) {
    if (is_pure_power(m) || m.is_unit()) continue;
    int first = 0;
    while (m.exp[first] == 0) ++first;
    std::vector<int> eu(m.vars(), 0), ev = m.exp;
    eu[first] = m.exp[first];
    ev[first] = 0;
    Monomial u(std::move(eu)), v(std::move(ev));
    split_components(sum_ideal(i, MonomialIdeal(i.vars(), {u})), out);
    split_components(sum_ideal(i, MonomialIdeal(i.vars(), {v})), out);
    return;
  }
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i) {
  if (i.is_zero() || i.is_whole())
    throw PreconditionError("irreducible decomposition needs a proper nonzero ideal");
  std::vector<MonomialIdeal> comps;
  split_components(i, comps);
  std::sort(comps.begin(), comps.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens() < b.gens();
  });
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  // Drop components containing the intersection of the others.
  for (std::size_t k = 0; k < comps.size();) {
    if (comps.size() == 1) break;
    MonomialIdeal rest = MonomialIdeal::whole(i.vars());
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != k) rest = intersect_ideal(rest, comps[j]);
    if (comps[k].contains(rest)) {
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(k));
      k = 0;
    } else {
      ++k;
    }
  }
  return comps;
}

namespace {

std::vector<int> support(const MonomialIdeal& i) {
  std::set<int> s;
  for (auto& g : i.gens())
    for (int v = 0; v < g.vars(); ++v)
      if (g.exp[v] > 0) s.insert(v);
  return {s.begin(), s.end()};
}

// Searches the divisors of lcm(gens) for a monomial m with (I : m) = p.
bool has_witness(const MonomialIdeal& i, const PrimeIdeal& p) {
  Monomial top(std::vector<int>(i.vars(), 0));
  for (auto& g : i.gens()) top = lcm(top, g);
  MonomialIdeal target = MonomialIdeal::from_prime(i.vars(), p);
  std::vector<int> e(top.exp.size(), 0);
  while (true) {
    if (colon_mono(i, Monomial(e)) == target) return true;
    int k = 0;
    while (k < static_cast<int>(e.size()) && e[k] == top.exp[k]) e[k++] = 0;
    if (k == static_cast<int>(e.size())) return false;
    ++e[k];
  }
}

}  // namespace

std::vector<PrimeIdeal> ass_ideal(const MonomialIdeal& i) {
  if (i.is_whole()) throw PreconditionError("Ass(R/R) is undefined");
  if (i.is_zero())
    throw PreconditionError("Ass(R/0) = {(0)}, which is not a monomial prime");
  std::set<std::vector<int>> seen;
  std::vector<PrimeIdeal> out;
  for (auto& q : irreducible_decomposition(i)) {
    auto s = support(q);
    if (seen.insert(s).second) out.push_back(PrimeIdeal::monomial(s));
  }
  for (auto& p : out)
    if (!has_witness(i, p))
      throw InternalVerificationError("associated prime " + show_prime(p) +
                                      " of " + i.to_string() + " has no monomial witness");
  std::sort(out.begin(), out.end(), PrimeOrder{});
  return out;
}

MonomialBackend::MonomialBackend(int vars, int rank, std::vector<std::string> names)
    : vars_(vars), rank_(rank), names_(std::move(names)) {
  if (vars < 1 || rank < 1) throw PreconditionError("need at least one variable and rank >= 1");
}

void MonomialBackend::check(const Sub& n) const {
  if (n.rank() != rank_) throw PreconditionError("submodule rank mismatch");
  for (auto& c : n.comps)
    if (c.vars() != vars_) throw PreconditionError("submodule ring mismatch");
}

MonomialBackend::Sub MonomialBackend::make(std::vector<MonomialIdeal> comps) const {
  Sub n{std::move(comps)};
  check(n);
  return n;
}

MonomialBackend::Sub MonomialBackend::whole() const {
  return Sub{std::vector<MonomialIdeal>(rank_, MonomialIdeal::whole(vars_))};
}

MonomialBackend::Sub MonomialBackend::embed_ideal(const MonomialIdeal& i) const {
  if (rank_ != 1) throw PreconditionError("embed_ideal needs a rank-1 module");
  return make({i});
}

bool MonomialBackend::leq(const Sub& a, const Sub& b) const {
  check(a);
  check(b);
  for (int j = 0; j < rank_; ++j)
    if (!b.comps[j].contains(a.comps[j])) return false;
  return true;
}

bool MonomialBackend::is_whole(const Sub& n) const {
  check(n);
  return std::all_of(n.comps.begin(), n.comps.end(),
                     [](const MonomialIdeal& c) { return c.is_whole(); });
}

MonomialBackend::Sub MonomialBackend::intersect(const Sub& a, const Sub& b) const {
  check(a);
  check(b);
  std::vector<MonomialIdeal> comps;
  for (int j = 0; j < rank_; ++j) comps.push_back(intersect_ideal(a.comps[j], b.comps[j]));
  return Sub{std::move(comps)};
}

std::vector<PrimeIdeal> MonomialBackend::ass(const Sub& n) const {
  check(n);
  if (is_whole(n)) throw PreconditionError("Ass(M/M) is undefined");
  std::vector<PrimeIdeal> out;
  for (auto& c : n.comps) {
    if (c.is_whole()) continue;  // whole-ring component contributes nothing
    for (auto& p : ass_ideal(c))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), PrimeOrder{});
  return out;
}

MonomialBackend::Sub MonomialBackend::colon_prime(const Sub& n, const PrimeIdeal& p) const {
  check(n);
  std::vector<MonomialIdeal> comps;
  for (auto& c : n.comps) comps.push_back(colon_prime_ideal(c, p));
  return Sub{std::move(comps)};
}

MonomialBackend::Sub MonomialBackend::colon_submodule(const Sub& n, const Sub& k) const {
  check(n);
  check(k);
  MonomialIdeal out = MonomialIdeal::whole(vars_);
  for (int j = 0; j < rank_; ++j)
    out = intersect_ideal(out, colon_ideal(n.comps[j], k.comps[j]));
  return Sub{{out}};
}

MonomialBackend::Sub MonomialBackend::scale(const PrimeIdeal& p, const Sub& n) const {
  check(n);
  MonomialIdeal pi = MonomialIdeal::from_prime(vars_, p);
  std::vector<MonomialIdeal> comps;
  for (auto& c : n.comps) comps.push_back(product_ideal(pi, c));
  return Sub{std::move(comps)};
}

std::size_t MonomialBackend::step_cap(const Sub& n) const {
  std::size_t total = 0;
  for (auto& c : n.comps)
    for (auto& g : c.gens()) total += static_cast<std::size_t>(g.degree());
  return 10 * (total + static_cast<std::size_t>(vars_) + static_cast<std::size_t>(rank_));
}

std::string MonomialBackend::show(const Sub& n) const {
  if (rank_ == 1) return n.comps[0].to_string(names_);
  std::string out = "[";
  for (int j = 0; j < rank_; ++j) {
    if (j) out += ", ";
    out += n.comps[j].to_string(names_);
  }
  return out + "]";
}

}  // namespace gpif
