#include "gpif/zmodule.hpp"

#include <algorithm>
#include <cstdlib>

namespace gpif {

namespace {

using Cols = std::vector<std::vector<Int>>;

Cols to_cols(const IntMatrix& a) {
  Cols cols(static_cast<std::size_t>(a.cols()));
  for (int j = 0; j < a.cols(); ++j) cols[static_cast<std::size_t>(j)] = a.column(j);
  return cols;
}

IntMatrix from_cols(int rows, const Cols& cols) {
  return IntMatrix::from_columns(rows, cols);
}

// floor division, divisor positive
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r < 0) --q;
  return q;
}

void axpy(std::vector<Int>& dst, const Int& q, const std::vector<Int>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

// Column HNF in place; returns the pivot count.  When `transform` is given
// the same column operations are applied to it (for kernel extraction).
int hnf_in_place(int rows, Cols& cols, Cols* transform) {
  int c = 0;
  const int m = static_cast<int>(cols.size());
  for (int i = 0; i < rows && c < m; ++i) {
    while (true) {
      int best = -1;
      for (int j = c; j < m; ++j) {
        const Int& v = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (v != 0 && (best < 0 || abs(v) < abs(cols[static_cast<std::size_t>(best)][static_cast<std::size_t>(i)])))
          best = j;
      }
      if (best < 0) break;  // row i has no pivot among remaining columns
      std::swap(cols[static_cast<std::size_t>(c)], cols[static_cast<std::size_t>(best)]);
      if (transform) std::swap((*transform)[static_cast<std::size_t>(c)], (*transform)[static_cast<std::size_t>(best)]);
      bool clean = true;
      for (int j = c + 1; j < m; ++j) {
        Int& v = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (v == 0) continue;
        Int q = v / cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
        axpy(cols[static_cast<std::size_t>(j)], q, cols[static_cast<std::size_t>(c)]);
        if (transform) axpy((*transform)[static_cast<std::size_t>(j)], q, (*transform)[static_cast<std::size_t>(c)]);
        if (cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0) clean = false;
      }
      if (clean) {
        Int& pivot = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
        if (pivot < 0) {
          for (auto& x : cols[static_cast<std::size_t>(c)]) x = -x;
          if (transform)
            for (auto& x : (*transform)[static_cast<std::size_t>(c)]) x = -x;
        }
        for (int l = 0; l < c; ++l) {
          Int q = floor_div(cols[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)], pivot);
          if (q != 0) {
            axpy(cols[static_cast<std::size_t>(l)], q, cols[static_cast<std::size_t>(c)]);
            if (transform) axpy((*transform)[static_cast<std::size_t>(l)], q, (*transform)[static_cast<std::size_t>(c)]);
          }
        }
        ++c;
        break;
      }
    }
  }
  return c;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != rows)
      throw PreconditionError("column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<Int> IntMatrix::column(int j) const {
  std::vector<Int> v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

IntMatrix IntMatrix::concat(const IntMatrix& other) const {
  if (cols_ == 0 && rows_ == 0) return other;
  if (other.cols_ == 0 && other.rows_ == 0) return *this;
  if (rows_ != other.rows_) throw PreconditionError("row count mismatch");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (int j = 0; j < cols_; ++j) {
    if (j) out += ",";
    out += "(";
    for (int i = 0; i < rows_; ++i) {
      if (i) out += ",";
      out += at(i, j).str();
    }
    out += ")";
  }
  return out + "]";
}

IntMatrix hnf(const IntMatrix& a) {
  Cols cols = to_cols(a);
  int c = hnf_in_place(a.rows(), cols, nullptr);
  cols.resize(static_cast<std::size_t>(c));  // trailing columns are zero
  return from_cols(a.rows(), cols);
}

IntMatrix kernel(const IntMatrix& a) {
  Cols cols = to_cols(a);
  Cols u = to_cols(IntMatrix::identity(a.cols()));
  int c = hnf_in_place(a.rows(), cols, &u);
  Cols basis(u.begin() + c, u.end());
  return from_cols(a.cols(), basis);
}

bool hnf_member(const IntMatrix& h, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != h.rows()) throw PreconditionError("vector length mismatch");
  std::vector<Int> w = v;
  for (int j = 0; j < h.cols(); ++j) {
    int r = 0;
    while (r < h.rows() && h.at(r, j) == 0) ++r;
    if (r == h.rows()) continue;
    if (w[static_cast<std::size_t>(r)] % h.at(r, j) != 0) return false;
    Int q = w[static_cast<std::size_t>(r)] / h.at(r, j);
    for (int i = 0; i < h.rows(); ++i) w[static_cast<std::size_t>(i)] -= q * h.at(i, j);
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

SmithForm smith(const IntMatrix& a) {
  const int n = a.rows(), m = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(n);
  auto row_sub = [&](int dst, const Int& q, int src) {
    for (int j = 0; j < m; ++j) d.at(dst, j) -= q * d.at(src, j);
    for (int j = 0; j < n; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto row_swap = [&](int i1, int i2) {
    for (int j = 0; j < m; ++j) std::swap(d.at(i1, j), d.at(i2, j));
    for (int j = 0; j < n; ++j) std::swap(u.at(i1, j), u.at(i2, j));
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < m; ++j) d.at(i, j) = -d.at(i, j);
    for (int j = 0; j < n; ++j) u.at(i, j) = -u.at(i, j);
  };
  auto col_sub = [&](int dst, const Int& q, int src) {
    for (int i = 0; i < n; ++i) d.at(i, dst) -= q * d.at(i, src);
  };
  auto col_swap = [&](int j1, int j2) {
    for (int i = 0; i < n; ++i) std::swap(d.at(i, j1), d.at(i, j2));
  };

  int t = 0;
  while (t < n && t < m) {
    // locate a minimal nonzero entry in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (d.at(i, j) != 0 && (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool dirty = false;
    for (int i = t + 1; i < n; ++i) {
      if (d.at(i, t) == 0) continue;
      row_sub(i, d.at(i, t) / d.at(t, t), t);
      if (d.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < m; ++j) {
      if (d.at(t, j) == 0) continue;
      col_sub(j, d.at(t, j) / d.at(t, t), t);
      if (d.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // pivot must divide everything that remains
    bool fixed = true;
    for (int i = t + 1; i < n && fixed; ++i)
      for (int j = t + 1; j < m && fixed; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          row_sub(t, Int(-1), i);  // pull row i into row t, re-eliminate
          fixed = false;
        }
    if (!fixed) continue;
    if (d.at(t, t) < 0) row_neg(t);
    ++t;
  }

  SmithForm out;
  out.left = u;
  for (int i = 0; i < t; ++i) out.divisors.push_back(d.at(i, i));
  out.free_rank = n - t;
  return out;
}

SnfDivisors snf_divisors(const IntMatrix& a) {
  SmithForm s = smith(a);
  return SnfDivisors{s.divisors, s.free_rank};
}

ZBackend::ZBackend(int n, IntMatrix relations) : n_(n) {
  if (n < 1) throw PreconditionError("ambient rank must be positive");
  if (relations.cols() == 0) relations = IntMatrix(n, 0);
  if (relations.rows() != n) throw PreconditionError("relation columns have wrong length");
  relations_ = hnf(relations);
}

void ZBackend::check(const Sub& n) const {
  if (n.lattice.rows() != n_) throw PreconditionError("submodule from a different ambient module");
}

ZBackend::Sub ZBackend::make(const std::vector<std::vector<Int>>& generator_columns) const {
  IntMatrix gens = IntMatrix::from_columns(n_, generator_columns);
  return Sub{hnf(gens.concat(relations_))};
}

ZBackend::Sub ZBackend::zero() const { return Sub{relations_}; }

ZBackend::Sub ZBackend::whole() const { return Sub{IntMatrix::identity(n_)}; }

bool ZBackend::leq(const Sub& a, const Sub& b) const {
  check(a);
  check(b);
  for (int j = 0; j < a.lattice.cols(); ++j)
    if (!hnf_member(b.lattice, a.lattice.column(j))) return false;
  return true;
}

bool ZBackend::is_whole(const Sub& n) const {
  check(n);
  return n.lattice == IntMatrix::identity(n_);
}

ZBackend::Sub ZBackend::intersect(const Sub& a, const Sub& b) const {
  check(a);
  check(b);
  IntMatrix neg_b = b.lattice;
  for (int i = 0; i < neg_b.rows(); ++i)
    for (int j = 0; j < neg_b.cols(); ++j) neg_b.at(i, j) = -neg_b.at(i, j);
  IntMatrix ker = kernel(a.lattice.concat(neg_b));
  // columns (u; v) with A u = B v; the intersection is A * {u parts}
  std::vector<std::vector<Int>> gens;
  for (int j = 0; j < ker.cols(); ++j) {
    std::vector<Int> g(static_cast<std::size_t>(n_), Int(0));
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < a.lattice.cols(); ++k)
        g[static_cast<std::size_t>(i)] += a.lattice.at(i, k) * ker.at(k, j);
    gens.push_back(std::move(g));
  }
  return make(gens);
}

SnfDivisors ZBackend::quotient_divisors(const Sub& n) const {
  check(n);
  return snf_divisors(n.lattice);
}

Int ZBackend::exponent(const Sub& n) const {
  SnfDivisors q = quotient_divisors(n);
  if (q.free_rank > 0) return 0;
  Int e = 1;
  for (auto& d : q.divisors) e = lcm(e, d);
  return e;
}

std::vector<PrimeIdeal> ZBackend::ass(const Sub& n) const {
  check(n);
  if (is_whole(n)) throw PreconditionError("Ass(M/M) is undefined");
  SnfDivisors q = quotient_divisors(n);
  std::vector<PrimeIdeal> out;
  std::vector<std::int64_t> seen;
  for (auto d : q.divisors) {
    for (Int f = 2; f * f <= d; ++f)
      while (d % f == 0) {
        auto p = f.convert_to<std::int64_t>();
        if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
        d /= f;
      }
    if (d > 1) {
      auto p = d.convert_to<std::int64_t>();
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
    }
  }
  for (auto p : seen) out.push_back(PrimeIdeal::integer(p));
  if (q.free_rank > 0) out.push_back(PrimeIdeal::integer(0));
  std::sort(out.begin(), out.end(), PrimeOrder{});
  return out;
}

ZBackend::Sub ZBackend::colon_prime(const Sub& n, const PrimeIdeal& p) const {
  check(n);
  if (p.tag != BackendTag::Integer) throw BackendMismatchError("expected an integer prime");
  if (p.p == 0) return whole();
  // {x : q x in L} = projection onto x of ker(q I | -L)
  IntMatrix stacked(n_, n_ + n.lattice.cols());
  for (int i = 0; i < n_; ++i) {
    stacked.at(i, i) = p.p;
    for (int j = 0; j < n.lattice.cols(); ++j) stacked.at(i, n_ + j) = -n.lattice.at(i, j);
  }
  IntMatrix ker = kernel(stacked);
  std::vector<std::vector<Int>> gens;
  for (int j = 0; j < ker.cols(); ++j) {
    std::vector<Int> g(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(i)] = ker.at(i, j);
    gens.push_back(std::move(g));
  }
  return make(gens);
}

ZBackend::Sub ZBackend::colon_submodule(const Sub& n, const Sub& k) const {
  check(n);
  check(k);
  SmithForm s = smith(n.lattice);
  const int r = static_cast<int>(s.divisors.size());
  Int m = 1;
  for (int j = 0; j < k.lattice.cols() && m != 0; ++j) {
    // order of the column in Z^n / L_N, via Smith coordinates y = U x
    Int t = 1;
    for (int i = 0; i < n_; ++i) {
      Int y = 0;
      for (int l = 0; l < n_; ++l) y += s.left.at(i, l) * k.lattice.at(l, j);
      if (i < r) {
        t = lcm(t, s.divisors[static_cast<std::size_t>(i)] / gcd(s.divisors[static_cast<std::size_t>(i)], y));
      } else if (y != 0) {
        t = 0;
        break;
      }
    }
    m = (t == 0) ? Int(0) : lcm(m, t);
  }
  ZBackend ring = ring_module();
  if (m == 0) return ring.zero();
  return ring.make({{m}});
}

ZBackend::Sub ZBackend::scale(const PrimeIdeal& p, const Sub& n) const {
  check(n);
  if (p.tag != BackendTag::Integer) throw BackendMismatchError("expected an integer prime");
  if (p.p == 0) return zero();
  std::vector<std::vector<Int>> gens;
  for (int j = 0; j < n.lattice.cols(); ++j) {
    auto g = n.lattice.column(j);
    for (auto& x : g) x *= p.p;
    gens.push_back(std::move(g));
  }
  return make(gens);
}

bool ZBackend::member(const Sub& n, const std::vector<Int>& v) const {
  check(n);
  return hnf_member(n.lattice, v);
}

std::size_t ZBackend::step_cap(const Sub& n) const {
  SnfDivisors q = quotient_divisors(n);
  std::size_t bits = 0;
  for (auto& d : q.divisors) bits += static_cast<std::size_t>(msb(d + 1)) + 1;
  return 10 * (bits + static_cast<std::size_t>(n_) + static_cast<std::size_t>(q.free_rank) + 1);
}

std::string ZBackend::show(const Sub& n) const {
  if (is_whole(n)) return "M";
  if (n.lattice.cols() == 0) return "0";
  return n.lattice.to_string();
}

}  // namespace gpif
