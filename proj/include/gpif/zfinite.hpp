#ifndef GPIF_ZFINITE_HPP
#define GPIF_ZFINITE_HPP

#include <optional>

#include "gpif/finite_oracle.hpp"
#include "gpif/zmodule.hpp"

namespace gpif {

// Carries the isomorphism Z^n / relations ~ Z/d_1 x ... x Z/d_n given by the
// left Smith transform, so lattice submodules can be compared against the
// brute-force oracle elementwise.
class FiniteBridge {
 public:
  // nullopt when the quotient is infinite or larger than `bound`.
  static std::optional<FiniteBridge> make(const ZBackend& backend, int bound = FiniteModule::kDefaultBound);

  const FiniteModule& module() const { return module_; }
  const ZBackend& backend() const { return backend_; }

  int map_vector(const std::vector<Int>& x) const;
  FiniteSubmodule map_sub(const ZSubmodule& n) const;

 private:
  FiniteBridge(ZBackend backend, SmithForm smith, FiniteModule module)
      : backend_(std::move(backend)), smith_(std::move(smith)), module_(std::move(module)) {}

  ZBackend backend_;
  SmithForm smith_;
  FiniteModule module_;
};

inline std::optional<FiniteBridge> FiniteBridge::make(const ZBackend& backend, int bound) {
  SmithForm s = smith(backend.relations());
  if (s.free_rank > 0) return std::nullopt;
  Int size = 1;
  std::vector<std::int64_t> divisors;
  for (auto& d : s.divisors) {
    size *= d;
    if (size > bound) return std::nullopt;
    divisors.push_back(d.convert_to<std::int64_t>());
  }
  return FiniteBridge(backend, std::move(s), FiniteModule(divisors, bound));
}

inline int FiniteBridge::map_vector(const std::vector<Int>& x) const {
  std::vector<std::int64_t> t(module_.divisors().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Int y = 0;
    for (int l = 0; l < smith_.left.cols(); ++l)
      y += smith_.left.at(static_cast<int>(i), l) * x[static_cast<std::size_t>(l)];
    Int d = module_.divisors()[i];
    Int r = y % d;
    if (r < 0) r += d;
    t[i] = r.convert_to<std::int64_t>();
  }
  return module_.index(t);
}

inline FiniteSubmodule FiniteBridge::map_sub(const ZSubmodule& n) const {
  std::vector<int> seed;
  for (int j = 0; j < n.lattice.cols(); ++j) seed.push_back(map_vector(n.lattice.column(j)));
  return closure(module_, seed);
}

}  // namespace gpif

#endif
