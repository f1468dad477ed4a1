#include "alexmod/mellin.hpp"

#include "alexmod/errors.hpp"

#include <string>

namespace alexmod {

void LocalSystem::validate() const {
  if (n == 0) throw InputError("local system: torus dimension must be positive");
  if (monodromies.size() != n) throw InputError("local system: need one monodromy matrix per torus coordinate");
  for (std::size_t i = 0; i < n; ++i) {
    const QMatrix& m = monodromies[i];
    if (m.rows() != rank || m.cols() != rank)
      throw InputError("local system: monodromy " + std::to_string(i + 1) + " is not " + std::to_string(rank) + " x " + std::to_string(rank));
    if (rank > 0 && determinant(m) == 0) throw InputError("local system: monodromy " + std::to_string(i + 1) + " is singular");
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(m, monodromies[j]))
        throw InputError("local system: monodromies " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " do not commute");
  }
}

MellinStalk mellin_stalk(const LocalSystem& l) {
  l.validate();
  MellinStalk out;
  out.degree = l.n;
  out.module.nvars = l.n;
  out.module.dim = l.rank;
  for (const auto& m : l.monodromies) out.module.ops.push_back(inverse_or_throw(m, "monodromy"));
  return out;
}

CochainComplex koszul_complex(const LocalSystem& l) {
  l.validate();
  const std::size_t n = l.n, r = l.rank;
  std::vector<LaurentMatrix> delta;
  for (std::size_t j = 0; j < n; ++j) {
    LaurentMatrix d = LaurentMatrix::from_rational(n, l.monodromies[j]);
    const LaurentPoly t = LaurentPoly::variable(n, j);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) d(a, b) = d(a, b) * t;
    delta.push_back(d - LaurentMatrix::identity(n, r));
  }
  // subsets of each size, as bitmasks in increasing order
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned s = 0; s < (1u << n); ++s) subsets[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);

  CochainComplex c;
  c.nvars = n;
  for (std::size_t p = 0; p <= n; ++p) c.ranks.push_back(subsets[p].size() * r);
  for (std::size_t p = 0; p < n; ++p) {
    LaurentMatrix d(n, c.ranks[p + 1], c.ranks[p]);
    for (std::size_t col = 0; col < subsets[p].size(); ++col) {
      const unsigned s = subsets[p][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (s >> j & 1) continue;
        const unsigned below = s & ((1u << j) - 1);
        const Rational sign = __builtin_popcount(below) % 2 ? -1 : 1;
        std::size_t row = 0;
        while (subsets[p + 1][row] != (s | 1u << j)) ++row;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b) d(row * r + a, col * r + b) = delta[j](a, b) * sign;
      }
    }
    c.d.push_back(std::move(d));
  }
  c.validate();
  return c;
}

FPModule koszul_mellin(const LocalSystem& l, std::size_t i) {
  if (i > l.n) throw InputError("koszul_mellin: degree " + std::to_string(i) + " out of range 0.." + std::to_string(l.n));
  return cohomology(cancel_units(koszul_complex(l)), i);
}

} // namespace alexmod
