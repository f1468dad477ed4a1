#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/cochain.hpp"
#include "alexmod/pid.hpp"
#include "alexmod/qmatrix.hpp"

#include <cstddef>
#include <vector>

namespace alexmod {

/// A Q-local system on the n-torus: n pairwise commuting invertible r x r
/// monodromy matrices.
struct LocalSystem {
  std::size_t n = 1;
  std::size_t rank = 0;
  std::vector<QMatrix> monodromies;

  /// Throws InputError on wrong counts or shapes, a singular matrix or a
  /// non-commuting pair.
  void validate() const;
};

struct MellinStalk {
  std::size_t degree = 0;
  ArtinianModule module;
};

/// The Mellin transform of a local system sits in the single degree n and is
/// the stalk with t_i acting by the inverse monodromy M_i^{-1}.
MellinStalk mellin_stalk(const LocalSystem& l);

/// Koszul cochain complex of the commuting operators t_j M_j - I on A^r:
/// degree p has one copy of A^r per p-element subset of {1..n} (subsets in
/// increasing bitmask order).
CochainComplex koszul_complex(const LocalSystem& l);

/// H^i of the Koszul complex, 0 <= i <= n.
FPModule koszul_mellin(const LocalSystem& l, std::size_t i);

} // namespace alexmod
