#pragma once

#include "alexmod/lmatrix.hpp"
#include "alexmod/pid.hpp"

#include <cstddef>
#include <vector>

namespace alexmod {

/// Bounded cochain complex of free A-modules C^0 -> C^1 -> ... -> C^top.
///
/// d[k] : C^k -> C^{k+1} is a ranks[k+1] x ranks[k] matrix acting on column
/// vectors; d has ranks.size() - 1 entries.
struct CochainComplex {
  std::size_t nvars = 1;
  std::vector<std::size_t> ranks;
  std::vector<LaurentMatrix> d;

  std::size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  /// Throws InputError on shape mismatches, InternalError if d[k+1] d[k] != 0.
  void validate() const;
};

/// Cancels pairs of basis elements joined by a unit (monomial) entry of some
/// differential until none is left. The result is homotopy equivalent over A,
/// so its cohomology modules are isomorphic to those of the input.
CochainComplex cancel_units(CochainComplex c);

/// Presentation of H^k. For one variable the kernel is read off a Smith form;
/// otherwise generators of the kernel come from a syzygy computation and the
/// relations from a preimage. The presentation is simplified before return.
FPModule cohomology(const CochainComplex& c, std::size_t k);

} // namespace alexmod
