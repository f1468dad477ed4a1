#pragma once

#include "alexmod/qmatrix.hpp"

#include <cstddef>
#include <vector>

namespace alexmod {

/// A finite-dimensional Q-vector space with n commuting invertible operators,
/// the actions of t_1, ..., t_n. This is how maximal Artinian submodules and
/// local-system stalks are realized.
struct ArtinianModule {
  std::size_t nvars = 1;
  std::size_t dim = 0;
  std::vector<QMatrix> ops;

  static ArtinianModule zero(std::size_t nvars);

  /// Throws InputError unless every op is dim x dim, invertible, and the ops
  /// pairwise commute.
  void validate() const;

  /// Product of ops for a word of signed 1-based generator indices; -i means
  /// the inverse of t_i. The empty word gives the identity.
  QMatrix word_operator(const std::vector<int>& word) const;

  /// Same module with every t_i replaced by t_i^{-1}.
  ArtinianModule inverted() const;
};

} // namespace alexmod
