#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/lmatrix.hpp"
#include "alexmod/upoly.hpp"

#include <cstddef>
#include <vector>

namespace alexmod {

/// Finitely presented A-module A^rank / (column span of presentation).
///
/// presentation is rank x r; its columns are the relations. An empty
/// presentation (r = 0) describes the free module A^rank.
struct FPModule {
  std::size_t nvars = 1;
  std::size_t rank = 0;
  LaurentMatrix presentation;

  static FPModule free(std::size_t nvars, std::size_t rank);
  static FPModule from_matrix(LaurentMatrix presentation);

  std::size_t num_relations() const { return presentation.cols(); }
  /// Throws InputError on inconsistent dimensions or variable counts.
  void validate() const;
};

/// U * P * V = D with U, V invertible over Q[t^{+-1}]. The inverses are kept
/// as well since kernel and cokernel computations need them.
struct SmithForm {
  LaurentMatrix U, D, V;
  LaurentMatrix U_inv, V_inv;
  std::size_t rank = 0; ///< number of nonzero diagonal entries
};

/// Smith normal form over the Euclidean domain Q[t^{+-1}] (the norm of an
/// entry is the degree of its unit-normalized core). Pivots are entries of
/// minimal norm, ties broken by row-major position. Nonzero diagonal entries
/// are monic with nonzero constant term and form a divisibility chain.
SmithForm smith_normal_form(const LaurentMatrix& p);

/// A^free_rank (+) sum_i A/(factors[i]); factors are nonunit, monic with
/// nonzero constant term, and each divides the next.
struct InvariantFactorDecomposition {
  std::size_t free_rank = 0;
  std::vector<UPoly> factors;

  friend bool operator==(const InvariantFactorDecomposition&, const InvariantFactorDecomposition&) = default;
};

InvariantFactorDecomposition invariant_factors(const FPModule& m);

/// The torsion submodule realized as Q^{sum deg d_i} with t acting by the
/// block-diagonal of companion matrices of the invariant factors (chain order).
ArtinianModule torsion_summary(const FPModule& m);
ArtinianModule torsion_summary(const InvariantFactorDecomposition& d);

/// Invariant factors of t*I - m over Q[t] (monic, nonconstant, chain order):
/// the rational canonical form data of m.
std::vector<UPoly> similarity_invariants(const QMatrix& m);
/// Conjugacy over Q.
bool similar(const QMatrix& a, const QMatrix& b);

/// Removes generator/relation pairs whose presentation entry is a unit
/// (a monomial in A), then drops zero relations. The result presents an
/// isomorphic module.
FPModule simplify_presentation(const FPModule& m);

} // namespace alexmod
