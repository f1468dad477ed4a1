#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/groebner.hpp"
#include "alexmod/pid.hpp"

#include <optional>
#include <vector>

// Module computations over A = Q[t1^{+-1}, ..., tn^{+-1}] reduced to the
// polynomial ring R = Q[x1, ..., xn] by clearing denominators; A = R[1/s] with
// s = x1 * ... * xn.
namespace alexmod {

/// Multiplies every relation by a monomial so that all exponents are
/// nonnegative. The result M_R satisfies M_R[1/s] = M.
FPModule clear_denominators(const FPModule& m);

/// The product of all variables.
LaurentPoly variable_product(std::size_t nvars);

/// Generators over A of {v in A^p : B v in span_A(L)}; each generator is
/// rescaled to have nonnegative exponents with no common monomial factor.
LaurentMatrix laurent_preimage(const LaurentMatrix& b, const LaurentMatrix& l);
/// Generators over A of the kernel of B.
LaurentMatrix laurent_kernel(const LaurentMatrix& b);

struct S0Result {
  ArtinianModule module;
  /// g x qdim: column k is an element of A^g whose class in M is the k-th
  /// basis vector of the module.
  LaurentMatrix inclusion;
};

/// Maximal Artinian submodule of M = A^g / span(P).
///
/// Clears denominators to M_R, takes I = Ann_R Ext^n_R(M_R, R), saturates the
/// relations at I to get the finite-length part T of M_R, and localizes T at s
/// to read off a Q-basis of standard monomials. Throws InternalError if the
/// theory-guaranteed finiteness fails.
S0Result s0_submodule(const FPModule& m);

/// M as an Artinian module when it is finite-dimensional over Q.
std::optional<ArtinianModule> artinian_realization(const FPModule& m);
bool is_zero_module(const FPModule& m);
/// Rank over the fraction field of A.
std::size_t module_rank(const FPModule& m);

} // namespace alexmod
