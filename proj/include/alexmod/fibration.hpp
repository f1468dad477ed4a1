#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/check.hpp"
#include "alexmod/laurent.hpp"
#include "alexmod/pid.hpp"
#include "alexmod/qmatrix.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace alexmod {

/// Monodromy data of a locally trivial fibration over B, with B mapping to
/// the n-torus. Loops of B are words in the generators: signed 1-based
/// indices, -j for the inverse of generator j. kernel_words are meant to
/// normally generate K = ker(pi_1(B) -> Z^n); normal generation itself cannot
/// be checked and is taken on trust.
struct FibrationModel {
  std::size_t n = 1;
  std::vector<std::string> generators;
  std::vector<Exponents> images; ///< image of each generator in Z^n
  std::vector<std::vector<int>> kernel_words;
  /// degree -> one matrix per generator (action on the fiber (co)homology)
  std::map<std::size_t, std::vector<QMatrix>> degrees;
  std::vector<std::size_t> fiber_betti;

  /// Throws InputError on malformed data: kernel words with nonzero image,
  /// images not generating Z^n, non-square or singular matrices, sizes that
  /// disagree with fiber_betti.
  void validate() const;

  /// rho(word) in the given degree, rho(g_a g_b) = rho(g_a) rho(g_b).
  QMatrix word_matrix(std::size_t degree, const std::vector<int>& word) const;
  /// Integer exponents c with sum_j c_j images[j] = e_i (0-based i).
  std::vector<std::int64_t> lift_basis_vector(std::size_t i) const;
};

/// Basis (columns) of the largest subspace W of the degree-d data fixed
/// pointwise by every kernel word and stable under every generator.
QMatrix invariant_subspace(const FibrationModel& f, std::size_t degree);

/// W for degree i - n, with t_i acting as rho of a word mapping to e_i.
ArtinianModule kernel_invariants(const FibrationModel& f, std::size_t i);

/// Basis of the smallest generator-stable subspace containing every
/// (rho(w) - I) v for kernel words w.
QMatrix coinvariant_relations(const FibrationModel& f, std::size_t degree);

/// Homology data in degree i divided by coinvariant_relations, t acting by the
/// induced map of a loop mapping to 1. Requires n = 1.
ArtinianModule kernel_coinvariants(const FibrationModel& f, std::size_t i);

/// Whether H_Y = H_X (+) A^fiber_betti: exact invariant factors for n = 1;
/// generic rank plus S0 (dimension and per-variable similarity) for n >= 2.
Check remove_fiber_check(const FPModule& hx, const FPModule& hy, std::size_t fiber_betti, std::size_t n);

} // namespace alexmod
