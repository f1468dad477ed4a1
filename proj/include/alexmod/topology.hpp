#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/cochain.hpp"
#include "alexmod/laurent.hpp"
#include "alexmod/lmatrix.hpp"
#include "alexmod/pid.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace alexmod {

using Simplex = std::vector<std::size_t>;

/// Finite simplicial complex on vertices 0..num_vertices-1. Every simplex is
/// a strictly increasing vertex list and all of its faces must be listed as
/// well (isolated vertices included).
struct SimplicialComplexInput {
  std::size_t num_vertices = 0;
  std::vector<Simplex> simplices;

  /// Throws InputError on out-of-range or unsorted vertices, duplicates or a
  /// missing face.
  void validate() const;
  /// -1 for the empty complex.
  int dimension() const;
  /// Simplices of dimension k in lexicographic order.
  std::vector<Simplex> cells(std::size_t k) const;
};

/// Z^n-valued 1-cochain on oriented edges (i, j), i < j.
struct TorusCocycle {
  std::size_t n = 1;
  std::map<std::pair<std::size_t, std::size_t>, Exponents> omega;

  /// Value on the edge {i, j} oriented from i to j (either order).
  Exponents value(std::size_t i, std::size_t j) const;
};

/// Throws InputError if an edge of k has no value, a value has the wrong
/// length, a value sits on a non-edge, or closedness fails on a 2-simplex.
void validate_cocycle(const SimplicialComplexInput& k, const TorusCocycle& w);

/// Chain complex C_k = A^{#k-simplices}. boundary[k] : C_k -> C_{k-1} for
/// k >= 1 (boundary[0] is the 0 x #vertices zero map). The face opposite the
/// first vertex v0 is transported back to v0 by t^{w(v0 v1)}.
struct TwistedComplex {
  std::size_t nvars = 1;
  std::vector<std::vector<Simplex>> cells;
  std::vector<LaurentMatrix> boundary;

  std::vector<std::size_t> ranks() const;
  /// Cochains Hom_A(C_k, A) with the conjugate module structure: the
  /// differential C^k -> C^{k+1} is the conjugate transpose of boundary[k+1].
  CochainComplex cochains() const;
};

/// Builds the complex and checks that consecutive boundaries compose to 0.
TwistedComplex twisted_chain_complex(const SimplicialComplexInput& k, const TorusCocycle& w);

/// H^i(X, L_X) as a finitely presented A-module; 0 <= i <= dim K.
FPModule twisted_cohomology(const SimplicialComplexInput& k, const TorusCocycle& w, std::size_t i);
/// All degrees 0..dim K at once (cheaper: the complex is built and reduced once).
std::vector<FPModule> twisted_cohomology_all(const SimplicialComplexInput& k, const TorusCocycle& w);

/// The maximal Artinian submodule of H^i: the torsion summary for n = 1,
/// s0_submodule otherwise.
ArtinianModule alexander_s0(const SimplicialComplexInput& k, const TorusCocycle& w, std::size_t i);
ArtinianModule s0_of(const FPModule& m);

} // namespace alexmod
