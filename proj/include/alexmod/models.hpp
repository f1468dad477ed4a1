#pragma once

#include "alexmod/topology.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

// Small triangulated spaces with maps to a torus, used as worked examples and
// test fixtures.
namespace alexmod::models {

struct Model {
  SimplicialComplexInput complex;
  TorusCocycle cocycle;
};

/// Boundary of a polygon with m >= 3 vertices; the edge [0,1] carries the
/// whole winding (n = 1).
Model circle(std::int64_t winding = 1, std::size_t m = 3);

/// Two triangles glued at vertex 0: loops 0-1-2 and 0-3-4 with windings a
/// and b (n = 1). With (1, 0) this is C^* minus a point mapped into C^*.
Model wedge(std::int64_t a = 1, std::int64_t b = 0);

/// Vertices of the product are pairs (a, b) numbered a * |V2| + b; simplices
/// are the staircase triangulations of products of simplices. The cocycle
/// takes values in Z^{n1 + n2}, first factor first.
Model product(const Model& x, const Model& y);

/// Keeps the coordinates listed in `keep` (a map to a subtorus, or a
/// projection of a product).
Model project(const Model& m, const std::vector<std::size_t>& keep);

/// Seven-vertex torus with the cocycle of the class (a, b) in
/// Hom(pi_1, Z^n) = Z^2 ⊗ Z^n, one row per target coordinate.
Model seven_vertex_torus(const std::vector<std::array<std::int64_t, 2>>& classes);

/// Replaces w by w + d(phi) for a vertex potential phi (one Z^n vector per
/// vertex).
Model coboundary_shift(const Model& m, const std::vector<Exponents>& phi);

} // namespace alexmod::models
