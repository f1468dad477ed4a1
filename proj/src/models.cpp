#include "alexmod/models.hpp"

#include "alexmod/errors.hpp"

#include <algorithm>
#include <set>

namespace alexmod::models {

namespace {

SimplicialComplexInput close_under_faces(std::size_t nv, const std::set<Simplex>& tops) {
  std::set<Simplex> all;
  for (const auto& s : tops) {
    const std::size_t k = s.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) f.push_back(s[i]);
      all.insert(f);
    }
  }
  return {nv, std::vector<Simplex>(all.begin(), all.end())};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

} // namespace

Model circle(std::int64_t winding, std::size_t m) {
  if (m < 3) throw InputError("circle model needs at least 3 vertices");
  Model out;
  out.complex.num_vertices = m;
  out.cocycle.n = 1;
  for (std::size_t v = 0; v < m; ++v) out.complex.simplices.push_back({v});
  for (std::size_t v = 0; v + 1 < m; ++v) {
    out.complex.simplices.push_back({v, v + 1});
    out.cocycle.omega[{v, v + 1}] = {v == 0 ? winding : 0};
  }
  out.complex.simplices.push_back({0, m - 1});
  out.cocycle.omega[{0, m - 1}] = {0};
  return out;
}

Model wedge(std::int64_t a, std::int64_t b) {
  Model out;
  out.complex.num_vertices = 5;
  out.cocycle.n = 1;
  for (std::size_t v = 0; v < 5; ++v) out.complex.simplices.push_back({v});
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}};
  for (const auto& [i, j] : edges) {
    out.complex.simplices.push_back({i, j});
    out.cocycle.omega[{i, j}] = {0};
  }
  out.cocycle.omega[{0, 1}] = {a};
  out.cocycle.omega[{0, 3}] = {b};
  return out;
}

Model product(const Model& x, const Model& y) {
  x.complex.validate();
  y.complex.validate();
  const std::size_t ny = y.complex.num_vertices;
  std::set<Simplex> tops;
  for (const auto& s : x.complex.simplices)
    for (const auto& t : y.complex.simplices) {
      const std::size_t p = s.size() - 1, q = t.size() - 1;
      // monotone lattice paths from (0, 0) to (p, q), encoded by the steps
      // that advance the first coordinate
      for (std::size_t mask = 0; mask < (std::size_t{1} << (p + q)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != p) continue;
        Simplex sim{s[0] * ny + t[0]};
        std::size_t i = 0, j = 0;
        for (std::size_t step = 0; step < p + q; ++step) {
          if (mask >> step & 1)
            ++i;
          else
            ++j;
          sim.push_back(s[i] * ny + t[j]);
        }
        tops.insert(sim);
      }
    }
  Model out;
  out.complex = close_under_faces(x.complex.num_vertices * ny, tops);
  out.cocycle.n = x.cocycle.n + y.cocycle.n;
  for (const auto& e : out.complex.cells(1)) {
    Exponents v = x.cocycle.value(e[0] / ny, e[1] / ny);
    if (e[0] / ny == e[1] / ny) v = Exponents(x.cocycle.n, 0);
    Exponents w = y.cocycle.value(e[0] % ny, e[1] % ny);
    if (e[0] % ny == e[1] % ny) w = Exponents(y.cocycle.n, 0);
    v.insert(v.end(), w.begin(), w.end());
    out.cocycle.omega[{e[0], e[1]}] = v;
  }
  return out;
}

Model project(const Model& m, const std::vector<std::size_t>& keep) {
  Model out{m.complex, {}};
  out.cocycle.n = keep.size();
  for (const auto& [e, v] : m.cocycle.omega) {
    Exponents w;
    for (std::size_t c : keep) {
      if (c >= v.size()) throw InputError("project: coordinate out of range");
      w.push_back(v[c]);
    }
    out.cocycle.omega[e] = w;
  }
  return out;
}

Model seven_vertex_torus(const std::vector<std::array<std::int64_t, 2>>& classes) {
  // Vertex (a, b) of the triangular lattice is labelled a + 3b mod 7; the
  // quotient lattice is spanned by (7, 0) and (-3, 1). A class (al, be) is the
  // functional F(a, b) = (al a + (3 al + 7 be) b) / 7, and floor(F) on the
  // lattice descends to an integral cocycle.
  Model out;
  out.complex.num_vertices = 7;
  out.cocycle.n = classes.size();
  std::set<Simplex> tops;
  for (std::size_t x = 0; x < 7; ++x) {
    Simplex s1{x, (x + 1) % 7, (x + 3) % 7}, s2{x, (x + 2) % 7, (x + 3) % 7};
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    tops.insert(s1);
    tops.insert(s2);
  }
  out.complex = close_under_faces(7, tops);
  auto step = [](std::size_t d) -> std::array<std::int64_t, 2> {
    switch (d) {
      case 1: return {1, 0};
      case 2: return {-1, 1};
      case 3: return {0, 1};
      case 4: return {0, -1};
      case 5: return {1, -1};
      default: return {-1, 0};
    }
  };
  for (const auto& e : out.complex.cells(1)) {
    const auto [da, db] = step((e[1] + 7 - e[0]) % 7);
    const auto a = static_cast<std::int64_t>(e[0]);
    Exponents v;
    for (const auto& [al, be] : classes) {
      auto g = [&](std::int64_t pa, std::int64_t pb) { return floor_div(al * pa + (3 * al + 7 * be) * pb, 7); };
      v.push_back(g(a + da, db) - g(a, 0));
    }
    out.cocycle.omega[{e[0], e[1]}] = v;
  }
  return out;
}

Model coboundary_shift(const Model& m, const std::vector<Exponents>& phi) {
  if (phi.size() != m.complex.num_vertices) throw InputError("coboundary_shift: one potential per vertex");
  Model out = m;
  for (auto& [e, v] : out.cocycle.omega) {
    if (phi[e.first].size() != v.size() || phi[e.second].size() != v.size())
      throw InputError("coboundary_shift: potential length mismatch");
    for (std::size_t c = 0; c < v.size(); ++c)
      v[c] = checked_add(v[c], checked_add(phi[e.second][c], -phi[e.first][c]));
  }
  return out;
}

} // namespace alexmod::models
