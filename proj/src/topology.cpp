#include "alexmod/topology.hpp"

#include "alexmod/errors.hpp"
#include "alexmod/s0.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace alexmod {

namespace {

std::string show(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::string show(const Exponents& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

Exponents add(Exponents a, const Exponents& b, std::int64_t sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], checked_mul(sign, b[i]));
  return a;
}

} // namespace

void SimplicialComplexInput::validate() const {
  std::set<Simplex> seen;
  for (const auto& s : simplices) {
    if (s.empty()) throw InputError("simplicial complex: empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= num_vertices) throw InputError("simplicial complex: vertex out of range in " + show(s));
      if (i > 0 && s[i] <= s[i - 1]) throw InputError("simplicial complex: vertices not increasing in " + show(s));
    }
    if (!seen.insert(s).second) throw InputError("simplicial complex: duplicate simplex " + show(s));
  }
  for (const auto& s : simplices) {
    if (s.size() == 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      if (!seen.count(f)) throw InputError("simplicial complex: face " + show(f) + " of " + show(s) + " is missing");
    }
  }
}

int SimplicialComplexInput::dimension() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::vector<Simplex> SimplicialComplexInput::cells(std::size_t k) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices)
    if (s.size() == k + 1) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

Exponents TorusCocycle::value(std::size_t i, std::size_t j) const {
  if (i == j) return Exponents(n, 0);
  auto it = omega.find({std::min(i, j), std::max(i, j)});
  if (it == omega.end())
    throw InputError("cocycle: no value on edge [" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "]");
  if (i < j) return it->second;
  return add(Exponents(n, 0), it->second, -1);
}

void validate_cocycle(const SimplicialComplexInput& k, const TorusCocycle& w) {
  k.validate();
  if (w.n == 0) throw InputError("cocycle: torus dimension must be positive");
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : k.cells(1)) edges.insert({e[0], e[1]});
  for (const auto& [e, v] : w.omega) {
    if (e.first >= e.second) throw InputError("cocycle: edge [" + std::to_string(e.first) + "," + std::to_string(e.second) + "] must have i < j");
    if (!edges.count(e)) throw InputError("cocycle: [" + std::to_string(e.first) + "," + std::to_string(e.second) + "] is not an edge of the complex");
    if (v.size() != w.n) throw InputError("cocycle: value on [" + std::to_string(e.first) + "," + std::to_string(e.second) + "] must have length " + std::to_string(w.n));
  }
  for (const auto& e : edges)
    if (!w.omega.count(e)) throw InputError("cocycle: missing value on edge [" + std::to_string(e.first) + "," + std::to_string(e.second) + "]");
  for (const auto& s : k.cells(2)) {
    Exponents c = add(add(w.value(s[1], s[2]), w.value(s[0], s[2]), -1), w.value(s[0], s[1]));
    if (c != Exponents(w.n, 0)) throw InputError("cocycle: not closed on " + show(s) + ", sum " + show(c));
  }
}

std::vector<std::size_t> TwistedComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& c : cells) r.push_back(c.size());
  return r;
}

CochainComplex TwistedComplex::cochains() const {
  CochainComplex c;
  c.nvars = nvars;
  c.ranks = ranks();
  for (std::size_t k = 1; k < boundary.size(); ++k) c.d.push_back(boundary[k].conjugate().transpose());
  return c;
}

TwistedComplex twisted_chain_complex(const SimplicialComplexInput& k, const TorusCocycle& w) {
  validate_cocycle(k, w);
  TwistedComplex tc;
  tc.nvars = w.n;
  const int dim = k.dimension();
  for (int q = 0; q <= dim; ++q) tc.cells.push_back(k.cells(static_cast<std::size_t>(q)));
  if (dim < 0) return tc;
  tc.boundary.push_back(LaurentMatrix(w.n, 0, tc.cells[0].size()));
  for (std::size_t q = 1; q < tc.cells.size(); ++q) {
    const auto& lower = tc.cells[q - 1];
    LaurentMatrix b(w.n, lower.size(), tc.cells[q].size());
    for (std::size_t j = 0; j < tc.cells[q].size(); ++j) {
      const Simplex& s = tc.cells[q][j];
      for (std::size_t i = 0; i <= q; ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        const auto row = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), f) - lower.begin());
        if (i == 0)
          b(row, j) += LaurentPoly::monomial(w.n, w.value(s[0], s[1]));
        else
          b(row, j) += LaurentPoly::constant(w.n, i % 2 ? -1 : 1);
      }
    }
    tc.boundary.push_back(std::move(b));
  }
  for (std::size_t q = 2; q < tc.boundary.size(); ++q)
    if (!(tc.boundary[q - 1] * tc.boundary[q]).is_zero())
      throw InternalError("twisted boundary does not square to zero in degree " + std::to_string(q));
  return tc;
}

std::vector<FPModule> twisted_cohomology_all(const SimplicialComplexInput& k, const TorusCocycle& w) {
  CochainComplex c = cancel_units(twisted_chain_complex(k, w).cochains());
  std::vector<FPModule> out;
  for (std::size_t i = 0; i < c.ranks.size(); ++i) out.push_back(cohomology(c, i));
  return out;
}

FPModule twisted_cohomology(const SimplicialComplexInput& k, const TorusCocycle& w, std::size_t i) {
  const int dim = k.dimension();
  if (static_cast<long>(i) > std::max(dim, 0))
    throw InputError("twisted_cohomology: degree " + std::to_string(i) + " exceeds the dimension of the complex");
  CochainComplex c = cancel_units(twisted_chain_complex(k, w).cochains());
  if (i >= c.ranks.size()) return FPModule::free(w.n, 0);
  return cohomology(c, i);
}

ArtinianModule s0_of(const FPModule& m) {
  if (m.nvars == 1) return torsion_summary(m);
  return s0_submodule(m).module;
}

ArtinianModule alexander_s0(const SimplicialComplexInput& k, const TorusCocycle& w, std::size_t i) {
  return s0_of(twisted_cohomology(k, w, i));
}

} // namespace alexmod
