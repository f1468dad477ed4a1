#include "alexmod/s0.hpp"

#include "alexmod/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace alexmod {

namespace {

// Monomial making every entry of column j of m polynomial with no common
// monomial factor: the negated componentwise minimum.
Exponents column_shift(const LaurentMatrix& m, std::size_t j) {
  Exponents lo(m.nvars(), 0);
  bool first = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, j).is_zero()) continue;
    Exponents e = m(i, j).min_exponents();
    for (std::size_t v = 0; v < lo.size(); ++v) lo[v] = first ? e[v] : std::min(lo[v], e[v]);
    first = false;
  }
  for (auto& x : lo) x = -x;
  return lo;
}

LaurentMatrix normalize_columns(LaurentMatrix m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Exponents sh = column_shift(m, j);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = m(i, j).shifted(sh);
  }
  return m;
}

LaurentPoly monomial_of(const gb::Monomial& m, std::size_t nvars) {
  Exponents e(nvars);
  for (std::size_t v = 0; v < nvars; ++v) e[v] = m.e[v];
  return LaurentPoly::monomial(nvars, std::move(e));
}

} // namespace

FPModule clear_denominators(const FPModule& m) {
  m.validate();
  FPModule r = m;
  r.presentation = normalize_columns(m.presentation);
  return r;
}

LaurentPoly variable_product(std::size_t nvars) { return LaurentPoly::monomial(nvars, Exponents(nvars, 1)); }

LaurentMatrix laurent_preimage(const LaurentMatrix& b, const LaurentMatrix& l) {
  if (b.rows() != l.rows()) throw InputError("preimage: row mismatch");
  LaurentMatrix bc = b;
  std::vector<Exponents> shifts;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    shifts.push_back(column_shift(b, j));
    for (std::size_t i = 0; i < b.rows(); ++i) bc(i, j) = b(i, j).shifted(shifts.back());
  }
  LaurentMatrix c = gb::preimage(bc, normalize_columns(l));
  // B (D c') = B' c' with D = diag(t^shift)
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = c(i, j).shifted(shifts[i]);
  return normalize_columns(c);
}

LaurentMatrix laurent_kernel(const LaurentMatrix& b) { return laurent_preimage(b, LaurentMatrix(b.nvars(), b.rows(), 0)); }

S0Result s0_submodule(const FPModule& m) {
  const FPModule mr = clear_denominators(m);
  const std::size_t n = m.nvars, g = m.rank;
  S0Result zero{ArtinianModule::zero(n), LaurentMatrix(n, g, 0)};
  if (g == 0) return zero;

  FPModule ext = gb::ext_top(mr);
  if (ext.rank == 0) return zero;
  std::vector<LaurentPoly> ann = gb::annihilator(ext);
  gb::GroebnerBasis ann_gb = gb::ideal_basis(n, ann);
  if (ann_gb.is_unit_ideal()) return zero;
  const std::vector<LaurentPoly> s{variable_product(n)};
  {
    LaurentMatrix row(n, 1, ann.size());
    for (std::size_t j = 0; j < ann.size(); ++j) row(0, j) = ann[j];
    LaurentMatrix sat = gb::saturate(row, s);
    std::vector<LaurentPoly> gens;
    for (std::size_t j = 0; j < sat.cols(); ++j) gens.push_back(sat(0, j));
    if (gb::krull_dim(n, gens) > 0)
      throw InternalError("support of the top Ext module is not zero-dimensional away from s = 0");
  }

  // finite-length part T of M_R, generated by tau modulo the relations
  LaurentMatrix t = gb::saturate(mr.presentation, ann);
  gb::GroebnerBasis rel_gb = gb::buchberger(mr.presentation);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < t.cols(); ++j)
    if (!gb::contains(rel_gb, t.block(0, j, g, 1))) keep.push_back(j);
  if (keep.empty()) return zero;
  LaurentMatrix tau(n, g, keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t i = 0; i < g; ++i) tau(i, k) = t(i, keep[k]);

  LaurentMatrix q = gb::preimage(tau, mr.presentation);
  LaurentMatrix qs = gb::saturate(q, s);
  gb::GroebnerBasis qgb = gb::buchberger(qs);
  auto quotient = gb::standard_basis(qgb);
  if (!quotient) throw InternalError("localized finite-length part has infinitely many standard monomials");

  S0Result out;
  out.module = std::move(quotient->module);
  try {
    out.module.validate();
  } catch (const InputError& e) {
    throw InternalError(std::string("maximal Artinian submodule is malformed: ") + e.what());
  }
  const std::size_t dim = out.module.dim;
  out.inclusion = LaurentMatrix(n, g, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    LaurentPoly mono = monomial_of(quotient->monos[k], n);
    for (std::size_t i = 0; i < g; ++i) out.inclusion(i, k) = mono * tau(i, quotient->positions[k]);
  }
  return out;
}

std::optional<ArtinianModule> artinian_realization(const FPModule& m) {
  const FPModule mr = clear_denominators(m);
  if (m.rank == 0) return ArtinianModule::zero(m.nvars);
  LaurentMatrix sat = gb::saturate(mr.presentation, {variable_product(m.nvars)});
  auto q = gb::standard_basis(gb::buchberger(sat));
  if (!q) return std::nullopt;
  return q->module;
}

bool is_zero_module(const FPModule& m) {
  auto a = artinian_realization(m);
  return a && a->dim == 0;
}

std::size_t module_rank(const FPModule& m) {
  m.validate();
  return m.rank - gb::generic_rank(m.presentation);
}

} // namespace alexmod
