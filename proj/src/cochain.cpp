#include "alexmod/cochain.hpp"

#include "alexmod/errors.hpp"
#include "alexmod/s0.hpp"

#include <optional>
#include <string>
#include <utility>

namespace alexmod {

void CochainComplex::validate() const {
  if (d.size() + 1 != ranks.size() && !(ranks.empty() && d.empty()))
    throw InputError("cochain complex: need one differential between consecutive degrees");
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].nvars() != nvars) throw InputError("cochain complex: variable count mismatch");
    if (d[k].rows() != ranks[k + 1] || d[k].cols() != ranks[k])
      throw InputError("cochain complex: differential " + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < d.size(); ++k)
    if (!(d[k + 1] * d[k]).is_zero())
      throw InternalError("cochain complex: d^2 != 0 in degree " + std::to_string(k));
}

namespace {

// unit entry of m with the least fill-in
std::optional<std::pair<std::size_t, std::size_t>> pick_unit(const LaurentMatrix& m) {
  std::vector<std::size_t> rn(m.rows(), 0), cn(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        ++rn[i];
        ++cn[j];
      }
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_cost = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_unit()) continue;
      const std::size_t cost = (rn[i] - 1) * (cn[j] - 1);
      if (!best || cost < best_cost) {
        best = {i, j};
        best_cost = cost;
      }
    }
  return best;
}

} // namespace

CochainComplex cancel_units(CochainComplex c) {
  c.validate();
  for (std::size_t k = 0; k < c.d.size(); ++k) {
    for (;;) {
      auto pick = pick_unit(c.d[k]);
      if (!pick) break;
      auto [i, j] = *pick;
      LaurentMatrix& m = c.d[k];
      const LaurentPoly uinv = m(i, j).unit_inverse();
      for (std::size_t jj = 0; jj < m.cols(); ++jj) {
        if (jj == j || m(i, jj).is_zero()) continue;
        const LaurentPoly f = m(i, jj) * uinv;
        for (std::size_t ii = 0; ii < m.rows(); ++ii)
          if (ii != i && !m(ii, j).is_zero()) m(ii, jj) -= m(ii, j) * f;
      }
      m = m.without_row(i).without_column(j);
      if (k > 0) c.d[k - 1] = c.d[k - 1].without_row(j);
      if (k + 1 < c.d.size()) c.d[k + 1] = c.d[k + 1].without_column(i);
      --c.ranks[k];
      --c.ranks[k + 1];
    }
    // a cancellation in degree k can create units in degree k - 1
    if (k > 0 && pick_unit(c.d[k - 1])) k -= 2;
  }
  return c;
}

FPModule cohomology(const CochainComplex& c, std::size_t k) {
  if (k >= c.ranks.size()) throw InputError("cohomology: degree " + std::to_string(k) + " out of range");
  const std::size_t n = c.nvars, rk = c.ranks[k];
  if (rk == 0) return FPModule::free(n, 0);
  const LaurentMatrix out = k < c.d.size() ? c.d[k] : LaurentMatrix(n, 0, rk);
  const LaurentMatrix in = k > 0 ? c.d[k - 1] : LaurentMatrix(n, rk, 0);

  LaurentMatrix pres;
  if (n == 1) {
    // ker(out) is free on the last columns of V; V_inv gives coordinates
    LaurentMatrix vinv = LaurentMatrix::identity(n, rk);
    std::size_t r = 0;
    if (out.rows() > 0) {
      SmithForm s = smith_normal_form(out);
      vinv = s.V_inv;
      r = s.rank;
    }
    if (r == rk) return FPModule::free(n, 0);
    pres = vinv.block(r, 0, rk - r, rk) * in;
  } else {
    LaurentMatrix ker = out.rows() > 0 ? laurent_kernel(out) : LaurentMatrix::identity(n, rk);
    if (ker.cols() == 0) return FPModule::free(n, 0);
    pres = laurent_preimage(ker, in);
  }
  FPModule h;
  h.nvars = n;
  h.rank = pres.rows();
  h.presentation = std::move(pres);
  return simplify_presentation(h);
}

} // namespace alexmod
