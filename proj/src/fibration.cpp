#include "alexmod/fibration.hpp"

#include "alexmod/errors.hpp"
#include "alexmod/s0.hpp"
#include "alexmod/topology.hpp"

#include <cstdlib>
#include <utility>

namespace alexmod {

namespace {

// Column operations over Z bringing g (n x k) to [L | 0] with L lower
// triangular; v tracks them (g_in * v = g_out).
struct ColumnEchelon {
  std::vector<std::vector<Integer>> g; // n rows
  std::vector<std::vector<Integer>> v; // k x k
};

ColumnEchelon column_echelon(const std::vector<Exponents>& images, std::size_t n) {
  const std::size_t k = images.size();
  ColumnEchelon e;
  e.g.assign(n, std::vector<Integer>(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) e.g[i][j] = Integer(static_cast<long>(images[j][i]));
  e.v.assign(k, std::vector<Integer>(k, 0));
  for (std::size_t j = 0; j < k; ++j) e.v[j][j] = 1;
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) { // col dst -= q col src
    for (auto& row : e.g) row[dst] -= q * row[src];
    for (auto& row : e.v) row[dst] -= q * row[src];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : e.g) std::swap(row[a], row[b]);
    for (auto& row : e.v) std::swap(row[a], row[b]);
  };
  std::size_t piv = 0;
  for (std::size_t i = 0; i < n && piv < k; ++i) {
    // Euclid across columns piv..k-1 in row i
    for (;;) {
      std::size_t best = k;
      for (std::size_t j = piv; j < k; ++j)
        if (e.g[i][j] != 0 && (best == k || abs(e.g[i][j]) < abs(e.g[i][best]))) best = j;
      if (best == k) break;
      swap_cols(piv, best);
      bool done = true;
      for (std::size_t j = piv + 1; j < k; ++j) {
        if (e.g[i][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), e.g[i][j].get_mpz_t(), e.g[i][piv].get_mpz_t());
        col_op(j, piv, q);
        if (e.g[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (e.g[i][piv] != 0) ++piv;
  }
  return e;
}

std::string show_word(const std::vector<int>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

// matrix of the restriction of op to the invariant subspace spanned by basis
QMatrix restrict_to(const QMatrix& basis, const QMatrix& op) {
  auto x = solve(basis, op * basis);
  if (!x) throw InternalError("subspace is not invariant under the operator");
  return *x;
}

} // namespace

void FibrationModel::validate() const {
  if (n == 0) throw InputError("fibration: torus dimension must be positive");
  const std::size_t k = generators.size();
  if (images.size() != k) throw InputError("fibration: need one image per generator");
  for (std::size_t j = 0; j < k; ++j)
    if (images[j].size() != n) throw InputError("fibration: image of " + generators[j] + " must have length " + std::to_string(n));
  auto e = column_echelon(images, n);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= k || abs(e.g[i][i]) != 1) throw InputError("fibration: generator images do not generate Z^" + std::to_string(n));
  for (const auto& w : kernel_words) {
    Exponents sum(n, 0);
    for (int a : w) {
      if (a == 0 || static_cast<std::size_t>(std::abs(a)) > k)
        throw InputError("fibration: generator index " + std::to_string(a) + " out of range in kernel word " + show_word(w));
      const auto& img = images[static_cast<std::size_t>(std::abs(a)) - 1];
      for (std::size_t i = 0; i < n; ++i) sum[i] = checked_add(sum[i], a > 0 ? img[i] : -img[i]);
    }
    if (sum != Exponents(n, 0)) throw InputError("fibration: kernel word " + show_word(w) + " does not map to 0");
  }
  for (const auto& [deg, mats] : degrees) {
    if (mats.size() != k) throw InputError("fibration: degree " + std::to_string(deg) + " needs one matrix per generator");
    for (std::size_t j = 0; j < k; ++j) {
      const QMatrix& m = mats[j];
      if (!m.is_square()) throw InputError("fibration: matrix of " + generators[j] + " in degree " + std::to_string(deg) + " is not square");
      if (m.rows() != mats[0].rows()) throw InputError("fibration: matrix sizes differ in degree " + std::to_string(deg));
      if (deg < fiber_betti.size() && m.rows() != fiber_betti[deg])
        throw InputError("fibration: degree " + std::to_string(deg) + " matrices must be " + std::to_string(fiber_betti[deg]) + " x " +
                         std::to_string(fiber_betti[deg]));
      if (m.rows() > 0 && determinant(m) == 0)
        throw InputError("fibration: matrix of " + generators[j] + " in degree " + std::to_string(deg) + " is singular");
    }
  }
}

QMatrix FibrationModel::word_matrix(std::size_t degree, const std::vector<int>& word) const {
  auto it = degrees.find(degree);
  if (it == degrees.end()) throw InputError("fibration: no monodromy data in degree " + std::to_string(degree));
  const std::size_t d = it->second.empty() ? 0 : it->second[0].rows();
  QMatrix out = QMatrix::identity(d);
  for (int a : word) {
    if (a == 0 || static_cast<std::size_t>(std::abs(a)) > it->second.size())
      throw InputError("fibration: generator index " + std::to_string(a) + " out of range");
    const QMatrix& m = it->second[static_cast<std::size_t>(std::abs(a)) - 1];
    out = out * (a > 0 ? m : inverse_or_throw(m, "monodromy"));
  }
  return out;
}

std::vector<std::int64_t> FibrationModel::lift_basis_vector(std::size_t i) const {
  auto e = column_echelon(images, n);
  // L y = e_i with L = first n columns of e.g, unit diagonal up to sign
  std::vector<Integer> y(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (r >= images.size() || abs(e.g[r][r]) != 1) throw InputError("fibration: generator images do not generate Z^n");
    Integer rhs = r == i ? 1 : 0;
    for (std::size_t c = 0; c < r; ++c) rhs -= e.g[r][c] * y[c];
    y[r] = rhs * e.g[r][r]; // divide by +-1
  }
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j < images.size(); ++j) {
    Integer s = 0;
    for (std::size_t c = 0; c < n; ++c) s += e.v[j][c] * y[c];
    if (!s.fits_slong_p()) throw InputError("fibration: lifted exponent too large");
    out.push_back(s.get_si());
  }
  return out;
}

QMatrix invariant_subspace(const FibrationModel& f, std::size_t degree) {
  f.validate();
  const QMatrix id = f.word_matrix(degree, {});
  const std::size_t d = id.rows();
  QMatrix w = id;
  for (const auto& word : f.kernel_words) w = subspace_intersection(w, kernel_basis(f.word_matrix(degree, word) - id));
  for (;;) {
    const std::size_t before = w.cols();
    for (std::size_t j = 1; j <= f.generators.size(); ++j) {
      const int g = static_cast<int>(j);
      // rho(g)^{-1} W is the preimage of W; W and its images under rho(g)^{+-1} are intersected
      w = subspace_intersection(w, f.word_matrix(degree, {g}) * w);
      w = subspace_intersection(w, f.word_matrix(degree, {-g}) * w);
    }
    if (w.cols() == before) break;
  }
  if (w.cols() == 0) return QMatrix(d, 0);
  return w;
}

ArtinianModule kernel_invariants(const FibrationModel& f, std::size_t i) {
  if (i < f.n) throw InputError("kernel_invariants: degree " + std::to_string(i) + " is below n = " + std::to_string(f.n));
  const std::size_t degree = i - f.n;
  QMatrix w = invariant_subspace(f, degree);
  ArtinianModule out;
  out.nvars = f.n;
  out.dim = w.cols();
  for (std::size_t v = 0; v < f.n; ++v) {
    auto c = f.lift_basis_vector(v);
    QMatrix op = QMatrix::identity(w.rows());
    for (std::size_t j = 0; j < c.size(); ++j) op = op * power(f.degrees.at(degree)[j], c[j]);
    out.ops.push_back(out.dim == 0 ? QMatrix(0, 0) : restrict_to(w, op));
  }
  return out;
}

QMatrix coinvariant_relations(const FibrationModel& f, std::size_t degree) {
  f.validate();
  const QMatrix id = f.word_matrix(degree, {});
  const std::size_t d = id.rows();
  QMatrix u(d, 0);
  for (const auto& word : f.kernel_words) u = subspace_sum(u, f.word_matrix(degree, word) - id);
  for (;;) {
    const std::size_t before = u.cols();
    for (std::size_t j = 1; j <= f.generators.size(); ++j) {
      const int g = static_cast<int>(j);
      u = subspace_sum(u, f.word_matrix(degree, {g}) * u);
      u = subspace_sum(u, f.word_matrix(degree, {-g}) * u);
    }
    if (u.cols() == before) break;
  }
  return u;
}

ArtinianModule kernel_coinvariants(const FibrationModel& f, std::size_t i) {
  if (f.n != 1) throw InputError("kernel_coinvariants: only defined for n = 1");
  QMatrix u = coinvariant_relations(f, i);
  QMatrix c = complement_basis(u);
  ArtinianModule out;
  out.nvars = 1;
  out.dim = c.cols();
  auto lift = f.lift_basis_vector(0);
  QMatrix op = QMatrix::identity(u.rows());
  for (std::size_t j = 0; j < lift.size(); ++j) op = op * power(f.degrees.at(i)[j], lift[j]);
  if (out.dim == 0) {
    out.ops.push_back(QMatrix(0, 0));
    return out;
  }
  // op * c = c * y + u * z; y is the induced action on the quotient
  auto x = solve(hstack(c, u), op * c);
  if (!x) throw InternalError("complement and relations do not span the space");
  out.ops.push_back(x->block(0, 0, out.dim, out.dim));
  return out;
}

Check remove_fiber_check(const FPModule& hx, const FPModule& hy, std::size_t fiber_betti, std::size_t n) {
  if (hx.nvars != n || hy.nvars != n) throw InputError("remove_fiber_check: modules must both be over n = " + std::to_string(n) + " variables");
  Check c;
  c.name = "remove_fiber";
  if (n == 1) {
    InvariantFactorDecomposition x = invariant_factors(hx), y = invariant_factors(hy);
    InvariantFactorDecomposition want = x;
    want.free_rank += fiber_betti;
    auto show = [](const InvariantFactorDecomposition& d) {
      std::string s = "free rank " + std::to_string(d.free_rank) + ", torsion [";
      for (std::size_t i = 0; i < d.factors.size(); ++i) s += (i ? ", " : "") + d.factors[i].to_string();
      return s + "]";
    };
    c.expected = show(want);
    c.observed = show(y);
    c.status = y == want ? Status::Pass : Status::Violation;
    return c;
  }
  const std::size_t rx = module_rank(hx), ry = module_rank(hy);
  ArtinianModule sx = s0_of(hx), sy = s0_of(hy);
  bool same = rx + fiber_betti == ry && sx.dim == sy.dim;
  for (std::size_t v = 0; same && sx.dim > 0 && v < n; ++v) same = similar(sx.ops[v], sy.ops[v]);
  c.expected = "rank " + std::to_string(rx + fiber_betti) + ", S0 dimension " + std::to_string(sx.dim);
  c.observed = "rank " + std::to_string(ry) + ", S0 dimension " + std::to_string(sy.dim);
  c.status = same ? Status::Pass : Status::Violation;
  return c;
}

} // namespace alexmod
