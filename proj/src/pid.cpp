#include "alexmod/pid.hpp"

#include "alexmod/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace alexmod {

FPModule FPModule::free(std::size_t nvars, std::size_t rank) {
  return {nvars, rank, LaurentMatrix(nvars, rank, 0)};
}

FPModule FPModule::from_matrix(LaurentMatrix presentation) {
  FPModule m;
  m.nvars = presentation.nvars();
  m.rank = presentation.rows();
  m.presentation = std::move(presentation);
  return m;
}

void FPModule::validate() const {
  if (nvars == 0) throw InputError("module over a ring with zero variables");
  if (presentation.rows() != rank) throw InputError("presentation row count differs from generator count");
  if (presentation.nvars() != nvars) throw InputError("presentation lives over a different ring");
  for (std::size_t i = 0; i < presentation.rows(); ++i)
    for (std::size_t j = 0; j < presentation.cols(); ++j)
      if (presentation(i, j).nvars() != nvars) throw InputError("presentation entry has wrong variable count");
}

namespace {

// Euclidean structure of Q[t].
struct PolyRing {
  using Elem = UPoly;
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static int norm(const Elem& a) { return a.degree(); }
  static std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) { return alexmod::divmod(a, b); }
  static Elem zero() { return {}; }
  static Elem one() { return UPoly(1); }
  /// Unit u with u*a normalized, together with u^{-1}.
  static std::pair<Elem, Elem> normalizer(const Elem& a) { return {UPoly(Rational(1 / a.lead())), UPoly(a.lead())}; }
};

template <class Ring>
class SmithEngine {
public:
  using E = typename Ring::Elem;

  struct Mat {
    std::size_t r = 0, c = 0;
    std::vector<E> a;
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r(rows), c(cols), a(rows * cols, Ring::zero()) {}
    E& operator()(std::size_t i, std::size_t j) { return a[i * c + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a[i * c + j]; }
    static Mat identity(std::size_t n) {
      Mat m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring::one();
      return m;
    }
  };

  SmithEngine(Mat p, bool track) : p_(std::move(p)), track_(track) {
    if (track_) {
      u_ = uinv_ = Mat::identity(p_.r);
      v_ = vinv_ = Mat::identity(p_.c);
    }
  }

  void run() {
    const std::size_t m = p_.r, n = p_.c;
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
      for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        int best_norm = 0;
        for (std::size_t i = k; i < m; ++i)
          for (std::size_t j = k; j < n; ++j) {
            if (Ring::is_zero(p_(i, j))) continue;
            int d = Ring::norm(p_(i, j));
            if (!best || d < best_norm) {
              best = {i, j};
              best_norm = d;
            }
          }
        if (!best) {
          rank_ = k;
          return;
        }
        swap_rows(k, best->first);
        swap_cols(k, best->second);
        bool dirty = false;
        for (std::size_t i = k + 1; i < m; ++i) {
          if (Ring::is_zero(p_(i, k))) continue;
          auto [q, r] = Ring::divmod(p_(i, k), p_(k, k));
          add_row_multiple(i, k, -q);
          if (!Ring::is_zero(r)) dirty = true;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
          if (Ring::is_zero(p_(k, j))) continue;
          auto [q, r] = Ring::divmod(p_(k, j), p_(k, k));
          add_col_multiple(j, k, -q);
          if (!Ring::is_zero(r)) dirty = true;
        }
        if (dirty) continue;
        bool fixed = false;
        for (std::size_t i = k + 1; i < m && !fixed; ++i)
          for (std::size_t j = k + 1; j < n && !fixed; ++j) {
            if (Ring::is_zero(p_(i, j))) continue;
            if (!Ring::is_zero(Ring::divmod(p_(i, j), p_(k, k)).second)) {
              add_row_multiple(k, i, Ring::one());
              fixed = true;
            }
          }
        if (!fixed) break;
      }
      auto [u, uinv] = Ring::normalizer(p_(k, k));
      scale_row(k, u, uinv);
    }
    rank_ = std::min(m, n);
  }

  const Mat& d() const { return p_; }
  const Mat& u() const { return u_; }
  const Mat& uinv() const { return uinv_; }
  const Mat& v() const { return v_; }
  const Mat& vinv() const { return vinv_; }
  std::size_t rank() const { return rank_; }

private:
  // row_i += q * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const E& q) {
    if (Ring::is_zero(q)) return;
    for (std::size_t j = 0; j < p_.c; ++j)
      if (!Ring::is_zero(p_(k, j))) p_(i, j) += q * p_(k, j);
    if (!track_) return;
    for (std::size_t j = 0; j < u_.c; ++j)
      if (!Ring::is_zero(u_(k, j))) u_(i, j) += q * u_(k, j);
    for (std::size_t r = 0; r < uinv_.r; ++r)
      if (!Ring::is_zero(uinv_(r, i))) uinv_(r, k) -= q * uinv_(r, i);
  }

  // col_j += q * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const E& q) {
    if (Ring::is_zero(q)) return;
    for (std::size_t i = 0; i < p_.r; ++i)
      if (!Ring::is_zero(p_(i, k))) p_(i, j) += q * p_(i, k);
    if (!track_) return;
    for (std::size_t i = 0; i < v_.r; ++i)
      if (!Ring::is_zero(v_(i, k))) v_(i, j) += q * v_(i, k);
    for (std::size_t c = 0; c < vinv_.c; ++c)
      if (!Ring::is_zero(vinv_(j, c))) vinv_(k, c) -= q * vinv_(j, c);
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < p_.c; ++j) std::swap(p_(i, j), p_(k, j));
    if (!track_) return;
    for (std::size_t j = 0; j < u_.c; ++j) std::swap(u_(i, j), u_(k, j));
    for (std::size_t r = 0; r < uinv_.r; ++r) std::swap(uinv_(r, i), uinv_(r, k));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < p_.r; ++i) std::swap(p_(i, j), p_(i, k));
    if (!track_) return;
    for (std::size_t i = 0; i < v_.r; ++i) std::swap(v_(i, j), v_(i, k));
    for (std::size_t c = 0; c < vinv_.c; ++c) std::swap(vinv_(j, c), vinv_(k, c));
  }

  void scale_row(std::size_t i, const E& u, const E& uinv) {
    for (std::size_t j = 0; j < p_.c; ++j)
      if (!Ring::is_zero(p_(i, j))) p_(i, j) = u * p_(i, j);
    if (!track_) return;
    for (std::size_t j = 0; j < u_.c; ++j)
      if (!Ring::is_zero(u_(i, j))) u_(i, j) = u * u_(i, j);
    for (std::size_t r = 0; r < uinv_.r; ++r)
      if (!Ring::is_zero(uinv_(r, i))) uinv_(r, i) = uinv_(r, i) * uinv;
  }

  Mat p_;
  bool track_;
  Mat u_, uinv_, v_, vinv_;
  std::size_t rank_ = 0;
};

using PolyEngine = SmithEngine<PolyRing>;

// Smith form over Q[t] by alternating row and column Hermite forms. Each
// Hermite pass clears a column with Bezout steps and reduces the entries above
// the pivot, which keeps degrees near those of the minors; plain Euclidean
// pivoting blows up on 6 x 6 inputs.
class HermiteSmith {
public:
  using Mat = PolyEngine::Mat;

  HermiteSmith(Mat m, bool track) : m_(std::move(m)), track_(track) {
    if (track_) {
      u_ = uinv_ = Mat::identity(m_.r);
      vt_ = vtinv_ = Mat::identity(m_.c);
    }
  }

  void run() {
    for (int round = 0;; ++round) {
      if (round > 1000) throw InternalError("Smith form: Hermite alternation does not settle");
      hermite(m_, u_, uinv_);
      if (is_diagonal()) break;
      m_ = transpose(m_);
      hermite(m_, vt_, vtinv_);
      m_ = transpose(m_);
      if (is_diagonal()) break;
    }
    while (rank_ < std::min(m_.r, m_.c) && !m_(rank_, rank_).is_zero()) ++rank_;
    // gcd/lcm on diagonal pairs until the chain holds
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = i + 1; j < rank_; ++j) {
        const UPoly a = m_(i, i), b = m_(j, j);
        if (divmod(b, a).second.is_zero()) continue;
        const Bezout z = xgcd(a, b);
        const UPoly ag = exact_div(a, z.g), bg = exact_div(b, z.g);
        pair(m_, u_, uinv_, i, j, z.x, z.y, -bg, ag);
        m_ = transpose(m_);
        pair(m_, vt_, vtinv_, i, j, UPoly(1), UPoly(1), -(z.y * bg), z.x * ag);
        m_ = transpose(m_);
      }
    for (std::size_t k = 0; k < rank_; ++k) {
      const Rational c = 1 / m_(k, k).lead();
      scale(m_, u_, uinv_, k, c);
    }
  }

  const Mat& d() const { return m_; }
  const Mat& u() const { return u_; }
  const Mat& uinv() const { return uinv_; }
  const Mat& vt() const { return vt_; }
  const Mat& vtinv() const { return vtinv_; }
  std::size_t rank() const { return rank_; }

private:
  static Mat transpose(const Mat& a) {
    Mat t(a.c, a.r);
    for (std::size_t i = 0; i < a.r; ++i)
      for (std::size_t j = 0; j < a.c; ++j) t(j, i) = a(i, j);
    return t;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < m_.r; ++i)
      for (std::size_t j = 0; j < m_.c; ++j)
        if (i != j && !m_(i, j).is_zero()) return false;
    return true;
  }

  // Row operations on a, recorded as t <- E t and tinv <- tinv E^-1.
  void add(Mat& a, Mat& t, Mat& tinv, std::size_t i, std::size_t k, const UPoly& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < a.c; ++j)
      if (!a(k, j).is_zero()) a(i, j) += q * a(k, j);
    if (!track_) return;
    for (std::size_t j = 0; j < t.c; ++j)
      if (!t(k, j).is_zero()) t(i, j) += q * t(k, j);
    for (std::size_t r = 0; r < tinv.r; ++r)
      if (!tinv(r, i).is_zero()) tinv(r, k) -= q * tinv(r, i);
  }

  // [row_k; row_i] <- [[x, y], [z, w]] [row_k; row_i] with xw - yz = 1
  void pair(Mat& a, Mat& t, Mat& tinv, std::size_t k, std::size_t i, const UPoly& x, const UPoly& y, const UPoly& z,
            const UPoly& w) {
    auto mix = [&](Mat& b) {
      for (std::size_t j = 0; j < b.c; ++j) {
        UPoly bk = x * b(k, j) + y * b(i, j);
        b(i, j) = z * b(k, j) + w * b(i, j);
        b(k, j) = std::move(bk);
      }
    };
    mix(a);
    if (!track_) return;
    mix(t);
    for (std::size_t r = 0; r < tinv.r; ++r) {
      UPoly ck = w * tinv(r, k) - z * tinv(r, i);
      tinv(r, i) = x * tinv(r, i) - y * tinv(r, k);
      tinv(r, k) = std::move(ck);
    }
  }

  void swap(Mat& a, Mat& t, Mat& tinv, std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.c; ++j) std::swap(a(i, j), a(k, j));
    if (!track_) return;
    for (std::size_t j = 0; j < t.c; ++j) std::swap(t(i, j), t(k, j));
    for (std::size_t r = 0; r < tinv.r; ++r) std::swap(tinv(r, i), tinv(r, k));
  }

  void scale(Mat& a, Mat& t, Mat& tinv, std::size_t i, const Rational& c) {
    for (std::size_t j = 0; j < a.c; ++j) a(i, j) *= c;
    if (!track_) return;
    for (std::size_t j = 0; j < t.c; ++j) t(i, j) *= c;
    const Rational cinv = 1 / c;
    for (std::size_t r = 0; r < tinv.r; ++r) tinv(r, i) *= cinv;
  }

  void hermite(Mat& a, Mat& t, Mat& tinv) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.c && row < a.r; ++col) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < a.r; ++i)
        if (!a(i, col).is_zero() && (!best || a(i, col).degree() < a(*best, col).degree())) best = i;
      if (!best) continue;
      swap(a, t, tinv, row, *best);
      for (std::size_t i = row + 1; i < a.r; ++i) {
        if (a(i, col).is_zero()) continue;
        const UPoly p = a(row, col), b = a(i, col);
        auto [q, rem] = divmod(b, p);
        if (rem.is_zero()) {
          add(a, t, tinv, i, row, -q);
          continue;
        }
        const Bezout z = xgcd(p, b);
        pair(a, t, tinv, row, i, z.x, z.y, -exact_div(b, z.g), exact_div(p, z.g));
      }
      scale(a, t, tinv, row, 1 / a(row, col).lead());
      for (std::size_t i = 0; i < row; ++i)
        if (!a(i, col).is_zero()) add(a, t, tinv, i, row, -divmod(a(i, col), a(row, col)).first);
      ++row;
    }
  }

  Mat m_;
  bool track_;
  Mat u_, uinv_, vt_, vtinv_;
  std::size_t rank_ = 0;
};

LaurentPoly monomial_t(std::int64_t e) { return LaurentPoly::monomial(1, {e}); }

LaurentMatrix to_laurent(const HermiteSmith::Mat& m, bool transposed) {
  LaurentMatrix r(1, transposed ? m.c : m.r, transposed ? m.r : m.c);
  for (std::size_t i = 0; i < m.r; ++i)
    for (std::size_t j = 0; j < m.c; ++j) {
      if (m(i, j).is_zero()) continue;
      LaurentPoly p = LaurentPoly::univariate(m(i, j));
      if (transposed)
        r(j, i) = std::move(p);
      else
        r(i, j) = std::move(p);
    }
  return r;
}

struct PolyShift {
  HermiteSmith::Mat m;
  std::vector<std::int64_t> row_shift; // row i of the input is t^{row_shift[i]} times row i of m
};

// Multiplies every row by the power of t that makes it polynomial with
// a nonzero constant term somewhere.
PolyShift to_polynomial(const LaurentMatrix& p) {
  PolyShift out{HermiteSmith::Mat(p.rows(), p.cols()), std::vector<std::int64_t>(p.rows(), 0)};
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::optional<std::int64_t> lo;
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) lo = std::min(lo.value_or(p(i, j).min_exponents()[0]), p(i, j).min_exponents()[0]);
    if (!lo) continue;
    out.row_shift[i] = *lo;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (p(i, j).is_zero()) continue;
      auto [core, shift] = p(i, j).to_upoly();
      out.m(i, j) = UPoly::monomial(1, static_cast<int>(checked_add(shift, -*lo))) * core;
    }
  }
  return out;
}

void require_univariate(const LaurentMatrix& p) {
  if (p.nvars() != 1) throw InputError("Smith normal form requires univariate entries");
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p(i, j).nvars() != 1) throw InputError("Smith normal form requires univariate entries");
}

} // namespace

SmithForm smith_normal_form(const LaurentMatrix& p) {
  require_univariate(p);
  PolyShift ps = to_polynomial(p);
  HermiteSmith eng(std::move(ps.m), true);
  eng.run();
  SmithForm out{to_laurent(eng.u(), false), to_laurent(eng.d(), false), to_laurent(eng.vt(), true),
                to_laurent(eng.uinv(), false), to_laurent(eng.vtinv(), true), eng.rank()};
  // undo the row shifts: P = diag(t^s) P_poly, so U = U_poly diag(t^-s)
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (ps.row_shift[i] == 0) continue;
    const LaurentPoly down = monomial_t(-ps.row_shift[i]), up = monomial_t(ps.row_shift[i]);
    for (std::size_t r = 0; r < out.U.rows(); ++r) out.U(r, i) *= down;
    for (std::size_t c = 0; c < out.U_inv.cols(); ++c) out.U_inv(i, c) *= up;
  }
  // strip t from the diagonal: D = diag(t^e) D_core
  for (std::size_t k = 0; k < out.rank; ++k) {
    auto [core, e] = out.D(k, k).to_upoly();
    if (e == 0) continue;
    const LaurentPoly down = monomial_t(-e), up = monomial_t(e);
    out.D(k, k) = LaurentPoly::univariate(core);
    for (std::size_t c = 0; c < out.U.cols(); ++c) out.U(k, c) *= down;
    for (std::size_t r = 0; r < out.U_inv.rows(); ++r) out.U_inv(r, k) *= up;
  }
  return out;
}

InvariantFactorDecomposition invariant_factors(const FPModule& m) {
  m.validate();
  if (m.nvars != 1) throw InputError("invariant factors need a module over Q[t^{+-1}]");
  HermiteSmith eng(to_polynomial(m.presentation).m, false);
  eng.run();
  InvariantFactorDecomposition out;
  out.free_rank = m.rank - eng.rank();
  for (std::size_t k = 0; k < eng.rank(); ++k) {
    UPoly core = eng.d()(k, k).strip_t_power();
    if (core.degree() > 0) out.factors.push_back(core.monic());
  }
  return out;
}

ArtinianModule torsion_summary(const InvariantFactorDecomposition& d) {
  std::size_t dim = 0;
  for (const auto& f : d.factors) dim += static_cast<std::size_t>(f.degree());
  ArtinianModule out;
  out.nvars = 1;
  out.dim = dim;
  QMatrix t(dim, dim);
  std::size_t off = 0;
  for (const auto& f : d.factors) {
    QMatrix c = companion_matrix(f);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) t(off + i, off + j) = c(i, j);
    off += c.rows();
  }
  out.ops = {t};
  return out;
}

ArtinianModule torsion_summary(const FPModule& m) { return torsion_summary(invariant_factors(m)); }

std::vector<UPoly> similarity_invariants(const QMatrix& m) {
  if (!m.is_square()) throw InputError("similarity invariants of a non-square matrix");
  const std::size_t n = m.rows();
  PolyEngine::Mat p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = UPoly(Rational(-m(i, j))) + (i == j ? UPoly::x() : UPoly());
  PolyEngine eng(std::move(p), false);
  eng.run();
  std::vector<UPoly> out;
  for (std::size_t k = 0; k < eng.rank(); ++k)
    if (eng.d()(k, k).degree() > 0) out.push_back(eng.d()(k, k));
  return out;
}

bool similar(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return similarity_invariants(a) == similarity_invariants(b);
}

FPModule simplify_presentation(const FPModule& m) {
  m.validate();
  LaurentMatrix p = m.presentation;
  for (;;) {
    // Markowitz-style choice: unit entry minimizing fill-in.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_cost = 0;
    std::vector<std::size_t> row_nnz(p.rows(), 0), col_nnz(p.cols(), 0);
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (!p(i, j).is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) {
        if (!p(i, j).is_unit()) continue;
        std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (!best || cost < best_cost) {
          best = {i, j};
          best_cost = cost;
        }
      }
    if (!best) break;
    auto [r, c] = *best;
    // generator r equals -u^{-1} * sum_{k != r} p(k, c) e_k; substitute it into
    // every other relation, then drop row r and column c
    LaurentPoly uinv = p(r, c).unit_inverse();
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (j == c || p(r, j).is_zero()) continue;
      LaurentPoly f = p(r, j) * uinv;
      for (std::size_t i = 0; i < p.rows(); ++i)
        if (!p(i, c).is_zero()) p(i, j) -= f * p(i, c);
    }
    p = p.without_row(r).without_column(c);
  }
  // drop zero relations
  for (std::size_t j = p.cols(); j-- > 0;) {
    bool zero = true;
    for (std::size_t i = 0; i < p.rows() && zero; ++i) zero = p(i, j).is_zero();
    if (zero) p = p.without_column(j);
  }
  FPModule out;
  out.nvars = m.nvars;
  out.rank = p.rows();
  out.presentation = std::move(p);
  if (out.presentation.rows() == 0) out.presentation = LaurentMatrix(m.nvars, 0, 0);
  return out;
}

} // namespace alexmod
