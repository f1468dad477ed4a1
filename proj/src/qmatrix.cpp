#include "alexmod/qmatrix.hpp"

#include "alexmod/errors.hpp"

#include <sstream>
#include <utility>

namespace alexmod {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!alexmod::is_zero(x)) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  QMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::vector<std::vector<Rational>> QMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  QMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  QMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Rational determinant(QMatrix m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  RowEchelon e = rref(hstack(m, QMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

QMatrix inverse_or_throw(const QMatrix& m, const std::string& what) {
  auto inv = inverse(m);
  if (!inv) throw InputError(what + " is not invertible");
  return *inv;
}

QMatrix power(const QMatrix& m, std::int64_t e) {
  if (!m.is_square()) throw InputError("power of a non-square matrix");
  QMatrix base = e < 0 ? inverse_or_throw(m, "matrix") : m;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  QMatrix r = QMatrix::identity(m.rows());
  while (k) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

QMatrix kernel_basis(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

QMatrix column_basis(const QMatrix& m) {
  RowEchelon e = rref(m);
  QMatrix b(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, e.pivots[k]);
  return b;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: row mismatch");
  RowEchelon e = rref(hstack(a, b));
  for (auto p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  return x;
}

QMatrix subspace_sum(const QMatrix& u, const QMatrix& w) { return column_basis(hstack(u, w)); }

QMatrix subspace_intersection(const QMatrix& u, const QMatrix& w) {
  QMatrix ub = column_basis(u), wb = column_basis(w);
  if (ub.cols() == 0 || wb.cols() == 0) return QMatrix(u.rows(), 0);
  // u*a = w*b  <=>  [u | -w] (a;b) = 0
  QMatrix k = kernel_basis(hstack(ub, wb * Rational(-1)));
  return column_basis(ub * k.block(0, 0, ub.cols(), k.cols()));
}

QMatrix complement_basis(const QMatrix& u) {
  const std::size_t d = u.rows();
  QMatrix cur = column_basis(u);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < d && cur.cols() < d; ++i) {
    QMatrix e(d, 1);
    e(i, 0) = 1;
    QMatrix trial = hstack(cur, e);
    if (rank(trial) > cur.cols()) {
      cur = std::move(trial);
      picked.push_back(i);
    }
  }
  QMatrix c(d, picked.size());
  for (std::size_t k = 0; k < picked.size(); ++k) c(picked[k], k) = 1;
  return c;
}

UPoly characteristic_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix h = m;
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && is_zero(h(piv, j))) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    Rational inv = 1 / h(j + 1, j);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (is_zero(h(k, j))) continue;
      Rational u = h(k, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = UPoly(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (UPoly::x() - UPoly(h(k - 1, k - 1))) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (is_zero(t)) break;
      p[k] -= p[k - i - 1] * (t * h(k - i - 1, k - 1));
    }
  }
  return p[n];
}

UPoly minimal_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UPoly(1);
  // columns: vec(I), vec(m), vec(m^2), ...
  std::vector<QMatrix> powers{QMatrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    QMatrix stacked(n * n, k + 1);
    for (std::size_t c = 0; c <= k; ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(i * n + j, c) = powers[c](i, j);
    QMatrix ker = kernel_basis(stacked);
    if (ker.cols() == 0) continue;
    std::vector<Rational> coeffs(k + 1);
    for (std::size_t c = 0; c <= k; ++c) coeffs[c] = ker(c, 0);
    return UPoly(std::move(coeffs)).monic();
  }
  throw InternalError("minimal polynomial degree exceeds matrix size");
}

QMatrix evaluate(const UPoly& p, const QMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) {
    r = r * m;
    for (std::size_t k = 0; k < m.rows(); ++k) r(k, k) += p.coeffs()[static_cast<std::size_t>(i)];
  }
  return r;
}

QMatrix companion_matrix(const UPoly& p) {
  if (!p.is_monic()) throw InputError("companion matrix of a non-monic polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  QMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
  return c;
}

bool commute(const QMatrix& a, const QMatrix& b) { return a * b == b * a; }

} // namespace alexmod
