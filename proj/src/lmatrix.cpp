#include "alexmod/lmatrix.hpp"

#include "alexmod/errors.hpp"

#include <map>
#include <sstream>

namespace alexmod {

LaurentMatrix LaurentMatrix::identity(std::size_t nvars, std::size_t n) {
  LaurentMatrix m(nvars, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(nvars, 1);
  return m;
}

LaurentMatrix LaurentMatrix::from_rational(std::size_t nvars, const QMatrix& q) {
  LaurentMatrix m(nvars, q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = LaurentPoly::constant(nvars, q(i, j));
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix t(nvars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LaurentMatrix LaurentMatrix::conjugate() const {
  LaurentMatrix c = *this;
  for (auto& x : c.data_) x = x.conjugate();
  return c;
}

LaurentMatrix LaurentMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  LaurentMatrix b(nvars_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

LaurentMatrix LaurentMatrix::without_row(std::size_t r) const {
  LaurentMatrix b(nvars_, rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) b(k, j) = (*this)(i, j);
    ++k;
  }
  return b;
}

LaurentMatrix LaurentMatrix::without_column(std::size_t c) const {
  LaurentMatrix b(nvars_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, k = 0; j < cols_; ++j) {
      if (j == c) continue;
      b(i, k++) = (*this)(i, j);
    }
  return b;
}

QMatrix LaurentMatrix::eval_at_ones() const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).eval_at_ones();
  return q;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) throw InputError("Laurent matrix shape mismatch in product");
  LaurentMatrix r(a.nvars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("Laurent matrix shape mismatch in sum");
  LaurentMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("Laurent matrix shape mismatch in difference");
  LaurentMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

std::string LaurentMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

LaurentMatrix hstack(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  LaurentMatrix r(a.nvars(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

LaurentMatrix vstack(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  LaurentMatrix r(a.nvars(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

LaurentMatrix block_diagonal(const std::vector<LaurentMatrix>& blocks) {
  std::size_t rows = 0, cols = 0, nvars = blocks.empty() ? 1 : blocks[0].nvars();
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  LaurentMatrix r(nvars, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw InputError("cofactor determinant limited to 20x20");
  // minors on the last k rows keyed by column bitmask
  std::map<std::uint32_t, LaurentPoly> prev{{0U, LaurentPoly::constant(m.nvars(), 1)}};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = n - k;
    std::map<std::uint32_t, LaurentPoly> cur;
    for (const auto& [mask, minor] : prev) {
      if (minor.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1U << c)) continue;
        if (m(row, c).is_zero()) continue;
        // sign: number of used columns before c
        int before = __builtin_popcount(mask & ((1U << c) - 1U));
        LaurentPoly term = m(row, c) * minor;
        if (before % 2) term = -term;
        auto [it, ins] = cur.emplace(mask | (1U << c), term);
        if (!ins) it->second += term;
      }
    }
    prev = std::move(cur);
  }
  auto it = prev.find((n == 32 ? 0U : (1U << n)) - 1U);
  return it == prev.end() ? LaurentPoly(m.nvars()) : it->second;
}

} // namespace alexmod
