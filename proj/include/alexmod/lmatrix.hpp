#pragma once

#include "alexmod/laurent.hpp"
#include "alexmod/qmatrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace alexmod {

/// Dense matrix over A = Q[t1^{+-1}, ..., tn^{+-1}], row-major.
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t nvars, std::size_t rows, std::size_t cols)
      : nvars_(nvars), rows_(rows), cols_(cols), data_(rows * cols, LaurentPoly(nvars)) {}

  static LaurentMatrix identity(std::size_t nvars, std::size_t n);
  /// Embeds a rational matrix as constants.
  static LaurentMatrix from_rational(std::size_t nvars, const QMatrix& m);

  std::size_t nvars() const { return nvars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  LaurentMatrix transpose() const;
  /// Entrywise t_i -> t_i^{-1}.
  LaurentMatrix conjugate() const;
  LaurentMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  LaurentMatrix without_row(std::size_t r) const;
  LaurentMatrix without_column(std::size_t c) const;
  /// Value at t = (1, ..., 1).
  QMatrix eval_at_ones() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.nvars_ == b.nvars_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

private:
  std::size_t nvars_ = 1;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

LaurentMatrix hstack(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix vstack(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix block_diagonal(const std::vector<LaurentMatrix>& blocks);

/// Determinant by cofactor expansion with memoized minors; exact over A and
/// intended for the small matrices used in verification.
LaurentPoly determinant(const LaurentMatrix& m);

} // namespace alexmod
