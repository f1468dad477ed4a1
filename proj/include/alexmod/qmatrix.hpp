#pragma once

#include "alexmod/rational.hpp"
#include "alexmod/upoly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alexmod {

/// Dense matrix over Q, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// Throws InputError on ragged input.
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  std::vector<std::vector<Rational>> to_rows() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);

struct RowEchelon {
  QMatrix reduced;                  ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

RowEchelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Inverse or InputError when singular.
QMatrix inverse_or_throw(const QMatrix& m, const std::string& what);
/// Integer power; negative exponents use the inverse.
QMatrix power(const QMatrix& m, std::int64_t e);

/// Columns form a basis of the null space (rows x k).
QMatrix kernel_basis(const QMatrix& m);
/// A basis of the column space made of (a subset of) the columns of m.
QMatrix column_basis(const QMatrix& m);
/// Some X with a*X = b, if one exists.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

/// Subspaces of Q^d are passed as matrices whose columns span them.
QMatrix subspace_intersection(const QMatrix& u, const QMatrix& w);
QMatrix subspace_sum(const QMatrix& u, const QMatrix& w);
/// Columns completing the basis of span(u) to a basis of Q^d, chosen among
/// standard basis vectors.
QMatrix complement_basis(const QMatrix& u);

/// det(tI - m) via Hessenberg reduction.
UPoly characteristic_polynomial(const QMatrix& m);
/// Monic generator of {p : p(m) = 0}, from the first linear dependency among
/// I, m, m^2, ...
UPoly minimal_polynomial(const QMatrix& m);
QMatrix evaluate(const UPoly& p, const QMatrix& m);

/// Companion matrix with ones on the subdiagonal and -coefficients in the last
/// column; its characteristic and minimal polynomial are the monic p.
QMatrix companion_matrix(const UPoly& p);

bool commute(const QMatrix& a, const QMatrix& b);

} // namespace alexmod
