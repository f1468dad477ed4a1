#pragma once

// Seeded generators shared by the property tests.

#include "alexmod/laurent.hpp"
#include "alexmod/lmatrix.hpp"
#include "alexmod/qmatrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using alexmod::LaurentMatrix;
using alexmod::LaurentPoly;
using alexmod::QMatrix;
using alexmod::Rational;
using alexmod::UPoly;

class Gen {
public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational small_rational(int mag = 5) {
    int num = integer(-mag, mag);
    int den = coin(0.7) ? 1 : integer(1, 3);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(int mag = 5) {
    Rational q;
    do q = small_rational(mag);
    while (q == 0);
    return q;
  }

  /// Univariate Laurent polynomial with exponents in [lo, lo + span].
  LaurentPoly laurent(int span, int lo_min = -2, int lo_max = 2, double density = 0.6) {
    int lo = integer(lo_min, lo_max);
    LaurentPoly p(1);
    for (int e = lo; e <= lo + span; ++e)
      if (coin(density)) p.add_term({e}, small_rational());
    return p;
  }
  LaurentPoly nonzero_laurent(int span) {
    LaurentPoly p;
    do p = laurent(span);
    while (p.is_zero());
    return p;
  }

  /// Multivariate polynomial with small nonnegative exponents (total degree <= deg).
  LaurentPoly poly(std::size_t nvars, int deg, int terms, int shift = 0) {
    LaurentPoly p(nvars);
    for (int k = 0; k < terms; ++k) {
      alexmod::Exponents e(nvars, 0);
      int left = deg;
      for (std::size_t i = 0; i < nvars; ++i) {
        e[i] = integer(0, left);
        left -= static_cast<int>(e[i]);
      }
      for (auto& x : e) x += shift;
      p.add_term(e, small_rational(3));
    }
    return p;
  }

  UPoly upoly(int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(small_rational());
    return UPoly(c);
  }

  LaurentMatrix laurent_matrix(std::size_t r, std::size_t c, int span, double zero_prob = 0.3) {
    LaurentMatrix m(1, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (!coin(zero_prob)) m(i, j) = laurent(span);
    return m;
  }

  QMatrix int_matrix(std::size_t r, std::size_t c, int mag = 3) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(-mag, mag);
    return m;
  }

  QMatrix invertible_matrix(std::size_t n, int mag = 2) {
    for (;;) {
      QMatrix m = int_matrix(n, n, mag);
      if (alexmod::determinant(m) != 0) return m;
    }
  }

  /// n pairwise commuting invertible r x r matrices, all polynomials of
  /// degree <= 2 in one random invertible matrix (sometimes unipotent, to get
  /// nontrivial Jordan blocks).
  std::vector<QMatrix> commuting_family(std::size_t n, std::size_t r) {
    QMatrix x;
    if (coin(0.3)) {
      x = QMatrix::identity(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) x(i, j) = integer(-1, 1);
    } else {
      x = invertible_matrix(r);
    }
    std::vector<QMatrix> out;
    while (out.size() < n) {
      QMatrix m = QMatrix::identity(r) * small_rational(2);
      QMatrix xp = QMatrix::identity(r);
      for (int d = 1; d <= 2; ++d) {
        xp = xp * x;
        m += xp * small_rational(2);
      }
      if (r == 0 || alexmod::determinant(m) != 0) out.push_back(m);
    }
    return out;
  }

  std::mt19937& rng() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace testsupport
