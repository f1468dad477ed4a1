#pragma once

#include "alexmod/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alexmod {

/// Dense univariate polynomial over Q in the variable t.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c); // NOLINT: constants convert implicitly

  static UPoly monomial(const Rational& c, int degree);
  static UPoly x();
  /// t^n - 1
  static UPoly x_pow_minus_one(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Rational& lead() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i, zero outside the stored range.
  Rational coeff(int i) const;

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int valuation() const;
  /// Divides by t^valuation().
  UPoly strip_t_power() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator-(UPoly a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly& p, unsigned e);

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws InternalError if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);
/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly lcm(const UPoly& a, const UPoly& b);

struct Bezout {
  UPoly g, x, y; ///< x * a + y * b = g, g monic (zero only for a = b = 0)
};
/// Extended Euclid with deg x < deg b and deg y < deg a when both are nonzero
/// and neither divides the other.
Bezout xgcd(const UPoly& a, const UPoly& b);

struct SquarefreeFactor {
  UPoly factor;
  int multiplicity;
};

/// Yun's squarefree decomposition of a nonzero polynomial (normalized to
/// monic first). Factors are pairwise coprime, squarefree, nonconstant, and
/// listed with strictly increasing multiplicity.
std::vector<SquarefreeFactor> yun_squarefree(const UPoly& p);

/// Product of the distinct squarefree parts.
UPoly squarefree_part(const UPoly& p);

struct CyclotomicSplit {
  UPoly root_of_unity_part;
  UPoly remainder;
  /// Every N for which gcd(p, t^N - 1) stripped a nontrivial factor; the
  /// roots removed at step N are exactly the primitive N-th roots of unity.
  std::vector<int> orders;
};

/// Upper bound on the order of a root of unity that can be a root of a
/// rational polynomial of the given degree: phi(N) >= sqrt(N/2) gives
/// N <= 2*deg^2 for N > 6.
int cyclotomic_order_bound(int degree);

/// Splits a monic p with p(0) != 0 into the maximal factor whose roots are all
/// roots of unity and the cofactor.
CyclotomicSplit cyclotomic_part(const UPoly& p);

std::int64_t lcm_int(std::int64_t a, std::int64_t b);

} // namespace alexmod
