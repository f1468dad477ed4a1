#pragma once

#include "alexmod/rational.hpp"
#include "alexmod/upoly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace alexmod {

using Exponents = std::vector<std::int64_t>;

/// Element of A = Q[t1^{+-1}, ..., tn^{+-1}].
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so the zero polynomial has no terms. Exponent arithmetic is
/// overflow-checked.
class LaurentPoly {
public:
  using TermMap = std::map<Exponents, Rational>;

  LaurentPoly() = default; // zero in 1 variable
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(std::size_t nvars, Exponents exps, const Rational& c = 1);
  /// t_i for 0-based i.
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  /// Univariate q*t^k.
  static LaurentPoly univariate(const UPoly& p, std::int64_t shift = 0);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// A monomial q*t^a with q != 0, i.e. a unit of A.
  bool is_unit() const { return terms_.size() == 1; }
  Rational coeff(const Exponents& e) const;
  std::size_t num_terms() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Multiplies by t^shift.
  LaurentPoly shifted(const Exponents& shift) const;
  /// Inverse of a unit monomial; throws InputError otherwise.
  LaurentPoly unit_inverse() const;
  /// The involution t_i -> t_i^{-1}.
  LaurentPoly conjugate() const;
  /// Componentwise minimum / maximum exponent over the support (zeros for the
  /// zero polynomial).
  Exponents min_exponents() const;
  Exponents max_exponents() const;
  /// Value at t_1 = ... = t_n = 1.
  Rational eval_at_ones() const;
  /// Substitutes rational values for every variable (values must be nonzero
  /// when negative exponents occur).
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Univariate view: returns p = t^shift * u with u(0) != 0 (u = 0, shift = 0
  /// for the zero polynomial). Requires nvars = 1.
  std::pair<UPoly, std::int64_t> to_upoly() const;

  std::string to_string() const;

private:
  std::size_t nvars_ = 1;
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// Exact product with a variable-count check (the spec-level laurent_mul).
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// p = unit * core with unit = coeff * t^exponent and core monic in Q[t],
/// core(0) != 0.
struct UnitNormalForm {
  UPoly core;
  Rational unit_coeff;
  std::int64_t unit_exponent = 0;
};

/// Canonical representative modulo units of Q[t^{+-1}]. Throws InputError on
/// zero or multivariate input.
UnitNormalForm normalize_unit(const LaurentPoly& p);

/// Parses expressions such as "t^2 - 3*t^-1 + 1/2" or "(t1-1)*(t2+2)".
/// Variables are t (only when nvars = 1) or t1..tn; integer exponents may be
/// negative. Throws InputError on malformed text.
LaurentPoly parse_laurent(std::string_view text, std::size_t nvars);

} // namespace alexmod
