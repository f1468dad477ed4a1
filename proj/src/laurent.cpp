#include "alexmod/laurent.hpp"

#include "alexmod/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace alexmod {

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars())
    throw InputError("variable-count mismatch: " + std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
}

} // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Exponents(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exponents exps, const Rational& c) {
  if (exps.size() != nvars) throw InputError("exponent vector length does not match variable count");
  LaurentPoly p(nvars);
  if (!alexmod::is_zero(c)) p.terms_.emplace(std::move(exps), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, std::move(e));
}

LaurentPoly LaurentPoly::univariate(const UPoly& p, std::int64_t shift) {
  LaurentPoly r(1);
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (!alexmod::is_zero(c)) r.terms_.emplace(Exponents{checked_add(i, shift)}, c);
  }
  return r;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Rational LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (alexmod::is_zero(c)) return;
  if (e.size() != nvars_) throw InputError("exponent vector length does not match variable count");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (alexmod::is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (alexmod::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  LaurentPoly r(a.nvars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exps(ea, eb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  if (shift.size() != nvars_) throw InputError("shift length does not match variable count");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(add_exps(e, shift), c);
  return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw InputError("element is not a unit of the Laurent ring");
  const auto& [e, c] = *terms_.begin();
  Exponents neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = checked_mul(e[i], -1);
  return monomial(nvars_, std::move(neg), 1 / c);
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = checked_mul(e[i], -1);
    r.terms_.emplace(std::move(neg), c);
  }
  return r;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

Rational LaurentPoly::eval_at_ones() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong dimension");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational base = point[i];
      if (e[i] < 0) {
        if (alexmod::is_zero(base)) throw InputError("negative power of zero in evaluation");
        base = 1 / base;
      }
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::llabs(e[i])));
      mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::llabs(e[i])));
      p.canonicalize();
      v *= p;
    }
    s += v;
  }
  return s;
}

std::pair<UPoly, std::int64_t> LaurentPoly::to_upoly() const {
  if (nvars_ != 1) throw InputError("univariate view of a multivariate Laurent polynomial");
  if (terms_.empty()) return {UPoly(), 0};
  const std::int64_t lo = terms_.begin()->first[0];
  const std::int64_t hi = terms_.rbegin()->first[0];
  std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e[0] - lo)] = c;
  return {UPoly(std::move(coeffs)), lo};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponents first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << (nvars_ == 1 ? std::string("t") : "t" + std::to_string(i + 1));
      if (e[i] != 1) mono << "^" << e[i];
    }
    if (!any) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly r = LaurentPoly::constant(p.nvars(), 1), b = p;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

UnitNormalForm normalize_unit(const LaurentPoly& p) {
  if (p.nvars() != 1) throw InputError("normalize_unit expects a univariate Laurent polynomial");
  if (p.is_zero()) throw InputError("normalize_unit of zero");
  auto [u, shift] = p.to_upoly();
  Rational lc = u.lead();
  return {u.monic(), lc, shift};
}

namespace {

class Parser {
public:
  Parser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse Laurent polynomial '" + std::string(s_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly r(nvars_);
    bool neg = accept('-');
    if (!neg) accept('+');
    LaurentPoly t = term();
    r = neg ? -t : t;
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly r = power();
    for (;;) {
      skip();
      if (accept('*')) {
        r *= power();
      } else if (accept('/')) {
        Rational d = number_value();
        if (alexmod::is_zero(d)) fail("division by zero");
        r *= 1 / d;
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 't')) {
        r *= power(); // implicit multiplication such as 3t or (t-1)(t+1)
      } else {
        return r;
      }
    }
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      if (!neg) accept('+');
      std::int64_t e = integer();
      if (neg) {
        if (!base.is_unit()) fail("negative power of a non-monomial");
        base = base.unit_inverse();
      }
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  LaurentPoly atom() {
    skip();
    if (accept('(')) {
      LaurentPoly r = expr();
      if (!accept(')')) fail("missing ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      std::size_t idx = 0;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::int64_t k = integer();
        if (k < 1 || static_cast<std::size_t>(k) > nvars_) fail("variable index out of range");
        idx = static_cast<std::size_t>(k - 1);
      } else if (nvars_ != 1) {
        fail("bare 't' is only allowed in one variable");
      }
      return LaurentPoly::variable(nvars_, idx);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return LaurentPoly::constant(nvars_, number_value());
    fail("expected a number, variable or '('");
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos_; ++i) v = checked_add(checked_mul(v, 10), s_[i] - '0');
    return v;
  }

  Rational number_value() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw InputError("Laurent ring needs at least one variable");
  return Parser(text, nvars).parse();
}

} // namespace alexmod
