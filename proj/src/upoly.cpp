#include "alexmod/upoly.hpp"

#include "alexmod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace alexmod {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (!alexmod::is_zero(c)) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  if (alexmod::is_zero(c)) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::x() { return monomial(1, 1); }

UPoly UPoly::x_pow_minus_one(int n) { return monomial(1, n) - UPoly(1); }

void UPoly::trim() {
  while (!coeffs_.empty() && alexmod::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  Rational inv = 1 / lead();
  r *= inv;
  return r;
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!alexmod::is_zero(coeffs_[i])) return static_cast<int>(i);
  return 0;
}

UPoly UPoly::strip_t_power() const {
  int v = valuation();
  if (v == 0) return *this;
  return UPoly(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (alexmod::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& c) {
  if (alexmod::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator-(UPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (alexmod::is_zero(c)) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly pow(const UPoly& p, unsigned e) {
  UPoly r(1), b = p;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    Rational f = top * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

bool divides(const UPoly& b, const UPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Bezout xgcd(const UPoly& a, const UPoly& b) {
  // invariant: r0 = s0 a + t0 b, r1 = s1 a + t1 b
  UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  const Rational c = 1 / r0.lead();
  r0 *= c;
  s0 *= c;
  t0 *= c;
  return {r0, s0, t0};
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

std::vector<SquarefreeFactor> yun_squarefree(const UPoly& p) {
  if (p.is_zero()) throw InputError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  UPoly f = p.monic();
  if (f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = exact_div(f, a);
  UPoly c = exact_div(fp, a);
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly r(1);
  for (const auto& f : yun_squarefree(p)) r *= f.factor;
  return r;
}

int cyclotomic_order_bound(int degree) { return 2 * degree * degree + 6; }

CyclotomicSplit cyclotomic_part(const UPoly& p) {
  if (!p.is_monic()) throw InputError("cyclotomic_part expects a monic polynomial");
  if (is_zero(p.coeff(0))) throw InputError("cyclotomic_part expects p(0) != 0");
  CyclotomicSplit out{UPoly(1), p, {}};
  const int bound = cyclotomic_order_bound(p.degree());
  for (int n = 1; n <= bound && out.remainder.degree() > 0; ++n) {
    bool stripped = false;
    const UPoly xn = UPoly::x_pow_minus_one(n);
    for (;;) {
      UPoly g = gcd(out.remainder, xn);
      if (g.degree() <= 0) break;
      out.root_of_unity_part *= g;
      out.remainder = exact_div(out.remainder, g);
      stripped = true;
    }
    if (stripped) out.orders.push_back(n);
  }
  return out;
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

} // namespace alexmod
