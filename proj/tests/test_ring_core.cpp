#include "alexmod/errors.hpp"
#include "alexmod/laurent.hpp"
#include "alexmod/qmatrix.hpp"
#include "alexmod/rational.hpp"
#include "alexmod/upoly.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <limits>

using namespace alexmod;

namespace {

LaurentPoly L(const char* s, std::size_t n = 1) { return parse_laurent(s, n); }
UPoly U(const char* s) { return L(s).to_upoly().first; }

} // namespace

TEST_CASE("rational parsing and normalization", "[rational]") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("0/5").get_den() == 1);
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  // arbitrary precision
  Rational big = parse_rational("123456789012345678901234567890/7");
  CHECK(big * 7 == parse_rational("123456789012345678901234567890"));
}

TEST_CASE("checked exponent arithmetic", "[rational]") {
  const auto max = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(max, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(max, 2), std::overflow_error);
  LaurentPoly p = LaurentPoly::monomial(1, {max});
  CHECK_THROWS_AS(p * LaurentPoly::variable(1, 0), std::overflow_error);
}

TEST_CASE("laurent_mul examples", "[laurent]") {
  CHECK(laurent_mul(L("t-1"), L("t+1")) == L("t^2-1"));
  LaurentPoly p = L("3*t^-2 + 1/2*t - 7");
  CHECK(laurent_mul(p, LaurentPoly::constant(1, 1)) == p);
  CHECK(laurent_mul(L("t1-1", 2), L("t1^-1+1", 2)) == L("t1 - t1^-1", 2));
  CHECK_THROWS_AS(laurent_mul(L("t"), L("t1", 2)), InputError);
}

TEST_CASE("parser", "[laurent]") {
  CHECK(L("(t1-1)*(t2+2)", 2) == L("t1*t2 + 2*t1 - t2 - 2", 2));
  CHECK(L("2(t-1)^2") == L("2t^2 - 4t + 2"));
  CHECK(L("t^-1 * t") == LaurentPoly::constant(1, 1));
  CHECK(L("0").is_zero());
  CHECK(L("t - t").is_zero());
  CHECK(L("t/2") == LaurentPoly::monomial(1, {1}, Rational(1, 2)));
  CHECK_THROWS_AS(L("t +"), InputError);
  CHECK_THROWS_AS(L("t3", 2), InputError);
  CHECK_THROWS_AS(L("t", 2), InputError);
  CHECK_THROWS_AS(L("(t+1)^-1"), InputError);
  // printing round-trips
  LaurentPoly p = L("-3/4*t1^-2*t2 + t2^5 - 1", 2);
  CHECK(L(p.to_string().c_str(), 2) == p);
}

TEST_CASE("normalize_unit examples", "[laurent]") {
  auto nf = normalize_unit(L("3*t^-1 - 3*t^-2"));
  CHECK(nf.core == U("t-1"));
  CHECK(nf.unit_coeff == 3);
  CHECK(nf.unit_exponent == -2);
  nf = normalize_unit(L("t^5"));
  CHECK(nf.core == UPoly(1));
  CHECK(nf.unit_coeff == 1);
  CHECK(nf.unit_exponent == 5);
  CHECK_THROWS_AS(normalize_unit(LaurentPoly(1)), InputError);
  CHECK_THROWS_AS(normalize_unit(L("t1+t2", 2)), InputError);
}

TEST_CASE("ring axioms on random triples", "[laurent][property]") {
  testsupport::Gen g(101);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    auto a = g.poly(n, 3, 4, -1), b = g.poly(n, 3, 4, -1), c = g.poly(n, 2, 3, -1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    auto ab = a * b;
    for (const auto& [e, q] : ab.terms()) CHECK(q != 0);
  }
}

TEST_CASE("normalize_unit reproduces input", "[laurent][property]") {
  testsupport::Gen g(202);
  for (int k = 0; k < 200; ++k) {
    LaurentPoly p = g.nonzero_laurent(8);
    auto nf = normalize_unit(p);
    CHECK(nf.core.is_monic());
    CHECK(nf.core.coeff(0) != 0);
    LaurentPoly back = LaurentPoly::monomial(1, {nf.unit_exponent}, nf.unit_coeff) * LaurentPoly::univariate(nf.core);
    CHECK(back == p);
  }
}

TEST_CASE("conjugation is an involutive ring map", "[laurent]") {
  testsupport::Gen g(5);
  for (int k = 0; k < 50; ++k) {
    auto a = g.poly(2, 3, 4, -1), b = g.poly(2, 3, 4, -1);
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("polynomial division and gcd", "[upoly]") {
  auto [q, r] = divmod(U("t^3 - 1"), U("t - 1"));
  CHECK(q == U("t^2 + t + 1"));
  CHECK(r.is_zero());
  CHECK(gcd(U("t^2 - 1"), U("t^2 - 2t + 1")) == U("t - 1"));
  CHECK(gcd(UPoly(), UPoly()).is_zero());
  CHECK(lcm(U("t-1"), U("t+1")) == U("t^2-1"));
  CHECK_THROWS_AS(exact_div(U("t^2+1"), U("t-1")), InternalError);
  CHECK_THROWS(divmod(U("t"), UPoly()));
}

TEST_CASE("yun_squarefree examples", "[upoly]") {
  auto f = yun_squarefree(U("(t-1)^2*(t+1)"));
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == U("t+1"));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].factor == U("t-1"));
  CHECK(f[1].multiplicity == 2);

  f = yun_squarefree(U("t-1"));
  REQUIRE(f.size() == 1);
  CHECK(f[0].multiplicity == 1);

  f = yun_squarefree(U("t^2 - 2t + 1"));
  REQUIRE(f.size() == 1);
  CHECK(f[0].factor == U("t-1"));
  CHECK(f[0].multiplicity == 2);
  // independent check: p / gcd(p, p') is the squarefree part
  UPoly p = U("t^2-2t+1");
  CHECK(exact_div(p, gcd(p, p.derivative())) == U("t-1"));

  CHECK_THROWS_AS(yun_squarefree(UPoly()), InputError);
}

TEST_CASE("yun_squarefree properties", "[upoly][property]") {
  testsupport::Gen g(303);
  for (int k = 0; k < 150; ++k) {
    // product of random factors raised to random powers
    UPoly p(1);
    int nf = g.integer(1, 3);
    for (int j = 0; j < nf; ++j) {
      UPoly f = g.upoly(g.integer(1, 2));
      if (f.degree() < 1) continue;
      p = p * pow(f, static_cast<unsigned>(g.integer(1, 3)));
    }
    if (p.degree() < 1) continue;
    p = p.monic();
    auto fs = yun_squarefree(p);
    UPoly prod(1);
    int last = 0;
    for (std::size_t a = 0; a < fs.size(); ++a) {
      prod = prod * pow(fs[a].factor, static_cast<unsigned>(fs[a].multiplicity));
      CHECK(fs[a].multiplicity > last);
      last = fs[a].multiplicity;
      CHECK(gcd(fs[a].factor, fs[a].factor.derivative()) == UPoly(1));
      for (std::size_t b = a + 1; b < fs.size(); ++b) CHECK(gcd(fs[a].factor, fs[b].factor) == UPoly(1));
    }
    CHECK(prod == p);
  }
}

TEST_CASE("cyclotomic_part examples", "[upoly]") {
  auto s = cyclotomic_part(U("(t-2)*(t^2+t+1)"));
  CHECK(s.root_of_unity_part == U("t^2+t+1"));
  CHECK(s.remainder == U("t-2"));
  CHECK(s.orders == std::vector<int>{3});

  s = cyclotomic_part(U("t-1"));
  CHECK(s.root_of_unity_part == U("t-1"));
  CHECK(s.remainder == UPoly(1));

  s = cyclotomic_part(U("t-3"));
  CHECK(s.root_of_unity_part == UPoly(1));
  CHECK(s.remainder == U("t-3"));
  for (int N = 1; N <= cyclotomic_order_bound(1); ++N) CHECK(gcd(U("t-3"), UPoly::x_pow_minus_one(N)) == UPoly(1));

  CHECK_THROWS_AS(cyclotomic_part(U("2t-1")), InputError);
  CHECK_THROWS_AS(cyclotomic_part(UPoly({0, -1, 1})), InputError);
}

TEST_CASE("cyclotomic_part properties", "[upoly][property]") {
  testsupport::Gen g(404);
  const std::vector<UPoly> cyclo = {U("t-1"), U("t+1"), U("t^2+t+1"), U("t^2+1"), U("t^4+t^3+t^2+t+1"),
                                    U("t^2-t+1"), U("t^4+1")};
  for (int k = 0; k < 100; ++k) {
    UPoly p(1);
    for (int j = g.integer(0, 3); j > 0; --j) p = p * cyclo[static_cast<std::size_t>(g.integer(0, 6))];
    for (int j = g.integer(0, 2); j > 0; --j) {
      UPoly f = g.upoly(g.integer(1, 2));
      if (f.degree() < 1 || f.coeff(0) == 0) continue;
      p = p * f;
    }
    p = p.monic();
    if (p.coeff(0) == 0) continue;
    auto s = cyclotomic_part(p);
    CHECK(s.root_of_unity_part * s.remainder == p);
    std::int64_t L = 1;
    for (int N : s.orders) L = lcm_int(L, N);
    // t^L - 1 is squarefree, so repeated roots only divide a power of it
    const UPoly tl = UPoly::x_pow_minus_one(static_cast<int>(L));
    CHECK(divides(squarefree_part(s.root_of_unity_part), tl));
    CHECK(divides(s.root_of_unity_part, pow(tl, static_cast<unsigned>(std::max(1, p.degree())))));
    for (int N = 1; N <= cyclotomic_order_bound(p.degree()); ++N)
      CHECK(gcd(s.remainder, UPoly::x_pow_minus_one(N)) == UPoly(1));
  }
}

TEST_CASE("rational linear algebra", "[qmatrix]") {
  QMatrix m = QMatrix::from_rows({{1, 1}, {0, 1}});
  CHECK(characteristic_polynomial(m) == U("(t-1)^2"));
  CHECK(minimal_polynomial(m) == U("(t-1)^2"));
  CHECK(minimal_polynomial(QMatrix::identity(3)) == U("t-1"));
  CHECK(companion_matrix(U("t^2-2t+1")) == QMatrix::from_rows({{0, -1}, {1, 2}}));
  CHECK(power(m, -1) == QMatrix::from_rows({{1, -1}, {0, 1}}));
  CHECK(rank(QMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
  QMatrix k = kernel_basis(QMatrix::from_rows({{1, 2}, {2, 4}}));
  CHECK(k.cols() == 1);
  CHECK((QMatrix::from_rows({{1, 2}, {2, 4}}) * k).is_zero());

  testsupport::Gen g(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    QMatrix a = g.int_matrix(n, n);
    UPoly chi = characteristic_polynomial(a);
    CHECK(evaluate(chi, a).is_zero());
    UPoly mu = minimal_polynomial(a);
    CHECK(evaluate(mu, a).is_zero());
    CHECK(divides(mu, chi));
    CHECK(chi.coeff(0) * ((n % 2) ? -1 : 1) == determinant(a));
  }
}
