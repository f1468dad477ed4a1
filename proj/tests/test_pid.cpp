#include "alexmod/errors.hpp"
#include "alexmod/pid.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <map>

using namespace alexmod;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s, 1); }
UPoly U(const char* s) { return parse_laurent(s, 1).to_upoly().first; }

LaurentMatrix LM(std::vector<std::vector<const char*>> rows) {
  LaurentMatrix m(1, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = L(rows[i][j]);
  return m;
}

void check_smith(const LaurentMatrix& p) {
  INFO(p.to_string());
  const SmithForm s = smith_normal_form(p);
  for (const auto& failure : oracles::smith_failures(p, s)) FAIL_CHECK(failure);
}

} // namespace

TEST_CASE("smith_normal_form examples", "[snf]") {
  auto s = smith_normal_form(LM({{"t-1", "0"}, {"0", "t^2-1"}}));
  CHECK(s.D == LM({{"t-1", "0"}, {"0", "t^2-1"}}));
  s = smith_normal_form(LM({{"t", "0"}, {"0", "1"}}));
  CHECK(s.D == LM({{"1", "0"}, {"0", "1"}}));
  s = smith_normal_form(LM({{"t-1", "t"}, {"0", "t-1"}}));
  CHECK(s.D == LM({{"1", "0"}, {"0", "t^2-2t+1"}}));
  check_smith(LM({{"t-1", "t"}, {"0", "t-1"}}));
  CHECK_THROWS_AS(smith_normal_form(LaurentMatrix(2, 1, 1)), InputError);
}

TEST_CASE("smith_normal_form on degenerate shapes", "[snf]") {
  check_smith(LaurentMatrix(1, 0, 3));
  check_smith(LaurentMatrix(1, 3, 0));
  check_smith(LaurentMatrix(1, 2, 2));
  check_smith(LM({{"t^-3 - t^2", "2"}}));
  check_smith(LM({{"t-1"}, {"t^2-1"}, {"t^-1"}}));
}

TEST_CASE("SNF axioms on random matrices", "[snf][property]") {
  testsupport::Gen g(5150);
  for (int k = 0; k < 60; ++k) {
    auto r = static_cast<std::size_t>(g.integer(1, 4)), c = static_cast<std::size_t>(g.integer(1, 4));
    check_smith(g.laurent_matrix(r, c, g.integer(0, 3)));
  }
}

TEST_CASE("inverse check by evaluation", "[snf]") {
  const LaurentMatrix a = LM({{"t", "t^2 - 1"}, {"0", "t^-1"}});
  const LaurentMatrix ainv = LM({{"t^-1", "1 - t^2"}, {"0", "t"}});
  CHECK(a * ainv == LaurentMatrix::identity(1, 2));
  CHECK(oracles::inverse_pair(a, ainv, 7));
  LaurentMatrix off = ainv;
  off(0, 1) += LM({{"t^40 - 1"}})(0, 0) * LM({{"1/3"}})(0, 0);
  CHECK_FALSE(oracles::inverse_pair(a, off, 7));
  CHECK_FALSE(oracles::inverse_pair(a, LaurentMatrix::identity(1, 2), 7));
  // U is unimodular and stays checked exactly on small sizes
  testsupport::Gen g(6061);
  for (int k = 0; k < 20; ++k) {
    const LaurentMatrix p = g.laurent_matrix(3, 3, 2);
    const SmithForm s = smith_normal_form(p);
    CHECK(s.U * s.U_inv == LaurentMatrix::identity(1, 3));
    CHECK(determinant(s.U).is_unit());
    CHECK(determinant(s.V).is_unit());
  }
}

TEST_CASE("invariant_factors examples", "[snf]") {
  auto m = FPModule::from_matrix(LM({{"t-1", "t"}, {"0", "t-1"}}));
  auto d = invariant_factors(m);
  CHECK(d.free_rank == 0);
  CHECK(d.factors == std::vector<UPoly>{U("(t-1)^2")});

  d = invariant_factors(FPModule::from_matrix(LM({{"0"}})));
  CHECK(d.free_rank == 1);
  CHECK(d.factors.empty());

  d = invariant_factors(FPModule::from_matrix(LM({{"t-1"}})));
  CHECK(d.free_rank == 0);
  CHECK(d.factors == std::vector<UPoly>{U("t-1")});

  d = invariant_factors(FPModule::free(1, 3));
  CHECK(d.free_rank == 3);

  FPModule bad = FPModule::from_matrix(LM({{"t"}}));
  bad.rank = 2;
  CHECK_THROWS_AS(invariant_factors(bad), InputError);
}

TEST_CASE("torsion_summary examples", "[snf]") {
  auto t = torsion_summary(FPModule::from_matrix(LM({{"t^2-2t+1"}})));
  CHECK(t.dim == 2);
  CHECK(t.ops[0] == QMatrix::from_rows({{0, -1}, {1, 2}}));
  CHECK(characteristic_polynomial(t.ops[0]) == U("(t-1)^2"));

  t = torsion_summary(FPModule::free(1, 1));
  CHECK(t.dim == 0);

  t = torsion_summary(FPModule::from_matrix(LM({{"t-1", "0"}, {"0", "t-1"}})));
  CHECK(t.dim == 2);
  CHECK(t.ops[0].is_identity());
}

TEST_CASE("torsion_summary polynomials", "[snf][property]") {
  testsupport::Gen g(77);
  for (int k = 0; k < 40; ++k) {
    auto r = static_cast<std::size_t>(g.integer(1, 4));
    auto m = FPModule::from_matrix(g.laurent_matrix(r, static_cast<std::size_t>(g.integer(1, 4)), 3));
    auto d = invariant_factors(m);
    auto t = torsion_summary(d);
    UPoly prod(1);
    for (const auto& f : d.factors) prod = prod * f;
    CHECK(characteristic_polynomial(t.ops[0]) == prod);
    if (!d.factors.empty()) CHECK(minimal_polynomial(t.ops[0]) == d.factors.back());
  }
}

TEST_CASE("tM - I presents the inverse monodromy", "[snf][property]") {
  testsupport::Gen g(31337);
  for (int k = 0; k < 40; ++k) {
    auto r = static_cast<std::size_t>(g.integer(1, 4));
    QMatrix m0 = g.invertible_matrix(r);
    LaurentMatrix p(1, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        p(i, j) = LaurentPoly::monomial(1, {1}, m0(i, j)) - LaurentPoly::constant(1, i == j ? 1 : 0);
    auto d = invariant_factors(FPModule::from_matrix(p));
    int total = 0;
    for (const auto& f : d.factors) total += f.degree();
    CHECK(d.free_rank == 0);
    CHECK(total == static_cast<int>(r));
    CHECK(similar(torsion_summary(d).ops[0], *inverse(m0)));
  }
}

TEST_CASE("similarity", "[snf]") {
  QMatrix j = QMatrix::from_rows({{1, 1}, {0, 1}});
  CHECK(similarity_invariants(j) == std::vector<UPoly>{U("(t-1)^2")});
  CHECK(similarity_invariants(QMatrix::identity(2)) == std::vector<UPoly>{U("t-1"), U("t-1")});
  CHECK_FALSE(similar(j, QMatrix::identity(2)));
  testsupport::Gen g(9);
  for (int k = 0; k < 30; ++k) {
    auto n = static_cast<std::size_t>(g.integer(1, 4));
    QMatrix a = g.int_matrix(n, n), p = g.invertible_matrix(n);
    CHECK(similar(a, p * a * *inverse(p)));
  }
}

TEST_CASE("simplify_presentation keeps invariant factors", "[snf][property]") {
  CHECK(simplify_presentation(FPModule::from_matrix(LM({{"t", "t-1"}}))).rank == 0);
  testsupport::Gen g(404);
  for (int k = 0; k < 50; ++k) {
    auto m = FPModule::from_matrix(g.laurent_matrix(static_cast<std::size_t>(g.integer(1, 4)),
                                                    static_cast<std::size_t>(g.integer(1, 4)), 2, 0.5));
    auto s = simplify_presentation(m);
    CHECK(s.rank <= m.rank);
    CHECK(invariant_factors(s) == invariant_factors(m));
  }
}
