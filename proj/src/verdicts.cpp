#include "alexmod/verdicts.hpp"

#include "alexmod/errors.hpp"
#include "alexmod/qmatrix.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace alexmod {

namespace {

QMatrix sigma_of(const ArtinianModule& m, const std::vector<int>& word) {
  for (int a : word)
    if (a == 0 || static_cast<std::size_t>(std::abs(a)) > m.nvars)
      throw InputError("word index " + std::to_string(a) + " out of range 1.." + std::to_string(m.nvars));
  return m.word_operator(word);
}

bool squarefree(const UPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

} // namespace

QuasiUnipotence is_quasi_unipotent(const ArtinianModule& m, const std::vector<int>& word) {
  const QMatrix sigma = sigma_of(m, word);
  if (m.dim == 0) return {true, 1};
  const UPoly sq = squarefree_part(characteristic_polynomial(sigma));
  const CyclotomicSplit split = cyclotomic_part(sq);
  if (split.remainder.degree() > 0) return {false, std::nullopt};
  std::int64_t n = 1;
  for (int o : split.orders) n = lcm_int(n, o);
  return {true, n};
}

JordanProfile jordan_profile(const ArtinianModule& m, const std::vector<int>& word) {
  JordanProfile p;
  const QuasiUnipotence qu = is_quasi_unipotent(m, word);
  if (!qu.quasi_unipotent) return p;
  p.quasi_unipotent = true;
  p.N = *qu.N;
  if (m.dim == 0) return p;
  const QMatrix sigma = sigma_of(m, word);
  const QMatrix x = power(sigma, p.N) - QMatrix::identity(m.dim);
  QMatrix acc = x;
  p.nilpotence_index = 1;
  while (!acc.is_zero()) {
    if (p.nilpotence_index > m.dim) throw InternalError("sigma^N - I is not nilpotent although char(sigma) is cyclotomic");
    acc = acc * x;
    ++p.nilpotence_index;
  }
  p.layers = yun_squarefree(minimal_polynomial(sigma));
  return p;
}

bool is_semisimple(const ArtinianModule& m) {
  if (m.dim == 0) return true;
  for (const auto& op : m.ops)
    if (!squarefree(minimal_polynomial(op))) return false;
  if (m.ops.size() < 2) return true;
  std::mt19937 rng(20211);
  std::uniform_int_distribution<int> coeff(-7, 7);
  for (int trial = 0; trial < 5; ++trial) {
    QMatrix c(m.dim, m.dim);
    for (const auto& op : m.ops) c += op * Rational(coeff(rng));
    if (!squarefree(minimal_polynomial(c))) return false;
  }
  return true;
}

std::vector<Check> check_vanishing_range(const std::map<std::size_t, ArtinianModule>& results, const GeometryContext& ctx) {
  std::vector<Check> out;
  const std::size_t hi = ctx.n + 2 * ctx.d;
  const std::string range = "[" + std::to_string(ctx.n) + ", " + std::to_string(hi) + "]";
  for (const auto& [i, m] : results) {
    Check c;
    c.name = "vanishing_range[" + std::to_string(i) + "]";
    c.observed = "qdim " + std::to_string(m.dim);
    if (i < ctx.n || i > hi) {
      c.expected = "qdim 0 outside " + range;
      c.status = m.dim == 0 ? Status::Pass : Status::Violation;
    } else {
      c.expected = "any qdim inside " + range;
      c.status = Status::Pass;
    }
    out.push_back(c);
  }
  return out;
}

std::optional<std::int64_t> jordan_bound(const GeometryContext& ctx) {
  const auto i = static_cast<std::int64_t>(ctx.i), n = static_cast<std::int64_t>(ctx.n), d = static_cast<std::int64_t>(ctx.d);
  if (i < n || i > n + 2 * d) return std::nullopt;
  if (ctx.smooth_fiber) return std::min(floor_div(i - n + 2, 2), d - floor_div(i - n - 1, 2));
  return 1 + std::min(i - n, 2 * d - i + n);
}

Check check_jordan_bound(const JordanProfile& profile, const GeometryContext& ctx) {
  Check c;
  c.name = "jordan_bound[" + std::to_string(ctx.i) + "]";
  c.observed = "nilpotence index " + std::to_string(profile.nilpotence_index);
  const auto bound = jordan_bound(ctx);
  if (!profile.quasi_unipotent) {
    c.expected = "quasi-unipotent action";
    c.observed = "not quasi-unipotent";
    return c;
  }
  if (!bound) {
    c.expected = "degree inside [n, n + 2d]";
    return c;
  }
  c.expected = "nilpotence index <= " + std::to_string(*bound) + (ctx.smooth_fiber ? " (smooth fiber)" : "");
  c.status = static_cast<std::int64_t>(profile.nilpotence_index) <= *bound ? Status::Pass : Status::Violation;
  return c;
}

bool Report::has_violation() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Violation; });
}

Report check_bundle(const std::map<std::size_t, ArtinianModule>& results, GeometryContext ctx, const std::vector<int>& word) {
  Report r;
  r.context = ctx;
  r.checks = check_vanishing_range(results, ctx);
  for (const auto& [i, m] : results) {
    if (m.dim == 0) continue;
    m.validate();
    ctx.i = i;
    const std::string tag = "[" + std::to_string(i) + "]";
    const JordanProfile p = jordan_profile(m, word);
    Check qu;
    qu.name = "quasi_unipotent" + tag;
    qu.expected = "every eigenvalue a root of unity";
    qu.observed = p.quasi_unipotent ? "N = " + std::to_string(p.N) : "eigenvalue off the roots of unity";
    qu.status = p.quasi_unipotent ? Status::Pass : Status::Violation;
    r.checks.push_back(qu);
    r.checks.push_back(check_jordan_bound(p, ctx));
    Check ss;
    ss.name = "semisimple" + tag;
    ss.expected = "informational";
    ss.observed = is_semisimple(m) ? "true" : "false";
    r.checks.push_back(ss);
  }
  r.context.i = 0;
  return r;
}

} // namespace alexmod
