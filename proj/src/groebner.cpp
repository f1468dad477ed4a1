#include "alexmod/groebner.hpp"

#include "alexmod/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace alexmod::gb {

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
  r.deg = a.deg + b.deg;
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
  r.deg = a.deg - b.deg;
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

int MonomialOrder::compare_mono(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::Lex) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

int MonomialOrder::compare(const Term& a, const Term& b) const {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return compare_mono(a.m, b.m);
}

namespace {

Monomial to_monomial(const Exponents& e) {
  if (e.size() > kMaxVars) throw InputError("too many variables for the Gröbner engine");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw InputError("negative exponent in a polynomial-ring computation");
    if (e[i] > (1 << 20)) throw InputError("exponent too large for the Gröbner engine");
    m.e[i] = static_cast<std::int32_t>(e[i]);
    m.deg += m.e[i];
  }
  return m;
}

Exponents to_exponents(const Monomial& m, std::size_t nvars) {
  Exponents e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = m.e[i];
  return e;
}

void sort_element(Element& f, const MonomialOrder& order) {
  std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) { return order.compare(a, b) > 0; });
}

// f[start..] - c * x^m * g, merged.
Element sub_scaled(const Element& f, std::size_t start, const Rational& c, const Monomial& m, const Element& g,
                   const MonomialOrder& order) {
  Element r;
  r.reserve(f.size() - start + g.size());
  std::size_t i = start, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(f[i++]);
      continue;
    }
    Term gt{mono_mul(g[j].m, m), g[j].pos, g[j].c * c};
    if (i == f.size()) {
      gt.c = -gt.c;
      r.push_back(std::move(gt));
      ++j;
      continue;
    }
    int cmp = order.compare(f[i], gt);
    if (cmp > 0) {
      r.push_back(f[i++]);
    } else if (cmp < 0) {
      gt.c = -gt.c;
      r.push_back(std::move(gt));
      ++j;
    } else {
      Rational v = f[i].c - gt.c;
      if (sgn(v) != 0) r.push_back(Term{f[i].m, f[i].pos, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

void make_monic(Element& f) {
  if (f.empty() || f.front().c == 1) return;
  Rational inv = 1 / f.front().c;
  for (auto& t : f) t.c *= inv;
}

const Element* find_reducer(const std::vector<Element>& g, const Term& t, std::size_t skip = SIZE_MAX) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == skip) continue;
    const Term& l = g[k].front();
    if (l.pos == t.pos && l.m.divides(t.m)) return &g[k];
  }
  return nullptr;
}

// Full reduction of f modulo the list g (skipping index `skip`).
Element reduce(Element f, const std::vector<Element>& g, const MonomialOrder& order, std::size_t skip = SIZE_MAX) {
  Element r;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& t = f[start];
    const Element* red = find_reducer(g, t, skip);
    if (!red) {
      r.push_back(t);
      ++start;
      continue;
    }
    const Term& l = red->front();
    f = sub_scaled(f, start, t.c / l.c, mono_div(t.m, l.m), *red, order);
    start = 0;
  }
  return r;
}

// Only reduces until the leading term is irreducible.
Element top_reduce(Element f, const std::vector<Element>& g, const MonomialOrder& order) {
  while (!f.empty()) {
    const Term& t = f.front();
    const Element* red = find_reducer(g, t);
    if (!red) break;
    const Term& l = red->front();
    f = sub_scaled(f, 0, t.c / l.c, mono_div(t.m, l.m), *red, order);
  }
  return f;
}

Element s_polynomial(const Element& a, const Element& b, const MonomialOrder& order) {
  const Term& la = a.front();
  const Term& lb = b.front();
  Monomial l = mono_lcm(la.m, lb.m);
  // a * (l / la) / ca - b * (l / lb) / cb
  Element sa;
  sa.reserve(a.size());
  Monomial ma = mono_div(l, la.m);
  Rational ia = 1 / la.c;
  for (const auto& t : a) sa.push_back(Term{mono_mul(t.m, ma), t.pos, t.c * ia});
  return sub_scaled(sa, 0, 1 / lb.c, mono_div(l, lb.m), b, order);
}

std::size_t infer_nvars(const LaurentMatrix& m) { return m.nvars(); }

} // namespace

Element to_element(const LaurentMatrix& m, std::size_t col, const MonomialOrder& order) {
  Element f;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [e, c] : m(i, col).terms()) f.push_back(Term{to_monomial(e), static_cast<std::uint32_t>(i), c});
  sort_element(f, order);
  return f;
}

LaurentMatrix to_matrix(const std::vector<Element>& v, std::size_t nvars, std::size_t rank) {
  LaurentMatrix m(nvars, rank, v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (const auto& t : v[j]) m(t.pos, j).add_term(to_exponents(t.m, nvars), t.c);
  return m;
}

LaurentMatrix GroebnerBasis::matrix() const { return to_matrix(gens, nvars, rank); }

bool GroebnerBasis::is_unit_ideal() const {
  if (rank != 1) return false;
  for (const auto& g : gens)
    if (g.front().m.deg == 0) return true;
  return false;
}

GroebnerBasis buchberger(const LaurentMatrix& gens, MonomialOrder order) {
  GroebnerBasis out;
  out.order = order;
  out.nvars = infer_nvars(gens);
  out.rank = gens.rows();
  if (out.nvars > kMaxVars) throw InputError("too many variables for the Gröbner engine");

  std::vector<Element> g;
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    Element f = to_element(gens, j, order);
    if (f.empty()) continue;
    make_monic(f);
    g.push_back(std::move(f));
  }

  struct Pair {
    std::size_t i, j;
    Term lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g[i].front().pos != g[j].front().pos) continue;
      pending.push_back({i, j, Term{mono_lcm(g[i].front().m, g[j].front().m), g[j].front().pos, 1}});
      pending_keys.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);

  const bool ideal = out.rank == 1;
  while (!pending.empty()) {
    // normal strategy: smallest lcm first, then oldest pair
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int c = order.compare(pending[k].lcm, pending[best].lcm);
      if (c < 0 || (c == 0 && std::pair(pending[k].j, pending[k].i) < std::pair(pending[best].j, pending[best].i)))
        best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_keys.erase({p.i, p.j});

    const Term& li = g[p.i].front();
    const Term& lj = g[p.j].front();
    if (ideal && mono_mul(li.m, lj.m) == p.lcm.m) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const Term& lk = g[k].front();
      if (lk.pos != p.lcm.pos || !lk.m.divides(p.lcm.m)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.count(key(p.i, k)) && !pending_keys.count(key(p.j, k));
    }
    if (chain) continue;

    Element h = top_reduce(s_polynomial(g[p.i], g[p.j], order), g, order);
    if (h.empty()) continue;
    h = reduce(std::move(h), g, order);
    make_monic(h);
    g.push_back(std::move(h));
    add_pairs(g.size() - 1);
  }

  // minimalize
  std::vector<Element> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < g.size() && !redundant; ++l) {
      if (l == k) continue;
      const Term& a = g[l].front();
      const Term& b = g[k].front();
      if (a.pos != b.pos || !a.m.divides(b.m)) continue;
      redundant = !(a.m == b.m) || l < k;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  // interreduce tails
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Element head{minimal[k].front()};
    Element tail(minimal[k].begin() + 1, minimal[k].end());
    tail = reduce(std::move(tail), minimal, order, k);
    head.insert(head.end(), tail.begin(), tail.end());
    make_monic(head);
    minimal[k] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Element& a, const Element& b) { return order.compare(a.front(), b.front()) < 0; });
  out.gens = std::move(minimal);
  return out;
}

GroebnerBasis ideal_basis(std::size_t nvars, const std::vector<LaurentPoly>& gens, MonomialOrder order) {
  LaurentMatrix m(nvars, 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].nvars() != nvars) throw InputError("ideal generator has wrong variable count");
    m(0, j) = gens[j];
  }
  return buchberger(m, order);
}

bool buchberger_criterion_holds(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i)
    for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
      if (gb.gens[i].front().pos != gb.gens[j].front().pos) continue;
      if (!reduce(s_polynomial(gb.gens[i], gb.gens[j], gb.order), gb.gens, gb.order).empty()) return false;
    }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.gens.size(); ++i) {
    if (gb.gens[i].empty() || gb.gens[i].front().c != 1) return false;
    for (std::size_t j = 0; j < gb.gens.size(); ++j) {
      if (i == j) continue;
      const Term& l = gb.gens[i].front();
      for (const auto& t : gb.gens[j])
        if (t.pos == l.pos && l.m.divides(t.m)) return false;
    }
  }
  return true;
}

Element normal_form(const GroebnerBasis& gb, Element f) { return reduce(std::move(f), gb.gens, gb.order); }

LaurentMatrix normal_form(const GroebnerBasis& gb, const LaurentMatrix& m) {
  if (m.rows() != gb.rank) throw InputError("normal form: ambient rank mismatch");
  std::vector<Element> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(normal_form(gb, to_element(m, j, gb.order)));
  return to_matrix(cols, gb.nvars, gb.rank);
}

bool contains(const GroebnerBasis& gb, const LaurentMatrix& m) {
  if (m.rows() != gb.rank) throw InputError("membership: ambient rank mismatch");
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!normal_form(gb, to_element(m, j, gb.order)).empty()) return false;
  return true;
}

bool same_submodule(const LaurentMatrix& a, const LaurentMatrix& b) {
  return contains(buchberger(a), b) && contains(buchberger(b), a);
}

LaurentMatrix preimage(const LaurentMatrix& b, const LaurentMatrix& l) {
  if (b.rows() != l.rows()) throw InputError("preimage: row mismatch");
  const std::size_t q = b.rows(), p = b.cols(), nvars = b.nvars();
  if (q == 0 || b.is_zero()) return LaurentMatrix::identity(nvars, p);
  // columns (B e_j ; e_j) and (l_k ; 0) in R^{q+p}; position-over-term makes
  // the basis elements with vanishing first q coordinates a basis of the
  // intersection with 0 (+) R^p
  LaurentMatrix big = vstack(hstack(b, l), hstack(LaurentMatrix::identity(nvars, p), LaurentMatrix(nvars, p, l.cols())));
  GroebnerBasis g = buchberger(big);
  std::vector<Element> keep;
  for (const auto& e : g.gens) {
    if (e.front().pos < q) continue;
    Element proj;
    for (const auto& t : e) proj.push_back(Term{t.m, static_cast<std::uint32_t>(t.pos - q), t.c});
    keep.push_back(std::move(proj));
  }
  return to_matrix(keep, nvars, p);
}

LaurentMatrix syzygy_matrix(const LaurentMatrix& f) {
  return preimage(f, LaurentMatrix(f.nvars(), f.rows(), 0));
}

LaurentMatrix syzygies(const GroebnerBasis& gb) { return syzygy_matrix(gb.matrix()); }

LaurentMatrix prune_generators(const LaurentMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = m(i, j).is_zero();
    if (!zero) keep.push_back(j);
  }
  auto select = [&](const std::vector<std::size_t>& cols) {
    LaurentMatrix r(m.nvars(), m.rows(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (std::size_t i = 0; i < m.rows(); ++i) r(i, k) = m(i, cols[k]);
    return r;
  };
  for (std::size_t k = keep.size(); k-- > 0;) {
    std::vector<std::size_t> others = keep;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
    if (contains(buchberger(select(others)), select({keep[k]}))) keep = std::move(others);
  }
  return select(keep);
}

FreeResolution free_resolution(const FPModule& m, std::size_t length) {
  m.validate();
  FreeResolution r;
  r.length = length;
  r.ranks.push_back(m.rank);
  if (length == 0) return r;
  r.maps.push_back(m.presentation);
  r.ranks.push_back(m.presentation.cols());
  for (std::size_t k = 1; k < length; ++k) {
    LaurentMatrix s = r.ranks[k] == 0 ? LaurentMatrix(m.nvars, 0, 0) : prune_generators(syzygy_matrix(r.maps.back()));
    r.maps.push_back(s);
    r.ranks.push_back(s.cols());
  }
  return r;
}

int krull_dim(const GroebnerBasis& g) {
  if (g.rank != 1) throw InputError("krull_dim expects an ideal");
  if (g.is_unit_ideal()) return -1;
  const std::size_t n = g.nvars;
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& e : g.gens) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (e.front().m.e[i] > 0 && !(s & (1U << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

int krull_dim(std::size_t nvars, const std::vector<LaurentPoly>& ideal) { return krull_dim(ideal_basis(nvars, ideal)); }

LaurentMatrix colon(const LaurentMatrix& l, const std::vector<LaurentPoly>& ideal) {
  const std::size_t q = l.rows(), nvars = l.nvars();
  std::vector<LaurentPoly> gens;
  for (const auto& f : ideal)
    if (!f.is_zero()) gens.push_back(f);
  if (gens.empty()) return LaurentMatrix::identity(nvars, q);
  LaurentMatrix b(nvars, q * gens.size(), q);
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < q; ++i) b(j * q + i, i) = gens[j];
  return preimage(b, block_diagonal(std::vector<LaurentMatrix>(gens.size(), l)));
}

LaurentMatrix saturate(const LaurentMatrix& l, const std::vector<LaurentPoly>& ideal) {
  LaurentMatrix cur = l;
  for (;;) {
    LaurentMatrix next = colon(cur, ideal);
    if (contains(buchberger(cur), next)) return cur;
    cur = std::move(next);
  }
}

LaurentMatrix saturate(const FPModule& m, const LaurentMatrix& n, const std::vector<LaurentPoly>& ideal) {
  m.validate();
  if (n.rows() != m.rank) throw InputError("saturate: submodule lives in a different ambient module");
  return saturate(hstack(n, m.presentation), ideal);
}

std::vector<LaurentPoly> annihilator(const FPModule& m) {
  m.validate();
  const std::size_t g = m.rank;
  if (g == 0) return {LaurentPoly::constant(m.nvars, 1)};
  LaurentMatrix b(m.nvars, g * g, 1);
  for (std::size_t j = 0; j < g; ++j) b(j * g + j, 0) = LaurentPoly::constant(m.nvars, 1);
  LaurentMatrix a = preimage(b, block_diagonal(std::vector<LaurentMatrix>(g, m.presentation)));
  std::vector<LaurentPoly> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(0, j));
  return out;
}

std::vector<LaurentPoly> element_annihilator(const FPModule& m, const LaurentMatrix& v) {
  m.validate();
  if (v.rows() != m.rank || v.cols() != 1) throw InputError("element_annihilator expects a single column");
  LaurentMatrix a = preimage(v, m.presentation);
  std::vector<LaurentPoly> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(0, j));
  return out;
}

FPModule ext_top(const FPModule& m) {
  m.validate();
  const std::size_t n = m.nvars;
  FreeResolution r = free_resolution(m, n + 1);
  if (r.ranks[n] == 0) return FPModule::free(n, 0);
  // Ext^n = ker(phi_{n+1}^T) / im(phi_n^T)
  LaurentMatrix next_t = r.maps[n].transpose();
  LaurentMatrix k = r.ranks[n + 1] == 0 ? LaurentMatrix::identity(n, r.ranks[n]) : prune_generators(syzygy_matrix(next_t));
  if (k.cols() == 0) return FPModule::free(n, 0);
  LaurentMatrix rel = preimage(k, r.maps[n - 1].transpose());
  return FPModule::from_matrix(prune_generators(rel));
}

namespace {

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  // both are polynomials here; divide leading terms under grevlex
  const MonomialOrder order;
  LaurentMatrix wa(a.nvars(), 1, 1), wb(b.nvars(), 1, 1);
  wa(0, 0) = a;
  wb(0, 0) = b;
  Element r = to_element(wa, 0, order);
  const Element d = to_element(wb, 0, order);
  if (d.empty()) throw InternalError("division by zero in fraction-free elimination");
  std::vector<Element> q;
  Element quot;
  while (!r.empty()) {
    const Term& t = r.front();
    if (!d.front().m.divides(t.m)) throw InternalError("inexact division in fraction-free elimination");
    Term qt{mono_div(t.m, d.front().m), 0, t.c / d.front().c};
    quot.push_back(qt);
    r = sub_scaled(r, 0, qt.c, qt.m, d, order);
  }
  return to_matrix({quot}, a.nvars(), 1)(0, 0);
}

} // namespace

std::size_t generic_rank(const LaurentMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols(), nvars = m.nvars();
  std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols, LaurentPoly(nvars)));
  for (std::size_t i = 0; i < rows; ++i) {
    // scaling a row by a monomial keeps the rank and makes it polynomial
    Exponents lo(nvars, 0);
    for (std::size_t j = 0; j < cols; ++j) {
      if (m(i, j).is_zero()) continue;
      Exponents e = m(i, j).min_exponents();
      for (std::size_t v = 0; v < nvars; ++v) lo[v] = std::min(lo[v], e[v]);
    }
    for (auto& x : lo) x = -x;
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).shifted(lo);
  }
  LaurentPoly prev = LaurentPoly::constant(nvars, 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = rank; i < rows; ++i)
      if (!a[i][c].is_zero() && (!piv || a[i][c].num_terms() < a[*piv][c].num_terms())) piv = i;
    if (!piv) continue;
    std::swap(a[rank], a[*piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentPoly v = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        a[i][j] = v.is_zero() ? v : exact_quotient(v, prev);
      }
      a[i][c] = LaurentPoly(nvars);
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::optional<StandardBasis> standard_basis(const GroebnerBasis& g) {
  const std::size_t n = g.nvars;
  StandardBasis q;
  for (std::uint32_t pos = 0; pos < g.rank; ++pos) {
    std::vector<Monomial> leads;
    for (const auto& e : g.gens)
      if (e.front().pos == pos) leads.push_back(e.front().m);
    bool unit = std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.deg == 0; });
    if (unit) continue;
    for (std::size_t v = 0; v < n; ++v) {
      bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.deg == m.e[v]; });
      if (!pure) return std::nullopt;
    }
    auto standard = [&](const Monomial& m) {
      return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> found{Monomial{}};
    std::deque<Monomial> queue{Monomial{}};
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        Monomial next = m;
        ++next.e[v];
        ++next.deg;
        if (!standard(next) || std::find(found.begin(), found.end(), next) != found.end()) continue;
        found.push_back(next);
        queue.push_back(next);
      }
    }
    std::sort(found.begin(), found.end(),
              [&](const Monomial& a, const Monomial& b) { return g.order.compare_mono(a, b) < 0; });
    for (const auto& m : found) {
      q.monos.push_back(m);
      q.positions.push_back(pos);
    }
  }
  const std::size_t dim = q.monos.size();
  std::map<std::pair<std::uint32_t, std::vector<std::int32_t>>, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k)
    index[{q.positions[k], std::vector<std::int32_t>(q.monos[k].e.begin(), q.monos[k].e.end())}] = k;
  q.module.nvars = n;
  q.module.dim = dim;
  for (std::size_t v = 0; v < n; ++v) {
    QMatrix op(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      Monomial m = q.monos[k];
      ++m.e[v];
      ++m.deg;
      Element nf = normal_form(g, Element{Term{m, q.positions[k], 1}});
      for (const auto& t : nf) {
        auto it = index.find({t.pos, std::vector<std::int32_t>(t.m.e.begin(), t.m.e.end())});
        if (it == index.end()) throw InternalError("normal form left the standard monomials");
        op(it->second, k) = t.c;
      }
    }
    q.module.ops.push_back(std::move(op));
  }
  return q;
}

} // namespace alexmod::gb
