#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/lmatrix.hpp"
#include "alexmod/pid.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Gröbner bases for submodules of R^r, R = Q[x1, ..., xn].
//
// Polynomials of R travel through the public API as LaurentPoly values with
// nonnegative exponents; a submodule of R^r is given by the columns of an
// r x k LaurentMatrix. Passing a negative exponent is an InputError.
namespace alexmod::gb {

constexpr std::size_t kMaxVars = 8;

struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};
  std::int32_t deg = 0;

  bool divides(const Monomial& o) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b, requires b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);

/// c * x^m * e_pos
struct Term {
  Monomial m;
  std::uint32_t pos = 0;
  Rational c;
};

enum class OrderKind { Lex, Grevlex };

/// Monomial order on R^r. For r > 1 the position decides first (position
/// over term) and a smaller index is the larger position; lex/grevlex then
/// breaks ties. Variables are ranked x1 > x2 > ... > xn.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;

  int compare_mono(const Monomial& a, const Monomial& b) const;
  int compare(const Term& a, const Term& b) const;
};

/// Terms sorted strictly decreasing under the order in use; no zero
/// coefficients.
using Element = std::vector<Term>;

struct GroebnerBasis {
  MonomialOrder order;
  std::size_t nvars = 1;
  std::size_t rank = 1;
  std::vector<Element> gens; ///< monic, sorted by increasing leading term

  /// The generators as columns.
  LaurentMatrix matrix() const;
  bool is_unit_ideal() const;
};

Element to_element(const LaurentMatrix& m, std::size_t col, const MonomialOrder& order);
LaurentMatrix to_matrix(const std::vector<Element>& v, std::size_t nvars, std::size_t rank);

/// Reduced Gröbner basis of the span of the columns of gens (normal
/// selection strategy; chain criterion; coprime criterion for ideals only).
GroebnerBasis buchberger(const LaurentMatrix& gens, MonomialOrder order = {});
GroebnerBasis ideal_basis(std::size_t nvars, const std::vector<LaurentPoly>& gens, MonomialOrder order = {});

/// Every S-polynomial reduces to zero, checked without any criterion.
bool buchberger_criterion_holds(const GroebnerBasis& gb);
/// Monic generators, no leading term divides any term of another generator.
bool is_reduced(const GroebnerBasis& gb);

Element normal_form(const GroebnerBasis& gb, Element f);
/// Columnwise normal forms.
LaurentMatrix normal_form(const GroebnerBasis& gb, const LaurentMatrix& m);
/// Whether every column of m lies in the submodule.
bool contains(const GroebnerBasis& gb, const LaurentMatrix& m);
bool same_submodule(const LaurentMatrix& a, const LaurentMatrix& b);

/// Generators (columns) of {v in R^p : B v in span(L)}, where B is q x p
/// and L is q x k.
LaurentMatrix preimage(const LaurentMatrix& b, const LaurentMatrix& l);
/// Generators of the relations among the columns of f.
LaurentMatrix syzygy_matrix(const LaurentMatrix& f);
/// Syzygies of the basis elements.
LaurentMatrix syzygies(const GroebnerBasis& gb);
/// Drops zero columns and columns lying in the span of the remaining ones.
LaurentMatrix prune_generators(const LaurentMatrix& m);

struct FreeResolution {
  /// ranks[0] = number of generators of M; ranks[k] = rank of F_k
  std::vector<std::size_t> ranks;
  /// maps[k] : F_{k+1} -> F_k, i.e. ranks[k] x ranks[k+1]
  std::vector<LaurentMatrix> maps;
  std::size_t length = 0;
};

/// F_0 <- F_1 <- ... <- F_length by iterated syzygies; maps[0] is the
/// presentation of m.
FreeResolution free_resolution(const FPModule& m, std::size_t length);

/// Q-basis of R^rank / span(gb) by standard monomials, with the
/// multiplication operators of x_1, ..., x_n. Basis element k is
/// x^monos[k] e_{positions[k]}, ordered by position and then increasing
/// monomial. nullopt when the quotient is infinite-dimensional.
struct StandardBasis {
  std::vector<Monomial> monos;
  std::vector<std::uint32_t> positions;
  ArtinianModule module; ///< operators need not be invertible over R
};
std::optional<StandardBasis> standard_basis(const GroebnerBasis& gb);

/// Krull dimension of R/I; -1 for the unit ideal.
int krull_dim(std::size_t nvars, const std::vector<LaurentPoly>& ideal);
int krull_dim(const GroebnerBasis& ideal_gb);

/// (span(L) : I) and (span(L) : I^inf) inside R^q.
LaurentMatrix colon(const LaurentMatrix& l, const std::vector<LaurentPoly>& ideal);
LaurentMatrix saturate(const LaurentMatrix& l, const std::vector<LaurentPoly>& ideal);
/// (N :_M I^inf) for a submodule N of M = R^g / span(P), given by
/// generators in R^g; the result contains span(P).
LaurentMatrix saturate(const FPModule& m, const LaurentMatrix& n, const std::vector<LaurentPoly>& ideal);

/// Generators of the ideal Ann_R(R^g / span(P)).
std::vector<LaurentPoly> annihilator(const FPModule& m);
/// Ann_R of the element v (a g x 1 column) of M.
std::vector<LaurentPoly> element_annihilator(const FPModule& m, const LaurentMatrix& v);

/// Presentation of Ext^n_R(M, R), n = number of variables.
FPModule ext_top(const FPModule& m);

/// Rank over Frac(R) by fraction-free elimination; entries may be Laurent.
std::size_t generic_rank(const LaurentMatrix& m);

} // namespace alexmod::gb
