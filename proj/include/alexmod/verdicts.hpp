#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/check.hpp"
#include "alexmod/upoly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

// Checks of the finiteness, vanishing and Jordan-block bounds expected of
// S0 H^i for an algebraic map to an n-torus. Synthetic inputs may violate
// them; that is reported, never thrown.
namespace alexmod {

/// n: torus dimension, d: dimension of a general fiber, i: the degree under
/// scrutiny. smooth_fiber is taken on trust from the user.
struct GeometryContext {
  std::size_t n = 1;
  std::size_t d = 0;
  bool smooth_fiber = false;
  std::size_t i = 0;
};

struct QuasiUnipotence {
  bool quasi_unipotent = false;
  std::optional<std::int64_t> N; ///< least N with sigma^N unipotent
};

/// sigma is the product of the t-operators along word (signed 1-based
/// indices); quasi-unipotent iff every root of char(sigma) is a root of unity.
/// Throws InputError on an index out of range.
QuasiUnipotence is_quasi_unipotent(const ArtinianModule& m, const std::vector<int>& word);

struct JordanProfile {
  bool quasi_unipotent = false;
  std::int64_t N = 0;
  /// least m with (sigma^N - I)^m = 0; 0 for the zero module
  std::size_t nilpotence_index = 0;
  /// squarefree decomposition of the minimal polynomial of sigma
  std::vector<SquarefreeFactor> layers;
};

JordanProfile jordan_profile(const ArtinianModule& m, const std::vector<int>& word);

/// Squarefree minimal polynomial for every t_i and, as a cross-check, for
/// five random integer combinations of them (fixed seed).
bool is_semisimple(const ArtinianModule& m);

/// One check per degree: S0 H^i must vanish for i < n and i > n + 2d.
std::vector<Check> check_vanishing_range(const std::map<std::size_t, ArtinianModule>& results, const GeometryContext& ctx);

/// 1 + min(i - n, 2d - i + n), or with a smooth general fiber
/// min(ceil((i - n + 1) / 2), d - floor((i - n - 1) / 2)). nullopt outside
/// n <= i <= n + 2d.
std::optional<std::int64_t> jordan_bound(const GeometryContext& ctx);

/// nilpotence_index <= jordan_bound; not applicable when the profile is not
/// quasi-unipotent or the degree is outside the range.
Check check_jordan_bound(const JordanProfile& profile, const GeometryContext& ctx);

struct Report {
  std::vector<Check> checks;
  GeometryContext context;

  bool has_violation() const;
};

/// Full battery on a bundle of S0 modules (degree -> module): vanishing range,
/// then per nonzero degree quasi-unipotence, Jordan bound and (for
/// information) semisimplicity. word defaults to t_1.
Report check_bundle(const std::map<std::size_t, ArtinianModule>& results, GeometryContext ctx, const std::vector<int>& word = {1});

} // namespace alexmod
