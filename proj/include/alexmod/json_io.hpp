#pragma once

#include "alexmod/artinian.hpp"
#include "alexmod/fibration.hpp"
#include "alexmod/mellin.hpp"
#include "alexmod/pid.hpp"
#include "alexmod/topology.hpp"
#include "alexmod/verdicts.hpp"

#include <json.hpp>

#include <map>
#include <string>

// JSON encodings of the library types. Every reader throws InputError on
// malformed input, never a json exception.
namespace alexmod::io {

using json = nlohmann::json;

json parse(const std::string& text);
json read_file(const std::string& path);

/// Integers that fit in 64 bits become numbers, anything else "p/q" strings.
json to_json(const Rational& q);
Rational rational_from(const json& j);

/// {"nvars": n, "terms": [{"exps": [...], "num": "...", "den": "..."}]}
json to_json(const LaurentPoly& p);
/// Also accepts a string such as "t1^2 - 1" when nvars is known.
LaurentPoly laurent_from(const json& j, std::size_t nvars);

json to_json(const QMatrix& m);
QMatrix qmatrix_from(const json& j);
json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from(const json& j, std::size_t nvars, std::size_t rows);

/// {"nvars": n, "rank": g, "presentation": [row, ...]} with g rows.
json to_json(const FPModule& m);
FPModule module_from(const json& j);

/// {"free_rank": k, "factors": [poly, ...]}
json to_json(const InvariantFactorDecomposition& d);

/// {"qdim": k, "t_ops": [matrix, ...]}, one matrix per variable (0 x 0,
/// written [], when qdim = 0)
json to_json(const ArtinianModule& m);
ArtinianModule artinian_from(const json& j, std::size_t nvars);

/// {"vertices": V, "simplices": [...], "cocycle": {"n": n, "edges": [{"edge": [i, j], "value": [...]}]}}
struct ComplexInput {
  SimplicialComplexInput complex;
  TorusCocycle cocycle;
};
ComplexInput complex_from(const json& j);
json to_json(const SimplicialComplexInput& k, const TorusCocycle& w);

/// {"n": n, "monodromies": [matrix, ...]}; "rank" is optional.
LocalSystem local_system_from(const json& j);
json to_json(const LocalSystem& l);

/// {"n", "generators", "images", "kernel_words", "degrees": {"0": {"matrices": [...]}}, "fiber_betti"}
FibrationModel fibration_from(const json& j);
json to_json(const FibrationModel& f);

/// {"nvars": n, "degrees": {"i": {"qdim": k, "t_ops": [...]}}, "word": [...]}
struct ResultBundle {
  std::size_t nvars = 1;
  std::map<std::size_t, ArtinianModule> degrees;
  std::vector<int> word{1};
};
ResultBundle bundle_from(const json& j);
json to_json(const ResultBundle& b);

/// {"n": n, "d": d, "smooth_fiber": bool}
GeometryContext context_from(const json& j);
json to_json(const GeometryContext& c);

/// {"checks": [{"name", "status", "expected", "observed"}], "context": {...}}
json to_json(const Report& r);

} // namespace alexmod::io
