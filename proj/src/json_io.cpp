#include "alexmod/json_io.hpp"

#include "alexmod/errors.hpp"

#include <fstream>
#include <sstream>

namespace alexmod::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::int64_t integer_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t count_of(const json& j, const char* what) {
  const std::int64_t v = integer_of(j, what);
  if (v < 0) throw InputError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::size_t count_field(const json& j, const char* key) { return count_of(field(j, key), key); }

Integer integer_from_string(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (!j.is_string()) throw InputError(std::string(what) + " must be a decimal string");
  Rational q = parse_rational(j.get<std::string>());
  if (q.get_den() != 1) throw InputError(std::string(what) + " must be an integer");
  return q.get_num();
}

} // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(static_cast<std::int64_t>(q.get_num().get_si()));
  return json(to_string(q));
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

LaurentPoly laurent_from(const json& j, std::size_t nvars) {
  if (j.is_string()) return parse_laurent(j.get<std::string>(), nvars);
  if (j.is_number_integer()) return LaurentPoly::constant(nvars, rational_from(j));
  const std::size_t n = count_field(j, "nvars");
  if (n != nvars) throw InputError("polynomial has " + std::to_string(n) + " variables, expected " + std::to_string(nvars));
  LaurentPoly p(n);
  for (const auto& t : array_field(j, "terms")) {
    const json& ex = array_field(t, "exps");
    if (ex.size() != n) throw InputError("term exponent vector must have length " + std::to_string(n));
    Exponents e;
    for (const auto& x : ex) e.push_back(integer_of(x, "exponent"));
    const Integer num = integer_from_string(field(t, "num"), "num");
    const Integer den = t.contains("den") ? integer_from_string(t["den"], "den") : Integer(1);
    if (den == 0) throw InputError("zero denominator");
    Rational c(num, den);
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

QMatrix qmatrix_from(const json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& x : r) row.push_back(rational_from(x));
    rows.push_back(row);
  }
  return QMatrix::from_rows(rows);
}

json to_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

LaurentMatrix laurent_matrix_from(const json& j, std::size_t nvars, std::size_t rows) {
  if (!j.is_array() || j.size() != rows) throw InputError("presentation must have " + std::to_string(rows) + " rows");
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  LaurentMatrix m(nvars, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("presentation rows must all have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = laurent_from(j[i][c], nvars);
  }
  return m;
}

json to_json(const FPModule& m) {
  return {{"nvars", m.nvars}, {"rank", m.rank}, {"presentation", to_json(m.presentation)}};
}

FPModule module_from(const json& j) {
  FPModule m;
  m.nvars = count_field(j, "nvars");
  if (m.nvars == 0) throw InputError("nvars must be positive");
  m.rank = count_field(j, "rank");
  m.presentation = j.contains("presentation") ? laurent_matrix_from(j["presentation"], m.nvars, m.rank) : LaurentMatrix(m.nvars, m.rank, 0);
  m.validate();
  return m;
}

json to_json(const InvariantFactorDecomposition& d) {
  json f = json::array();
  for (const auto& p : d.factors) f.push_back(to_json(LaurentPoly::univariate(p)));
  return {{"free_rank", d.free_rank}, {"factors", f}};
}

json to_json(const ArtinianModule& m) {
  json ops = json::array();
  for (const auto& op : m.ops) ops.push_back(to_json(op));
  return {{"qdim", m.dim}, {"t_ops", ops}};
}

ArtinianModule artinian_from(const json& j, std::size_t nvars) {
  ArtinianModule m;
  m.nvars = nvars;
  m.dim = count_field(j, "qdim");
  const json& ops = array_field(j, "t_ops");
  for (const auto& op : ops) {
    QMatrix q = qmatrix_from(op);
    if (m.dim == 0 && q.rows() == 0) q = QMatrix(0, 0);
    m.ops.push_back(q);
  }
  if (m.dim == 0 && m.ops.empty()) m.ops.assign(m.nvars, QMatrix(0, 0));
  if (m.ops.size() != m.nvars) throw InputError("t_ops must list one matrix per variable");
  m.validate();
  return m;
}

ComplexInput complex_from(const json& j) {
  ComplexInput c;
  c.complex.num_vertices = count_field(j, "vertices");
  for (const auto& s : array_field(j, "simplices")) {
    if (!s.is_array()) throw InputError("simplex must be an array of vertex indices");
    Simplex sim;
    for (const auto& v : s) sim.push_back(count_of(v, "vertex index"));
    c.complex.simplices.push_back(sim);
  }
  const json& w = field(j, "cocycle");
  c.cocycle.n = count_field(w, "n");
  for (const auto& e : array_field(w, "edges")) {
    const json& ed = array_field(e, "edge");
    if (ed.size() != 2) throw InputError("cocycle edge must have two vertices");
    const std::size_t a = count_of(ed[0], "vertex index"), b = count_of(ed[1], "vertex index");
    Exponents v;
    for (const auto& x : array_field(e, "value")) v.push_back(integer_of(x, "cocycle value"));
    if (!c.cocycle.omega.emplace(std::make_pair(a, b), v).second)
      throw InputError("cocycle edge [" + std::to_string(a) + "," + std::to_string(b) + "] listed twice");
  }
  validate_cocycle(c.complex, c.cocycle);
  return c;
}

json to_json(const SimplicialComplexInput& k, const TorusCocycle& w) {
  json edges = json::array();
  for (const auto& [e, v] : w.omega) edges.push_back({{"edge", {e.first, e.second}}, {"value", v}});
  return {{"vertices", k.num_vertices}, {"simplices", k.simplices}, {"cocycle", {{"n", w.n}, {"edges", edges}}}};
}

LocalSystem local_system_from(const json& j) {
  LocalSystem l;
  l.n = count_field(j, "n");
  for (const auto& m : array_field(j, "monodromies")) l.monodromies.push_back(qmatrix_from(m));
  l.rank = j.contains("rank") ? count_field(j, "rank") : (l.monodromies.empty() ? 0 : l.monodromies[0].rows());
  l.validate();
  return l;
}

json to_json(const LocalSystem& l) {
  json ms = json::array();
  for (const auto& m : l.monodromies) ms.push_back(to_json(m));
  return {{"n", l.n}, {"rank", l.rank}, {"monodromies", ms}};
}

FibrationModel fibration_from(const json& j) {
  FibrationModel f;
  f.n = count_field(j, "n");
  for (const auto& g : array_field(j, "generators")) {
    if (!g.is_string()) throw InputError("generator names must be strings");
    f.generators.push_back(g.get<std::string>());
  }
  for (const auto& im : array_field(j, "images")) {
    if (!im.is_array()) throw InputError("generator image must be an array");
    Exponents e;
    for (const auto& x : im) e.push_back(integer_of(x, "image coordinate"));
    f.images.push_back(e);
  }
  if (j.contains("kernel_words"))
    for (const auto& w : array_field(j, "kernel_words")) {
      if (!w.is_array()) throw InputError("kernel word must be an array");
      std::vector<int> word;
      for (const auto& x : w) word.push_back(static_cast<int>(integer_of(x, "word letter")));
      f.kernel_words.push_back(word);
    }
  const json& degs = field(j, "degrees");
  if (!degs.is_object()) throw InputError("degrees must be an object keyed by degree");
  for (const auto& [key, val] : degs.items()) {
    std::size_t deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("degree key \"" + key + "\" is not a nonnegative integer");
    }
    std::vector<QMatrix> ms;
    for (const auto& m : array_field(val, "matrices")) ms.push_back(qmatrix_from(m));
    f.degrees[deg] = ms;
  }
  if (j.contains("fiber_betti"))
    for (const auto& b : array_field(j, "fiber_betti")) f.fiber_betti.push_back(count_of(b, "Betti number"));
  f.validate();
  return f;
}

json to_json(const FibrationModel& f) {
  json degs = json::object();
  for (const auto& [d, ms] : f.degrees) {
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(to_json(m));
    degs[std::to_string(d)] = {{"matrices", arr}};
  }
  return {{"n", f.n},
          {"generators", f.generators},
          {"images", f.images},
          {"kernel_words", f.kernel_words},
          {"degrees", degs},
          {"fiber_betti", f.fiber_betti}};
}

ResultBundle bundle_from(const json& j) {
  ResultBundle b;
  b.nvars = count_field(j, "nvars");
  const json& degs = field(j, "degrees");
  if (!degs.is_object()) throw InputError("degrees must be an object keyed by degree");
  for (const auto& [key, val] : degs.items()) {
    std::size_t deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("degree key \"" + key + "\" is not a nonnegative integer");
    }
    b.degrees[deg] = artinian_from(val, b.nvars);
  }
  if (j.contains("word")) {
    b.word.clear();
    for (const auto& x : array_field(j, "word")) b.word.push_back(static_cast<int>(integer_of(x, "word letter")));
  }
  return b;
}

json to_json(const ResultBundle& b) {
  json degs = json::object();
  for (const auto& [d, m] : b.degrees) degs[std::to_string(d)] = to_json(m);
  return {{"nvars", b.nvars}, {"degrees", degs}, {"word", b.word}};
}

GeometryContext context_from(const json& j) {
  GeometryContext c;
  c.n = count_field(j, "n");
  if (c.n == 0) throw InputError("context: n must be positive");
  c.d = count_field(j, "d");
  if (j.contains("smooth_fiber")) {
    if (!j["smooth_fiber"].is_boolean()) throw InputError("context: smooth_fiber must be true or false");
    c.smooth_fiber = j["smooth_fiber"].get<bool>();
  }
  if (j.contains("i")) c.i = count_field(j, "i");
  return c;
}

json to_json(const GeometryContext& c) { return {{"n", c.n}, {"d", c.d}, {"smooth_fiber", c.smooth_fiber}}; }

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"expected", c.expected}, {"observed", c.observed}});
  return {{"checks", checks}, {"context", to_json(r.context)}};
}

} // namespace alexmod::io
