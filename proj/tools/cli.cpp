#include "cli.hpp"

#include "alexmod/errors.hpp"
#include "alexmod/json_io.hpp"
#include "alexmod/s0.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace alexmod {

namespace {

using io::json;

struct Options {
  std::string format = "text";
  bool verify = false;
  std::string input;
  std::string context;
  std::size_t degree = 0;
  bool s0 = false;
  bool snf = false;
  bool coinvariants = false;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalError("verification failed: " + what);
}

std::string artinian_text(const ArtinianModule& m) {
  std::ostringstream os;
  os << "qdim " << m.dim << "\n";
  for (std::size_t i = 0; i < m.ops.size(); ++i) os << "t" << i + 1 << " = " << m.ops[i].to_string() << "\n";
  return os.str();
}

std::string factors_text(const InvariantFactorDecomposition& d) {
  std::ostringstream os;
  os << "free rank " << d.free_rank << "\n";
  for (const auto& f : d.factors) os << "A/(" << f.to_string() << ")\n";
  return os.str();
}

std::string module_text(const FPModule& m) {
  std::ostringstream os;
  os << "generators " << m.rank << ", relations " << m.num_relations() << "\n";
  if (m.num_relations() > 0) os << m.presentation.to_string() << "\n";
  return os.str();
}

// Same module up to isomorphism, as far as the invariants we can compute
// cheaply tell.
bool same_module(const FPModule& a, const FPModule& b) {
  if (a.nvars != b.nvars) return false;
  if (a.nvars == 1) return invariant_factors(a) == invariant_factors(b);
  if (module_rank(a) != module_rank(b)) return false;
  const ArtinianModule sa = s0_of(a), sb = s0_of(b);
  if (sa.dim != sb.dim) return false;
  for (std::size_t i = 0; i < sa.ops.size(); ++i)
    if (!similar(sa.ops[i], sb.ops[i])) return false;
  return true;
}

bool same_artinian(const ArtinianModule& a, const ArtinianModule& b) {
  if (a.dim != b.dim || a.ops.size() != b.ops.size()) return false;
  for (std::size_t i = 0; i < a.ops.size(); ++i)
    if (!similar(a.ops[i], b.ops[i])) return false;
  return true;
}

int run_alexander(const Options& o, std::ostream& out) {
  const io::ComplexInput in = io::complex_from(io::read_file(o.input));
  const FPModule h = twisted_cohomology(in.complex, in.cocycle, o.degree);
  if (o.verify) {
    const FPModule raw = cohomology(twisted_chain_complex(in.complex, in.cocycle).cochains(), o.degree);
    require(same_module(h, raw), "cohomology differs from the unreduced complex");
  }
  if (o.s0) {
    const ArtinianModule s = s0_of(h);
    if (o.format == "json")
      out << io::to_json(s).dump() << "\n";
    else
      out << artinian_text(s);
    return kOk;
  }
  json j = {{"degree", o.degree}, {"module", io::to_json(h)}};
  std::string text = "degree " + std::to_string(o.degree) + "\n" + module_text(h);
  if (h.nvars == 1) {
    const InvariantFactorDecomposition d = invariant_factors(h);
    j["invariant_factors"] = io::to_json(d);
    text += factors_text(d);
  } else {
    j["generic_rank"] = module_rank(h);
    text += "generic rank " + std::to_string(module_rank(h)) + "\n";
  }
  out << (o.format == "json" ? j.dump() + "\n" : text);
  return kOk;
}

int run_mellin(const Options& o, std::ostream& out) {
  const LocalSystem l = io::local_system_from(io::read_file(o.input));
  const MellinStalk st = mellin_stalk(l);
  if (o.verify) {
    for (std::size_t i = 0; i <= l.n; ++i) {
      const FPModule h = koszul_mellin(l, i);
      if (i != l.n) {
        require(is_zero_module(h), "Koszul cohomology nonzero in degree " + std::to_string(i));
        continue;
      }
      const auto a = artinian_realization(h);
      require(a.has_value() && same_artinian(*a, st.module), "Koszul cohomology differs from the stalk");
    }
  }
  if (o.format == "json") {
    json j = io::to_json(st.module);
    j["degree"] = st.degree;
    out << j.dump() << "\n";
  } else {
    out << "degree " << st.degree << "\n" << artinian_text(st.module);
  }
  return kOk;
}

int run_fibration(const Options& o, std::ostream& out) {
  const FibrationModel f = io::fibration_from(io::read_file(o.input));
  ArtinianModule m;
  if (o.coinvariants) {
    m = kernel_coinvariants(f, o.degree);
  } else {
    m = kernel_invariants(f, o.degree);
    if (o.verify) {
      const std::size_t deg = o.degree - f.n;
      const QMatrix w = invariant_subspace(f, deg);
      for (const auto& word : f.kernel_words)
        require((f.word_matrix(deg, word) * w - w).is_zero(), "kernel word moves the invariant subspace");
      for (std::size_t g = 0; g < f.generators.size(); ++g) {
        const QMatrix moved = f.word_matrix(deg, {static_cast<int>(g) + 1}) * w;
        require(rank(hstack(w, moved)) == rank(w), "invariant subspace not stable under " + f.generators[g]);
      }
      require(rank(w) == m.dim, "dimension mismatch");
    }
  }
  if (o.format == "json") {
    json j = io::to_json(m);
    j["degree"] = o.degree;
    out << j.dump() << "\n";
  } else {
    out << "degree " << o.degree << "\n" << artinian_text(m);
  }
  return kOk;
}

int run_module(const Options& o, std::ostream& out) {
  if (o.snf == o.s0) throw InputError("module: give exactly one of --snf and --s0");
  const FPModule m = io::module_from(io::read_file(o.input));
  if (o.snf) {
    if (m.nvars != 1) throw InputError("module --snf needs a single variable, got " + std::to_string(m.nvars));
    const SmithForm s = smith_normal_form(m.presentation);
    if (o.verify) require(s.U * m.presentation * s.V == s.D, "U * P * V != D");
    const InvariantFactorDecomposition d = invariant_factors(m);
    if (o.format == "json") {
      json j = io::to_json(d);
      j["D"] = io::to_json(s.D);
      out << j.dump() << "\n";
    } else {
      out << factors_text(d);
    }
    return kOk;
  }
  const ArtinianModule s = s0_of(m);
  if (o.verify && m.nvars == 1) require(same_artinian(s, torsion_summary(m)), "S0 differs from the torsion summary");
  if (o.verify && m.nvars > 1) {
    const S0Result r = s0_submodule(m);
    require(same_artinian(r.module, s), "S0 not reproducible");
  }
  if (o.format == "json")
    out << io::to_json(s).dump() << "\n";
  else
    out << artinian_text(s);
  return kOk;
}

int run_check(const Options& o, std::ostream& out) {
  if (o.context.empty()) throw InputError("check: --context is required");
  const io::ResultBundle b = io::bundle_from(io::read_file(o.input));
  const GeometryContext ctx = io::context_from(io::read_file(o.context));
  const Report r = check_bundle(b.degrees, ctx, b.word);
  if (o.verify) {
    // Verdicts do not depend on whether t acts as the monodromy or its inverse.
    std::map<std::size_t, ArtinianModule> inv;
    for (const auto& [i, m] : b.degrees) inv[i] = m.inverted();
    const Report again = check_bundle(inv, ctx, b.word);
    require(again.checks.size() == r.checks.size(), "inverted bundle gives a different battery");
    for (std::size_t k = 0; k < r.checks.size(); ++k)
      require(again.checks[k].status == r.checks[k].status && (r.checks[k].status != Status::NotApplicable ||
                                                               again.checks[k].observed == r.checks[k].observed),
              "verdict " + r.checks[k].name + " changes under t -> t^-1");
  }
  if (o.format == "json") {
    out << io::to_json(r).dump() << "\n";
  } else {
    for (const auto& c : r.checks)
      out << to_string(c.status) << " " << c.name << ": expected " << c.expected << "; observed " << c.observed << "\n";
  }
  return r.has_violation() ? kViolation : kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Alexander modules, Mellin transforms and their finiteness checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify", o.verify, "Run oracle cross-checks; failures exit with code 2");

  auto* alex = app.add_subcommand("alexander", "Twisted cohomology H^i of a complex with a torus-valued cocycle");
  alex->add_option("--input", o.input, "Complex JSON")->required();
  alex->add_option("--degree", o.degree, "Cohomological degree")->required();
  alex->add_flag("--s0", o.s0, "Print the maximal Artinian submodule instead");

  auto* mel = app.add_subcommand("mellin", "Mellin transform of a local system on a torus");
  mel->add_option("--input", o.input, "Local system JSON")->required();

  auto* fib = app.add_subcommand("fibration", "S0 H^i from fibration monodromy data");
  fib->add_option("--input", o.input, "Fibration JSON")->required();
  fib->add_option("--degree", o.degree, "Degree i; the fiber data of degree i - n is used")->required();
  fib->add_flag("--coinvariants", o.coinvariants, "Kernel coinvariants of homology data (n = 1)");

  auto* mod = app.add_subcommand("module", "Smith form or S0 of a presented module");
  mod->add_option("--input", o.input, "Module JSON")->required();
  mod->add_flag("--snf", o.snf, "Smith normal form and invariant factors (one variable)");
  mod->add_flag("--s0", o.s0, "Maximal Artinian submodule");

  auto* chk = app.add_subcommand("check", "Vanishing and Jordan-block checks on a result bundle");
  chk->add_option("--input", o.input, "Result bundle JSON")->required();
  chk->add_option("--context", o.context, "Geometry context JSON")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (alex->parsed()) return run_alexander(o, out);
    if (mel->parsed()) return run_mellin(o, out);
    if (fib->parsed()) return run_fibration(o, out);
    if (mod->parsed()) return run_module(o, out);
    return run_check(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

} // namespace alexmod
