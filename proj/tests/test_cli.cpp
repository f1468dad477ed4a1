#include "alexmod/json_io.hpp"
#include "alexmod/models.hpp"
#include "cli.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace alexmod;
using io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "alexmod-cli");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ALEXMOD_DATA_DIR) + "/" + name; }

// a scratch file that removes itself
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / ("alexmod_cli_test_" + name)) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("alexander on the wedge", "[cli]") {
  auto r = run({"alexander", "--input", data("wedge.json"), "--degree", "1", "--s0", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"qdim": 1, "t_ops": [[[1]]]})"));

  // global flags may also come first
  auto early = run({"--format", "json", "alexander", "--input", data("wedge.json"), "--degree", "1", "--s0"});
  CHECK(early.out == r.out);

  auto full = run({"alexander", "--input", data("wedge.json"), "--degree", "1", "--format", "json", "--verify"});
  REQUIRE(full.code == 0);
  const json j = json::parse(full.out);
  CHECK(j["invariant_factors"]["free_rank"] == 1);
  CHECK(j["invariant_factors"]["factors"].size() == 1);
  CHECK(io::laurent_from(j["invariant_factors"]["factors"][0], 1) == parse_laurent("t - 1", 1));

  auto text = run({"alexander", "--input", data("wedge.json"), "--degree", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("A/(t - 1)") != std::string::npos);
}

TEST_CASE("alexander in two variables", "[cli]") {
  auto r = run({"alexander", "--input", data("torus2.json"), "--degree", "2", "--s0", "--verify", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"qdim": 1, "t_ops": [[[1]], [[1]]]})"));
  auto h1 = run({"alexander", "--input", data("torus2.json"), "--degree", "1", "--format", "json", "--verify"});
  REQUIRE(h1.code == 0);
  CHECK(json::parse(h1.out)["generic_rank"] == 0);
}

TEST_CASE("mellin on a unipotent local system", "[cli]") {
  auto r = run({"mellin", "--input", data("unipotent2.json"), "--format", "json", "--verify"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"degree": 1, "qdim": 2, "t_ops": [[[1, -1], [0, 1]]]})"));
}

TEST_CASE("fibration and module subcommands", "[cli]") {
  auto r = run({"fibration", "--input", data("cubic_fibration.json"), "--degree", "2", "--format", "json", "--verify"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"degree": 2, "qdim": 2, "t_ops": [[[1, 0], [1, 1]]]})"));

  auto snf = run({"module", "--snf", "--input", data("module.json"), "--format", "json", "--verify"});
  REQUIRE(snf.code == 0);
  CHECK(json::parse(snf.out)["free_rank"] == 1);
  auto s0 = run({"module", "--s0", "--input", data("module.json"), "--format", "json", "--verify"});
  REQUIRE(s0.code == 0);
  CHECK(json::parse(s0.out)["qdim"] == 3);

  CHECK(run({"module", "--input", data("module.json")}).code == 1);
  CHECK(run({"module", "--snf", "--s0", "--input", data("module.json")}).code == 1);
}

TEST_CASE("check exit codes", "[cli]") {
  auto ok = run({"check", "--input", data("cubic_results.json"), "--context", data("cubic_context.json"), "--verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("violation") == std::string::npos);
  CHECK(ok.out.find("pass jordan_bound[2]") != std::string::npos);

  auto bad = run({"check", "--input", data("negative_results.json"), "--context", data("point_context.json"), "--format", "json"});
  CHECK(bad.code == 3);
  const json rep = json::parse(bad.out);
  CHECK(rep["checks"][0]["name"] == "vanishing_range[0]");
  CHECK(rep["checks"][0]["status"] == "violation");
}

TEST_CASE("input and usage errors exit with 1", "[cli]") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"alexander", "--input", data("wedge.json")}).code == 1);
  CHECK(run({"alexander", "--input", data("wedge.json"), "--degree", "1", "--format", "xml"}).code == 1);
  auto missing = run({"alexander", "--input", data("no_such_file.json"), "--degree", "1"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("no_such_file") != std::string::npos);
  CHECK(run({"alexander", "--input", data("wedge.json"), "--degree", "7"}).code == 1);
  CHECK(run({"fibration", "--input", data("cubic_fibration.json"), "--degree", "0"}).code == 1);
  CHECK(run({"module", "--snf", "--input", data("torus2.json")}).code == 1);

  TempFile garbage("garbage.json", "{\"vertices\": 3,");
  CHECK(run({"alexander", "--input", garbage.str(), "--degree", "0"}).code == 1);
  TempFile open_cycle("open.json", R"({"vertices": 3, "simplices": [[0], [1], [2], [0, 1], [1, 2], [0, 2], [0, 1, 2]],
    "cocycle": {"n": 1, "edges": [{"edge": [0, 1], "value": [1]}, {"edge": [1, 2], "value": [0]}, {"edge": [0, 2], "value": [0]}]}})");
  auto r = run({"alexander", "--input", open_cycle.str(), "--degree", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("[0,1,2]") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output re-ingested gives the same verdicts", "[cli]") {
  // S0 modules of the torus model and of the cubic family, collected through
  // the CLI into a bundle and checked there and in-process
  for (const auto& [input, sub, degrees, ctx] :
       {std::tuple{data("torus.json"), std::string("alexander"), std::vector<std::string>{"0", "1", "2"}, std::string(R"({"n": 1, "d": 1})")},
        std::tuple{data("cubic_fibration.json"), std::string("fibration"), std::vector<std::string>{"1", "2"},
                   std::string(R"({"n": 1, "d": 1})")}}) {
    json bundle = {{"nvars", 1}, {"degrees", json::object()}};
    std::map<std::size_t, ArtinianModule> direct;
    for (const auto& d : degrees) {
      std::vector<std::string> args{sub, "--input", input, "--degree", d, "--format", "json"};
      if (sub == "alexander") args.push_back("--s0");
      auto r = run(args);
      REQUIRE(r.code == 0);
      json m = json::parse(r.out);
      m.erase("degree");
      bundle["degrees"][d] = m;
      direct[std::stoul(d)] = io::artinian_from(m, 1);
    }
    TempFile results("bundle.json", bundle.dump());
    TempFile context("ctx.json", ctx);
    auto r = run({"check", "--input", results.str(), "--context", context.str(), "--format", "json"});
    const Report expected = check_bundle(direct, io::context_from(json::parse(ctx)));
    CHECK(r.code == (expected.has_violation() ? 3 : 0));
    CHECK(json::parse(r.out) == io::to_json(expected));
  }

  // module output feeds back into the module subcommand
  auto full = run({"alexander", "--input", data("circle.json"), "--degree", "1", "--format", "json"});
  REQUIRE(full.code == 0);
  TempFile mod("module.json", json::parse(full.out)["module"].dump());
  auto a = run({"module", "--s0", "--input", mod.str(), "--format", "json"});
  auto b = run({"alexander", "--input", data("circle.json"), "--degree", "1", "--s0", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["qdim"] == json::parse(b.out)["qdim"]);
}
