#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "abinitio/document.hpp"
#include "abinitio_cli/cli.hpp"

using namespace abinitio;
using namespace testing_helpers;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("abinitio_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kFastConfig =
    "{\"random_instances\": 100, \"exhaustive_max_size\": 4, \"amalgam_instances\": 50, "
    "\"geometry_instances\": 50, \"surgery_instances\": 10, \"geo_exhaustive_size\": 5, "
    "\"geo_dependent_size\": 5, \"c_exhaustive_size\": 5, \"flatness_instances\": 20, "
    "\"chain_steps\": 5, \"stage_cap\": 8}";

}  // namespace

TEST_CASE("delta on the 4-clique prints 2") {
  const auto path = write_temp("k4.json", serialize_structure(clique(3, range(1, 4))));
  const auto r = run({"delta", "--in", path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "2\n");
  const auto sub = run({"delta", "--in", path, "--subset", "1,2,3"});
  CHECK(sub.out == "2\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"delta"}).code == cli::kExitUsage);
  CHECK(run({"delta", "--in", "/nonexistent/file.json"}).code == cli::kExitUsage);
  const auto bad = write_temp("bad.json", "{\"arity\": 3, \"edges\": [[1, 1, 2]]}");
  const auto r = run({"delta", "--in", bad});
  CHECK(r.code == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"verify", "--suite", "NOT_A_SUITE"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("structure subcommands") {
  const auto fan = write_temp("fan.json", serialize_structure(make(3, range(1, 4), {{1, 2, 3}, {1, 2, 4}})));
  CHECK(run({"cliques", "--in", fan}).code == 0);
  const auto strong = run({"strong", "--in", fan, "--subset", "2,3,4"});
  CHECK(strong.code == 0);
  CHECK(strong.out.find("false") != std::string::npos);
  CHECK(run({"scl", "--in", fan, "--subset", "2,3,4"}).out == "{1,2,3,4}\n");
  CHECK(run({"class", "--in", fan}).code == 0);
  CHECK(run({"geometry", "--in", fan, "--k-max", "3"}).code == 0);
  const auto h = run({"hat", "--in", fan});
  REQUIRE(h.code == 0);
  CHECK(parse_structure(h.out) == clique(3, range(1, 4)));
  CHECK(parse_structure(run({"geo-op", "--in", fan}).out) == clique(3, range(1, 4)));
  CHECK(run({"export-dot", "--in", fan}).out.rfind("graph", 0) == 0);
  CHECK(run({"hat", "--in", fan, "--format", "dot"}).out.rfind("graph", 0) == 0);
}

TEST_CASE("amalgam and surgery subcommands") {
  const auto a1 = write_temp("a1.json", serialize_structure(clique(3, VertexSet{1, 2, 3})));
  const auto a2 = write_temp("a2.json", serialize_structure(clique(3, VertexSet{1, 2, 4})));
  const auto std_out = run({"amalgam", "--in", a1, "--second", a2, "--base", "1,2"});
  REQUIRE(std_out.code == 0);
  CHECK(parse_structure(std_out.out) == make(3, range(1, 4), {{1, 2, 3}, {1, 2, 4}}));
  const auto geo = run({"amalgam", "--in", a1, "--second", a2, "--base", "1,2", "--kind", "geometric"});
  REQUIRE(geo.code == 0);
  CHECK(parse_structure(geo.out) == clique(3, range(1, 4)));
  const auto fan = write_temp("fan2.json", serialize_structure(make(3, range(1, 4), {{1, 2, 3}, {1, 2, 4}})));
  const auto k4 = write_temp("k4b.json", serialize_structure(clique(3, range(1, 4))));
  const auto s = run({"surgery", "--in", fan, "--replaced", fan, "--replacement", k4});
  REQUIRE(s.code == 0);
  CHECK(parse_structure(s.out) == clique(3, range(1, 4)));
  CHECK(run({"surgery", "--in", fan, "--replaced", fan, "--replacement", a1}).code == cli::kExitUsage);
}

TEST_CASE("gen, build-generic and extension-report") {
  const auto g = run({"gen", "--class", "GEO", "--size", "6", "--density", "0.5", "--seed", "3", "--name", "g"});
  REQUIRE(g.code == 0);
  const auto doc = parse_structure_document(g.out);
  CHECK(doc.structure.size() == 6);
  CHECK(doc.meta.class_tag == std::optional<std::string>("GEO"));
  CHECK(run({"gen", "--class", "GEO", "--size", "6", "--density", "0.5", "--seed", "3", "--name", "g"}).out == g.out);
  const auto chain = run({"build-generic", "--class", "SYM", "--steps", "4", "--max-size", "8", "--a-cap", "2",
                          "--d-cap", "4", "--seed", "1"});
  REQUIRE(chain.code == 0);
  CHECK(chain.out.find("abinitio/chain@1") != std::string::npos);
  const auto tri = write_temp("tri.json", serialize_structure(clique(3, VertexSet{1, 2, 3})));
  const auto rep = run({"extension-report", "--in", tri, "--class", "SYM", "--a-cap", "1", "--d-cap", "4"});
  CHECK(rep.code == cli::kExitViolation);
}

TEST_CASE("verify writes a JSON report and maps outcomes to exit codes") {
  const auto cfg = write_temp("cfg.json", kFastConfig);
  const auto out1 = (fs::temp_directory_path() / "abinitio_cli_test_report1.json").string();
  const auto out2 = (fs::temp_directory_path() / "abinitio_cli_test_report2.json").string();
  const auto r1 = run({"verify", "--suite", "all", "--config", cfg, "--out", out1});
  CHECK(r1.code == cli::kExitOk);
  CHECK(r1.out.find("SUBMODULARITY") != std::string::npos);
  const auto r2 = run({"verify", "--suite", "all", "--config", cfg, "--out", out2});
  CHECK(r2.code == cli::kExitOk);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(slurp(out1).find("\"passed\": true") != std::string::npos);
  const auto one = run({"verify", "--suite", "SUBMODULARITY", "--config", cfg});
  CHECK(one.code == cli::kExitOk);
  const auto bad_cfg = write_temp("badcfg.json", "{\"arity\": 2}");
  CHECK(run({"verify", "--suite", "SUBMODULARITY", "--config", bad_cfg}).code == cli::kExitUsage);
}
