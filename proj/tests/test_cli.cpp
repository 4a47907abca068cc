#include "support/golden.hpp"
#include "vitali/cli.hpp"
#include "vitali/instance_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

using namespace vitali;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "vitali");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("vitali_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

}  // namespace

TEST_CASE("gen cell then oracle") {
  TempDir tmp;
  auto inst = tmp.file("cell.json");
  REQUIRE(run({"gen", "--kind", "cell", "--d", "2", "--out", inst}).code == 0);
  auto r = run({"oracle", "--in", inst});
  CHECK(r.code == 0);
  CHECK(r.out.find("phi 1/4\n") != std::string::npos);
  CHECK(r.out.find("witness 0\n") != std::string::npos);
}

TEST_CASE("volume command") {
  TempDir tmp;
  auto inst = tmp.file("cell.json");
  REQUIRE(run({"gen", "--kind", "cell", "--d", "3", "--out", inst}).code == 0);
  for (const char* method : {"compression", "ie"}) {
    auto r = run({"volume", "--in", inst, "--method", method});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("volume 8\n", 0) == 0);
  }
  CHECK(run({"volume", "--in", inst, "--method", "bogus"}).code == cli::kMalformedInput);
}

TEST_CASE("gen is deterministic and round-trips") {
  TempDir tmp;
  auto a = run({"gen", "--kind", "random", "--d", "2", "--n", "10", "--a", "1/2", "--b", "1/2", "--seed", "7"});
  auto b = run({"gen", "--kind", "random", "--d", "2", "--n", "10", "--a", "1/2", "--b", "1/2", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = instance_from_json(nlohmann::json::parse(a.out));
  CHECK(c.size() == 10);
  CHECK(nlohmann::json::parse(a.out)["meta"]["seed"] == 7);
}

TEST_CASE("select pipeline then verify") {
  TempDir tmp;
  auto inst = tmp.file("random_d2.json");
  auto sel = tmp.file("sel.json");
  REQUIRE(run({"gen", "--kind", "random", "--d", "2", "--n", "15", "--law", "loguniform", "--a", "1/4",
               "--b", "4", "--seed", "6", "--out", inst})
              .code == 0);
  auto s = run({"select", "--algo", "pipeline", "--in", inst, "--out", sel});
  REQUIRE(s.code == 0);
  auto params = read_json_file(sel)["params"];
  CHECK(params["J"] == 6);
  auto v = run({"verify", "--in", inst, "--sel", sel});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);

  // Explicit parameters and the exact unit selector.
  REQUIRE(run({"select", "--algo", "pipeline", "--in", inst, "--J", "5", "--lambda", "3/2",
               "--unit-selector", "exact", "--out", sel})
              .code == 0);
  CHECK(run({"verify", "--in", inst, "--sel", sel}).code == 0);
  CHECK(run({"select", "--algo", "pipeline", "--in", inst, "--J", "5"}).code == cli::kMalformedInput);
  CHECK(run({"select", "--algo", "pipeline", "--in", inst, "--J", "2", "--lambda", "2"}).code ==
        cli::kMalformedInput);
}

TEST_CASE("every selector through the CLI verifies") {
  TempDir tmp;
  auto inst = tmp.file("lac.json");
  auto sel = tmp.file("sel.json");
  REQUIRE(run({"gen", "--kind", "lacunary", "--d", "2", "--lambda", "4", "--mu", "2", "--r0", "1/8",
               "--windows", "2", "--per-window", "5", "--seed", "3", "--out", inst})
              .code == 0);
  for (const char* algo : {"greedy", "window", "lacunary", "pipeline"}) {
    CAPTURE(algo);
    REQUIRE(run({"select", "--algo", algo, "--in", inst, "--out", sel}).code == 0);
    CHECK(run({"verify", "--in", inst, "--sel", sel}).code == 0);
  }
  REQUIRE(run({"select", "--algo", "lacunary", "--in", inst, "--window", "1/8:1/4", "--window", "1:2",
               "--lambda", "4", "--mu", "2", "--out", sel})
              .code == 0);
  CHECK(run({"verify", "--in", inst, "--sel", sel}).code == 0);
  // Congruent selection refuses mixed radii.
  CHECK(run({"select", "--algo", "congruent", "--in", inst}).code == cli::kMalformedInput);
}

TEST_CASE("verify flags a corrupted selection with exit 2") {
  TempDir tmp;
  auto inst = tmp.file("cell.json");
  auto sel = tmp.file("bad.json");
  REQUIRE(run({"gen", "--kind", "cell", "--d", "2", "--out", inst}).code == 0);
  write_json_file(sel, {{"indices", {0, 1}}, {"achieved_ratio", "1/2"}, {"certified_bound", "1/9"}});
  auto r = run({"verify", "--in", inst, "--sel", sel});
  CHECK(r.code == cli::kContractViolation);
  CHECK(r.out.find("disjoint") != std::string::npos);

  write_json_file(sel, {{"indices", {0}}, {"achieved_ratio", "1/4"}, {"certified_bound", "1/2"}});
  CHECK(run({"verify", "--in", inst, "--sel", sel}).code == cli::kContractViolation);
}

TEST_CASE("exit codes for malformed input and caps") {
  TempDir tmp;
  auto inst = tmp.file("big.json");
  CHECK(run({"oracle", "--in", tmp.file("missing.json")}).code == cli::kMalformedInput);
  CHECK(run({"frobnicate"}).code == cli::kMalformedInput);
  CHECK(run({"gen", "--kind", "nope", "--d", "2"}).code == cli::kMalformedInput);

  auto bad = tmp.file("bad.json");
  write_json_file(bad, {{"dim", 1}, {"cubes", {{{"center", {"1"}}, {"radius", "0"}}}}});
  CHECK(run({"volume", "--in", bad}).code == cli::kMalformedInput);

  REQUIRE(run({"gen", "--kind", "random", "--d", "1", "--n", "40", "--seed", "1", "--out", inst}).code == 0);
  CHECK(run({"oracle", "--in", inst}).code == cli::kCapExceeded);
  CHECK(run({"oracle", "--in", inst, "--cap", "10"}).code == cli::kCapExceeded);
  CHECK(run({"volume", "--in", inst, "--method", "ie"}).code == cli::kCapExceeded);
  CHECK(run({"select", "--algo", "congruent", "--in", inst, "--unit-selector", "exact"}).code !=
        cli::kOk);
}

TEST_CASE("table matches the golden file") {
  auto r = run({"table", "--dmax", "20"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("14\t69\t3811881.534\t0.797\n") != std::string::npos);
  std::istringstream in(r.out);
  auto produced = testing::parse_table_tsv(in);
  auto golden = testing::load_golden_table();
  REQUIRE(produced.size() == golden.size());
  for (std::size_t k = 0; k < golden.size(); ++k) {
    CHECK(produced[k].L == golden[k].L);
    CHECK(std::abs(produced[k].m - golden[k].m) < 5e-4);
    CHECK(std::abs(produced[k].m_over_3d - golden[k].m_over_3d) < 5e-4);
  }

  auto md = run({"table", "--dmax", "3", "--format", "md", "--compare", "--digits", "6"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| d | L_d | m_d | m_d/3^d | vitali | rado | bdj | ours |") != std::string::npos);
  CHECK(md.out.find("| 1 | 1 | 16.970563 |") != std::string::npos);
  CHECK(run({"table", "--dmax", "0"}).code == cli::kMalformedInput);
  CHECK(run({"table", "--dmax", "3", "--format", "csv"}).code == cli::kMalformedInput);
}

TEST_CASE("frontier command") {
  auto r = run({"frontier"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("frontier 14\n", 0) == 0);
  CHECK(r.out.find("L_14 = 69 >= 9") != std::string::npos);
}
