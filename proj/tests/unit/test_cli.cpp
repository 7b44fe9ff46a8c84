#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "kneserlab/kneserlab.hpp"

namespace fs = std::filesystem;
using kneserlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Fresh scratch directory per test case.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("kneserlab-cli-" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
};

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("bound") {
  auto r = call({"bound", "--n", "5", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "bound: 9"));

  r = call({"bound", "--n", "5", "--r", "2", "--exact"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "bound: 9"));
  CHECK(has(r.out, "exact: 7"));

  r = call({"bound", "--n", "3", "--r", "2"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "requires 2r ≤ n"));

  r = call({"bound", "--n", "5", "--r", "2", "--exact", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["bound"] == 9);
  CHECK(j["exact_max"] == 7);
  CHECK(j["binom_n_r"] == 10);
  CHECK(j["binom_l_p"] == 1);

  r = call({"bound", "--n", "12", "--r", "6", "--exact", "--budget", "100"});
  CHECK(r.code == 3);
}

TEST_CASE("budget from the environment") {
  ::setenv("KNESERLAB_BUDGET", "5", 1);
  auto r = call({"kneser", "--n", "5", "--r", "2", "components"});
  CHECK(r.code == 3);
  r = call({"kneser", "--n", "5", "--r", "2", "components", "--budget", "10"});
  CHECK(r.code == 0);
  ::unsetenv("KNESERLAB_BUDGET");
  r = call({"kneser", "--n", "5", "--r", "2", "components"});
  CHECK(r.code == 0);
}

TEST_CASE("construct and verify round trip") {
  TempDir dir("construct");
  auto r = call({"construct", "large_r_pair", "--n", "8", "--r", "3", "--out-dir", dir.path.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "size_a: 12"));
  CHECK(has(r.out, "size_b: 10"));
  const auto a = (dir.path / "large_r_pair-A.fam").string();
  const auto b = (dir.path / "large_r_pair-B.fam").string();
  REQUIRE(fs::exists(a));
  std::ifstream in(a);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("# construction: large_r_pair", 0) == 0);

  const auto pair = kneserlab::large_r_pair(kneserlab::make_params(8, 3));
  CHECK(kneserlab::read_family_file(a) == pair.a);
  CHECK(kneserlab::read_family_file(b) == pair.b);

  r = call({"verify", a, b});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: pass"));

  r = call({"construct", "pair_partition", "--r", "2", "--parts", "1", "--out-dir", dir.path.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "size_a: 2"));
  CHECK(has(r.out, "size_b: 4"));

  r = call({"construct", "star_partition", "--n", "6", "--r", "2", "--center", "1", "--rule", "alternating",
            "--out-dir", dir.path.string(), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 5);
  CHECK(j["schema"] == 1);

  r = call({"construct", "nope", "--n", "6", "--r", "2", "--out-dir", dir.path.string()});
  CHECK(r.code == 2);
}

TEST_CASE("verify failures") {
  TempDir dir("verify");
  const auto a = dir.file("a.fam", "n=5 r=2\n1,2\n");
  const auto b = dir.file("b.fam", "n=5 r=2\n3,4\n");
  auto r = call({"verify", a, b});
  CHECK(r.code == 1);
  CHECK(has(r.out, "cross: false"));

  const auto bad = dir.file("bad.fam", "n=5 r=2\n1,2\n1,,3\n");
  r = call({"verify", bad, b});
  CHECK(r.code == 2);
  CHECK(has(r.err, "line 3"));

  const auto other = dir.file("other.fam", "n=6 r=2\n1,2\n");
  CHECK(call({"verify", a, other}).code == 2);
  CHECK(call({"verify", a, (dir.path / "missing.fam").string()}).code == 2);
}

TEST_CASE("chain") {
  TempDir dir("chain");
  auto r = call({"chain", "--n", "8", "--r", "2", "--a", "1,2", "--b", "1,3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "S0: 1,2\nS1: 4,5\nS2: 1,3\n"));
  CHECK(has(r.out, "\"case_taken\":\"case1\""));
  CHECK(has(r.out, "verified: true"));

  r = call({"chain", "--n", "6", "--r", "3", "--a", "1,2,3", "--b", "4,5,6"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "disjoint_endpoints"));
  CHECK(has(r.out, "f: 1"));

  const auto c = dir.file("forbidden.fam", "n=7 r=3\n3,4,5\n");
  r = call({"chain", "--n", "7", "--r", "3", "--a", "1,2,3", "--b", "1,4,5", "--c", c, "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["trace"]["case_taken"].get<std::string>().rfind("case2", 0) == 0);
  CHECK(j["f"] == 5);
  CHECK(j["oracle_length"].is_number());

  // Too many forbidden sets: precondition error unless --oracle.
  const auto big = dir.file("big.fam", "n=7 r=3\n3,4,5\n3,4,6\n");
  CHECK(call({"chain", "--n", "7", "--r", "3", "--a", "1,2,3", "--b", "1,4,5", "--c", big}).code == 2);
  r = call({"chain", "--n", "7", "--r", "3", "--a", "1,2,3", "--b", "1,4,5", "--c", big, "--oracle"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "oracle_fallback"));

  // Strict greedy choices expose the l = 1 counting gap as a proof-violation exit.
  const auto gap = dir.file("gap.fam", "n=5 r=2\n1,4\n");
  r = call({"chain", "--n", "5", "--r", "2", "--a", "1,2", "--b", "2,5", "--c", gap, "--greedy"});
  CHECK(r.code == 4);
  CHECK(has(r.err, "S_4"));
  CHECK(call({"chain", "--n", "5", "--r", "2", "--a", "1,2", "--b", "2,5", "--c", gap}).code == 0);

  CHECK(call({"chain", "--n", "5", "--r", "2", "--a", "1,2,3", "--b", "2,5"}).code == 2);
  CHECK(call({"chain", "--n", "5", "--r", "2", "--a", "1,2", "--b", "1,2"}).code == 2);
}

TEST_CASE("chain with seeded random forbidden family is deterministic") {
  const std::vector<std::string> args{"chain", "--n",        "9",   "--r",      "3",      "--a",
                                      "1,2,3", "--b",        "1,4,5", "--random-c", "2", "--seed",
                                      "99",    "--format",   "json"};
  const auto first = call(args);
  const auto second = call(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["forbidden_size"] == 2);
  CHECK(j["seed"] == 99);
}

TEST_CASE("kneser") {
  auto r = call({"kneser", "--n", "4", "--r", "2", "kpartite"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "k: 3"));
  CHECK(has(r.out, "part 1: {1,2} {3,4}"));

  r = call({"kneser", "--n", "5", "--r", "2", "mincut"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "size: 3"));

  r = call({"kneser", "--n", "5", "--r", "2", "mincut", "--exhaustive", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["size"] == 3);

  TempDir dir("kneser");
  const auto c = dir.file("c.fam", "n=5 r=2\n3,4\n3,5\n4,5\n");
  r = call({"kneser", "--n", "5", "--r", "2", "components", "--c", c});
  CHECK(r.code == 0);
  CHECK(has(r.out, "components: 2"));

  r = call({"kneser", "--n", "5", "--r", "2", "components", "--c", c, "--format", "csv"});
  CHECK(r.out.rfind("set,component_id\n\"1,2\",0\n\"1,3\",1\n", 0) == 0);

  CHECK(call({"kneser", "--n", "5", "--r", "2", "kpartite"}).code == 2);
  CHECK(call({"kneser", "--r", "2", "components"}).code == 2);
}

TEST_CASE("counterexample") {
  auto r = call({"counterexample", "--r", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "A: 1,5,6"));
  CHECK(has(r.out, "delta_1_2(C): 1,3,4"));
  CHECK(has(r.out, "both failures reproduced: true"));
  r = call({"counterexample", "--r", "4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["both_failures_reproduced"] == true);
  CHECK(call({"counterexample", "--r", "1"}).code == 2);
}

TEST_CASE("scan") {
  auto r = call({"scan", "--grid", "4:2", "5:2", "6:2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,r,l,p,binom_n_r,binom_l_p,bound,exact_max,strict_gap,witness_file,error\n"
        "4,2,0,0,6,1,6,,,,\n"
        "5,2,1,1,10,1,9,,,,\n"
        "6,2,2,1,15,2,13,,,,\n");

  TempDir dir("scan");
  r = call({"scan", "--grid", "6:3", "--exact", "--witness-dir", dir.path.string(), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["exact_max"] == 20);
  const auto witness = j["rows"][0]["witness_file"].get<std::string>();
  CHECK(fs::exists(witness));

  r = call({"scan", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,r,l,p,binom_n_r,binom_l_p,bound,exact_max,strict_gap,witness_file,error\n");

  const std::vector<std::string> args{"scan", "--r-max", "3", "--l-max", "2", "--exact", "--format", "json"};
  CHECK(call(args).out == call(args).out);

  CHECK(call({"scan", "--grid", "5-2"}).code == 2);
}

TEST_CASE("output file and usage errors") {
  TempDir dir("output");
  const auto path = dir.file("report.json");
  auto r = call({"bound", "--n", "5", "--r", "2", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(nlohmann::json::parse(buf.str())["bound"] == 9);

  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"bound", "--n", "5"}).code == 2);
  CHECK(call({"bound", "--n", "5", "--r", "2", "--format", "xml"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
