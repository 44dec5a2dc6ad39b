#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "gimel/cli.hpp"
#include "gimel/io.hpp"
#include "support.hpp"

using namespace gimel;
using gimel::testing::fixture_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gimel");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gimel_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("compute on the n = 5 fixture") {
  Run r = run({"compute", "--fixture", fixture_path("p2m37_n5.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["gimel"]["breakpoints"] == Json::array({"0", "1/2", "1"}));
  CHECK(j["gimel"]["values"] == Json::array({"0", "-5/8", "-3/2"}));
  CHECK(j["genus_bound"] == "3/2");
  CHECK(j["genus_bound_ceil"] == 2);
}

TEST_CASE("compute on the crossingless diagram") {
  Run r = run({"compute", "--pd", "PD[]", "--n", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["gimel"]["values"] == Json::array({"0", "0"}));
  CHECK(j["s"] == "0");
  CHECK(j["u"] == "1");
}

TEST_CASE("tensor, dual and compute") {
  TempDir tmp;
  REQUIRE(run({"tensor", fixture_path("s3_p754.json"), fixture_path("s3_p976.json"), "-o", tmp.file("k.json")})
              .code == 0);
  Run r = run({"compute", "--fixture", tmp.file("k.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["gimel"]["breakpoints"] == Json::array({"0", "1/3", "1"}));
  CHECK(j["gimel"]["values"] == Json::array({"0", "0", "-1/2"}));
  REQUIRE(run({"dual", tmp.file("k.json"), "-o", tmp.file("kd.json")}).code == 0);
  Json d = Json::parse(run({"compute", "--fixture", tmp.file("kd.json")}).out);
  CHECK(d["gimel"]["values"] == Json::array({"0", "0"}));
}

TEST_CASE("decompose reports S_n") {
  Run r = run({"decompose", "--fixture", fixture_path("s3_p976.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["summands"].size() == 1);
}

TEST_CASE("verify and plot") {
  TempDir tmp;
  const std::string a = tmp.file("a.json"), b = tmp.file("b.json"), ab = tmp.file("ab.json"), k = tmp.file("k.json");
  REQUIRE(run({"compute", "--fixture", fixture_path("s3_p754.json"), "-o", a}).code == 0);
  REQUIRE(run({"compute", "--fixture", fixture_path("s3_p976.json"), "-o", b}).code == 0);
  REQUIRE(run({"tensor", fixture_path("s3_p754.json"), fixture_path("s3_p976.json"), "-o", k}).code == 0);
  REQUIRE(run({"compute", "--fixture", k, "-o", ab}).code == 0);
  Run v = run({"verify", "--reports", a, b, ab});
  CHECK(v.code == 0);
  Json verdicts = Json::parse(v.out);
  CHECK(verdicts.dump().find("quasi") != std::string::npos);
  Run p = run({"plot", "--report", ab, "-o", tmp.file("ab.csv")});
  CHECK(p.code == 0);
  std::string csv = read_text_file(tmp.file("ab.csv"));
  CHECK(csv.rfind("t,value\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);  // header + 100 samples, 1/3 is not among i/99
}

TEST_CASE("verify flags a violating report") {
  TempDir tmp;
  Json bad = {{"n", 3},
              {"name", "bad"},
              {"gimel", {{"breakpoints", {"0", "1/10", "1"}}, {"values", {"0", "1", "-1"}}}},
              {"gamma", {{"breakpoints", {"0", "1"}}, {"values", {"-2", "2"}}}},
              {"r", "0"},
              {"u", "2"},
              {"slope0", "10"},
              {"value1", "-1"},
              {"s", "-1"},
              {"genus_bound", "10"},
              {"genus_bound_ceil", 10}};
  write_text_file(tmp.file("bad.json"), dump_json(bad));
  Run v = run({"verify", "--reports", tmp.file("bad.json")});
  CHECK(v.code == cli::kValidationFailure);
}

TEST_CASE("error exits carry machine-readable JSON") {
  Run missing = run({"compute", "--fixture", "/nonexistent.json"});
  CHECK(missing.code == cli::kInputError);
  Json e = Json::parse(missing.err);
  CHECK(e.contains("error"));
  CHECK(e.contains("message"));

  TempDir tmp;
  write_text_file(tmp.file("sq.json"),
                  R"({"n": 2, "modules": {"0": [0], "1": [-2], "2": [-4]},
                      "differentials": {"0": [["x"]], "1": [["x"]]}})");
  Run sq = run({"compute", "--fixture", tmp.file("sq.json")});
  CHECK(sq.code == cli::kValidationFailure);
  CHECK(Json::parse(sq.err)["error"] == "validation");

  write_text_file(tmp.file("two.json"), R"({"n": 2, "modules": {"0": [0, 0]}})");
  Run two = run({"compute", "--fixture", tmp.file("two.json")});
  CHECK(two.code == cli::kDecompositionFailure);

  Run link = run({"compute", "--pd", "PD[X[4,1,3,2],X[2,3,1,4]]"});
  CHECK(link.code == cli::kInputError);
  CHECK(run({"compute", "--pd", "PD[]", "--n", "3"}).code == cli::kInputError);
  CHECK(run({"bogus"}).code == cli::kInputError);
}

TEST_CASE("s for a user potential") {
  Run r = run({"compute", "--fixture", fixture_path("p2m37_n3.json"), "--potential", "x^3 - x^2", "--alpha", "1"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["s"] == "-2");
  Run bad = run({"compute", "--fixture", fixture_path("p2m37_n3.json"), "--potential", "x^3 - x", "--alpha", "2"});
  CHECK(bad.code == cli::kInputError);
}

TEST_CASE("output is deterministic and cached") {
  TempDir tmp;
  Run first = run({"--cache-dir", tmp.file("cache"), "compute", "--fixture", fixture_path("p2m37_n4.json")});
  Run second = run({"--cache-dir", tmp.file("cache"), "compute", "--fixture", fixture_path("p2m37_n4.json")});
  Run plain = run({"compute", "--fixture", fixture_path("p2m37_n4.json")});
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == plain.out);
  std::size_t entries = 0;
  for (const auto& e : std::filesystem::directory_iterator(tmp.file("cache"))) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
