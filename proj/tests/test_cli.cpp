#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.status = pconcave::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("pconcave_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("concavity subcommand on A2") {
  const Result r = run({"theorem1", "--family", "A", "--rank", "2", "--grading", "1,1"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["satisfied"] == true);
  CHECK(j["witnesses"] == nlohmann::json::parse("[[1,1]]"));
  CHECK(j["noncompact_negative_roots"] == nlohmann::json::parse("[[-1,0],[0,-1]]"));
  CHECK(r.out.rfind("{\"crossed_nodes\"", 0) == 0);  // keys are sorted
}

TEST_CASE("concavity alias and Cartan override") {
  const Result r = run({"concavity", "--family", "B", "--rank", "2", "--cartan", "2,-1;-2,2", "--grading", "1,0"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["witnesses"] == nlohmann::json::parse("[[2,1]]"));
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> cases = {
      {"concavity", "--family", "C", "--rank", "3", "--grading", "1,0,1", "--seedless"},
      {"period", "--weight", "3", "--h", "1,1,1,1"},
      {"verify", "--suite", "all"},
      {"describe", "--family", "D", "--rank", "4"},
  };
  for (const auto& args : cases) {
    const Result a = run(args);
    const Result b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("describe output re-ingests to the same system") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"describe", "--family", "A", "--rank", "1"},
        std::vector<std::string>{"describe", "--family", "B", "--rank", "2", "--cartan", "2,-1;-2,2"},
        std::vector<std::string>{"describe", "--family", "D", "--rank", "4"}}) {
    const Result first = run(args);
    REQUIRE(first.status == 0);
    const std::string path = temp_file("describe.json", first.out);
    const Result again = run({"describe", "--input", path});
    CHECK(again.status == 0);
    CHECK(again.out == first.out);
  }
  const auto a1 = nlohmann::json::parse(run({"describe", "--family", "A", "--rank", "1"}).out);
  CHECK(a1["roots"].size() == 2);
}

TEST_CASE("input file mirrors flags; flags win; extra keys are ignored") {
  const std::string path =
      temp_file("concavity.json", R"({"family": "A", "rank": 2, "grading": [1, 0], "comment": "ignored"})");
  const Result from_file = run({"theorem1", "--input", path});
  const Result from_flags = run({"theorem1", "--family", "A", "--rank", "2", "--grading", "1,0"});
  CHECK(from_file.status == 0);
  CHECK(from_file.out == from_flags.out);
  const Result override = run({"theorem1", "--input", path, "--grading", "1,1"});
  CHECK(nlohmann::json::parse(override.out)["grading"] == nlohmann::json::parse("[1,1]"));
}

TEST_CASE("period report") {
  const Result r = run({"period", "--weight", "3", "--h", "1,1,1,1"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["degenerations"].size() == 2);
  CHECK(j["degenerations"][0]["spec"] == "TypeI(p_o=0)");
  CHECK(j["degenerations"][0]["condition_met"] == false);
  CHECK(j["degenerations"][1]["spec"] == "TypeI(p_o=1)");
  CHECK(j["degenerations"][1]["condition_met"] == true);
  CHECK(j["degenerations"][1]["witness_p"] == 3);
  CHECK(j["group"]["name"] == "Sp(2,R)");

  const Result one = run({"period", "--weight", "2", "--h", "2,1,2", "--degeneration", "II"});
  REQUIRE(one.status == 0);
  CHECK(nlohmann::json::parse(one.out)["degenerations"][0]["witness_p"] == 2);
}

TEST_CASE("verify emits one JSON object per line") {
  const Result r = run({"verify", "--suite", "lemma41"});
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["pass"] == true);
    ++count;
  }
  CHECK(count >= 14);

  const Result fp = run({"verify", "--suite", "fixed-point", "--family", "A", "--rank", "2", "--grading", "1,1",
                         "--eps", "0.5"});
  REQUIRE(fp.status == 0);
  CHECK(nlohmann::json::parse(fp.out)["pass"] == true);

  const Result pairs = run({"verify", "--suite", "cayley", "--family", "C", "--rank", "2"});
  REQUIRE(pairs.status == 0);
  CHECK(std::count(pairs.out.begin(), pairs.out.end(), '\n') == 16);
}

TEST_CASE("levi through a polynomial file") {
  const std::string path = temp_file("levi.json", R"({"n": 3, "point": [1, 0, 0], "terms": [
      {"coef": -1, "z": [1,0,0], "zbar": [1,0,0]},
      {"coef": -1, "z": [0,1,0], "zbar": [0,1,0]},
      {"coef": -1, "z": [0,0,1], "zbar": [0,0,1]},
      {"coef": 1, "z": [0,0,0], "zbar": [0,0,0]}]})");
  const Result r = run({"levi", "--input", path});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["negatives"] == 2);
  CHECK(j["pseudoconcave"] == true);
}

TEST_CASE("pretty output") {
  const Result r = run({"concavity", "--family", "C", "--rank", "2", "--grading", "1,1", "--pretty"});
  CHECK(r.status == 0);
  CHECK(r.out.find("not satisfied") != std::string::npos);
  CHECK(r.out.find("OK_TYPE_B") != std::string::npos);
  CHECK(run({"period", "--weight", "3", "--h", "1,1,1,1", "--pretty"}).out.find("witness p = 3") != std::string::npos);
  CHECK(run({"verify", "--suite", "sl2", "--pretty"}).out.find("passed") != std::string::npos);
}

TEST_CASE("error codes") {
  auto code = [](const std::vector<std::string>& args) {
    const Result r = run(args);
    if (r.status != 0) {
      const auto j = nlohmann::json::parse(r.err);
      CHECK(j["code"] == r.status);
      CHECK(j.contains("message"));
    }
    return r.status;
  };
  CHECK(code({"describe", "--family", "A"}) == 2);
  CHECK(code({"describe", "--family", "Q", "--rank", "2"}) == 2);
  CHECK(code({"describe", "--family", "A", "--rank", "7"}) == 5);
  CHECK(code({"theorem1", "--family", "A", "--rank", "2", "--grading", "1"}) == 2);
  CHECK(code({"theorem1", "--family", "A", "--rank", "2", "--grading", "0,0"}) == 3);
  CHECK(code({"period", "--weight", "11", "--h", "1,1,1,1,1,1,1,1,1,1,1,1"}) == 5);
  CHECK(code({"period", "--weight", "1", "--h", "40,40"}) == 5);
  CHECK(code({"period", "--weight", "2", "--h", "2,1,2", "--degeneration", "I:0"}) == 6);
  CHECK(code({"verify", "--suite", "nope"}) == 2);
  CHECK(code({"levi"}) == 2);
  CHECK(code({"nonsense"}) == 2);
  CHECK(code({"describe", "--input", temp_file("bad.json", "{not json")}) == 4);
  CHECK(code({"describe", "--input", temp_file("array.json", "[1,2]")}) == 4);
  CHECK(code({"levi", "--input", temp_file("levi_bad.json", R"({"n": 2})")}) == 4);
  CHECK(code({"--help"}) == 0);
}
