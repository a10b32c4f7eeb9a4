#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eltrans/cli.hpp"
#include "eltrans/io.hpp"

using namespace eltrans;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  std::vector<Json> lines() const {
    std::vector<Json> v;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) v.push_back(Json::parse(line));
    return v;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("enumerate") {
  const auto one = run({"enumerate", "--a", "2", "--b", "0"});
  CHECK(one.code == cli::kSuccess);
  CHECK(one.lines().back()["count"] == 1);

  const auto three = run({"enumerate", "--a", "4", "--b", "0"});
  const auto lines = three.lines();
  CHECK(lines.back()["count"] == 3);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["sequence"] == Json::parse("[[4,0],[4,1],[4,2],[4,3],[4,4]]"));
  CHECK(lines[0]["z"].is_null());

  const auto csv = run({"enumerate", "--a", "3", "--b", "-3", "--format", "csv"});
  CHECK(csv.code == cli::kSuccess);
  // header + 8 rows + count comment
  CHECK(count_lines(csv.out) == 10);
  CHECK(csv.out.rfind("index,sequence,", 0) == 0);
  CHECK(csv.out.find("# count 8") != std::string::npos);

  CHECK(run({"enumerate", "--a", "0", "--b", "1"}).code == cli::kInputError);
  CHECK(run({"enumerate", "--a", "x", "--b", "1"}).code == cli::kInputError);
  CHECK(run({"enumerate", "--a", "20", "--b", "-20"}).code == cli::kInputError);
  CHECK(run({"enumerate", "--a", "-4", "--b", "-6"}).code == cli::kInputError);
}

TEST_CASE("enumerate is deterministic") {
  const auto a = run({"enumerate", "--a", "4", "--b", "-4"});
  const auto b = run({"enumerate", "--a", "4", "--b", "-4"});
  CHECK(a.out == b.out);
}

TEST_CASE("invariants") {
  const auto r = run({"invariants", "3,-3;3,-2;1,1"});
  CHECK(r.code == cli::kSuccess);
  const auto j = r.lines().at(0);
  CHECK(j["w"] == 3);
  CHECK(j["c2_defect"] == 5);
  CHECK(j["z"] == 2);
  CHECK(j["split"] == false);

  const auto trivial = run({"invariants", "--sequence", "0,0"}).lines().at(0);
  CHECK(trivial["w"] == 0);
  CHECK(trivial["c2_defect"] == 0);
  CHECK(trivial["z"] == 0);

  const auto bad = run({"invariants", "2,-2;2,0"});
  CHECK(bad.code == cli::kInputError);
  const auto violations = bad.lines().at(0)["violations"];
  CHECK(std::find(violations.begin(), violations.end(), "ii") != violations.end());
  CHECK(bad.lines().at(0)["valid"] == false);

  CHECK(run({"invariants", "1,2,3"}).code == cli::kInputError);
  CHECK(run({"invariants", ""}).code == cli::kInputError);
}

TEST_CASE("audit") {
  const auto thm05 = run({"audit", "--claim", "thm05", "--j", "3"});
  CHECK(thm05.code == cli::kSuccess);
  CHECK(thm05.lines().at(0)["holds"] == true);
  CHECK(thm05.lines().at(0)["claim"] == "Thm0.5");

  const auto strict = run({"audit", "--claim", "thm02", "--j", "3", "--strict"});
  CHECK(strict.code == cli::kStrictAuditFailure);
  CHECK(strict.lines().at(0)["missing"].size() == 4);

  const auto lenient = run({"audit", "--claim", "thm02", "--j", "3"});
  CHECK(lenient.code == cli::kSuccess);
  CHECK(lenient.lines().at(0)["holds"] == false);

  CHECK(run({"audit", "--claim", "thm02", "--j", "2"}).lines().at(0)["holds"] == true);
  CHECK(run({"audit", "--claim", "thm02", "--j", "2", "--strict"}).code == cli::kSuccess);

  const auto prop = run({"audit", "--claim", "prop04", "--j", "3"});
  REQUIRE(prop.lines().size() == 2);
  CHECK(prop.lines()[0]["holds"] == true);
  CHECK(prop.lines()[1]["extra"].size() == 4);

  CHECK(run({"audit", "--claim", "lemma11", "--j", "4"}).lines().at(0)["holds"] == true);
  CHECK(run({"audit", "--claim", "thm05", "--j", "2", "--format", "csv"}).out.rfind("claim,j,", 0) == 0);

  CHECK(run({"audit", "--claim", "nope", "--j", "2"}).code == cli::kInputError);
  CHECK(run({"audit", "--claim", "thm02", "--j", "0"}).code == cli::kInputError);
  CHECK(run({"audit", "--claim", "thm02", "--j", "2", "--epsilon", "1"}).code == cli::kInputError);
  CHECK(run({"audit", "--claim", "thm02", "--j", "20"}).code == cli::kInputError);
}

TEST_CASE("bundle") {
  const auto cech = run({"bundle", "--j", "2", "--p", "[]", "--op", "cech"});
  CHECK(cech.code == cli::kSuccess);
  CHECK(cech.lines().at(0)["w"] == 1);

  const auto inv = run({"bundle", "--j", "3", "--p", "[]", "--op", "invariants"}).lines().at(0);
  CHECK(inv["w"] == 3);
  CHECK(inv["z"] == 6);

  const auto verify =
      run({"bundle", "--j", "2", "--p", R"([{"i":1,"l":1,"c":"1"}])", "--op", "verify"});
  CHECK(verify.code == cli::kSuccess);
  CHECK(verify.lines().at(0)["agree"] == true);
  CHECK(verify.lines().at(0)["w_cech"] == 1);

  const auto seq = run({"bundle", "--j", "1", "--op", "sequence"}).lines().at(0);
  CHECK(seq["sequence"] == Json::parse("[[1,-1],[1,0],[1,1]]"));

  const auto dump = run({"bundle", "--j", "2", "--p", R"([{"i":1,"l":1,"c":"1/2"}])", "--op", "dump"});
  const auto d = dump.lines().at(0);
  CHECK(d["rank"] == 2);
  CHECK(d["truncation"] == 6);
  CHECK(d["entries"][1] == Json::parse(R"([[1,1,"1/2"]])"));
  CHECK(d["entries"][2].empty());

  CHECK(run({"bundle", "--j", "2", "--p", R"([{"i":1,"l":2,"c":"1"}])"}).code == cli::kInputError);
  CHECK(run({"bundle", "--j", "2", "--p", "not json"}).code == cli::kInputError);
  CHECK(run({"bundle", "--j", "2", "--p-file", "/nonexistent/p.json"}).code == cli::kInputError);
  CHECK(run({"bundle", "--j", "2", "--op", "cech", "--n-max", "99"}).code == cli::kInputError);
}

TEST_CASE("bundle reads coefficients from a file") {
  const std::string path = "test_cli_p.json";
  std::ofstream(path) << R"([{"i":1,"l":1,"c":1}])";
  const auto r = run({"bundle", "--j", "2", "--p-file", path, "--op", "verify"});
  std::remove(path.c_str());
  CHECK(r.code == cli::kSuccess);
  CHECK(r.lines().at(0)["agree"] == true);
}

TEST_CASE("rank-r") {
  CHECK(run({"rank-r", "--tuples", "0,0,-2;0,0,-1", "--op", "w"}).lines().at(0)["value"] == 1);
  CHECK(run({"rank-r", "--tuples", "1,0,-1", "--op", "w"}).lines().at(0)["value"] == 0);
  CHECK(run({"rank-r", "--tuples", "0,-2,-3", "--op", "bound"}).lines().at(0)["value"] == 3);
  CHECK(run({"rank-r", "--tuples", "0,-2,-3", "--op", "w"}).code == cli::kInputError);
  CHECK(run({"rank-r", "--tuples", "0,-2,0"}).code == cli::kInputError);
}

TEST_CASE("version and usage") {
  const auto v = run({"--version"});
  CHECK(v.code == cli::kSuccess);
  CHECK(v.out == "eltrans 1.0.0 (schema 1)\n");
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("enumeration cap from the environment") {
  setenv(cli::kMaxJEnv, "20", 1);
  CHECK(run({"audit", "--claim", "thm05", "--j", "1"}).code == cli::kSuccess);
  CHECK(run({"enumerate", "--a", "16", "--b", "-15", "--max-j", "2"}).code == cli::kInputError);
  setenv(cli::kMaxJEnv, "bogus", 1);
  CHECK(run({"enumerate", "--a", "2", "--b", "0"}).code == cli::kInputError);
  unsetenv(cli::kMaxJEnv);
}
