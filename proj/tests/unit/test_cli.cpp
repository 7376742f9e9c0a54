#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "gpr/json_io.hpp"

using namespace gpr;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gpr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze trivial module") {
  auto r = run({"analyze", "-n", "2", "-a", "0", "-b", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reducible") != std::string::npos);
  CHECK(r.out.find("{0} ⊂ U(P)(1 ⊗ V) ⊂ 𝒜 ⊗ V") != std::string::npos);
  CHECK(r.out.find("1 ⊗ V (constants)") != std::string::npos);

  r = run({"analyze", "-n", "2", "-a", "0", "-b", "0", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("criterion").at("verdict") == "reducible");
  CHECK(doc.at("jordan_holder").at("k") == 0);
  CHECK(doc.at("jordan_holder").get<JordanHolderReport>() == jordan_holder(build_irreducible({{0}, 0}), 4));
  CHECK(doc.at("degrees")[1].at("rank") == 0);
}

TEST_CASE("analyze with half-integer trace and empty labels") {
  auto r = run({"analyze", "-n", "2", "-a", "1", "-b", "1/2", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("highest_weight") == Json::array({"3/4", "-1/4"}));
  CHECK(doc.at("criterion").at("verdict") == "irreducible");
  CHECK(doc.at("jordan_holder").is_null());
  for (const auto& row : doc.at("q_coefficients")) CHECK(row.at("q") != "0/1");

  r = run({"analyze", "-n", "1", "-a", "-b", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mu          (0)") != std::string::npos);
}

TEST_CASE("table and JSON carry the same data") {
  const auto table = run({"analyze", "-n", "2", "-a", "1", "-b", "1"});
  const auto json = run({"analyze", "-n", "2", "-a", "1", "-b", "1", "--json"});
  REQUIRE(table.code == 0);
  REQUIRE(json.code == 0);
  const Json doc = Json::parse(json.out);
  for (const auto& row : doc.at("degrees")) {
    const std::string line = "  " + row.at("degree").dump();
    CHECK(table.out.find(line) != std::string::npos);
  }
  CHECK(table.out.find("chi_(1, 1)") != std::string::npos);
  CHECK(doc.at("jordan_holder").at("quotient_description") == "chi_(1, 1)");
}

TEST_CASE("decompose") {
  auto r = run({"decompose", "-n", "2", "-a", "1", "-b", "1", "-k", "1", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  REQUIRE(doc.at("rows").size() == 2);
  CHECK(doc.at("rows")[0].at("weight") == Json::array({"2/1", "0/1"}));
  CHECK(doc.at("rows")[0].at("dim") == 3);
  CHECK(doc.at("rows")[0].at("q") == "2/1");
  CHECK(doc.at("rows")[0].at("projector_rank") == 3);
  CHECK(doc.at("rows")[1].at("weight") == Json::array({"1/1", "1/1"}));
  CHECK(doc.at("rows")[1].at("q") == "0/1");

  r = run({"decompose", "-n", "2", "-a", "1", "-b", "1", "-k", "0", "--json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("rows").size() == 1);

  r = run({"decompose", "-n", "3", "-a", "0,0", "-b", "0", "-k", "2", "--json"});
  REQUIRE(r.code == 0);
  const Json rows = Json::parse(r.out).at("rows");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("c") == Json::array({2, 0, 0}));
}

TEST_CASE("verify-identity") {
  auto r = run({"verify-identity", "-n", "2", "-a", "1", "-b", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto s = Json::parse(r.out).at("sigma2").get<SpectrumReport>();
  CHECK(s.residual_is_zero);
  CHECK(s.multiplicities == std::vector<std::size_t>{3, 1});
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"analyze", "-n", "2", "-a", "1,2", "-b", "0"}).code == 1);
  CHECK(run({"analyze", "-n", "2", "-a", "-1", "-b", "0"}).code == 1);
  CHECK(run({"analyze", "-n", "2", "-a", "1", "-b", "1/0"}).code == 1);
  CHECK(run({"analyze", "-n", "2", "-a", "x", "-b", "0"}).code == 1);
  CHECK(run({"analyze", "-n", "0", "-a", "", "-b", "0"}).code == 1);
  CHECK(run({"analyze", "-n", "3", "-a", "4,4", "-b", "0", "--dim-cap", "10"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"selfcheck", "--inject-fault", "nonsense"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selfcheck on a small sweep") {
  auto r = run({"selfcheck", "--n-max", "2", "--max-label", "1", "--degree-cap", "2", "--json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("points") == 7 + 14);

  // Same verdicts for another seed.
  auto other = run({"selfcheck", "--n-max", "2", "--max-label", "1", "--degree-cap", "2", "--json", "--seed", "99"});
  Json a = doc, b = Json::parse(other.out);
  a.erase("seed");
  b.erase("seed");
  CHECK(a == b);

  r = run({"selfcheck", "--n-max", "2", "--max-label", "1", "--degree-cap", "2", "--inject-fault",
           "flip-p-central-sign"});
  CHECK(r.code == 2);
  CHECK(r.out.find("bracket_consistency") != std::string::npos);
  CHECK(r.out.find("minimal reproducer") != std::string::npos);
}
