#include "doctest.h"
#include "gpr/json_io.hpp"

using namespace gpr;

namespace {

GlModule module(std::vector<long> a, Rational b) { return build_irreducible(DominantLabels{std::move(a), b}); }

template <typename T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).get<T>();
}

}  // namespace

TEST_CASE("rationals are num/den strings") {
  CHECK(rational_to_json(Rational(3)) == "3/1");
  CHECK(rational_to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_from_json("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json("1/0"), std::invalid_argument);
}

TEST_CASE("matrix and weight round trip") {
  Matrix m(2, 3);
  m.set(0, 2, Rational(-7, 3));
  m.set(1, 0, Rational(5));
  const Json j = m;
  CHECK(j.at("entries").size() == 2);
  CHECK(j.at("entries")[0] == Json::array({0, 2, "-7/3"}));
  CHECK(round_trip(m) == m);
  const Weight w({Rational(3, 4), Rational(-1, 4)});
  CHECK(round_trip(w) == w);

  Json bad = j;
  bad["entries"].push_back(Json::array({5, 0, "1/1"}));
  CHECK_THROWS_AS(bad.get<Matrix>(), std::invalid_argument);
}

TEST_CASE("module round trip") {
  for (auto& v : {module({1}, Rational(1, 2)), module({1, 2}, -1), module({}, 0)}) {
    const GlModule back = round_trip(v);
    CHECK(back.n == v.n);
    CHECK(back.labels == v.labels);
    CHECK(back.highest_index == v.highest_index);
    CHECK(back.highest_weight == v.highest_weight);
    CHECK(back.weights == v.weights);
    REQUIRE(back.action.size() == v.action.size());
    for (std::size_t i = 0; i < v.action.size(); ++i) CHECK(back.action[i] == v.action[i]);
    CHECK(check_module_invariants(back).empty());
  }
  Json j = module({1}, 1);
  CHECK(j.at("action")[0].size() == 6);
  j["action"][0][5] = "0";
  CHECK_THROWS_AS(j.get<GlModule>(), std::invalid_argument);
}

TEST_CASE("report round trips") {
  SpectrumReport s{{Rational(2), Rational(-1, 2)}, true, {3, 1}};
  CHECK(round_trip(s) == s);
  const Json sj = s;
  CHECK(sj.at("residual_zero") == true);

  for (auto& w : {criterion(weight_from_labels({{1}, 1})), criterion(weight_from_labels({{0}, Rational(1, 2)}))}) {
    CHECK(round_trip(w) == w);
  }
  const Json irr = criterion(weight_from_labels({{0}, Rational(1, 2)}));
  CHECK(irr.at("first_failure_degree").is_null());
  CHECK(irr.at("verdict") == "irreducible");

  for (auto& v : {module({0}, -2), module({1}, 1)}) {
    auto r = jordan_holder(v, 3);
    CHECK(round_trip(r) == r);
  }
  Json bad = criterion(weight_from_labels({{1}, 1}));
  bad["verdict"] = "maybe";
  CHECK_THROWS_AS(bad.get<CriterionWitness>(), std::invalid_argument);
}
