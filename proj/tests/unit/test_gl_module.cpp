#include <set>

#include "doctest.h"
#include "gpr/errors.hpp"
#include "gpr/gl_module.hpp"
#include "gpr/linalg.hpp"

using namespace gpr;

namespace {

Weight w(std::initializer_list<Rational> xs) { return Weight(std::vector<Rational>(xs)); }

DominantLabels labels(std::vector<long> a, Rational b) { return DominantLabels{std::move(a), b}; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("highest weight from labels") {
  CHECK(weight_from_labels(labels({0}, 0)) == w({0, 0}));
  CHECK(weight_from_labels(labels({1}, 1)) == w({1, 0}));
  CHECK(weight_from_labels(labels({1, 0}, 1)) == w({1, 0, 0}));
  CHECK(weight_from_labels(labels({1}, Rational(1, 2))) == w({Rational(3, 4), Rational(-1, 4)}));
  CHECK(weight_from_labels(labels({}, 3)) == w({3}));
  CHECK_THROWS_AS(weight_from_labels(labels({-1}, 0)), DomainError);
}

TEST_CASE("labels round trip") {
  for (long a1 = 0; a1 <= 2; ++a1) {
    for (long a2 = 0; a2 <= 2; ++a2) {
      for (auto b : {Rational(-2), Rational(0), Rational(1, 2), Rational(-3, 2)}) {
        auto l = labels({a1, a2}, b);
        CHECK(labels_from_weight(weight_from_labels(l)) == l);
      }
    }
  }
}

TEST_CASE("weight of a lowered vector") {
  CHECK(weight_of_vector(labels({1}, 1), {0}) == w({1, 0}));
  CHECK(weight_of_vector(labels({1}, 1), {1}) == w({0, 1}));
  CHECK(weight_of_vector(labels({1, 0}, 1), {1, 0}) == w({0, 1, 0}));
  // ν = μ - α_1 - 2 α_2 for μ = (2, 1, 0).
  CHECK(weight_of_vector(labels({1, 1}, 3), {1, 2}) == w({1, 0, 2}));
  CHECK_THROWS_AS(weight_of_vector(labels({1}, 1), {1, 1}), DomainError);
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dimension(w({0, 0, 0})) == 1);
  for (long k = 0; k < 6; ++k) CHECK(weyl_dimension(w({Rational(k), 0})) == static_cast<std::uint64_t>(k + 1));
  CHECK(weyl_dimension(w({1, 1, 0})) == 3);
  CHECK(weyl_dimension(w({2, 1, 0})) == 8);
  CHECK(weyl_dimension(w({Rational(7, 3), Rational(4, 3), Rational(1, 3)})) == 8);
  CHECK_THROWS_AS(weyl_dimension(w({0, 1})), DomainError);
  CHECK_THROWS_AS(weyl_dimension(w({Rational(1, 2), 0})), DomainError);
}

TEST_CASE("constructed modules satisfy the defining invariants") {
  CHECK(build_irreducible(labels({0}, 0)).dim() == 1);
  for (const auto& m : build_irreducible(labels({0}, 0)).action) CHECK(m.is_zero());

  auto v = build_irreducible(labels({1}, 1));
  CHECK(v.dim() == 2);
  std::set<Weight> ws(v.weights.begin(), v.weights.end());
  CHECK(ws == std::set<Weight>{w({1, 0}), w({0, 1})});

  CHECK(build_irreducible(labels({1, 1}, Rational(5, 7))).dim() == 8);

  for (std::size_t n = 1; n <= 4; ++n) {
    const long top = n == 4 ? 1 : 2;
    std::vector<long> a(n - 1, 0);
    while (true) {
      for (auto b : {Rational(0), Rational(-3, 2), Rational(2)}) {
        auto mod = build_irreducible(labels(a, b));
        auto failures = check_module_invariants(mod);
        CAPTURE(n);
        CAPTURE(mod.dim());
        CHECK(failures.empty());
        CHECK(mod.highest_index == 0);
      }
      std::size_t i = 0;
      while (i < a.size() && a[i] == top) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
}

TEST_CASE("basis weights follow lowering depth then descending weight") {
  auto mod = build_irreducible(labels({2, 1}, 0));
  for (std::size_t i = 1; i < mod.dim(); ++i) {
    const Rational d0 = mod.highest_weight[0] - mod.weights[i - 1][0] + mod.highest_weight[0] +
                        mod.highest_weight[1] - mod.weights[i - 1][0] - mod.weights[i - 1][1];
    const Rational d1 = mod.highest_weight[0] - mod.weights[i][0] + mod.highest_weight[0] +
                        mod.highest_weight[1] - mod.weights[i][0] - mod.weights[i][1];
    CHECK(d0 <= d1);
    if (d0 == d1) CHECK_FALSE(mod.weights[i - 1] < mod.weights[i]);
  }
}

TEST_CASE("dimension cap") {
  BuildOptions opts;
  opts.dim_cap = 7;
  CHECK_THROWS_AS(build_irreducible(labels({1, 1}, 0), opts), DimensionCapError);
}

TEST_CASE("Pieri index set") {
  CHECK(pieri_index_set(w({3, 1, 0}), 0) == std::vector<Multiindex>{{0, 0, 0}});
  CHECK(pieri_index_set(w({1, 0}), 1) == std::vector<Multiindex>{{1, 0}, {0, 1}});
  CHECK(pieri_index_set(w({1, 1, 1}), 2) == std::vector<Multiindex>{{2, 0, 0}});
  CHECK_THROWS_AS(pieri_index_set(w({0, 1}), 1), DomainError);
}

TEST_CASE("Pieri dimension identity") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<long> a(n - 1, 0);
    while (true) {
      const Weight mu = weight_from_labels(labels(a, Rational(1, 3)));
      for (long k = 0; k <= 4; ++k) {
        std::uint64_t total = 0;
        for (const auto& c : pieri_index_set(mu, k)) total += weyl_dimension(shifted(mu, c));
        CHECK(total == weyl_dimension(mu) * binomial(k + n - 1, n - 1));
      }
      std::size_t i = 0;
      while (i < a.size() && a[i] == 2) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
}

TEST_CASE("highest weight vectors in V(1,0) tensor V(1,0)") {
  auto v = build_irreducible(labels({1}, 1));
  auto vv = tensor_product(v, v);
  CHECK(check_rep_relations(vv).empty());
  const auto top = v.highest_index;
  const auto low = 1 - top;

  auto hw = highest_weight_vectors(vv.dim(), raising_operators(vv), weight_space_projector(vv, w({2, 0})));
  REQUIRE(hw.size() == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK((hw[0][i] != 0) == (i == top * 2 + top));

  hw = highest_weight_vectors(vv.dim(), raising_operators(vv), weight_space_projector(vv, w({1, 1})));
  REQUIRE(hw.size() == 1);
  CHECK(hw[0][top * 2 + low] == -hw[0][low * 2 + top]);
  CHECK(hw[0][top * 2 + low] != 0);

  CHECK(highest_weight_vectors(1, {}, Matrix::identity(1)).size() == 1);
}

TEST_CASE("non-coordinate weight projector") {
  auto v = build_irreducible(labels({1}, 1));
  auto vv = tensor_product(v, v);
  // Projector onto weight (1,1) written through the Cartan action.
  Matrix p = idempotent_from_spectrum(vv.e(0, 0), Rational(1), {Rational(2), Rational(0)});
  auto hw = highest_weight_vectors(vv.dim(), raising_operators(vv), p);
  CHECK(hw.size() == 1);
}

TEST_CASE("Pieri multiplicities are one") {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<long> a(n - 1, 0);
    while (true) {
      auto v = build_irreducible(labels(a, 0));
      for (long k = 1; k <= 2; ++k) {
        auto sym = symmetric_power(n, k);
        CHECK(check_rep_relations(sym).empty());
        auto t = tensor_product(v, sym);
        auto pieri = pieri_index_set(v.highest_weight, k);
        std::set<Weight> seen;
        for (const auto& wt : t.weights) {
          if (!seen.insert(wt).second) continue;
          auto hw = highest_weight_vectors(t.dim(), raising_operators(t), weight_space_projector(t, wt));
          bool expected = false;
          for (const auto& c : pieri) expected = expected || shifted(v.highest_weight, c) == wt;
          CAPTURE(to_string(wt));
          CHECK(hw.size() == (expected ? 1u : 0u));
        }
      }
      std::size_t i = 0;
      while (i < a.size() && a[i] == 1) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
}

TEST_CASE("dual vector representation") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_rep_relations(dual_vector_rep(n)).empty());
}
