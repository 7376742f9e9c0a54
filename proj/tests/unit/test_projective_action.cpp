#include <thread>

#include "doctest.h"
#include "gpr/errors.hpp"
#include "gpr/linalg.hpp"
#include "gpr/projective_action.hpp"

using namespace gpr;

namespace {

GlModule module(std::vector<long> a, Rational b) { return build_irreducible(DominantLabels{std::move(a), b}); }

GradedElement element(long k, std::initializer_list<std::pair<Multiindex, std::size_t>> keys,
                      std::initializer_list<Rational> values) {
  GradedElement g;
  g.degree = k;
  auto v = values.begin();
  for (const auto& key : keys) g.coords[key] = *v++;
  return g;
}

// Expected image of x^c ⊗ v_b: coefficient times x^{c'} ⊗ (column b of m).
void add_column(GradedElement& g, const Multiindex& c, const Matrix& m, std::size_t b, const Rational& scale) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Rational x = m.at(r, b) * scale;
    if (x == 0) continue;
    auto& slot = g.coords[{c, r}];
    slot += x;
    if (slot == 0) g.coords.erase({c, r});
  }
}

}  // namespace

TEST_CASE("Chevalley generators") {
  auto g = chevalley_generators(2);
  CHECK(g.e[1] == WittElement::p(2, 1));
  CHECK(g.f[1] == Rational(-1) * WittElement::d(2, 1));
  WittElement h2(2);
  h2.add_term({1, 0}, 0, 1);
  h2.add_term({0, 1}, 1, 2);
  CHECK(g.h[1] == h2);

  auto g1 = chevalley_generators(1);
  REQUIRE(g1.e.size() == 1);
  WittElement x2d(1);
  x2d.add_term({2}, 0, 1);
  CHECK(g1.e[0] == x2d);
  CHECK(g1.f[0] == Rational(-1) * WittElement::d(1, 0));
}

TEST_CASE("symbolic brackets") {
  const std::size_t n = 3;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto br = bracket(WittElement::d(n, j), WittElement::p(n, i));
      if (i != j) {
        CHECK(br == WittElement::xd(n, i, j));
      } else {
        WittElement euler(n);
        for (std::size_t r = 0; r < n; ++r) euler += WittElement::xd(n, r, r);
        CHECK(br == euler + WittElement::xd(n, i, i));
      }
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = bracket(WittElement::xd(n, i, j), WittElement::p(n, k));
        CHECK(lhs == (j == k ? WittElement::p(n, i) : WittElement(n)));
      }
      CHECK(bracket(WittElement::p(n, i), WittElement::p(n, j)).is_zero());
      CHECK(bracket(WittElement::d(n, i), WittElement::d(n, j)).is_zero());
    }
  }
}

TEST_CASE("span decomposition") {
  const std::size_t n = 2;
  auto op = Rational(3) * WittElement::p(n, 1) + WittElement::xd(n, 0, 1) - Rational(1, 2) * WittElement::d(n, 0);
  auto c = decompose(op);
  CHECK(c.p[1] == 3);
  CHECK(c.p[0] == 0);
  CHECK(c.xd[0 * n + 1] == 1);
  CHECK(c.d[0] == Rational(-1, 2));

  WittElement outside(n);
  outside.add_term({1, 1}, 0, 1);
  CHECK_THROWS_AS(decompose(outside), UnsupportedOperatorError);
  WittElement cubic(n);
  cubic.add_term({3, 0}, 0, 1);
  CHECK_THROWS_AS(decompose(cubic), UnsupportedOperatorError);
  CHECK_THROWS_AS(act(cubic, element(0, {{{0, 0}, 0}}, {1}), module({0}, 0)), UnsupportedOperatorError);
}

TEST_CASE("action on low degrees") {
  auto v = module({1}, 1);
  const std::size_t n = 2;
  for (std::size_t b = 0; b < v.dim(); ++b) {
    auto one = element(0, {{{0, 0}, b}}, {1});
    for (std::size_t i = 0; i < n; ++i) {
      auto image = act(WittElement::d(n, i), one, v);
      CHECK(image.degree == -1);
      CHECK(image.coords.empty());

      // p_i(1 ⊗ v) = x_i ⊗ I v + Σ_j x_j ⊗ E_ij v
      GradedElement expected;
      expected.degree = 1;
      Multiindex xi(n, 0);
      xi[i] = 1;
      add_column(expected, xi, v.identity_element(), b, 1);
      for (std::size_t j = 0; j < n; ++j) {
        Multiindex xj(n, 0);
        xj[j] = 1;
        add_column(expected, xj, v.e(i, j), b, 1);
      }
      CHECK(act(WittElement::p(n, i), one, v) == expected);
    }
    // x_1 ∂_1 (x_1 ⊗ v) = x_1 ⊗ v + x_1 ⊗ E_11 v
    auto x1 = element(1, {{{1, 0}, b}}, {1});
    GradedElement expected;
    expected.degree = 1;
    add_column(expected, {1, 0}, Matrix::identity(v.dim()) + v.e(0, 0), b, 1);
    CHECK(act(WittElement::xd(n, 0, 0), x1, v) == expected);
  }
}

TEST_CASE("graded basis") {
  CHECK(graded_basis(module({1}, 1), 0).size() == 2);
  auto basis = graded_basis(module({0}, 0), 2);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].monomial == Multiindex{2, 0});
  CHECK(basis[1].monomial == Multiindex{1, 1});
  CHECK(basis[2].monomial == Multiindex{0, 2});
  CHECK(graded_basis(module({0, 1}, 0), 1).size() == 9);
  CHECK(graded_basis(build_irreducible(DominantLabels{{0, 0}, 0}), 1).size() == 3);
}

TEST_CASE("operator matrix examples and shapes") {
  auto trivial = module({0}, 0);
  Matrix d0 = operator_matrix(WittElement::d(2, 0), trivial, 0);
  CHECK(d0.rows() == 0);
  CHECK(d0.cols() == 1);
  CHECK(operator_matrix(WittElement::p(2, 0), trivial, 0).is_zero());
  // p_1 (x^c) = k x_1 x^c on the trivial module.
  Matrix p2 = operator_matrix(WittElement::p(2, 0), trivial, 2);
  CHECK(p2.rows() == 4);
  CHECK(p2.cols() == 3);
  CHECK(p2.at(0, 0) == 2);

  for (auto& v : {module({1}, Rational(1, 2)), module({2}, -1)}) {
    ProjectiveModule pm(v);
    auto g = chevalley_generators(2);
    for (long k = 0; k <= 3; ++k) {
      Matrix h = pm.operator_matrix(g.h[1], k);
      for (std::size_t r = 0; r < h.rows(); ++r) {
        for (const auto& e : h.row(r)) CHECK(e.col == r);
      }
      CHECK(pm.p(0, k).rows() == pm.piece_dim(k + 1));
      CHECK(pm.d(1, k).rows() == pm.piece_dim(k - 1));
      CHECK(pm.xd(0, 1, k).rows() == pm.piece_dim(k));
    }
  }
}

TEST_CASE("span formulas agree with the general vector-field action") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto b : {Rational(0), Rational(-3, 2), Rational(2)}) {
      std::vector<long> a(n - 1, 1);
      auto v = module(a, b);
      ProjectiveModule pm(v);
      for (const auto& op : spanning_set(n)) {
        const int s = *op.degree_shift();
        for (long k = 0; k <= 3; ++k) CHECK(pm.operator_matrix(op, k) == larsson_matrix(op, v, k, s));
      }
    }
  }
}

TEST_CASE("homomorphism, Chevalley and derivative identities") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<long> a(n - 1, 0);
    if (n > 1) a[0] = 1;
    for (auto b : {Rational(0), Rational(1, 2), Rational(-2)}) {
      ProjectiveModule pm(module(a, b));
      CHECK(bracket_failures(pm, 3).empty());
      CHECK(chevalley_failures(pm, 3).empty());
      CHECK(derivative_identity_failures(pm, 3).empty());
    }
  }
  CHECK(verify_bracket_consistency(2, module({1}, 1), 2));
}

TEST_CASE("triangle delta examples") {
  auto v = module({1}, 1);
  ProjectiveModule pm(v);
  CHECK(pm.triangle_delta(0, 1, 1) == v.e(1, 0));
  CHECK(pm.triangle_delta(0, 0, 1) == v.identity_element() + v.e(0, 0));
  auto trivial = module({0}, 0);
  CHECK(triangle_delta(1, 1, 2, trivial) == Matrix::identity(1));
}

TEST_CASE("grading and Cartan eigenvalues") {
  auto v = module({1, 2}, Rational(1, 3));
  ProjectiveModule pm(v);
  const std::size_t n = 3;
  WittElement euler(n);
  for (std::size_t i = 0; i < n; ++i) euler += WittElement::xd(n, i, i);
  for (long k = 0; k <= 3; ++k) {
    Matrix e = pm.operator_matrix(euler, k);
    const auto basis = graded_basis(v, k);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      CHECK(e.at(r, r) == Rational(k) + v.weights[basis[r].index].total());
    }
    if (k >= 1) {
      Matrix stacked = pm.d(0, k);
      for (std::size_t i = 1; i < n; ++i) stacked = stacked.vstack(pm.d(i, k));
      // ∩ Ker ∂_l = 0 and each ∂_l is onto.
      CHECK(rank(stacked) == pm.piece_dim(k));
      for (std::size_t i = 0; i < n; ++i) CHECK(rank(pm.d(i, k)) == pm.piece_dim(k - 1));
    }
  }
}

TEST_CASE("M_k and phi") {
  auto v = module({1}, 1);
  ProjectiveModule pm(v);
  CHECK(pm.up_generators(0) == Matrix::identity(2));
  // M_1 is σ̃₂.
  Matrix m1 = pm.up_generators(1);
  CHECK(m1.rows() == 4);
  CHECK(rank(m1) == 3);
  CHECK(pm.phi(2).cols() == pm.piece_dim(2));
  // Column for x_1 x_2 ⊗ v_0 is p_1 p_2 (1 ⊗ v_0).
  Vector one(2);
  one[0] = 1;
  Vector expected = pm.p(0, 1).apply(pm.p(1, 0).apply(one));
  CHECK(pm.phi(2).column(pm.index_of({1, 1}, 0)) == expected);
  // p's commute, so the other order gives the same column.
  CHECK(pm.p(1, 1).apply(pm.p(0, 0).apply(one)) == expected);

  ProjectiveModule trivial(module({0}, 0));
  CHECK(rank(trivial.up_generators(1)) == 0);
}

TEST_CASE("injected faults are visible") {
  auto v = module({1}, 1);
  Faults f;
  f.flip_fn_sign = true;
  CHECK_FALSE(chevalley_failures(ProjectiveModule(v, f), 2).empty());
  f = {};
  f.drop_delta_shift = true;
  CHECK_FALSE(derivative_identity_failures(ProjectiveModule(v, f), 2).empty());
  f = {};
  f.flip_p_central_sign = true;
  CHECK_FALSE(bracket_failures(ProjectiveModule(v, f), 2).empty());
}

TEST_CASE("concurrent matrix requests see one consistent cache") {
  ProjectiveModule pm(module({1, 1}, Rational(1, 2)));
  std::vector<std::thread> threads;
  std::vector<Matrix> results(4);
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = pm.up_generators(3) * Matrix::identity(pm.up_generators(3).cols()); });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == results[0]);
  CHECK(&pm.p(0, 2) == &pm.p(0, 2));
}
