#include "doctest.h"
#include "gpr/char_identity.hpp"
#include "gpr/errors.hpp"
#include "gpr/linalg.hpp"

using namespace gpr;

namespace {

GlModule module(std::vector<long> a, Rational b) { return build_irreducible(DominantLabels{std::move(a), b}); }

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("sigma2 tilde examples") {
  auto s = sigma2_tilde(module({0}, 0));
  CHECK(s.flattened.rows() == 2);
  CHECK(s.flattened.is_zero());

  s = sigma2_tilde(module({1}, 1));
  CHECK(s.flattened.rows() == 4);
  CHECK(s.flattened.trace() == 6);

  // Each E_ii acts as t/3 on the trivial n = 3 module of trace t, so the
  // diagonal blocks are t + t/3.
  const Rational t(5, 2);
  s = sigma2_tilde(module({0, 0}, t));
  CHECK(s.flattened == Matrix::scalar(3, t + t / 3));
}

TEST_CASE("sigma2 tilde columns are p_j on constants") {
  // Block (i, j) = δ_ij b + E_{j,i}: column block j holds the x_i components of p_j(1 ⊗ v).
  auto v = module({1}, 1);
  auto s = sigma2_tilde(v);
  CHECK(s.grid[0][1] == v.e(1, 0));
  CHECK(s.grid[1][0] == v.e(0, 1));
  CHECK(s.grid[0][0] == v.e(0, 0) + Matrix::scalar(2, 1));
}

TEST_CASE("predicted roots") {
  CHECK(predicted_sigma2_roots(Weight(ints({1, 0}))) == ints({2, 0}));
  CHECK(predicted_sigma2_roots(Weight(ints({0, 0}))) == ints({0, -1}));
  CHECK(predicted_sigma2_roots(Weight(ints({0, 0, 0}))) == ints({0, -1, -2}));
  Faults f;
  f.perturb_sigma2_root = 1;
  CHECK(predicted_sigma2_roots(Weight(ints({1, 0})), f) == ints({2, 1}));

  CHECK(predicted_adjoint_roots(Weight(ints({0, 0}))) == ints({1, 0}));
  CHECK(predicted_adjoint_roots(Weight(ints({1, 0}))) == ints({2, 0}));
  CHECK(predicted_dual_adjoint_roots(Weight(ints({1, 0}))) == ints({-1, 1}));
  CHECK(predicted_adjoint_roots(Weight(ints({0, 0, 0}))) == ints({2, 1, 0}));
}

TEST_CASE("characteristic identity examples") {
  auto r = check_characteristic_identity(sigma2_tilde(module({0}, 0)), ints({0, -1}));
  CHECK(r.residual_is_zero);
  CHECK(r.multiplicities == std::vector<std::size_t>{2, 0});

  r = check_characteristic_identity(sigma2_tilde(module({1}, 1)), ints({2, 0}));
  CHECK(r.residual_is_zero);
  CHECK(r.multiplicities == std::vector<std::size_t>{3, 1});

  r = check_characteristic_identity(sigma2_tilde(module({1}, 1)), ints({2, 1}));
  CHECK_FALSE(r.residual_is_zero);
}

TEST_CASE("idempotent from sigma2 tilde") {
  auto s = sigma2_tilde(module({1}, 1));
  Matrix p = idempotent_from_spectrum(s.flattened, Rational(2), {Rational(0)});
  CHECK(p * p == p);
  CHECK(rank(p) == 3);
}

TEST_CASE("closed-form roots agree with the spectrum oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<long> a(n - 1, 0);
    while (true) {
      for (auto b : {Rational(-2), Rational(0), Rational(1), Rational(1, 2), Rational(-3, 2)}) {
        auto v = module(a, b);
        const auto mu = v.highest_weight;
        struct Case {
          const BlockOperator* op;
          std::vector<Rational> roots;
        };
        const auto s = sigma2_tilde(v);
        const auto [m, md] = adjoint_matrices(v);
        for (const Case& c : {Case{&s, predicted_sigma2_roots(mu)}, Case{&m, predicted_adjoint_roots(mu)},
                              Case{&md, predicted_dual_adjoint_roots(mu)}}) {
          auto report = check_characteristic_identity(*c.op, c.roots);
          CHECK(report.residual_is_zero);
          auto spectrum = rational_spectrum(c.op->flattened);
          CHECK(spectrum.splits);
          std::size_t total = 0;
          for (std::size_t i = 0; i < c.roots.size(); ++i) {
            const auto it = spectrum.algebraic.find(c.roots[i]);
            const std::size_t algebraic = it == spectrum.algebraic.end() ? 0 : it->second;
            // Diagonalizable: algebraic and geometric multiplicities agree.
            CHECK(algebraic == report.multiplicities[i]);
            total += report.multiplicities[i];
          }
          CHECK(total == n * v.dim());
          CHECK(spectrum.algebraic.size() <= c.roots.size());
        }
        // Realized σ̃₂ roots only at indices in I_1.
        auto report = check_characteristic_identity(s, predicted_sigma2_roots(mu));
        auto eligible = eligible_indices(mu, 1);
        for (std::size_t i = 0; i < n; ++i) {
          const bool in_i1 = std::find(eligible.begin(), eligible.end(), i) != eligible.end();
          CHECK(report.multiplicities[i] == (in_i1 ? weyl_dimension(mu + Weight::unit(n, i)) : 0u));
        }
      }
      std::size_t i = 0;
      while (i < a.size() && a[i] == 2) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
}

TEST_CASE("projector examples") {
  auto v = module({1}, 1);
  Matrix p1 = tensor_projector(v, 1, false);
  Matrix p2 = tensor_projector(v, 2, false);
  CHECK(rank(p1) == 3);
  CHECK(rank(p2) == 1);
  CHECK(p1 * p1 == p1);
  CHECK((p1 * p2).is_zero());
  CHECK(p1 + p2 == Matrix::identity(4));

  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<long> zeros(n - 1, 0);
    CHECK(tensor_projector(module(zeros, Rational(3, 5)), 1, false) == Matrix::identity(n));
  }
  CHECK_THROWS_AS(tensor_projector(v, 0, false), DomainError);
  CHECK_THROWS_AS(tensor_projector(v, 3, true), DomainError);
}

TEST_CASE("projector suite over a sweep") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<long> a(n - 1, 0);
    while (true) {
      for (auto b : {Rational(0), Rational(1, 2), Rational(-2)}) {
        auto v = module(a, b);
        for (bool dual : {false, true}) {
          const GlRep space = projector_space(v, dual);
          Matrix total(space.dim(), space.dim());
          std::vector<Matrix> ps;
          for (std::size_t r = 1; r <= n; ++r) {
            Matrix p = tensor_projector(v, r, dual);
            CHECK(p * p == p);
            const Weight target = dual ? v.highest_weight - Weight::unit(n, r - 1) : v.highest_weight + Weight::unit(n, r - 1);
            CHECK(rank(p) == (is_dominant(target) ? weyl_dimension(target) : 0u));
            for (const auto& e : space.action) CHECK(e * p == p * e);
            for (const auto& q : ps) CHECK((p * q).is_zero());
            total += p;
            ps.push_back(std::move(p));
          }
          CHECK(total == Matrix::identity(space.dim()));
        }
      }
      std::size_t i = 0;
      while (i < a.size() && a[i] == 2) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
}

TEST_CASE("degenerate spectrum is reported with the colliding indices") {
  auto v = module({1}, 1);
  // Not a dominant weight: d = (0 + 1, 1 + 0) collide.
  v.highest_weight = Weight(ints({0, 1}));
  try {
    tensor_projector(v, 2, true);
    FAIL("expected a degenerate spectrum error");
  } catch (const DegenerateSpectrumError& e) {
    CHECK(e.first() == 2);
    CHECK(e.second() == 1);
  }
}
