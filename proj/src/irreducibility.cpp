#include "gpr/irreducibility.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "gpr/char_identity.hpp"
#include "gpr/errors.hpp"
#include "gpr/linalg.hpp"

namespace gpr {

namespace {

long to_long(const Rational& x) {
  if (!is_integer(x)) throw std::invalid_argument("expected an integer, got " + to_string(x));
  const Integer& z = x.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of range: " + to_string(x));
  return z.get_si();
}

void require_dominant(const Weight& mu, const char* who) {
  if (!is_dominant(mu)) throw DomainError(std::string(who) + ": weight " + to_string(mu) + " is not dominant");
}

void require_pieri(const Weight& mu, const Multiindex& c, const char* who) {
  require_dominant(mu, who);
  bool ok = c.size() == mu.size();
  for (std::size_t s = 0; s < c.size() && ok; ++s) ok = c[s] >= 0;
  for (std::size_t s = 0; s + 1 < c.size() && ok; ++s) ok = Rational(c[s + 1]) <= mu[s] - mu[s + 1];
  if (!ok) throw DomainError(std::string(who) + ": exponent vector is outside the Pieri index set of " + to_string(mu));
}

std::string describe(const Multiindex& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::irreducible ? "irreducible" : "reducible"; }

CriterionWitness criterion(const Weight& mu) {
  require_dominant(mu, "criterion");
  const std::size_t n = mu.size();
  const Rational total = mu.total();
  CriterionWitness w;
  // i = 1 lies in every I_s, so the only candidate is s = 1 - μ_1 - |μ|.
  if (in_negative_naturals(mu[0] + total)) w.failing_pairs.push_back({1, to_long(1 - mu[0] - total)});
  for (std::size_t i = 2; i <= n; ++i) {
    const long gap = to_long(mu[i - 2] - mu[i - 1]);
    for (long s = 1; s <= gap; ++s) {
      const auto eligible = eligible_indices(mu, s);
      if (std::find(eligible.begin(), eligible.end(), i - 1) == eligible.end()) continue;
      if (mu[i - 1] + total - Rational(static_cast<long>(i)) + s == 0) w.failing_pairs.push_back({i, s});
    }
  }
  if (!w.failing_pairs.empty()) {
    w.verdict = Verdict::reducible;
    long first = w.failing_pairs.front().s;
    for (const auto& p : w.failing_pairs) first = std::min(first, p.s);
    w.first_failure_degree = first;
  }
  return w;
}

Verdict conditions_verdict(const Weight& mu) {
  require_dominant(mu, "conditions_verdict");
  const std::size_t n = mu.size();
  const Rational total = mu.total();
  auto in_range = [](const Rational& x, const Rational& lo, const Rational& hi) {
    return is_integer(x) && lo <= x && x <= hi;
  };
  const Rational first = mu[0] + total;
  if (in_negative_naturals(first)) return Verdict::reducible;
  if (n >= 2 && in_range(first, 2, 1 + mu[0] - mu[1])) return Verdict::reducible;
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    const Rational x = mu[i - 1] + total - Rational(static_cast<long>(i));
    if (in_range(x, 1, mu[i - 1] - mu[i])) return Verdict::reducible;
  }
  return Verdict::irreducible;
}

bool criterion_equivalence_check(const Weight& mu) { return conditions_verdict(mu) == criterion(mu).verdict; }

Rational q_coefficient(const Weight& mu, const Multiindex& c) {
  require_pieri(mu, c, "q_coefficient");
  const Rational total = mu.total();
  Rational q(1);
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (long i = 1; i <= c[s]; ++i) q *= mu[s] + total - Rational(static_cast<long>(s + 1)) + i;
  }
  return q;
}

Rational q_coefficient_bruteforce(const ProjectiveModule& pm, const Multiindex& c) {
  const GlModule& v = pm.module();
  const Weight& mu = v.highest_weight;
  require_pieri(mu, c, "q_coefficient_bruteforce");
  const long j = degree(c);
  const std::size_t n = v.n;
  const std::size_t dim = pm.piece_dim(j);

  const Weight target = shifted(mu, c);
  Matrix projector(dim, dim);
  for (const auto& l : pm.monomials(j)) {
    for (std::size_t b = 0; b < v.dim(); ++b) {
      if (shifted(v.weights[b], l) == target) {
        const std::size_t idx = pm.index_of(l, b);
        projector.set(idx, idx, Rational(1));
      }
    }
  }
  std::vector<Matrix> raising;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) raising.push_back(pm.xd(a, b, j));
  }
  auto maximal = highest_weight_vectors(dim, raising, projector);
  if (maximal.size() != 1) {
    throw MultiplicityAnomaly("weight " + to_string(target) + " carries " + std::to_string(maximal.size()) +
                              " maximal vectors in degree " + std::to_string(j));
  }
  Vector xi = std::move(maximal.front());
  const std::size_t lead = pm.index_of(c, v.highest_index);
  if (xi[lead] == 0) {
    throw ConsistencyViolation("maximal vector of weight " + to_string(target) + " has no x^c ⊗ v_μ component");
  }
  const Rational scale = 1 / xi[lead];
  for (auto& x : xi) x *= scale;

  const Vector image = pm.phi(j).apply(xi);
  const Rational q = image[lead];
  for (std::size_t r = 0; r < dim; ++r) {
    if (image[r] != q * xi[r]) {
      throw ConsistencyViolation("φ_" + std::to_string(j) + " does not act as a scalar on the maximal vector of weight " +
                                 to_string(target));
    }
  }
  return q;
}

Rational q_coefficient_bruteforce(const GlModule& v, const Multiindex& c) {
  return q_coefficient_bruteforce(ProjectiveModule(v), c);
}

std::size_t up_submodule_rank(const ProjectiveModule& pm, long k) { return rank(pm.up_generators(k)); }

std::size_t up_submodule_rank(const GlModule& v, long k) { return up_submodule_rank(ProjectiveModule(v), k); }

std::vector<Multiindex> residual_summands(const Weight& mu, long j) {
  std::vector<Multiindex> out;
  for (auto& c : pieri_index_set(mu, j)) {
    if (q_coefficient(mu, c) == 0) out.push_back(std::move(c));
  }
  return out;
}

Matrix tensor_action_map(const ProjectiveModule& pm, long j) {
  Matrix out(pm.piece_dim(j + 1), 0);
  for (std::size_t i = 0; i < pm.n(); ++i) out = out.hstack(pm.p(i, j));
  return out;
}

Matrix tensor_action_map(const GlModule& v, long j) { return tensor_action_map(ProjectiveModule(v), j); }

std::optional<long> first_rank_deficiency(const ProjectiveModule& pm, long degree_cap) {
  for (long j = 0; j <= degree_cap; ++j) {
    if (up_submodule_rank(pm, j) < pm.piece_dim(j)) return j;
  }
  return std::nullopt;
}

long rank_identity_defect(const ProjectiveModule& pm, long j) {
  long defect = static_cast<long>(pm.piece_dim(j)) - static_cast<long>(up_submodule_rank(pm, j));
  for (const auto& c : residual_summands(pm.module().highest_weight, j)) {
    defect -= static_cast<long>(weyl_dimension(shifted(pm.module().highest_weight, c)));
  }
  return defect;
}

long default_degree_cap(const Weight& mu) {
  const auto w = criterion(mu);
  return w.first_failure_degree ? std::max(4L, *w.first_failure_degree + 1) : 4L;
}

JordanHolderReport jordan_holder(const ProjectiveModule& pm, long degree_cap) {
  const GlModule& v = pm.module();
  const Weight& mu = v.highest_weight;
  const std::size_t n = v.n;
  const auto witness = criterion(mu);
  if (witness.verdict == Verdict::irreducible) {
    throw DomainError("jordan_holder: 𝒜 ⊗ V is irreducible for μ = " + to_string(mu));
  }

  JordanHolderReport report;
  report.k = *witness.first_failure_degree - 1;
  std::vector<std::size_t> at_first;
  for (const auto& p : witness.failing_pairs) {
    if (p.s == *witness.first_failure_degree) at_first.push_back(p.i);
  }
  if (at_first.size() != 1) {
    throw ConsistencyViolation("several failing pairs share the smallest s for μ = " + to_string(mu));
  }
  report.r = at_first.front();

  const Rational total = mu.total();
  for (std::size_t i = 1; i <= n; ++i) {
    if (in_negative_naturals(mu[i - 1] + total - Rational(static_cast<long>(i)) + 1)) {
      report.i0 = i;
      break;
    }
  }
  if (report.i0 == 0) throw ConsistencyViolation("no index i0 although the criterion fails for μ = " + to_string(mu));
  report.corollary_k = to_long(-mu[report.i0 - 1] - total + Rational(static_cast<long>(report.i0)) - 1);
  report.index_mismatch = report.i0 != report.r || report.corollary_k != report.k;

  const long k = report.k;
  const auto residual = residual_summands(mu, k + 1);
  Multiindex expected(n, 0);
  expected[report.r - 1] = k + 1;
  if (residual.size() != 1 || residual.front() != expected) {
    throw ConsistencyViolation("residual summands at degree " + std::to_string(k + 1) + " are not {" +
                               describe(expected) + "}");
  }
  report.residual_weight = shifted(mu, expected);

  const long cap = std::max(degree_cap, k + 2);
  for (long j = 0; j <= cap; ++j) {
    const std::size_t full = pm.piece_dim(j);
    const std::size_t r = up_submodule_rank(pm, j);
    report.full_dims_by_degree.push_back(full);
    report.submodule_dims_by_degree.push_back(r);
    if (j <= k && r != full) {
      throw ConsistencyViolation("rank of M_" + std::to_string(j) + " is " + std::to_string(r) + ", expected full rank " +
                                 std::to_string(full));
    }
    if (j == k + 1 && r == full) {
      throw ConsistencyViolation("M_" + std::to_string(j) + " has full rank at the predicted first failure");
    }
    if (const long defect = rank_identity_defect(pm, j); defect != 0) {
      throw ConsistencyViolation("rank identity fails at degree " + std::to_string(j) + " by " + std::to_string(defect));
    }
  }

  report.quotient_description = "chi_" + to_string(report.residual_weight);
  report.finite_dim = report.i0 == 1;
  if (report.finite_dim) {
    report.sl_highest_weight.push_back(k);
    report.sl_highest_weight.insert(report.sl_highest_weight.end(), v.labels.dynkin.begin(), v.labels.dynkin.end());
    report.sl_dimension = weyl_dimension(weight_from_labels(DominantLabels{report.sl_highest_weight, Rational(0)}));
  }
  return report;
}

JordanHolderReport jordan_holder(const GlModule& v, long degree_cap) {
  return jordan_holder(ProjectiveModule(v), degree_cap);
}

std::optional<std::uint64_t> finite_submodule_dimension(const ProjectiveModule& pm, const JordanHolderReport& report) {
  long limit = report.k + 1;
  for (auto a : pm.module().labels.dynkin) limit += a;
  std::uint64_t total = 0;
  for (long j = 0; j <= limit; ++j) {
    const std::size_t r = up_submodule_rank(pm, j);
    if (r == 0) return total;
    total += r;
  }
  return std::nullopt;
}

std::vector<std::string> submodule_invariance_failures(const ProjectiveModule& pm, long k_max) {
  std::vector<std::string> failures;
  const auto ops = spanning_set(pm.n());
  std::map<long, std::size_t> ranks;
  auto rank_at = [&](long j) {
    auto it = ranks.find(j);
    if (it == ranks.end()) it = ranks.emplace(j, up_submodule_rank(pm, j)).first;
    return it->second;
  };
  for (long j = 0; j <= k_max; ++j) {
    const Matrix& source = pm.up_generators(j);
    for (const auto& op : ops) {
      const long target = j + *op.degree_shift();
      if (target < 0) continue;
      const Matrix image = pm.operator_matrix(op, j) * source;
      if (rank(pm.up_generators(target).hstack(image)) != rank_at(target)) {
        failures.push_back(to_string(op) + " leaves U(P)(1 ⊗ V) at degree " + std::to_string(j));
      }
    }
  }
  return failures;
}

std::vector<std::string> derivative_escape_failures(const ProjectiveModule& pm, long k, long j_max) {
  std::vector<std::string> failures;
  for (long j = k + 2; j <= j_max; ++j) {
    const auto kernel = kernel_basis(pm.phi(j));
    if (kernel.empty()) {
      failures.push_back("Ker φ_" + std::to_string(j) + " is zero");
      continue;
    }
    const Matrix complement = Matrix::from_columns(pm.piece_dim(j), kernel);
    const Matrix& below = pm.up_generators(j - 1);
    const std::size_t base = rank(below);
    for (std::size_t l = 0; l < pm.n(); ++l) {
      if (rank(below.hstack(pm.d(l, j) * complement)) == base) {
        failures.push_back("∂_" + std::to_string(l + 1) + "(Ker φ_" + std::to_string(j) + ") lies in U(P)(1 ⊗ V)");
      }
    }
  }
  return failures;
}

std::vector<std::string> intertwining_failures(const ProjectiveModule& pm, long j_max, std::uint64_t seed,
                                               std::size_t samples) {
  std::vector<std::string> failures;
  const std::size_t n = pm.n();
  const GlRep vec = symmetric_power(n, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (long j = 0; j <= j_max; ++j) {
    const Matrix t = tensor_action_map(pm, j);
    const std::size_t w = pm.piece_dim(j);
    for (std::size_t sample = 0; sample < samples; ++sample) {
      Vector u(n * w);
      for (auto& x : u) x = entry(rng);
      const Vector tu = t.apply(u);
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t q = 0; q < n; ++q) {
          // (X ⊗ 1 + 1 ⊗ X) u, blockwise over the e'_i.
          Vector moved(n * w);
          const Matrix& small = vec.e(s, q);
          for (std::size_t r = 0; r < n; ++r) {
            for (const auto& e : small.row(r)) {
              for (std::size_t b = 0; b < w; ++b) moved[r * w + b] += e.value * u[e.col * w + b];
            }
          }
          const Matrix& big = pm.xd(s, q, j);
          for (std::size_t i = 0; i < n; ++i) {
            const Vector block(u.begin() + static_cast<long>(i * w), u.begin() + static_cast<long>((i + 1) * w));
            const Vector image = big.apply(block);
            for (std::size_t b = 0; b < w; ++b) moved[i * w + b] += image[b];
          }
          if (t.apply(moved) != pm.xd(s, q, j + 1).apply(tu)) {
            failures.push_back("T_" + std::to_string(j) + " does not intertwine x_" + std::to_string(s + 1) + "∂_" +
                               std::to_string(q + 1));
          }
        }
      }
    }
  }
  return failures;
}

}  // namespace gpr
