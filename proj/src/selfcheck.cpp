#include "gpr/selfcheck.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <tuple>

#include "gpr/char_identity.hpp"
#include "gpr/errors.hpp"
#include "gpr/irreducibility.hpp"
#include "gpr/linalg.hpp"

namespace gpr {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void module_invariants(const ProjectiveModule& pm, std::vector<std::string>& out) {
  for (auto& f : check_module_invariants(pm.module())) out.push_back(std::move(f));
}

void pieri_dimension(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const Weight& mu = pm.module().highest_weight;
  const std::size_t n = pm.n();
  for (long k = 0; k <= o.degree_cap; ++k) {
    std::uint64_t total = 0;
    for (const auto& c : pieri_index_set(mu, k)) total += weyl_dimension(shifted(mu, c));
    const std::uint64_t expected = weyl_dimension(mu) * binomial(static_cast<std::uint64_t>(k) + n - 1, n - 1);
    if (total != expected) {
      out.push_back("k = " + std::to_string(k) + ": Pieri summands give " + std::to_string(total) + ", expected " +
                    std::to_string(expected));
    }
  }
}

void characteristic_identity(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const GlModule& v = pm.module();
  if (v.dim() > o.spectral_dim_limit) return;
  const Weight& mu = v.highest_weight;
  const auto report = check_characteristic_identity(sigma2_tilde(v), predicted_sigma2_roots(mu, o.faults));
  if (!report.residual_is_zero) out.push_back("nonzero residual of the σ̃₂ characteristic polynomial");
  std::size_t total = 0;
  const auto eligible = eligible_indices(mu, 1);
  for (std::size_t i = 0; i < v.n; ++i) {
    total += report.multiplicities[i];
    const bool in_i1 = std::find(eligible.begin(), eligible.end(), i) != eligible.end();
    const std::uint64_t expected = in_i1 ? weyl_dimension(mu + Weight::unit(v.n, i)) : 0;
    if (report.multiplicities[i] != expected) {
      out.push_back("root " + std::to_string(i + 1) + " has multiplicity " + std::to_string(report.multiplicities[i]) +
                    ", expected " + std::to_string(expected));
    }
  }
  if (total != v.n * v.dim()) {
    out.push_back("realized multiplicities sum to " + std::to_string(total) + ", expected " +
                  std::to_string(v.n * v.dim()));
  }
}

void adjoint_identities(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const GlModule& v = pm.module();
  if (v.dim() > o.spectral_dim_limit) return;
  const auto [m, md] = adjoint_matrices(v);
  const Weight& mu = v.highest_weight;
  for (const auto& [name, op, roots] : {std::tuple{"M", &m, predicted_adjoint_roots(mu)},
                                        std::tuple{"M~", &md, predicted_dual_adjoint_roots(mu)}}) {
    const auto report = check_characteristic_identity(*op, roots);
    if (!report.residual_is_zero) out.push_back(std::string("nonzero residual for ") + name);
    std::size_t total = 0;
    for (auto x : report.multiplicities) total += x;
    if (total != v.n * v.dim()) out.push_back(std::string(name) + " is not diagonalized by its predicted roots");
  }
}

void projectors(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const GlModule& v = pm.module();
  if (v.dim() > o.spectral_dim_limit) return;
  const std::size_t n = v.n;
  for (bool dual : {false, true}) {
    const std::string side = dual ? "V(ε₁)* ⊗ V" : "V(ε₁) ⊗ V";
    const GlRep space = projector_space(v, dual);
    Matrix total(space.dim(), space.dim());
    std::vector<Matrix> ps;
    for (std::size_t r = 1; r <= n; ++r) {
      Matrix p = tensor_projector(v, r, dual);
      const std::string tag = side + " projector " + std::to_string(r);
      if (!(p * p == p)) out.push_back(tag + " is not idempotent");
      const Weight target =
          dual ? v.highest_weight - Weight::unit(n, r - 1) : v.highest_weight + Weight::unit(n, r - 1);
      const std::uint64_t expected = is_dominant(target) ? weyl_dimension(target) : 0;
      if (rank(p) != expected) out.push_back(tag + " has the wrong rank");
      for (const auto& e : space.action) {
        if (!(e * p == p * e)) {
          out.push_back(tag + " does not commute with gl(n)");
          break;
        }
      }
      for (const auto& q : ps) {
        if (!(p * q).is_zero()) out.push_back(tag + " is not orthogonal to an earlier projector");
      }
      total += p;
      ps.push_back(std::move(p));
    }
    if (!(total == Matrix::identity(space.dim()))) out.push_back(side + " projectors do not sum to the identity");
  }
}

void q_closed_form(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const Weight& mu = pm.module().highest_weight;
  for (long j = 0; j <= std::min(o.q_degree, o.degree_cap); ++j) {
    for (const auto& c : pieri_index_set(mu, j)) {
      const Rational brute = q_coefficient_bruteforce(pm, c);
      const Rational closed = q_coefficient(mu, c);
      if (brute != closed) {
        std::string cs;
        for (std::size_t i = 0; i < c.size(); ++i) cs += (i ? "," : "") + std::to_string(c[i]);
        out.push_back("q_(" + cs + "): closed form " + to_string(closed) + ", brute force " + to_string(brute));
      }
    }
  }
}

void criterion_soundness(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const auto w = criterion(pm.module().highest_weight);
  const auto deficiency = first_rank_deficiency(pm, o.degree_cap);
  std::optional<long> expected;
  if (w.first_failure_degree && *w.first_failure_degree <= o.degree_cap) expected = w.first_failure_degree;
  if (deficiency != expected) {
    auto show = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string("none"); };
    out.push_back("first rank deficiency " + show(deficiency) + ", criterion predicts " + show(expected) +
                  " (verdict " + to_string(w.verdict) + ")");
  }
}

void rank_identity(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  for (long j = 0; j <= o.degree_cap; ++j) {
    if (const long d = rank_identity_defect(pm, j); d != 0) {
      out.push_back("degree " + std::to_string(j) + ": rank identity off by " + std::to_string(d));
    }
  }
}

void jordan_holder_suite(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const Weight& mu = pm.module().highest_weight;
  if (criterion(mu).verdict == Verdict::irreducible) return;
  const auto report = jordan_holder(pm, o.degree_cap);
  if (report.index_mismatch) {
    out.push_back("closed-form i0 = " + std::to_string(report.i0) + ", k = " + std::to_string(report.corollary_k) +
                  " differ from the failing pair r = " + std::to_string(report.r) + ", k = " + std::to_string(report.k));
  }
  if (report.finite_dim) {
    const auto total = finite_submodule_dimension(pm, report);
    if (total != report.sl_dimension) {
      out.push_back("graded ranks sum to " + (total ? std::to_string(*total) : std::string("no finite value")) +
                    ", expected " + std::to_string(report.sl_dimension));
    }
  }
}

void derivative_escape(const ProjectiveModule& pm, const SelfcheckOptions& o, std::vector<std::string>& out) {
  const auto w = criterion(pm.module().highest_weight);
  if (w.verdict == Verdict::irreducible) return;
  const long k = *w.first_failure_degree - 1;
  for (auto& f : derivative_escape_failures(pm, k, std::max(o.degree_cap, k + 2))) out.push_back(std::move(f));
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::module_invariants: return "module_invariants";
    case Suite::pieri_dimension: return "pieri_dimension";
    case Suite::bracket_consistency: return "bracket_consistency";
    case Suite::chevalley_relations: return "chevalley_relations";
    case Suite::derivative_identity: return "derivative_identity";
    case Suite::characteristic_identity: return "characteristic_identity";
    case Suite::adjoint_identities: return "adjoint_identities";
    case Suite::projectors: return "projectors";
    case Suite::q_closed_form: return "q_closed_form";
    case Suite::criterion_equivalence: return "criterion_equivalence";
    case Suite::criterion_soundness: return "criterion_soundness";
    case Suite::rank_identity: return "rank_identity";
    case Suite::jordan_holder: return "jordan_holder";
    case Suite::submodule_invariance: return "submodule_invariance";
    case Suite::derivative_escape: return "derivative_escape";
    case Suite::intertwining: return "intertwining";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (int s = static_cast<int>(Suite::module_invariants); s <= static_cast<int>(Suite::intertwining); ++s) {
    out.push_back(static_cast<Suite>(s));
  }
  return out;
}

std::vector<DominantLabels> standard_sweep(std::size_t n_max, long max_label, const std::vector<Rational>& b_values) {
  std::vector<DominantLabels> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<long> a(n - 1, 0);
    while (true) {
      for (const auto& b : b_values) out.push_back(DominantLabels{a, b});
      std::size_t i = 0;
      while (i < a.size() && a[i] == max_label) a[i++] = 0;
      if (i == a.size()) break;
      ++a[i];
    }
  }
  return out;
}

std::vector<std::string> run_suite(Suite suite, const ProjectiveModule& pm, const SelfcheckOptions& o,
                                   std::uint64_t point_seed) {
  std::vector<std::string> out;
  try {
    switch (suite) {
      case Suite::module_invariants: module_invariants(pm, out); break;
      case Suite::pieri_dimension: pieri_dimension(pm, o, out); break;
      case Suite::bracket_consistency: out = bracket_failures(pm, o.degree_cap); break;
      case Suite::chevalley_relations: out = chevalley_failures(pm, o.degree_cap); break;
      case Suite::derivative_identity: out = derivative_identity_failures(pm, o.degree_cap); break;
      case Suite::characteristic_identity: characteristic_identity(pm, o, out); break;
      case Suite::adjoint_identities: adjoint_identities(pm, o, out); break;
      case Suite::projectors: projectors(pm, o, out); break;
      case Suite::q_closed_form: q_closed_form(pm, o, out); break;
      case Suite::criterion_equivalence:
        if (!criterion_equivalence_check(pm.module().highest_weight)) out.push_back("the two criteria disagree");
        break;
      case Suite::criterion_soundness: criterion_soundness(pm, o, out); break;
      case Suite::rank_identity: rank_identity(pm, o, out); break;
      case Suite::jordan_holder: jordan_holder_suite(pm, o, out); break;
      case Suite::submodule_invariance: out = submodule_invariance_failures(pm, o.degree_cap - 1); break;
      case Suite::derivative_escape: derivative_escape(pm, o, out); break;
      case Suite::intertwining:
        out = intertwining_failures(pm, std::min(o.degree_cap - 1, 2L), point_seed, 2);
        break;
    }
  } catch (const std::exception& e) {
    out.push_back(std::string("exception: ") + e.what());
  }
  return out;
}

SelfcheckSummary run_selfcheck(const SelfcheckOptions& options, const std::vector<Suite>& suites) {
  return run_selfcheck(options, standard_sweep(options.n_max, options.max_label, options.b_values), suites);
}

SelfcheckSummary run_selfcheck(const SelfcheckOptions& options, const std::vector<DominantLabels>& points,
                               const std::vector<Suite>& suites) {
  struct PointResult {
    bool ran = false;
    std::size_t dim = 0;
    std::vector<std::pair<Suite, std::vector<std::string>>> outcomes;
  };
  std::vector<PointResult> results(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop) {
      const std::size_t idx = next++;
      if (idx >= points.size()) return;
      PointResult& res = results[idx];
      res.ran = true;
      const std::uint64_t point_seed = options.seed + 0x9E3779B97F4A7C15ULL * (idx + 1);
      try {
        ProjectiveModule pm(build_irreducible(points[idx]), options.faults);
        res.dim = pm.module().dim();
        for (Suite s : suites) {
          res.outcomes.emplace_back(s, run_suite(s, pm, options, point_seed));
          if (!res.outcomes.back().second.empty() && options.stop_at_first_failure) {
            stop = true;
            break;
          }
        }
      } catch (const std::exception& e) {
        res.outcomes.emplace_back(Suite::module_invariants,
                                  std::vector<std::string>{std::string("module construction failed: ") + e.what()});
        if (options.stop_at_first_failure) stop = true;
      }
    }
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(points.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SelfcheckSummary summary;
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const PointResult& res = results[idx];
    if (!res.ran) continue;
    ++summary.points;
    for (const auto& [suite, details] : res.outcomes) {
      auto& tally = summary.tallies[suite];
      ++tally.points;
      if (details.empty()) continue;
      ++tally.failed;
      summary.failures.push_back(SuiteFailure{suite, points[idx], res.dim, details});
    }
  }
  return summary;
}

std::string cli_arguments(const DominantLabels& labels) {
  std::string a;
  for (std::size_t i = 0; i < labels.dynkin.size(); ++i) a += (i ? "," : "") + std::to_string(labels.dynkin[i]);
  return "-n " + std::to_string(labels.rank()) + " -a \"" + a + "\" -b " + to_string(labels.central);
}

std::string minimal_reproducer(const SelfcheckSummary& summary, long degree_cap) {
  if (summary.failures.empty()) return "";
  const auto it = std::min_element(summary.failures.begin(), summary.failures.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.labels.rank(), x.dim) < std::tuple(y.labels.rank(), y.dim);
  });
  return "gpr analyze " + cli_arguments(it->labels) + " --degree-cap " + std::to_string(degree_cap) + "\n  suite " +
         to_string(it->suite) + ": " + it->details.front();
}

}  // namespace gpr
