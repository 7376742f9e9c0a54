// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gpr/irreducibility.hpp"
#include "gpr/selfcheck.hpp"

using namespace gpr;

namespace {

const std::vector<Rational> kBValues{Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(1, 2)};

struct Outcome {
  bool pass = true;
  std::string detail;
};

SelfcheckOptions base_options() {
  SelfcheckOptions o;
  o.n_max = 3;
  o.max_label = 2;
  o.b_values = kBValues;
  o.degree_cap = 4;
  o.q_degree = 3;
  o.spectral_dim_limit = 300;
  return o;
}

Outcome sweep(const std::vector<Suite>& suites, const SelfcheckOptions& o = base_options()) {
  const auto summary = run_selfcheck(o, suites);
  Outcome out;
  out.pass = summary.passed();
  out.detail = std::to_string(summary.points) + " points";
  if (!out.pass) out.detail += "; " + minimal_reproducer(summary, o.degree_cap);
  return out;
}

void require(Outcome& out, bool ok, const std::string& what) {
  if (ok) return;
  out.pass = false;
  out.detail += "; " + what;
}

Outcome anchors() {
  Outcome out;
  for (std::size_t n = 1; n <= 3; ++n) {
    ProjectiveModule pm(build_irreducible(DominantLabels{std::vector<long>(n - 1, 0), Rational(0)}));
    const auto w = criterion(pm.module().highest_weight);
    require(out, w.verdict == Verdict::reducible && w.first_failure_degree == 1L,
            "trivial n = " + std::to_string(n) + ", b = 0 is not reducible at degree 1");
    require(out, first_rank_deficiency(pm, 4) == 1L, "trivial n = " + std::to_string(n) + ": M_1 is not deficient");
  }
  {
    ProjectiveModule pm(build_irreducible(DominantLabels{{1}, Rational(1)}));
    const Weight& mu = pm.module().highest_weight;
    const auto residual = residual_summands(mu, 1);
    require(out,
            residual.size() == 1 && shifted(mu, residual.front()) == Weight({Rational(1), Rational(1)}) &&
                first_rank_deficiency(pm, 4) == 1L && rank_identity_defect(pm, 1) == 0,
            "n = 2, a = (1), b = 1 does not lose V(1, 1) at degree 1");
  }
  {
    ProjectiveModule pm(build_irreducible(DominantLabels{{0}, Rational(1, 2)}));
    require(out,
            criterion(pm.module().highest_weight).verdict == Verdict::irreducible && !first_rank_deficiency(pm, 6),
            "n = 2, b = 1/2 is not irreducible through degree 6");
  }
  if (out.pass) out.detail = "anchors hold";
  return out;
}

Outcome mutation() {
  struct Mutant {
    std::string name;
    Faults faults;
  };
  std::vector<Mutant> mutants;
  Faults f;
  f.flip_fn_sign = true;
  mutants.push_back({"f_n sign", f});
  f = {};
  f.drop_delta_shift = true;
  mutants.push_back({"Δ shift", f});
  for (std::size_t i = 0; i < 3; ++i) {
    f = {};
    f.perturb_sigma2_root = i;
    mutants.push_back({"m_" + std::to_string(i + 1) + " + 1", f});
  }
  Outcome out;
  for (const auto& m : mutants) {
    SelfcheckOptions o = base_options();
    o.faults = m.faults;
    o.stop_at_first_failure = true;
    const auto summary = run_selfcheck(o);
    std::string caught_by;
    for (const auto& failure : summary.failures) {
      caught_by = to_string(failure.suite);
      break;
    }
    if (!out.detail.empty()) out.detail += "; ";
    if (summary.passed()) {
      out.pass = false;
      out.detail += m.name + " undetected";
    } else {
      out.detail += m.name + " caught by " + caught_by;
    }
  }
  return out;
}

Outcome jordan_holder_structure() {
  Outcome out = sweep({Suite::jordan_holder, Suite::rank_identity});
  std::size_t reducible = 0, finite = 0;
  for (const auto& l : standard_sweep(3, 2, kBValues)) {
    const auto w = criterion(weight_from_labels(l));
    if (w.verdict == Verdict::irreducible) continue;
    ++reducible;
    if (w.failing_pairs.front().i == 1) ++finite;
  }
  out.detail += ", " + std::to_string(reducible) + " reducible, " + std::to_string(finite) + " with i0 = 1";
  require(out, reducible > 0 && finite > 0, "sweep has no reducible or no finite-dimensional case");
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "bracket consistency through degree 4", [] { return sweep({Suite::bracket_consistency}); }},
      {2, "characteristic identity of sigma2", [] { return sweep({Suite::characteristic_identity}); }},
      {3, "adjoint identities and projectors", [] { return sweep({Suite::adjoint_identities, Suite::projectors}); }},
      {4, "q_c closed form equals brute force, |c| <= 3", [] { return sweep({Suite::q_closed_form}); }},
      {5, "irreducibility criterion",
       [] {
         Outcome out = sweep({Suite::criterion_equivalence, Suite::criterion_soundness});
         const Outcome a = anchors();
         require(out, a.pass, a.detail);
         return out;
       }},
      {6, "Jordan-Holder structure", jordan_holder_structure},
      {7, "Pieri dimension identity, k <= 4", [] { return sweep({Suite::pieri_dimension}); }},
      {8, "mutation sensitivity", mutation},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
              << ", " << static_cast<int>(secs * 1000) / 1000.0 << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
