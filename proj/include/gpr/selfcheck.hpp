#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpr/faults.hpp"
#include "gpr/projective_action.hpp"

namespace gpr {

enum class Suite {
  module_invariants,
  pieri_dimension,
  bracket_consistency,
  chevalley_relations,
  derivative_identity,
  characteristic_identity,
  adjoint_identities,
  projectors,
  q_closed_form,
  criterion_equivalence,
  criterion_soundness,
  rank_identity,
  jordan_holder,
  submodule_invariance,
  derivative_escape,
  intertwining,
};

std::string to_string(Suite s);
std::vector<Suite> all_suites();

struct SelfcheckOptions {
  std::size_t n_max = 3;
  long max_label = 2;
  std::vector<Rational> b_values{Rational(-2), Rational(-1), Rational(0), Rational(1),
                                 Rational(2), Rational(1, 2), Rational(-3, 2)};
  long degree_cap = 4;
  /// Largest |c| for the q_c oracle.
  long q_degree = 3;
  /// Spectral suites skip modules above this dimension.
  std::uint64_t spectral_dim_limit = 300;
  std::uint64_t seed = 1;
  Faults faults;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
  /// Stop scheduling new sweep points after the first failure.
  bool stop_at_first_failure = false;
};

/// Every V(ψ, b) with n <= n_max, 0 <= a_i <= max_label and b in b_values,
/// ordered by n, then labels, then b.
std::vector<DominantLabels> standard_sweep(std::size_t n_max, long max_label, const std::vector<Rational>& b_values);

/// Runs one suite on one point. Exceptions are reported as failures.
std::vector<std::string> run_suite(Suite suite, const ProjectiveModule& pm, const SelfcheckOptions& options,
                                   std::uint64_t point_seed);

struct SuiteFailure {
  Suite suite;
  DominantLabels labels;
  std::size_t dim = 0;
  std::vector<std::string> details;
};

struct SuiteTally {
  std::size_t points = 0;
  std::size_t failed = 0;
};

struct SelfcheckSummary {
  std::size_t points = 0;
  std::map<Suite, SuiteTally> tallies;
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
};

SelfcheckSummary run_selfcheck(const SelfcheckOptions& options, const std::vector<Suite>& suites = all_suites());
SelfcheckSummary run_selfcheck(const SelfcheckOptions& options, const std::vector<DominantLabels>& points,
                               const std::vector<Suite>& suites);

/// Failure on the smallest module (n, then dim V), rendered as a command line
/// plus the first failure detail.
std::string minimal_reproducer(const SelfcheckSummary& summary, long degree_cap);

/// "-n 2 -a 1 -b 1/2".
std::string cli_arguments(const DominantLabels& labels);

}  // namespace gpr
