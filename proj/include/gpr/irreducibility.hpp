#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpr/gl_module.hpp"
#include "gpr/projective_action.hpp"

namespace gpr {

enum class Verdict { irreducible, reducible };

std::string to_string(Verdict v);

/// (i, s) with μ_i + |μ| - i + s = 0 and i ∈ I_s. i is 1-based.
struct FailingPair {
  std::size_t i = 0;
  long s = 0;

  friend bool operator==(const FailingPair&, const FailingPair&) = default;
};

struct CriterionWitness {
  Verdict verdict = Verdict::irreducible;
  std::vector<FailingPair> failing_pairs;
  /// Smallest failing s, i.e. k + 1.
  std::optional<long> first_failure_degree;

  friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

/// 𝒜 ⊗ V is irreducible iff μ_i + |μ| - i + s != 0 for all s >= 1 and i ∈ I_s.
/// Throws DomainError for a non-dominant μ.
CriterionWitness criterion(const Weight& mu);

/// The same verdict from the two conditions
///   μ_1 + |μ| ∉ -N ∪ {2, ..., 1 + μ_1 - μ_2},
///   μ_i + |μ| - i ∉ {1, ..., μ_i - μ_{i+1}} for 2 <= i <= n - 1.
Verdict conditions_verdict(const Weight& mu);

/// conditions_verdict(mu) == criterion(mu).verdict.
bool criterion_equivalence_check(const Weight& mu);

/// q_c = ∏_s ∏_{i=1}^{c_s} (μ_s + |μ| - s + i).
/// Throws DomainError unless c ∈ I(μ, |c|).
Rational q_coefficient(const Weight& mu, const Multiindex& c);

/// q_c read off from φ_{|c|} applied to the maximal vector of weight μ + c in
/// (𝒜 ⊗ V)_⟨|c|⟩, scaled so that its x^c ⊗ v_μ coordinate is 1.
/// Throws DomainError outside the Pieri set, MultiplicityAnomaly when the
/// maximal vectors of that weight do not form a line, ConsistencyViolation
/// when the image is not proportional to the maximal vector.
Rational q_coefficient_bruteforce(const ProjectiveModule& pm, const Multiindex& c);
Rational q_coefficient_bruteforce(const GlModule& v, const Multiindex& c);

/// rank M_k = dim (U(P)(1 ⊗ V))_⟨k⟩.
std::size_t up_submodule_rank(const ProjectiveModule& pm, long k);
std::size_t up_submodule_rank(const GlModule& v, long k);

/// I(μ, j)' = {c ∈ I(μ, j) : q_c = 0}.
std::vector<Multiindex> residual_summands(const Weight& mu, long j);

/// T_j : V(ε_1) ⊗ (𝒜 ⊗ V)_⟨j⟩ → (𝒜 ⊗ V)_⟨j+1⟩, e'_i ⊗ w ↦ p_i.w.
/// Column i * dim (𝒜 ⊗ V)_⟨j⟩ + w.
Matrix tensor_action_map(const ProjectiveModule& pm, long j);
Matrix tensor_action_map(const GlModule& v, long j);

/// Smallest j <= degree_cap with rank M_j < dim (𝒜 ⊗ V)_⟨j⟩.
std::optional<long> first_rank_deficiency(const ProjectiveModule& pm, long degree_cap);

/// dim (𝒜 ⊗ V)_⟨j⟩ - rank M_j - Σ_{c ∈ I(μ, j)'} dim V(μ + c); zero when the
/// rank identity holds.
long rank_identity_defect(const ProjectiveModule& pm, long j);

struct JordanHolderReport {
  long k = 0;
  /// 1-based.
  std::size_t i0 = 0;
  /// k as given by -μ_{i0} - |μ| + i0 - 1.
  long corollary_k = 0;
  /// i0 or corollary_k differ from the failing pair of the criterion.
  bool index_mismatch = false;
  /// 1-based index of the residual summand (k + 1) ε_r.
  std::size_t r = 0;
  Weight residual_weight;
  std::vector<std::size_t> submodule_dims_by_degree;
  std::vector<std::size_t> full_dims_by_degree;
  /// Central character label of the quotient.
  std::string quotient_description;
  /// U(P)(1 ⊗ V) is finite-dimensional (i0 = 1).
  bool finite_dim = false;
  /// Dynkin labels (k, a_1, ..., a_{n-1}) of sl(n+1) and the dimension, when finite_dim.
  std::vector<long> sl_highest_weight;
  std::uint64_t sl_dimension = 0;

  friend bool operator==(const JordanHolderReport&, const JordanHolderReport&) = default;
};

/// Degree cap used when none is given: max(4, k + 2).
long default_degree_cap(const Weight& mu);

/// Composition series {0} ⊂ U(P)(1 ⊗ V) ⊂ 𝒜 ⊗ V with ranks checked through
/// max(degree_cap, k + 2). Throws DomainError for an irreducible module and
/// ConsistencyViolation when the ranks disagree with the closed forms.
JordanHolderReport jordan_holder(const ProjectiveModule& pm, long degree_cap);
JordanHolderReport jordan_holder(const GlModule& v, long degree_cap);

/// Graded ranks of U(P)(1 ⊗ V) summed until they vanish, at most up to
/// k + Σ a_i + 1. Returns the total, or nullopt if no degree in range vanishes.
std::optional<std::uint64_t> finite_submodule_dimension(const ProjectiveModule& pm, const JordanHolderReport& report);

/// Failures of: column space of M_j mapped into column space of M_{j+shift}
/// by every spanning element, j <= k_max.
std::vector<std::string> submodule_invariance_failures(const ProjectiveModule& pm, long k_max);

/// Failures of ∂_l(Ker φ_j) ⊄ (U(P)(1 ⊗ V))_⟨j-1⟩ for k + 1 < j <= j_max.
std::vector<std::string> derivative_escape_failures(const ProjectiveModule& pm, long k, long j_max);

/// Failures of T_j (X ⊗ 1 + 1 ⊗ X) = X T_j for X = x_s ∂_t, tested on
/// random vectors for j <= j_max.
std::vector<std::string> intertwining_failures(const ProjectiveModule& pm, long j_max, std::uint64_t seed,
                                               std::size_t samples = 3);

}  // namespace gpr
