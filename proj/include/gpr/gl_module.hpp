#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gpr/matrix.hpp"
#include "gpr/weight.hpp"

namespace gpr {

/// A finite-dimensional gl(n)-representation on a weight basis: weight of each
/// basis vector and the matrices of all E_{i,j}.
struct GlRep {
  std::size_t n = 0;
  std::vector<Weight> weights;
  /// E_{i,j} (0-based) stored at i * n + j.
  std::vector<Matrix> action;

  std::size_t dim() const { return weights.size(); }
  const Matrix& e(std::size_t i, std::size_t j) const { return action[i * n + j]; }
  /// Σ_i E_{i,i}.
  Matrix identity_element() const;
};

/// Irreducible V(ψ, b) with a chosen highest weight vector.
struct GlModule : GlRep {
  DominantLabels labels;
  Weight highest_weight;
  std::size_t highest_index = 0;
};

/// Highest weight μ of V(ψ, b): μ_j = Σ_{i>=j} a_i + (b - Σ i a_i)/n.
Weight weight_from_labels(const DominantLabels& labels);

/// Weight obtained from the highest weight by lowering k_i times along each
/// simple root α_i: ν = μ - Σ k_i α_i.
/// Throws DomainError unless k has n - 1 nonnegative entries.
Weight weight_of_vector(const DominantLabels& labels, const Multiindex& k);

/// Weyl dimension ∏_{i<j} (μ_i - μ_j + j - i)/(j - i).
/// Throws DomainError for a non-dominant weight.
std::uint64_t weyl_dimension(const Weight& mu);

struct BuildOptions {
  /// Refuse modules whose Weyl dimension exceeds this.
  std::uint64_t dim_cap = 5000;
};

/// Realizes V(ψ, b) inside ⊗ Λ^i(F^n)^{⊗ a_i}: cyclic span of the product of
/// highest vectors under the simple lowering operators, with every E_{i,i}
/// shifted so that the identity acts as b. Basis order: lowering depth, then
/// weight in descending lexicographic order, then discovery order.
GlModule build_irreducible(const DominantLabels& labels, const BuildOptions& options = {});

/// I(μ, j): c ∈ N^n with |c| = j and c_{s+1} <= μ_s - μ_{s+1}, in descending
/// lexicographic order. Throws DomainError for a non-dominant μ.
std::vector<Multiindex> pieri_index_set(const Weight& mu, long j);

/// Basis of {v in image(weight_projector) : E v = 0 for all raising E}.
std::vector<Vector> highest_weight_vectors(std::size_t space_dim, const std::vector<Matrix>& raising_ops,
                                           const Matrix& weight_projector);

/// Coordinate projector onto the span of basis vectors of the given weight.
Matrix weight_space_projector(const GlRep& rep, const Weight& w);

/// All E_{i,j} with i < j.
std::vector<Matrix> raising_operators(const GlRep& rep);

/// a ⊗ b with basis index ia * dim(b) + ib.
GlRep tensor_product(const GlRep& a, const GlRep& b);

/// V(k ε_1) realized on degree-k monomials (graded-lex order), E_{i,j} = x_i ∂_j.
GlRep symmetric_power(std::size_t n, long k);

/// V(ε_1)^*: E_{i,j} acts as -e_{j,i}.
GlRep dual_vector_rep(std::size_t n);

/// Violations of the bracket relations [E_ij, E_kl] = δ_kj E_il - δ_il E_kj
/// and of the diagonal Cartan action. Empty when all hold.
std::vector<std::string> check_rep_relations(const GlRep& rep);

/// check_rep_relations plus central trace, annihilated highest vector and
/// Weyl dimension.
std::vector<std::string> check_module_invariants(const GlModule& module);

}  // namespace gpr
