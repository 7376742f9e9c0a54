#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gpr/faults.hpp"
#include "gpr/gl_module.hpp"
#include "gpr/matrix.hpp"

namespace gpr {

/// n×n grid of dim V × dim V blocks and its row-major flattening.
struct BlockOperator {
  std::size_t n = 0;
  std::size_t block_dim = 0;
  std::vector<std::vector<Matrix>> grid;
  Matrix flattened;

  static BlockOperator from_grid(std::vector<std::vector<Matrix>> grid);
};

struct SpectrumReport {
  std::vector<Rational> roots;
  bool residual_is_zero = false;
  /// dim ker(op - root Id), one per root.
  std::vector<std::size_t> multiplicities;

  /// Per root: realized multiplicity is nonzero.
  std::vector<bool> realized() const;
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// σ̃₂ on V(ε₁) ⊗ V in the x_i ⊗ V block order: block (i, j) = δ_ij b Id + E_{j,i}.
/// Column block j is the matrix of p_j on 1 ⊗ V.
BlockOperator sigma2_tilde(const GlModule& v);

/// m_i = μ_i + |μ| - i + 1 for i = 1..n.
std::vector<Rational> predicted_sigma2_roots(const Weight& mu, const Faults& faults = {});

/// {1} ∪ {i >= 2 : μ_{i-1} - μ_i >= s}, 0-based indices.
std::vector<std::size_t> eligible_indices(const Weight& mu, long s);

SpectrumReport check_characteristic_identity(const BlockOperator& op, const std::vector<Rational>& roots);

/// M with block (i, j) = E_{i,j} acting on V(ε₁)* ⊗ V, and M̃ with block
/// (i, j) = -E_{j,i} acting on V(ε₁) ⊗ V.
std::pair<BlockOperator, BlockOperator> adjoint_matrices(const GlModule& v);

/// d_i = μ_i + n - i.
std::vector<Rational> predicted_adjoint_roots(const Weight& mu);

/// d̃_i = n - 1 - d_i.
std::vector<Rational> predicted_dual_adjoint_roots(const Weight& mu);

/// Spectral projector built from M (dual = true, image of type μ - ε_r on
/// V(ε₁)* ⊗ V) or from M̃ (dual = false, image of type μ + ε_r on V(ε₁) ⊗ V).
/// r is 1-based. Throws DomainError for r outside 1..n and
/// DegenerateSpectrumError when two used roots coincide.
Matrix tensor_projector(const GlModule& v, std::size_t r, bool dual);

/// The gl(n)-module on which tensor_projector(v, r, dual) acts.
GlRep projector_space(const GlModule& v, bool dual);

}  // namespace gpr
