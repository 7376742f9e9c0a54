#include "gpr/char_identity.hpp"

#include <stdexcept>
#include <string>

#include "gpr/errors.hpp"
#include "gpr/linalg.hpp"

namespace gpr {

BlockOperator BlockOperator::from_grid(std::vector<std::vector<Matrix>> grid) {
  BlockOperator op;
  op.n = grid.size();
  op.block_dim = op.n ? grid[0][0].rows() : 0;
  for (const auto& row : grid) {
    if (row.size() != op.n) throw std::invalid_argument("block grid is not square");
    for (const auto& b : row) {
      if (b.rows() != op.block_dim || b.cols() != op.block_dim) throw std::invalid_argument("block size mismatch");
    }
  }
  op.flattened = assemble_blocks(grid);
  op.grid = std::move(grid);
  return op;
}

std::vector<bool> SpectrumReport::realized() const {
  std::vector<bool> out;
  for (auto m : multiplicities) out.push_back(m != 0);
  return out;
}

BlockOperator sigma2_tilde(const GlModule& v) {
  const std::size_t n = v.n;
  std::vector<std::vector<Matrix>> grid(n, std::vector<Matrix>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grid[i][j] = v.e(j, i);
      if (i == j) grid[i][j] += Matrix::scalar(v.dim(), v.labels.central);
    }
  }
  return BlockOperator::from_grid(std::move(grid));
}

std::vector<Rational> predicted_sigma2_roots(const Weight& mu, const Faults& faults) {
  const Rational total = mu.total();
  std::vector<Rational> roots;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    roots.push_back(mu[i] + total - static_cast<long>(i + 1) + 1);
  }
  if (faults.perturb_sigma2_root && *faults.perturb_sigma2_root < roots.size()) {
    roots[*faults.perturb_sigma2_root] += 1;
  }
  return roots;
}

std::vector<std::size_t> eligible_indices(const Weight& mu, long s) {
  std::vector<std::size_t> out{0};
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i - 1] - mu[i] >= s) out.push_back(i);
  }
  return out;
}

SpectrumReport check_characteristic_identity(const BlockOperator& op, const std::vector<Rational>& roots) {
  SpectrumReport report;
  report.roots = roots;
  report.residual_is_zero = eval_operator_polynomial(op.flattened, roots).is_zero();
  for (const auto& r : roots) report.multiplicities.push_back(geometric_multiplicity(op.flattened, r));
  return report;
}

std::pair<BlockOperator, BlockOperator> adjoint_matrices(const GlModule& v) {
  const std::size_t n = v.n;
  std::vector<std::vector<Matrix>> m(n, std::vector<Matrix>(n));
  std::vector<std::vector<Matrix>> dual(n, std::vector<Matrix>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = v.e(i, j);
      dual[i][j] = -v.e(j, i);
    }
  }
  return {BlockOperator::from_grid(std::move(m)), BlockOperator::from_grid(std::move(dual))};
}

std::vector<Rational> predicted_adjoint_roots(const Weight& mu) {
  const long n = static_cast<long>(mu.size());
  std::vector<Rational> d;
  for (long i = 1; i <= n; ++i) d.push_back(mu[i - 1] + n - i);
  return d;
}

std::vector<Rational> predicted_dual_adjoint_roots(const Weight& mu) {
  const long n = static_cast<long>(mu.size());
  std::vector<Rational> out;
  for (const auto& d : predicted_adjoint_roots(mu)) out.push_back(Rational(n - 1) - d);
  return out;
}

Matrix tensor_projector(const GlModule& v, std::size_t r, bool dual) {
  if (r < 1 || r > v.n) throw DomainError("projector index must lie in 1.." + std::to_string(v.n));
  const auto [m, m_dual] = adjoint_matrices(v);
  const auto roots = dual ? predicted_adjoint_roots(v.highest_weight) : predicted_dual_adjoint_roots(v.highest_weight);
  std::vector<Rational> others;
  std::vector<std::size_t> other_index;
  for (std::size_t l = 0; l < roots.size(); ++l) {
    if (l + 1 == r) continue;
    others.push_back(roots[l]);
    other_index.push_back(l + 1);
  }
  try {
    return idempotent_from_spectrum(dual ? m.flattened : m_dual.flattened, roots[r - 1], others);
  } catch (const DegenerateSpectrumError& e) {
    auto label = [&](std::size_t pos) { return pos == 0 ? r : other_index[pos - 1]; };
    const std::size_t a = label(e.first()), b = label(e.second());
    throw DegenerateSpectrumError(a, b,
                                  "roots at r = " + std::to_string(a) + " and l = " + std::to_string(b) + " coincide");
  }
}

GlRep projector_space(const GlModule& v, bool dual) {
  return tensor_product(dual ? dual_vector_rep(v.n) : symmetric_power(v.n, 1), v);
}

}  // namespace gpr
