#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "gpr/matrix.hpp"

namespace gpr {

/// Rank over Q by fraction-free elimination on integer rows. The matrix is
/// first split into independent blocks (connected components of its row/column
/// incidence graph) and each block is eliminated separately.
std::size_t rank(const Matrix& m);

/// Basis of the right null space. Each vector is scaled so that its first
/// nonzero entry is 1; vectors are ordered by their free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Product of (op - r Id) over roots, multiplied left to right. An empty root
/// list yields the identity.
Matrix eval_operator_polynomial(const Matrix& op, const std::vector<Rational>& roots);

/// Lagrange idempotent prod_{l in others} (op - l Id) / (target - l).
/// Throws DegenerateSpectrumError if {target} ∪ others has a repeated value.
Matrix idempotent_from_spectrum(const Matrix& op, const Rational& target,
                                const std::vector<Rational>& others);

/// Index sets of the connected components of a square matrix's symmetric
/// sparsity graph, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> diagonal_blocks(const Matrix& op);

/// Coefficients c_0..c_d (constant term first) of det(x Id - A), computed
/// blockwise with the Faddeev-LeVerrier recursion.
std::vector<Rational> characteristic_polynomial(const Matrix& op);

/// Rational roots of a polynomial (constant term first) with multiplicities.
/// Candidates are located by Sturm-sequence bisection on the monic integer
/// rescaling, so no coefficient is ever factored.
std::map<Rational, std::size_t> rational_roots(const std::vector<Rational>& coeffs);

struct RationalSpectrum {
  /// Algebraic multiplicity of every rational eigenvalue.
  std::map<Rational, std::size_t> algebraic;
  /// True iff the characteristic polynomial splits over Q.
  bool splits = false;
};

/// Eigenvalue oracle independent of any closed form: characteristic
/// polynomial of each diagonal block, then its rational roots.
RationalSpectrum rational_spectrum(const Matrix& op);

/// dim ker(op - value Id).
std::size_t geometric_multiplicity(const Matrix& op, const Rational& value);

}  // namespace gpr
