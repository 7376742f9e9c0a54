#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gpr/faults.hpp"
#include "gpr/gl_module.hpp"
#include "gpr/matrix.hpp"

namespace gpr {

/// Σ_i f_i ∂_i with polynomial coefficients, keyed by (exponent of the
/// coefficient monomial, direction i).
class WittElement {
 public:
  using Key = std::pair<Multiindex, std::size_t>;

  WittElement() = default;
  explicit WittElement(std::size_t n) : n_(n) {}

  /// ∂_i.
  static WittElement d(std::size_t n, std::size_t i);
  /// x_i ∂_j.
  static WittElement xd(std::size_t n, std::size_t i, std::size_t j);
  /// p_i = x_i Σ_r x_r ∂_r.
  static WittElement p(std::size_t n, std::size_t i);

  std::size_t n() const { return n_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Multiindex& monomial, std::size_t direction, const Rational& coeff);

  WittElement& operator+=(const WittElement& other);
  WittElement& operator-=(const WittElement& other);
  WittElement& operator*=(const Rational& factor);
  friend bool operator==(const WittElement& a, const WittElement& b) { return a.terms_ == b.terms_; }

  /// Degree shift on 𝒜 ⊗ V (coefficient degree minus one), if homogeneous and nonzero.
  std::optional<int> degree_shift() const;

 private:
  std::size_t n_ = 0;
  std::map<Key, Rational> terms_;
};

WittElement operator+(WittElement a, const WittElement& b);
WittElement operator-(WittElement a, const WittElement& b);
WittElement operator*(const Rational& factor, WittElement a);

/// [Σ a_i ∂_i, Σ b_i ∂_i] = Σ_i Σ_j (a_j ∂_j(b_i) - b_j ∂_j(a_i)) ∂_i.
WittElement bracket(const WittElement& u, const WittElement& w);

std::string to_string(const WittElement& op);

/// Coordinates of an element of span{x_i ∂_j, ∂_i, p_i}.
struct SpanCoordinates {
  /// x_i ∂_j at i * n + j.
  std::vector<Rational> xd;
  std::vector<Rational> d;
  std::vector<Rational> p;
};

/// Throws UnsupportedOperatorError outside the span.
SpanCoordinates decompose(const WittElement& op);

/// The spanning set: all x_i ∂_j (row-major), then all ∂_i, then all p_i.
std::vector<WittElement> spanning_set(std::size_t n);

struct ChevalleySet {
  std::vector<WittElement> e;
  std::vector<WittElement> f;
  std::vector<WittElement> h;
};

/// h_i = x_i ∂_i - x_{i+1} ∂_{i+1}, e_i = x_i ∂_{i+1}, f_i = x_{i+1} ∂_i for i < n;
/// h_n = Σ x_i ∂_i + x_n ∂_n, e_n = p_n, f_n = -∂_n.
ChevalleySet chevalley_generators(std::size_t n, const Faults& faults = {});

/// Element of (𝒜 ⊗ V)_⟨k⟩: coefficients of x^c ⊗ v_j with |c| = k.
struct GradedElement {
  long degree = 0;
  std::map<std::pair<Multiindex, std::size_t>, Rational> coords;

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.degree == b.degree && a.coords == b.coords;
  }
};

struct GradedBasisEntry {
  Multiindex monomial;
  std::size_t index;
};

/// x^c ⊗ v_j for |c| = k: c in descending lexicographic order, then j.
std::vector<GradedBasisEntry> graded_basis(const GlModule& v, long k);

/// 𝒜 ⊗ V for a fixed V. Operator matrices per degree are built on first use
/// and never change afterwards; lookups are safe from several threads.
class ProjectiveModule {
 public:
  explicit ProjectiveModule(GlModule v, Faults faults = {});

  const GlModule& module() const { return v_; }
  const Faults& faults() const { return faults_; }
  std::size_t n() const { return v_.n; }

  /// dim (𝒜 ⊗ V)_⟨k⟩; 0 for negative k.
  std::size_t piece_dim(long k) const;
  const std::vector<Multiindex>& monomials(long k) const;
  /// Position of x^c ⊗ v_j in graded_basis order.
  std::size_t index_of(const Multiindex& c, std::size_t j) const;

  /// ∂_i, x_i ∂_j and p_i from degree k (0-based indices).
  const Matrix& d(std::size_t i, long k) const;
  const Matrix& xd(std::size_t i, std::size_t j, long k) const;
  const Matrix& p(std::size_t i, long k) const;

  /// Matrix from degree k to degree k + shift. shift is required for the zero
  /// element and checked against op otherwise. Throws std::invalid_argument
  /// for inhomogeneous op, UnsupportedOperatorError outside the span.
  Matrix operator_matrix(const WittElement& op, long k, std::optional<int> shift = {}) const;

  GradedElement act(const WittElement& op, const GradedElement& v) const;

  Vector to_vector(const GradedElement& v) const;
  GradedElement from_vector(long k, const Vector& coords) const;

  /// M_k: columns p_{i_1} ... p_{i_k}(1 ⊗ v_j) for i_1 <= ... <= i_k in
  /// lexicographic order, column index (tuple position) * dim V + j.
  const Matrix& up_generators(long k) const;

  /// φ_k: x^l ⊗ v_j ↦ p_1^{l_1} ... p_n^{l_n}(1 ⊗ v_j), columns in graded_basis order.
  Matrix phi(long k) const;

  /// Δ^k_{i,j} acting on degree on_degree.
  Matrix triangle_delta(std::size_t i, std::size_t j, long k, long on_degree = 0) const;

 private:
  enum class Kind { d, xd, p };
  using CacheKey = std::tuple<Kind, std::size_t, std::size_t, long>;

  const Matrix& cached(const CacheKey& key) const;
  Matrix build(const CacheKey& key) const;
  void ensure_degree(long k) const;

  GlModule v_;
  Faults faults_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<long, std::vector<Multiindex>> monomials_;
  mutable std::map<long, std::map<Multiindex, std::size_t>> monomial_index_;
  mutable std::map<CacheKey, std::unique_ptr<Matrix>> matrices_;
  mutable std::map<long, std::unique_ptr<Matrix>> up_;
  mutable std::map<long, std::vector<Multiindex>> gamma_;
  // Transposed, so that row b is the image of basis vector b.
  Matrix identity_element_;
  std::vector<Matrix> columns_of_e_;
};

/// Free-function forms over a freshly built ProjectiveModule.
GradedElement act(const WittElement& op, const GradedElement& v, const GlModule& module);
Matrix operator_matrix(const WittElement& op, const GlModule& module, long k);
Matrix triangle_delta(std::size_t i, std::size_t j, long k, const GlModule& module, long on_degree = 0);

/// Every pair of spanning elements and every k <= k_max:
/// matrix([u, w]) = matrix(u) matrix(w) - matrix(w) matrix(u). Returns the
/// failing (u, w, k) descriptions.
std::vector<std::string> bracket_failures(const ProjectiveModule& pm, long k_max);
bool verify_bracket_consistency(std::size_t n, const GlModule& module, long k_max);

/// Chevalley-Serre relations of type A_n, checked on degrees 0..k_max.
std::vector<std::string> chevalley_failures(const ProjectiveModule& pm, long k_max);

/// ∂_i p_{i_1} ... p_{i_k}(1 ⊗ v) = Σ_s p_{i_1} ... p̂_{i_s} ... p_{i_k} Δ^k_{i,i_s}(1 ⊗ v)
/// for all nondecreasing tuples of length 1..k_max and all i, v.
std::vector<std::string> derivative_identity_failures(const ProjectiveModule& pm, long k_max);

/// The Shen-Larsson action f ∂ . (g ⊗ v) = f ∂(g) ⊗ v + Σ_{i,j} ∂_i(f_j) g ⊗ E_{i,j} v,
/// valid for any polynomial vector field. Independent of the span formulas.
Matrix larsson_matrix(const WittElement& op, const GlModule& module, long k, int shift);

}  // namespace gpr
