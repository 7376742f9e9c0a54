#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpr/rational.hpp"

namespace gpr {

/// Vector of nonnegative integers: exponent vectors x^c, Pieri indices c,
/// simple-root multiplicities k.
using Multiindex = std::vector<long>;

/// Sum of entries.
long degree(const Multiindex& c);

/// All c ∈ N^n with |c| = k, in descending lexicographic order
/// ((k,0,...,0) first, (0,...,0,k) last).
std::vector<Multiindex> compositions(std::size_t n, long k);

/// Weight of gl(n) as the tuple (λ(E_11), ..., λ(E_nn)).
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t n) { return Weight(std::vector<Rational>(n)); }
  /// ε_i, 0-based.
  static Weight unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  /// |λ| = Σ λ_i.
  Rational total() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  /// Lexicographic on coordinates.
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

Weight operator+(Weight a, const Weight& b);
Weight operator-(Weight a, const Weight& b);
/// a + c with c a vector of nonnegative integers.
Weight shifted(const Weight& a, const std::vector<long>& c);

/// The pairing Σ λ_i μ_i.
Rational pairing(const Weight& a, const Weight& b);

/// Half-sum of positive roots: δ_i = (n + 1 - 2i)/2 for i = 1..n.
Weight half_sum_positive_roots(std::size_t n);

/// λ_i - λ_{i+1} ∈ N for every i.
bool is_dominant(const Weight& w);

std::string to_string(const Weight& w);

/// Labels of V(ψ, b): Dynkin labels a_1..a_{n-1} of ψ and the central scalar b.
struct DominantLabels {
  std::vector<long> dynkin;
  Rational central;

  std::size_t rank() const { return dynkin.size() + 1; }
  friend bool operator==(const DominantLabels& a, const DominantLabels& b) {
    return a.dynkin == b.dynkin && a.central == b.central;
  }
};

/// Throws DomainError if any Dynkin label is negative.
void validate(const DominantLabels& labels);

/// Inverse of weight_from_labels: Dynkin labels μ_i - μ_{i+1} and trace Σ μ_i.
/// Throws DomainError for a non-dominant weight.
DominantLabels labels_from_weight(const Weight& w);

}  // namespace gpr
