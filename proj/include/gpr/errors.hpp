#pragma once

#include <stdexcept>
#include <string>

namespace gpr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's domain (non-dominant weight,
/// exponent vector outside the Pieri index set, bad labels, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two interpolation nodes of a spectral projector coincide.
class DegenerateSpectrumError : public Error {
 public:
  DegenerateSpectrumError(std::size_t first, std::size_t second, const std::string& what)
      : Error(what), first_(first), second_(second) {}

  /// Colliding roots. idempotent_from_spectrum reports positions in
  /// {target} ∪ others (target is 0); tensor_projector reports 1-based r and l.
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DimensionCapError : public Error {
 public:
  using Error::Error;
};

/// Witt element outside the span of x_i d_j, d_i and p_i.
class UnsupportedOperatorError : public Error {
 public:
  using Error::Error;
};

/// A brute-force computation disagrees with a closed form.
class ConsistencyViolation : public Error {
 public:
  using Error::Error;
};

/// Maximal-vector space of a Pieri summand is not one-dimensional.
class MultiplicityAnomaly : public ConsistencyViolation {
 public:
  using ConsistencyViolation::ConsistencyViolation;
};

}  // namespace gpr
