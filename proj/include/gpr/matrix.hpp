#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpr/rational.hpp"

namespace gpr {

/// Dense column vector.
using Vector = std::vector<Rational>;

/// Sparse rational matrix stored row-wise. Each row keeps its entries sorted by
/// column and never stores an explicit zero.
class Matrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };
  using Row = std::vector<Entry>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& value);
  static Matrix diagonal(const std::vector<Rational>& values);
  static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t nnz() const;
  bool is_zero() const;

  Rational at(std::size_t r, std::size_t c) const;
  /// Overwrites entry (r, c); a zero value erases it.
  void set(std::size_t r, std::size_t c, const Rational& value);
  /// Adds value into entry (r, c).
  void add(std::size_t r, std::size_t c, const Rational& value);

  const Row& row(std::size_t r) const { return data_[r]; }
  /// Replaces a whole row. Entries must be sorted by column and nonzero.
  void set_row(std::size_t r, Row row);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;
  Rational trace() const;

  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  /// [this | other]
  Matrix hstack(const Matrix& other) const;
  /// [this ; other]
  Matrix vstack(const Matrix& other) const;

  std::vector<std::vector<Rational>> to_dense() const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  /// Throws std::invalid_argument when the label count does not match.
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& factor);

  /// Entry-wise equality; labels are not compared.
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Matrix a, const Rational& factor);
Matrix operator*(const Rational& factor, Matrix a);

/// Block matrix from a row-major grid of equally sized blocks.
Matrix assemble_blocks(const std::vector<std::vector<Matrix>>& grid);

/// Commutator a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace gpr
