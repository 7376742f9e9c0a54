#include "gpr/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gpr {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// Dense scratch row that remembers which slots were written.
class Accumulator {
 public:
  explicit Accumulator(std::size_t width) : values_(width), used_(width, 0) {}

  void add(std::size_t col, const Rational& value) {
    if (!used_[col]) {
      used_[col] = 1;
      touched_.push_back(col);
      values_[col] = value;
    } else {
      values_[col] += value;
    }
  }

  void add_product(std::size_t col, const Rational& a, const Rational& b) {
    if (!used_[col]) {
      used_[col] = 1;
      touched_.push_back(col);
      mpq_mul(values_[col].get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    } else {
      mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      values_[col] += tmp_;
    }
  }

  Matrix::Row drain() {
    std::sort(touched_.begin(), touched_.end());
    Matrix::Row row;
    row.reserve(touched_.size());
    for (auto col : touched_) {
      if (sgn(values_[col]) != 0) row.push_back({col, values_[col]});
      used_[col] = 0;
    }
    touched_.clear();
    return row;
  }

 private:
  std::vector<Rational> values_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
  Rational tmp_;
};

Matrix::Row merge_rows(const Matrix::Row& a, const Matrix::Row& b, int sign) {
  Matrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, sign > 0 ? b[j].value : Rational(-b[j].value)});
      ++j;
    } else {
      Rational v = sign > 0 ? Rational(a[i].value + b[j].value) : Rational(a[i].value - b[j].value);
      if (sgn(v) != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& value) {
  Matrix m(n, n);
  if (sgn(value) == 0) return m;
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, value});
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) != 0) m.data_[i].push_back({i, values[i]});
  }
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(rows[r][c]) != 0) m.data_[r].push_back({c, rows[r][c]});
    }
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(columns[c][r]) != 0) m.data_[r].push_back({c, columns[c][r]});
    }
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : data_) total += row.size();
  return total;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, "matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  require(r < rows_ && c < cols_, "matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (sgn(value) == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, {c, value});
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Rational& value) {
  require(r < rows_ && c < cols_, "matrix index out of range");
  if (sgn(value) == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (sgn(it->value) == 0) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

void Matrix::set_row(std::size_t r, Row row) {
  require(r < rows_, "matrix row out of range");
  for (std::size_t i = 0; i < row.size(); ++i) {
    require(row[i].col < cols_, "row entry column out of range");
    require(sgn(row[i].value) != 0, "explicit zero in row");
    require(i == 0 || row[i - 1].col < row[i].col, "row entries not sorted");
  }
  data_[r] = std::move(row);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  require(v.size() == cols_, "vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (sgn(v[e.col]) != 0) out[r] += e.value * v[e.col];
    }
  }
  return out;
}

Vector Matrix::column(std::size_t c) const {
  require(c < cols_, "column out of range");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Rational Matrix::trace() const {
  require(is_square(), "trace of non-square matrix");
  Rational total;
  for (std::size_t i = 0; i < rows_; ++i) total += at(i, i);
  return total;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  std::vector<std::ptrdiff_t> remap(cols_, -1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    require(cols[k] < cols_, "selected column out of range");
    remap[cols[k]] = static_cast<std::ptrdiff_t>(k);
  }
  Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (remap[e.col] >= 0) out.data_[r].push_back({static_cast<std::size_t>(remap[e.col]), e.value});
    }
    std::sort(out.data_[r].begin(), out.data_[r].end(),
              [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    require(rows[k] < rows_, "selected row out of range");
    out.data_[k] = data_[rows[k]];
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& other) const {
  require(rows_ == other.rows_, "hstack row mismatch");
  Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.data_[r] = data_[r];
    for (const auto& e : other.data_[r]) out.data_[r].push_back({e.col + cols_, e.value});
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& other) const {
  require(cols_ == other.cols_, "vstack column mismatch");
  Matrix out(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = data_[r];
  for (std::size_t r = 0; r < other.rows_; ++r) out.data_[rows_ + r] = other.data_[r];
  return out;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r][e.col] = e.value;
  }
  return out;
}

void Matrix::set_row_labels(std::vector<std::string> labels) {
  require(labels.empty() || labels.size() == rows_, "row label count mismatch");
  row_labels_ = std::move(labels);
}

void Matrix::set_col_labels(std::vector<std::string> labels) {
  require(labels.empty() || labels.size() == cols_, "column label count mismatch");
  col_labels_ = std::move(labels);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "shape mismatch in +");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!other.data_[r].empty()) data_[r] = merge_rows(data_[r], other.data_[r], +1);
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "shape mismatch in -");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!other.data_[r].empty()) data_[r] = merge_rows(data_[r], other.data_[r], -1);
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_) {
    for (auto& e : row) e.value *= factor;
  }
  return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].col != y[i].col || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Rational(-1); }
Matrix operator*(Matrix a, const Rational& factor) { return a *= factor; }
Matrix operator*(const Rational& factor, Matrix a) { return a *= factor; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "shape mismatch in *");
  Matrix out(a.rows(), b.cols());
  Accumulator acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& row = a.row(r);
    if (row.empty()) continue;
    for (const auto& e : row) {
      for (const auto& f : b.row(e.col)) acc.add_product(f.col, e.value, f.value);
    }
    out.set_row(r, acc.drain());
  }
  return out;
}

Matrix assemble_blocks(const std::vector<std::vector<Matrix>>& grid) {
  if (grid.empty()) return Matrix();
  const std::size_t block_rows = grid.size();
  const std::size_t block_cols = grid.front().size();
  const std::size_t h = grid.front().front().rows();
  const std::size_t w = grid.front().front().cols();
  Matrix out(block_rows * h, block_cols * w);
  for (std::size_t bi = 0; bi < block_rows; ++bi) {
    require(grid[bi].size() == block_cols, "ragged block grid");
    for (std::size_t r = 0; r < h; ++r) {
      Matrix::Row row;
      for (std::size_t bj = 0; bj < block_cols; ++bj) {
        const Matrix& block = grid[bi][bj];
        require(block.rows() == h && block.cols() == w, "block shape mismatch");
        for (const auto& e : block.row(r)) row.push_back({bj * w + e.col, e.value});
      }
      out.set_row(bi * h + r, std::move(row));
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << m.rows() << "x" << m.cols() << " [";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m.at(r, c));
  }
  return os << "]";
}

}  // namespace gpr
