#include "gpr/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <stdexcept>
#include <utility>

#include "gpr/errors.hpp"

namespace gpr {

namespace {

struct IntEntry {
  std::size_t col;
  Integer value;
};
using IntRow = std::vector<IntEntry>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_integer_row(const Matrix::Row& row) {
  Integer lcm = 1;
  for (const auto& e : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    Integer v = e.value.get_num() * (lcm / e.value.get_den());
    out.push_back({e.col, std::move(v)});
  }
  make_primitive(out);
  return out;
}

std::size_t row_bits(const IntRow& row) {
  std::size_t bits = 0;
  for (const auto& e : row) bits = std::max(bits, mpz_sizeinbase(e.value.get_mpz_t(), 2));
  return bits;
}

// row <- (p/g) row - (a/g) pivot, where p and a are the leading coefficients
// of pivot and row at the pivot column. Clears that column.
IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  const Integer& a = row.front().value;
  const Integer& p = pivot.front().value;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  const Integer row_scale = p / g;
  const Integer pivot_scale = a / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  Integer tmp;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
      out.push_back({row[i].col, row[i].value * row_scale});
      ++i;
    } else if (i == row.size() || pivot[j].col < row[i].col) {
      out.push_back({pivot[j].col, -(pivot[j].value * pivot_scale)});
      ++j;
    } else {
      tmp = row[i].value * row_scale - pivot[j].value * pivot_scale;
      if (tmp != 0) out.push_back({row[i].col, tmp});
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

std::size_t rank_of_rows(std::vector<IntRow> rows, std::size_t cols) {
  std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return row_bits(a) < row_bits(b);
  });
  std::vector<std::optional<IntRow>> pivots(cols);
  std::size_t r = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto& slot = pivots[row.front().col];
      if (!slot) {
        slot = std::move(row);
        ++r;
        break;
      }
      row = eliminate(row, *slot);
    }
  }
  return r;
}

// a - factor * b on sorted sparse rows.
Matrix::Row subtract_scaled(const Matrix::Row& a, const Rational& factor, const Matrix::Row& b) {
  Matrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, -(factor * b[j].value)});
      ++j;
    } else {
      Rational v = a[i].value - factor * b[j].value;
      if (sgn(v) != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Reduced row echelon form over Q; returns pivot rows keyed by pivot column.
std::map<std::size_t, Matrix::Row> rref(const Matrix& m) {
  std::map<std::size_t, Matrix::Row> pivots;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Matrix::Row row = m.row(r);
    while (!row.empty()) {
      auto it = pivots.find(row.front().col);
      if (it == pivots.end()) {
        const Rational lead = row.front().value;
        for (auto& e : row) e.value /= lead;
        pivots.emplace(row.front().col, std::move(row));
        break;
      }
      const Rational factor = row.front().value;
      row = subtract_scaled(row, factor, it->second);
    }
  }
  // Back substitution, largest pivot column first.
  for (auto hi = pivots.rbegin(); hi != pivots.rend(); ++hi) {
    const std::size_t c = hi->first;
    const Matrix::Row& piv = hi->second;
    for (auto lo = pivots.begin(); lo != pivots.end() && lo->first < c; ++lo) {
      auto& row = lo->second;
      auto pos = std::lower_bound(row.begin(), row.end(), c,
                                  [](const Matrix::Entry& e, std::size_t col) { return e.col < col; });
      if (pos == row.end() || pos->col != c) continue;
      const Rational factor = pos->value;
      row = subtract_scaled(row, factor, piv);
    }
  }
  return pivots;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - root); assumes root is a root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
  const std::size_t d = coeffs.size() - 1;
  std::vector<Rational> out(d);
  Rational carry;
  for (std::size_t k = d; k >= 1; --k) {
    carry = coeffs[k] + carry * root;
    out[k - 1] = carry;
  }
  return out;
}

void trim(std::vector<Rational>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a by b (b nonzero, trimmed).
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a, const std::vector<Rational>& b) {
  trim(a);
  std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
  return out;
}

// Sturm chain of a square-free polynomial.
std::vector<std::vector<Rational>> sturm_chain(const std::vector<Rational>& p) {
  std::vector<std::vector<Rational>> chain{p, derivative(p)};
  trim(chain.back());
  while (!chain.back().empty() && chain.back().size() > 1) {
    auto r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t sign_changes(const std::vector<std::vector<Rational>>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    if (q.empty()) continue;
    const int s = sgn(poly_eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integers in (lo, hi] that are roots of p; chain is the Sturm chain of p's square-free part.
void integer_roots(const std::vector<Rational>& p, const std::vector<std::vector<Rational>>& chain, const Integer& lo,
                   const Integer& hi, std::size_t count, std::vector<Integer>& out) {
  if (count == 0) return;
  if (hi - lo == 1) {
    if (sgn(poly_eval(p, Rational(hi))) == 0) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  const std::size_t left = sign_changes(chain, Rational(lo)) - sign_changes(chain, Rational(mid));
  integer_roots(p, chain, lo, mid, left, out);
  integer_roots(p, chain, mid, hi, count - left, out);
}

std::vector<Rational> charpoly_dense(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  // c[n] = 1; M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) mk[i][i] = 1;
  std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t l = 0; l < n; ++l) {
          if (sgn(a[i][l]) != 0 && sgn(mk[l][j]) != 0) s += a[i][l] * mk[l][j];
        }
        am[i][j] = std::move(s);
      }
    }
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k];
  }
  return c;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  DisjointSets sets(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    for (std::size_t i = 1; i < row.size(); ++i) sets.unite(row[0].col, row[i].col);
  }
  std::map<std::size_t, std::vector<IntRow>> groups;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    groups[sets.find(row.front().col)].push_back(to_integer_row(row));
  }
  std::size_t total = 0;
  for (auto& [root, rows] : groups) total += rank_of_rows(std::move(rows), m.cols());
  return total;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto pivots = rref(m);
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivots.count(f)) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (const auto& [c, row] : pivots) {
      if (c > f) break;
      auto pos = std::lower_bound(row.begin(), row.end(), f,
                                  [](const Matrix::Entry& e, std::size_t col) { return e.col < col; });
      if (pos != row.end() && pos->col == f) v[c] = -pos->value;
    }
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
    const Rational scale = *first;
    for (auto& x : v) x /= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix eval_operator_polynomial(const Matrix& op, const std::vector<Rational>& roots) {
  if (!op.is_square()) throw std::invalid_argument("operator polynomial of a non-square matrix");
  Matrix acc = Matrix::identity(op.rows());
  for (const auto& root : roots) acc = acc * (op - Matrix::scalar(op.rows(), root));
  return acc;
}

Matrix idempotent_from_spectrum(const Matrix& op, const Rational& target,
                                const std::vector<Rational>& others) {
  if (!op.is_square()) throw std::invalid_argument("spectral idempotent of a non-square matrix");
  std::vector<Rational> nodes{target};
  nodes.insert(nodes.end(), others.begin(), others.end());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) {
        std::ostringstream msg;
        msg << "degenerate spectrum: roots at positions " << i << " and " << j
            << " coincide (value " << to_string(nodes[i]) << ")";
        throw DegenerateSpectrumError(i, j, msg.str());
      }
    }
  }
  Matrix acc = Matrix::identity(op.rows());
  for (const auto& l : others) {
    acc = acc * (op - Matrix::scalar(op.rows(), l));
    acc *= Rational(1) / (target - l);
  }
  return acc;
}

std::vector<std::vector<std::size_t>> diagonal_blocks(const Matrix& op) {
  if (!op.is_square()) throw std::invalid_argument("diagonal blocks of a non-square matrix");
  DisjointSets sets(op.rows());
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (const auto& e : op.row(r)) sets.unite(r, e.col);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < op.rows(); ++i) groups[sets.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<Rational> characteristic_polynomial(const Matrix& op) {
  std::vector<Rational> poly{Rational(1)};
  for (const auto& block : diagonal_blocks(op)) {
    std::vector<std::vector<Rational>> dense(block.size(), std::vector<Rational>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) dense[i][j] = op.at(block[i], block[j]);
    }
    poly = poly_mul(poly, charpoly_dense(dense));
  }
  return poly;
}

std::map<Rational, std::size_t> rational_roots(const std::vector<Rational>& coeffs) {
  std::map<Rational, std::size_t> roots;
  std::vector<Rational> p = coeffs;
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  if (p.size() <= 1) return roots;
  while (p.size() > 1 && sgn(p.front()) == 0) {
    ++roots[Rational(0)];
    p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;
  // Primitive integer form, then y = a_d x turns it monic: q_k = p_k a_d^{d-1-k}.
  Integer lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : p) ints.push_back(c.get_num() * (lcm / c.get_den()));
  const std::size_t d = ints.size() - 1;
  const Integer lead = ints.back();
  std::vector<Rational> q(d + 1);
  Integer power = 1;
  for (std::size_t k = d; k-- > 0;) {
    q[k] = Rational(ints[k] * power);
    power *= lead;
  }
  q[d] = 1;
  Integer bound = 0;
  for (std::size_t k = 0; k < d; ++k) {
    Integer a = abs(q[k].get_num());
    if (a > bound) bound = a;
  }
  bound += 1;
  auto square_free = poly_divmod(q, poly_gcd(q, derivative(q))).first;
  const auto chain = sturm_chain(square_free);
  const Integer lo = -bound - 1;
  std::vector<Integer> ys;
  integer_roots(q, chain, lo, bound, sign_changes(chain, Rational(lo)) - sign_changes(chain, Rational(bound)), ys);
  for (const auto& y : ys) {
    Rational r(y, lead);
    r.canonicalize();
    while (p.size() > 1 && sgn(poly_eval(p, r)) == 0) {
      ++roots[r];
      p = deflate(p, r);
    }
  }
  return roots;
}

RationalSpectrum rational_spectrum(const Matrix& op) {
  RationalSpectrum out;
  if (!op.is_square()) throw std::invalid_argument("spectrum of a non-square matrix");
  for (const auto& block : diagonal_blocks(op)) {
    for (const auto& [value, mult] : rational_roots(characteristic_polynomial(op.select_rows(block).select_columns(block)))) {
      out.algebraic[value] += mult;
    }
  }
  std::size_t total = 0;
  for (const auto& [value, mult] : out.algebraic) total += mult;
  out.splits = total == op.rows();
  return out;
}

std::size_t geometric_multiplicity(const Matrix& op, const Rational& value) {
  return op.cols() - rank(op - Matrix::scalar(op.rows(), value));
}

}  // namespace gpr
