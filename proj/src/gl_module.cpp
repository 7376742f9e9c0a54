#include "gpr/gl_module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "gpr/errors.hpp"
#include "gpr/linalg.hpp"

namespace gpr {

namespace {

using TensorKey = std::uint64_t;
using TensorVector = std::map<TensorKey, Rational>;
using IntWeight = std::vector<long>;

// Λ^degree(F^n) on sorted subsets, lexicographic order.
struct ExteriorPower {
  struct Image {
    std::size_t target;
    int sign;
  };

  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> subsets;
  // table[(p * n + q) * size + s]
  std::vector<std::optional<Image>> table;

  ExteriorPower(std::size_t n_, std::size_t degree) : n(n_) {
    std::vector<std::size_t> current;
    enumerate(0, degree, current);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t s = 0; s < subsets.size(); ++s) index[subsets[s]] = s;
    table.resize(n * n * subsets.size());
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t s = 0; s < subsets.size(); ++s) {
          const auto& set = subsets[s];
          if (!std::binary_search(set.begin(), set.end(), q)) continue;
          if (p == q) {
            table[(p * n + q) * subsets.size() + s] = Image{s, 1};
            continue;
          }
          if (std::binary_search(set.begin(), set.end(), p)) continue;
          std::vector<std::size_t> image;
          int between = 0;
          for (auto x : set) {
            if (x == q) continue;
            image.push_back(x);
            if ((x > std::min(p, q)) && (x < std::max(p, q))) ++between;
          }
          image.push_back(p);
          std::sort(image.begin(), image.end());
          table[(p * n + q) * subsets.size() + s] = Image{index.at(image), between % 2 ? -1 : 1};
        }
      }
    }
  }

  std::size_t size() const { return subsets.size(); }

  const std::optional<Image>& act(std::size_t p, std::size_t q, std::size_t s) const {
    return table[(p * n + q) * subsets.size() + s];
  }

 private:
  void enumerate(std::size_t start, std::size_t remaining, std::vector<std::size_t>& current) {
    if (remaining == 0) {
      subsets.push_back(current);
      return;
    }
    for (std::size_t x = start; x + remaining <= n; ++x) {
      current.push_back(x);
      enumerate(x + 1, remaining - 1, current);
      current.pop_back();
    }
  }
};

class TensorRealization {
 public:
  TensorRealization(std::size_t n, const std::vector<long>& dynkin) : n_(n) {
    for (std::size_t i = 0; i < dynkin.size(); ++i) {
      if (dynkin[i] == 0) continue;
      powers_.emplace_back(n, i + 1);
      for (long copy = 0; copy < dynkin[i]; ++copy) factor_power_.push_back(powers_.size() - 1);
    }
    TensorKey stride = 1;
    for (auto f : factor_power_) {
      strides_.push_back(stride);
      stride *= powers_[f].size();
    }
  }

  // Product of the highest vectors e_1 ∧ ... ∧ e_i; subset index 0 in each factor.
  TensorVector highest_vector() const { return TensorVector{{0, Rational(1)}}; }

  TensorVector apply(std::size_t p, std::size_t q, const TensorVector& v) const {
    TensorVector out;
    for (const auto& [key, coeff] : v) {
      for (std::size_t f = 0; f < factor_power_.size(); ++f) {
        const auto& power = powers_[factor_power_[f]];
        const std::size_t digit = (key / strides_[f]) % power.size();
        const auto& image = power.act(p, q, digit);
        if (!image) continue;
        const TensorKey target = key - digit * strides_[f] + image->target * strides_[f];
        auto& slot = out[target];
        if (image->sign > 0) slot += coeff; else slot -= coeff;
      }
    }
    for (auto it = out.begin(); it != out.end();) {
      it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<ExteriorPower> powers_;
  std::vector<std::size_t> factor_power_;
  std::vector<TensorKey> strides_;
};

// Incremental echelon basis of one weight space, tracking how every reduced
// row is combined from the original basis vectors.
class EchelonSpace {
 public:
  // Adds v if it is independent of the stored vectors; returns whether it was.
  bool insert(const TensorVector& v, std::size_t id) {
    TensorVector residual = v;
    std::map<std::size_t, Rational> combo{{id, Rational(1)}};
    reduce(residual, combo);
    if (residual.empty()) return false;
    const TensorKey pivot = residual.begin()->first;
    const Rational lead = residual.begin()->second;
    for (auto& [k, c] : residual) c /= lead;
    for (auto& [k, c] : combo) c /= lead;
    rows_.emplace(pivot, Row{std::move(residual), std::move(combo)});
    return true;
  }

  // Coordinates of v in terms of the inserted ids; throws if v is outside the span.
  std::map<std::size_t, Rational> express(const TensorVector& v) const {
    TensorVector residual = v;
    std::map<std::size_t, Rational> combo;
    reduce(residual, combo);
    if (!residual.empty()) throw ConsistencyViolation("module construction: vector outside the cyclic span");
    std::map<std::size_t, Rational> out;
    for (auto& [id, c] : combo) {
      if (sgn(c) != 0) out[id] = -c;
    }
    return out;
  }

 private:
  struct Row {
    TensorVector vec;
    std::map<std::size_t, Rational> combo;
  };

  // residual -= Σ c_pivot row; combo tracks the same subtraction.
  void reduce(TensorVector& residual, std::map<std::size_t, Rational>& combo) const {
    auto it = residual.begin();
    while (it != residual.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Rational factor = it->second;
      const TensorKey key = it->first;
      for (const auto& [k, c] : row->second.vec) {
        auto& slot = residual[k];
        slot -= factor * c;
      }
      for (const auto& [id, c] : row->second.combo) combo[id] -= factor * c;
      for (auto jt = residual.begin(); jt != residual.end();) {
        jt = sgn(jt->second) == 0 ? residual.erase(jt) : std::next(jt);
      }
      it = residual.upper_bound(key);
    }
  }

  std::map<TensorKey, Row> rows_;
};

Rational shift_for(const DominantLabels& labels) {
  const auto n = static_cast<long>(labels.rank());
  Rational t;
  for (std::size_t i = 0; i < labels.dynkin.size(); ++i) t += static_cast<long>(i + 1) * labels.dynkin[i];
  return (labels.central - t) / n;
}

}  // namespace

Matrix GlRep::identity_element() const {
  Matrix total(dim(), dim());
  for (std::size_t i = 0; i < n; ++i) total += e(i, i);
  return total;
}

Weight weight_from_labels(const DominantLabels& labels) {
  validate(labels);
  const std::size_t n = labels.rank();
  const Rational shift = shift_for(labels);
  Weight mu = Weight::zero(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = shift;
    for (std::size_t i = j; i < labels.dynkin.size(); ++i) s += labels.dynkin[i];
    mu[j] = s;
  }
  return mu;
}

Weight weight_of_vector(const DominantLabels& labels, const Multiindex& k) {
  validate(labels);
  const std::size_t n = labels.rank();
  if (k.size() + 1 != n) throw DomainError("weight_of_vector: expected n - 1 simple-root multiplicities");
  for (auto x : k) {
    if (x < 0) throw DomainError("weight_of_vector: multiplicities must be nonnegative");
  }
  const Rational shift = shift_for(labels);
  auto tail = [&](std::size_t j) {
    Rational s;
    for (std::size_t i = j; i < labels.dynkin.size(); ++i) s += labels.dynkin[i];
    return s;
  };
  Weight nu = Weight::zero(n);
  if (n == 1) {
    nu[0] = shift;
    return nu;
  }
  nu[0] = tail(0) + shift - k[0];
  nu[n - 1] = shift + k[n - 2];
  for (std::size_t j = 1; j + 1 < n; ++j) nu[j] = tail(j) + shift + k[j - 1] - k[j];
  return nu;
}

std::uint64_t weyl_dimension(const Weight& mu) {
  if (!is_dominant(mu)) throw DomainError("weyl_dimension: weight " + to_string(mu) + " is not dominant");
  Rational d = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = i + 1; j < mu.size(); ++j) {
      const long gap = static_cast<long>(j - i);
      d *= (mu[i] - mu[j] + gap) / gap;
    }
  }
  return std::stoull(d.get_num().get_str());
}

GlModule build_irreducible(const DominantLabels& labels, const BuildOptions& options) {
  validate(labels);
  const std::size_t n = labels.rank();
  const Weight mu = weight_from_labels(labels);
  const std::uint64_t expected_dim = weyl_dimension(mu);
  if (expected_dim > options.dim_cap) {
    std::ostringstream msg;
    msg << "module of dimension " << expected_dim << " exceeds the dimension cap " << options.dim_cap;
    throw DimensionCapError(msg.str());
  }

  const TensorRealization tensor(n, labels.dynkin);
  IntWeight top(n, 0);
  for (std::size_t i = 0; i < labels.dynkin.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) top[j] += labels.dynkin[i];
  }

  struct Found {
    TensorVector vec;
    IntWeight weight;
    std::size_t depth;
  };
  std::vector<Found> found;
  std::map<IntWeight, EchelonSpace> spaces;
  std::deque<std::size_t> queue;

  found.push_back({tensor.highest_vector(), top, 0});
  spaces[top].insert(found[0].vec, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j + 1 < n; ++j) {
      TensorVector lowered = tensor.apply(j + 1, j, found[id].vec);
      if (lowered.empty()) continue;
      IntWeight w = found[id].weight;
      --w[j];
      ++w[j + 1];
      const std::size_t next = found.size();
      if (spaces[w].insert(lowered, next)) {
        found.push_back({std::move(lowered), std::move(w), found[id].depth + 1});
        queue.push_back(next);
      }
    }
  }
  if (found.size() != expected_dim) {
    throw ConsistencyViolation("module construction produced dimension " + std::to_string(found.size()) +
                               ", Weyl formula gives " + std::to_string(expected_dim));
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].depth != found[b].depth) return found[a].depth < found[b].depth;
    return found[a].weight > found[b].weight;
  });
  std::vector<std::size_t> position(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  const Rational shift = shift_for(labels);
  GlModule module;
  module.n = n;
  module.labels = labels;
  module.highest_weight = mu;
  module.highest_index = position[0];
  module.weights.resize(found.size());
  for (std::size_t id = 0; id < found.size(); ++id) {
    Weight w = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(found[id].weight[i]) + shift;
    module.weights[position[id]] = std::move(w);
  }

  const std::size_t dim = found.size();
  module.action.assign(n * n, Matrix(dim, dim));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      Matrix& m = module.action[p * n + q];
      for (std::size_t id = 0; id < dim; ++id) {
        const TensorVector image = tensor.apply(p, q, found[id].vec);
        if (!image.empty()) {
          IntWeight w = found[id].weight;
          ++w[p];
          --w[q];
          auto space = spaces.find(w);
          if (space == spaces.end()) throw ConsistencyViolation("module construction: image in an empty weight space");
          for (const auto& [src, c] : space->second.express(image)) m.add(position[src], position[id], c);
        }
        if (p == q) m.add(position[id], position[id], shift);
      }
    }
  }
  return module;
}

std::vector<Multiindex> pieri_index_set(const Weight& mu, long j) {
  if (!is_dominant(mu)) throw DomainError("pieri_index_set: weight " + to_string(mu) + " is not dominant");
  std::vector<Multiindex> out;
  for (auto& c : compositions(mu.size(), j)) {
    bool ok = true;
    for (std::size_t s = 0; s + 1 < mu.size() && ok; ++s) ok = Rational(c[s + 1]) <= mu[s] - mu[s + 1];
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Vector> highest_weight_vectors(std::size_t space_dim, const std::vector<Matrix>& raising_ops,
                                           const Matrix& weight_projector) {
  if (weight_projector.rows() != space_dim || weight_projector.cols() != space_dim) {
    throw std::invalid_argument("weight projector has the wrong shape");
  }
  for (const auto& op : raising_ops) {
    if (op.rows() != space_dim || op.cols() != space_dim) throw std::invalid_argument("raising operator has the wrong shape");
  }
  // Coordinate projectors restrict to a column subset; anything else is
  // handled by adding the rows of Id - P.
  bool coordinate = true;
  std::vector<std::size_t> support;
  for (std::size_t r = 0; r < space_dim && coordinate; ++r) {
    const auto& row = weight_projector.row(r);
    if (row.empty()) continue;
    coordinate = row.size() == 1 && row[0].col == r && row[0].value == 1;
    support.push_back(r);
  }
  if (coordinate) {
    Matrix stacked(0, support.size());
    for (const auto& op : raising_ops) stacked = stacked.vstack(op.select_columns(support));
    std::vector<Vector> out;
    for (const auto& k : kernel_basis(stacked)) {
      Vector v(space_dim);
      for (std::size_t i = 0; i < support.size(); ++i) v[support[i]] = k[i];
      out.push_back(std::move(v));
    }
    return out;
  }
  Matrix stacked = Matrix::identity(space_dim) - weight_projector;
  for (const auto& op : raising_ops) stacked = stacked.vstack(op);
  return kernel_basis(stacked);
}

Matrix weight_space_projector(const GlRep& rep, const Weight& w) {
  Matrix p(rep.dim(), rep.dim());
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    if (rep.weights[i] == w) p.set(i, i, Rational(1));
  }
  return p;
}

std::vector<Matrix> raising_operators(const GlRep& rep) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < rep.n; ++i) {
    for (std::size_t j = i + 1; j < rep.n; ++j) out.push_back(rep.e(i, j));
  }
  return out;
}

namespace {

// a ⊗ b as a matrix on the product basis (ia * dim(b) + ib).
Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      Matrix::Row row;
      for (const auto& ea : a.row(ra)) {
        for (const auto& eb : b.row(rb)) row.push_back({ea.col * b.cols() + eb.col, ea.value * eb.value});
      }
      out.set_row(ra * b.rows() + rb, std::move(row));
    }
  }
  return out;
}

}  // namespace

GlRep tensor_product(const GlRep& a, const GlRep& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor product of representations of different rank");
  GlRep out;
  out.n = a.n;
  for (const auto& wa : a.weights) {
    for (const auto& wb : b.weights) out.weights.push_back(wa + wb);
  }
  const Matrix ia = Matrix::identity(a.dim());
  const Matrix ib = Matrix::identity(b.dim());
  for (std::size_t idx = 0; idx < a.n * a.n; ++idx) {
    out.action.push_back(kronecker(a.action[idx], ib) + kronecker(ia, b.action[idx]));
  }
  return out;
}

GlRep symmetric_power(std::size_t n, long k) {
  GlRep out;
  out.n = n;
  const auto monos = compositions(n, k);
  std::map<Multiindex, std::size_t> index;
  for (std::size_t m = 0; m < monos.size(); ++m) {
    index[monos[m]] = m;
    Weight w = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = monos[m][i];
    out.weights.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(monos.size(), monos.size());
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (monos[c][j] == 0) continue;
        Multiindex image = monos[c];
        --image[j];
        ++image[i];
        m.add(index.at(image), c, Rational(monos[c][j]));
      }
      out.action.push_back(std::move(m));
    }
  }
  return out;
}

GlRep dual_vector_rep(std::size_t n) {
  GlRep out;
  out.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    Weight w = Weight::zero(n);
    w[i] = -1;
    out.weights.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(n, n);
      m.set(j, i, Rational(-1));
      out.action.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<std::string> check_rep_relations(const GlRep& rep) {
  std::vector<std::string> failures;
  const std::size_t n = rep.n;
  const Matrix zero(rep.dim(), rep.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Matrix expected = zero;
          if (k == j) expected += rep.e(i, l);
          if (i == l) expected -= rep.e(k, j);
          if (!(commutator(rep.e(i, j), rep.e(k, l)) == expected)) {
            std::ostringstream msg;
            msg << "[E" << i + 1 << j + 1 << ", E" << k + 1 << l + 1 << "] violates the gl(n) bracket";
            failures.push_back(msg.str());
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> diag;
    for (const auto& w : rep.weights) diag.push_back(w[i]);
    if (!(rep.e(i, i) == Matrix::diagonal(diag))) {
      failures.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1) + " is not diagonal with the basis weights");
    }
  }
  return failures;
}

std::vector<std::string> check_module_invariants(const GlModule& module) {
  auto failures = check_rep_relations(module);
  if (!(module.identity_element() == Matrix::scalar(module.dim(), module.labels.central))) {
    failures.push_back("identity element does not act as b");
  }
  for (const auto& op : raising_operators(module)) {
    const Vector image = op.column(module.highest_index);
    if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return sgn(x) != 0; })) {
      failures.push_back("highest vector is not annihilated by a raising operator");
      break;
    }
  }
  if (module.weights[module.highest_index] != module.highest_weight) {
    failures.push_back("highest vector carries the wrong weight");
  }
  if (module.dim() != weyl_dimension(module.highest_weight)) {
    failures.push_back("dimension differs from the Weyl dimension");
  }
  return failures;
}

}  // namespace gpr
