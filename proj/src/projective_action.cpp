#include "gpr/projective_action.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "gpr/errors.hpp"

namespace gpr {

namespace {

Multiindex unit_index(std::size_t n, std::size_t i) {
  Multiindex m(n, 0);
  m[i] = 1;
  return m;
}

void check_index(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("variable index out of range");
}

}  // namespace

WittElement WittElement::d(std::size_t n, std::size_t i) {
  check_index(n, i);
  WittElement w(n);
  w.add_term(Multiindex(n, 0), i, Rational(1));
  return w;
}

WittElement WittElement::xd(std::size_t n, std::size_t i, std::size_t j) {
  check_index(n, i);
  check_index(n, j);
  WittElement w(n);
  w.add_term(unit_index(n, i), j, Rational(1));
  return w;
}

WittElement WittElement::p(std::size_t n, std::size_t i) {
  check_index(n, i);
  WittElement w(n);
  for (std::size_t r = 0; r < n; ++r) {
    Multiindex m = unit_index(n, i);
    ++m[r];
    w.add_term(m, r, Rational(1));
  }
  return w;
}

void WittElement::add_term(const Multiindex& monomial, std::size_t direction, const Rational& coeff) {
  if (monomial.size() != n_ || direction >= n_) throw std::invalid_argument("Witt term has the wrong number of variables");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{monomial, direction}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

WittElement& WittElement::operator+=(const WittElement& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& other) {
  if (n_ == 0) n_ = other.n_;
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

WittElement& WittElement::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= factor;
  return *this;
}

std::optional<int> WittElement::degree_shift() const {
  std::optional<int> shift;
  for (const auto& [key, c] : terms_) {
    const int s = static_cast<int>(degree(key.first)) - 1;
    if (shift && *shift != s) return std::nullopt;
    shift = s;
  }
  return shift;
}

WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
WittElement operator*(const Rational& factor, WittElement a) { return a *= factor; }

WittElement bracket(const WittElement& u, const WittElement& w) {
  const std::size_t n = std::max(u.n(), w.n());
  WittElement out(n);
  // α x^a ∂_r applied to the coefficient of β x^b ∂_s.
  auto apply = [&](const WittElement& x, const WittElement& y, int sign) {
    for (const auto& [kx, cx] : x.terms()) {
      for (const auto& [ky, cy] : y.terms()) {
        const std::size_t r = kx.second;
        if (ky.first[r] == 0) continue;
        Multiindex m = ky.first;
        const long power = m[r];
        --m[r];
        for (std::size_t t = 0; t < n; ++t) m[t] += kx.first[t];
        Rational c = cx * cy * power;
        if (sign < 0) c = -c;
        out.add_term(m, ky.second, c);
      }
    }
  };
  apply(u, w, 1);
  apply(w, u, -1);
  return out;
}

std::string to_string(const WittElement& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : op.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << to_string(c) << ")";
    for (std::size_t t = 0; t < key.first.size(); ++t) {
      for (long e = 0; e < key.first[t]; ++e) os << "x" << t + 1;
    }
    os << "d" << key.second + 1;
  }
  return os.str();
}

SpanCoordinates decompose(const WittElement& op) {
  const std::size_t n = op.n();
  SpanCoordinates out;
  out.xd.assign(n * n, Rational(0));
  out.d.assign(n, Rational(0));
  out.p.assign(n, Rational(0));
  WittElement quadratic(n);
  for (const auto& [key, c] : op.terms()) {
    const long deg = degree(key.first);
    if (deg == 0) {
      out.d[key.second] += c;
    } else if (deg == 1) {
      const auto i = static_cast<std::size_t>(std::find(key.first.begin(), key.first.end(), 1) - key.first.begin());
      out.xd[i * n + key.second] += c;
    } else if (deg == 2) {
      quadratic.add_term(key.first, key.second, c);
    } else {
      throw UnsupportedOperatorError("operator " + to_string(op) + " has a coefficient of degree above 2");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Multiindex sq(n, 0);
    sq[i] = 2;
    auto it = quadratic.terms().find({sq, i});
    if (it != quadratic.terms().end()) out.p[i] = it->second;
  }
  for (std::size_t i = 0; i < n; ++i) quadratic -= out.p[i] * WittElement::p(n, i);
  if (!quadratic.is_zero()) {
    throw UnsupportedOperatorError("operator " + to_string(op) + " is outside span{x_i d_j, d_i, p_i}");
  }
  return out;
}

std::vector<WittElement> spanning_set(std::size_t n) {
  std::vector<WittElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(WittElement::xd(n, i, j));
  }
  for (std::size_t i = 0; i < n; ++i) out.push_back(WittElement::d(n, i));
  for (std::size_t i = 0; i < n; ++i) out.push_back(WittElement::p(n, i));
  return out;
}

ChevalleySet chevalley_generators(std::size_t n, const Faults& faults) {
  if (n == 0) throw DomainError("chevalley_generators needs n >= 1");
  ChevalleySet g;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.h.push_back(WittElement::xd(n, i, i) - WittElement::xd(n, i + 1, i + 1));
    g.e.push_back(WittElement::xd(n, i, i + 1));
    g.f.push_back(WittElement::xd(n, i + 1, i));
  }
  WittElement hn = WittElement::xd(n, n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) hn += WittElement::xd(n, i, i);
  g.h.push_back(hn);
  g.e.push_back(WittElement::p(n, n - 1));
  g.f.push_back((faults.flip_fn_sign ? Rational(1) : Rational(-1)) * WittElement::d(n, n - 1));
  return g;
}

std::vector<GradedBasisEntry> graded_basis(const GlModule& v, long k) {
  std::vector<GradedBasisEntry> out;
  for (const auto& c : compositions(v.n, k)) {
    for (std::size_t j = 0; j < v.dim(); ++j) out.push_back({c, j});
  }
  return out;
}

ProjectiveModule::ProjectiveModule(GlModule v, Faults faults) : v_(std::move(v)), faults_(faults) {
  if (v_.n == 0) throw DomainError("projective module needs n >= 1");
  identity_element_ = v_.identity_element().transpose();
  for (const auto& m : v_.action) columns_of_e_.push_back(m.transpose());
}

void ProjectiveModule::ensure_degree(long k) const {
  std::lock_guard lock(mutex_);
  if (monomials_.count(k)) return;
  auto monos = compositions(v_.n, k);
  auto& index = monomial_index_[k];
  for (std::size_t m = 0; m < monos.size(); ++m) index[monos[m]] = m;
  monomials_[k] = std::move(monos);
}

std::size_t ProjectiveModule::piece_dim(long k) const { return monomials(k).size() * v_.dim(); }

const std::vector<Multiindex>& ProjectiveModule::monomials(long k) const {
  ensure_degree(k);
  std::lock_guard lock(mutex_);
  return monomials_.at(k);
}

std::size_t ProjectiveModule::index_of(const Multiindex& c, std::size_t j) const {
  const long k = degree(c);
  ensure_degree(k);
  std::lock_guard lock(mutex_);
  const auto& index = monomial_index_.at(k);
  auto it = index.find(c);
  if (it == index.end() || j >= v_.dim()) throw std::out_of_range("not a graded basis element");
  return it->second * v_.dim() + j;
}

const Matrix& ProjectiveModule::d(std::size_t i, long k) const { return cached({Kind::d, i, 0, k}); }
const Matrix& ProjectiveModule::xd(std::size_t i, std::size_t j, long k) const { return cached({Kind::xd, i, j, k}); }
const Matrix& ProjectiveModule::p(std::size_t i, long k) const { return cached({Kind::p, i, 0, k}); }

const Matrix& ProjectiveModule::cached(const CacheKey& key) const {
  std::lock_guard lock(mutex_);
  auto it = matrices_.find(key);
  if (it == matrices_.end()) it = matrices_.emplace(key, std::make_unique<Matrix>(build(key))).first;
  return *it->second;
}

Matrix ProjectiveModule::build(const CacheKey& key) const {
  const auto [kind, i, j, k] = key;
  check_index(v_.n, i);
  check_index(v_.n, j);
  const long shift = kind == Kind::d ? -1 : (kind == Kind::p ? 1 : 0);
  const std::size_t dim = v_.dim();
  // Built transposed (one row per source column), then flipped.
  Matrix t(piece_dim(k), piece_dim(k + shift));
  if (k < 0) return t.transpose();
  const auto& monos = monomials(k);
  auto put = [&](std::size_t src, const Multiindex& c, std::size_t basis, const Rational& value) {
    t.add(src, index_of(c, basis), value);
  };
  for (std::size_t m = 0; m < monos.size(); ++m) {
    const Multiindex& c = monos[m];
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t src = m * dim + b;
      switch (kind) {
        case Kind::d: {
          if (c[i] == 0) break;
          Multiindex target = c;
          --target[i];
          put(src, target, b, Rational(c[i]));
          break;
        }
        case Kind::xd: {
          if (c[j] > 0) {
            Multiindex target = c;
            --target[j];
            ++target[i];
            put(src, target, b, Rational(c[j]));
          }
          for (const auto& e : columns_of_e_[i * v_.n + j].row(b)) put(src, c, e.col, e.value);
          break;
        }
        case Kind::p: {
          Multiindex up = c;
          ++up[i];
          put(src, up, b, Rational(degree(c)));
          for (const auto& e : identity_element_.row(b)) put(src, up, e.col, faults_.flip_p_central_sign ? Rational(-e.value) : e.value);
          for (std::size_t r = 0; r < v_.n; ++r) {
            Multiindex target = c;
            ++target[r];
            for (const auto& e : columns_of_e_[i * v_.n + r].row(b)) put(src, target, e.col, e.value);
          }
          break;
        }
      }
    }
  }
  return t.transpose();
}

Matrix ProjectiveModule::operator_matrix(const WittElement& op, long k, std::optional<int> shift) const {
  const auto own = op.degree_shift();
  if (!op.is_zero() && !own) throw std::invalid_argument("operator " + to_string(op) + " is not homogeneous");
  if (own && shift && *own != *shift) throw std::invalid_argument("operator degree shift does not match the request");
  const int s = own ? *own : (shift ? *shift : 0);
  const std::size_t n = v_.n;
  const auto coords = decompose(op.n() ? op : WittElement(n));
  Matrix out(piece_dim(k + s), piece_dim(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(coords.xd[i * n + j]) != 0) out += coords.xd[i * n + j] * xd(i, j, k);
    }
    if (sgn(coords.d[i]) != 0) out += coords.d[i] * d(i, k);
    if (sgn(coords.p[i]) != 0) out += coords.p[i] * p(i, k);
  }
  return out;
}

Vector ProjectiveModule::to_vector(const GradedElement& v) const {
  Vector out(piece_dim(v.degree));
  for (const auto& [key, c] : v.coords) {
    if (degree(key.first) != v.degree) throw std::invalid_argument("graded element has a term of the wrong degree");
    out[index_of(key.first, key.second)] = c;
  }
  return out;
}

GradedElement ProjectiveModule::from_vector(long k, const Vector& coords) const {
  if (coords.size() != piece_dim(k)) throw std::invalid_argument("coordinate vector has the wrong length");
  GradedElement out;
  out.degree = k;
  const std::size_t dim = v_.dim();
  const auto& monos = monomials(k);
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    if (sgn(coords[idx]) != 0) out.coords[{monos[idx / dim], idx % dim}] = coords[idx];
  }
  return out;
}

GradedElement ProjectiveModule::act(const WittElement& op, const GradedElement& v) const {
  const auto shift = op.degree_shift();
  const Matrix m = operator_matrix(op, v.degree, shift ? shift : std::optional<int>(0));
  return from_vector(v.degree + (shift ? *shift : 0), m.apply(to_vector(v)));
}

const Matrix& ProjectiveModule::up_generators(long k) const {
  if (k < 0) throw std::invalid_argument("negative degree");
  std::lock_guard lock(mutex_);
  auto it = up_.find(k);
  if (it != up_.end()) return *it->second;
  if (k == 0) {
    gamma_[0] = {Multiindex{}};
    return *up_.emplace(0, std::make_unique<Matrix>(Matrix::identity(v_.dim()))).first->second;
  }
  const Matrix& prev = up_generators(k - 1);
  const auto& prev_gamma = gamma_.at(k - 1);
  const std::size_t dim = v_.dim();
  std::vector<Multiindex> tuples;
  Matrix out(piece_dim(k), 0);
  for (std::size_t first = 0; first < v_.n; ++first) {
    std::vector<std::size_t> cols;
    for (std::size_t t = 0; t < prev_gamma.size(); ++t) {
      if (!prev_gamma[t].empty() && static_cast<std::size_t>(prev_gamma[t][0]) < first) continue;
      Multiindex tuple{static_cast<long>(first)};
      tuple.insert(tuple.end(), prev_gamma[t].begin(), prev_gamma[t].end());
      tuples.push_back(std::move(tuple));
      for (std::size_t b = 0; b < dim; ++b) cols.push_back(t * dim + b);
    }
    out = out.hstack(p(first, k - 1) * prev.select_columns(cols));
  }
  gamma_[k] = std::move(tuples);
  return *up_.emplace(k, std::make_unique<Matrix>(std::move(out))).first->second;
}

Matrix ProjectiveModule::phi(long k) const {
  const Matrix& m = up_generators(k);
  std::map<Multiindex, std::size_t> position;
  {
    std::lock_guard lock(mutex_);
    const auto& tuples = gamma_.at(k);
    for (std::size_t t = 0; t < tuples.size(); ++t) position[tuples[t]] = t;
  }
  const std::size_t dim = v_.dim();
  std::vector<std::size_t> cols;
  for (const auto& l : monomials(k)) {
    Multiindex tuple;
    for (std::size_t s = 0; s < l.size(); ++s) tuple.insert(tuple.end(), l[s], static_cast<long>(s));
    const std::size_t t = position.at(tuple);
    for (std::size_t b = 0; b < dim; ++b) cols.push_back(t * dim + b);
  }
  return m.select_columns(cols);
}

Matrix ProjectiveModule::triangle_delta(std::size_t i, std::size_t j, long k, long on_degree) const {
  if (i != j) return xd(j, i, on_degree);
  Matrix out = xd(i, i, on_degree);
  for (std::size_t r = 0; r < v_.n; ++r) out += xd(r, r, on_degree);
  if (!faults_.drop_delta_shift) out += Matrix::scalar(piece_dim(on_degree), Rational(k - 1));
  return out;
}

GradedElement act(const WittElement& op, const GradedElement& v, const GlModule& module) {
  return ProjectiveModule(module).act(op, v);
}

Matrix operator_matrix(const WittElement& op, const GlModule& module, long k) {
  return ProjectiveModule(module).operator_matrix(op, k);
}

Matrix triangle_delta(std::size_t i, std::size_t j, long k, const GlModule& module, long on_degree) {
  return ProjectiveModule(module).triangle_delta(i, j, k, on_degree);
}

std::vector<std::string> bracket_failures(const ProjectiveModule& pm, long k_max) {
  std::vector<std::string> failures;
  const auto ops = spanning_set(pm.n());
  std::vector<int> shifts;
  for (const auto& op : ops) shifts.push_back(*op.degree_shift());
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a; b < ops.size(); ++b) {
      const WittElement br = bracket(ops[a], ops[b]);
      const int sa = shifts[a], sb = shifts[b];
      for (long k = 0; k <= k_max; ++k) {
        const Matrix lhs = pm.operator_matrix(br, k, sa + sb);
        const Matrix rhs = pm.operator_matrix(ops[a], k + sb) * pm.operator_matrix(ops[b], k) -
                           pm.operator_matrix(ops[b], k + sa) * pm.operator_matrix(ops[a], k);
        if (!(lhs == rhs)) {
          failures.push_back("[" + to_string(ops[a]) + ", " + to_string(ops[b]) + "] at degree " + std::to_string(k));
        }
      }
    }
  }
  return failures;
}

bool verify_bracket_consistency(std::size_t n, const GlModule& module, long k_max) {
  if (module.n != n) throw std::invalid_argument("module rank differs from n");
  return bracket_failures(ProjectiveModule(module), k_max).empty();
}

namespace {

// Homogeneous operator on 𝒜 ⊗ V given degree by degree.
struct GradedOp {
  int shift = 0;
  std::function<Matrix(long)> at;
};

GradedOp graded(const ProjectiveModule& pm, const WittElement& op) {
  const int s = op.degree_shift().value_or(0);
  return {s, [&pm, op, s](long k) { return pm.operator_matrix(op, k, s); }};
}

GradedOp commutator(const GradedOp& x, const GradedOp& y) {
  return {x.shift + y.shift, [x, y](long k) { return x.at(k + y.shift) * y.at(k) - y.at(k + x.shift) * x.at(k); }};
}

}  // namespace

std::vector<std::string> chevalley_failures(const ProjectiveModule& pm, long k_max) {
  const std::size_t n = pm.n();
  const auto g = chevalley_generators(n, pm.faults());
  std::vector<GradedOp> e, f, h;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(graded(pm, g.e[i]));
    f.push_back(graded(pm, g.f[i]));
    h.push_back(graded(pm, g.h[i]));
  }
  auto cartan = [](std::size_t i, std::size_t j) -> long {
    if (i == j) return 2;
    return (i + 1 == j || j + 1 == i) ? -1 : 0;
  };
  std::vector<std::string> failures;
  auto expect = [&](const GradedOp& got, const GradedOp* want, const Rational& scale, const std::string& what) {
    for (long k = 0; k <= k_max; ++k) {
      Matrix lhs = got.at(k);
      Matrix rhs = want ? scale * want->at(k) : Matrix(lhs.rows(), lhs.cols());
      if (!(lhs == rhs)) {
        failures.push_back(what + " fails at degree " + std::to_string(k));
        return;
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      expect(commutator(h[i], h[j]), nullptr, 0, "[h,h] (" + ij + ")");
      expect(commutator(h[i], e[j]), &e[j], Rational(cartan(j, i)), "[h,e] (" + ij + ")");
      expect(commutator(h[i], f[j]), &f[j], Rational(-cartan(j, i)), "[h,f] (" + ij + ")");
      if (i == j) {
        expect(commutator(e[i], f[j]), &h[i], 1, "[e,f] (" + ij + ")");
      } else {
        expect(commutator(e[i], f[j]), nullptr, 0, "[e,f] (" + ij + ")");
        GradedOp se = e[j], sf = f[j];
        for (long t = 0; t < 1 - cartan(i, j); ++t) {
          se = commutator(e[i], se);
          sf = commutator(f[i], sf);
        }
        expect(se, nullptr, 0, "Serre e (" + ij + ")");
        expect(sf, nullptr, 0, "Serre f (" + ij + ")");
      }
    }
  }
  return failures;
}

std::vector<std::string> derivative_identity_failures(const ProjectiveModule& pm, long k_max) {
  std::vector<std::string> failures;
  const std::size_t n = pm.n();
  const std::size_t dim = pm.module().dim();
  for (long k = 1; k <= k_max; ++k) {
    const Matrix& mk = pm.up_generators(k);
    const Matrix& prev = pm.up_generators(k - 1);
    // Tuple positions, recovered by rebuilding Γ in the same order.
    std::vector<Multiindex> gamma_k, gamma_prev;
    std::function<void(Multiindex&, long, std::vector<Multiindex>&)> enumerate =
        [&](Multiindex& cur, long left, std::vector<Multiindex>& out) {
          if (left == 0) {
            out.push_back(cur);
            return;
          }
          for (long a = cur.empty() ? 0 : cur.back(); a < static_cast<long>(n); ++a) {
            cur.push_back(a);
            enumerate(cur, left - 1, out);
            cur.pop_back();
          }
        };
    Multiindex scratch;
    enumerate(scratch, k, gamma_k);
    enumerate(scratch, k - 1, gamma_prev);
    std::map<Multiindex, std::size_t> prev_pos;
    for (std::size_t t = 0; t < gamma_prev.size(); ++t) prev_pos[gamma_prev[t]] = t;
    auto block = [&](const Matrix& m, std::size_t t) {
      std::vector<std::size_t> cols;
      for (std::size_t b = 0; b < dim; ++b) cols.push_back(t * dim + b);
      return m.select_columns(cols);
    };
    for (std::size_t t = 0; t < gamma_k.size(); ++t) {
      const Matrix column = block(mk, t);
      for (std::size_t i = 0; i < n; ++i) {
        const Matrix lhs = pm.d(i, k) * column;
        Matrix rhs(lhs.rows(), lhs.cols());
        for (std::size_t s = 0; s < gamma_k[t].size(); ++s) {
          Multiindex rest = gamma_k[t];
          rest.erase(rest.begin() + static_cast<long>(s));
          rhs += block(prev, prev_pos.at(rest)) * pm.triangle_delta(i, static_cast<std::size_t>(gamma_k[t][s]), k, 0);
        }
        if (!(lhs == rhs)) {
          std::ostringstream msg;
          msg << "d" << i + 1 << " p-monomial identity fails for tuple (";
          for (std::size_t s = 0; s < gamma_k[t].size(); ++s) msg << (s ? "," : "") << gamma_k[t][s] + 1;
          msg << ")";
          failures.push_back(msg.str());
        }
      }
    }
  }
  return failures;
}

Matrix larsson_matrix(const WittElement& op, const GlModule& module, long k, int shift) {
  const std::size_t n = module.n;
  const std::size_t dim = module.dim();
  const auto src = compositions(n, k);
  const auto dst = compositions(n, k + shift);
  std::map<Multiindex, std::size_t> dst_index;
  for (std::size_t m = 0; m < dst.size(); ++m) dst_index[dst[m]] = m;
  auto locate = [&](const Multiindex& c) {
    auto it = dst_index.find(c);
    if (it == dst_index.end()) throw std::invalid_argument("operator is not homogeneous of the requested shift");
    return it->second;
  };
  Matrix out(dst.size() * dim, src.size() * dim);
  for (std::size_t m = 0; m < src.size(); ++m) {
    const Multiindex& g = src[m];
    for (const auto& [key, coeff] : op.terms()) {
      const auto& [a, r] = key;
      // f ∂_r(g) ⊗ v
      if (g[r] > 0) {
        Multiindex c = g;
        --c[r];
        for (std::size_t t = 0; t < n; ++t) c[t] += a[t];
        const std::size_t row = locate(c);
        for (std::size_t b = 0; b < dim; ++b) out.add(row * dim + b, m * dim + b, coeff * g[r]);
      }
      // ∂_i(f) g ⊗ E_{i,r} v
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Multiindex c = a;
        --c[i];
        for (std::size_t t = 0; t < n; ++t) c[t] += g[t];
        const std::size_t row = locate(c);
        const Matrix& e = module.e(i, r);
        for (std::size_t vr = 0; vr < dim; ++vr) {
          for (const auto& entry : e.row(vr)) out.add(row * dim + vr, m * dim + entry.col, coeff * a[i] * entry.value);
        }
      }
    }
  }
  return out;
}

}  // namespace gpr
