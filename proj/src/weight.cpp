#include "gpr/weight.hpp"

#include <stdexcept>

#include "gpr/errors.hpp"

namespace gpr {

long degree(const Multiindex& c) {
  long s = 0;
  for (auto x : c) s += x;
  return s;
}

namespace {

void compositions_into(std::size_t pos, long remaining, Multiindex& current,
                       std::vector<Multiindex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (long v = remaining; v >= 0; --v) {
    current[pos] = v;
    compositions_into(pos + 1, remaining - v, current, out);
  }
}

}  // namespace

std::vector<Multiindex> compositions(std::size_t n, long k) {
  std::vector<Multiindex> out;
  if (k < 0) return out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Multiindex current(n, 0);
  compositions_into(0, k, current, out);
  return out;
}

Weight Weight::unit(std::size_t n, std::size_t i) {
  Weight w = zero(n);
  w.coords.at(i) = 1;
  return w;
}

Rational Weight::total() const {
  Rational s;
  for (const auto& c : coords) s += c;
  return s;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Weight operator+(Weight a, const Weight& b) { return a += b; }
Weight operator-(Weight a, const Weight& b) { return a -= b; }

Weight shifted(const Weight& a, const std::vector<long>& c) {
  if (c.size() != a.size()) throw std::invalid_argument("weight length mismatch");
  Weight out = a;
  for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
  return out;
}

Rational pairing(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight half_sum_positive_roots(std::size_t n) {
  Weight d = Weight::zero(n);
  for (std::size_t i = 1; i <= n; ++i) {
    d[i - 1] = Rational(static_cast<long>(n + 1) - 2 * static_cast<long>(i), 2);
    d[i - 1].canonicalize();
  }
  return d;
}

bool is_dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!in_negative_naturals(w[i + 1] - w[i])) return false;
  }
  return true;
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + to_string(w[i]);
  return s + ")";
}

void validate(const DominantLabels& labels) {
  for (auto a : labels.dynkin) {
    if (a < 0) throw DomainError("Dynkin labels must be nonnegative");
  }
}

DominantLabels labels_from_weight(const Weight& w) {
  if (!is_dominant(w)) throw DomainError("weight " + to_string(w) + " is not dominant");
  DominantLabels out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out.dynkin.push_back(Rational(w[i] - w[i + 1]).get_num().get_si());
  out.central = w.total();
  return out;
}

}  // namespace gpr
