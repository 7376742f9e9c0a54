#include "gpr/json_io.hpp"

#include <stdexcept>

namespace gpr {

namespace {

Integer integer_from_json(const Json& j) {
  const auto& s = j.get_ref<const std::string&>();
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer: " + s);
  return z;
}

}  // namespace

Json rational_to_json(const Rational& x) { return to_fraction_string(x); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"num/den\" string");
  return parse_rational(j.get_ref<const std::string&>());
}

void to_json(Json& j, const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) entries.push_back(Json::array({r, e.col, rational_to_json(e.value)}));
  }
  j = Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

void from_json(const Json& j, Matrix& m) {
  m = Matrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (r >= m.rows() || c >= m.cols()) throw std::invalid_argument("matrix entry out of range");
    m.set(r, c, rational_from_json(e.at(2)));
  }
}

void to_json(Json& j, const Weight& w) {
  j = Json::array();
  for (const auto& x : w.coords) j.push_back(rational_to_json(x));
}

void from_json(const Json& j, Weight& w) {
  w.coords.clear();
  for (const auto& x : j) w.coords.push_back(rational_from_json(x));
}

void to_json(Json& j, const DominantLabels& l) {
  j = Json{{"dynkin", l.dynkin}, {"central", rational_to_json(l.central)}};
}

void from_json(const Json& j, DominantLabels& l) {
  l.dynkin = j.at("dynkin").get<std::vector<long>>();
  l.central = rational_from_json(j.at("central"));
}

void to_json(Json& j, const GlModule& v) {
  Json action = Json::array();
  for (std::size_t a = 0; a < v.n; ++a) {
    for (std::size_t b = 0; b < v.n; ++b) {
      const Matrix& m = v.e(a, b);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& e : m.row(r)) {
          action.push_back(Json::array({a, b, r, e.col, e.value.get_num().get_str(), e.value.get_den().get_str()}));
        }
      }
    }
  }
  j = Json{{"n", v.n},
           {"labels", v.labels},
           {"dim", v.dim()},
           {"highest_index", v.highest_index},
           {"highest_weight", v.highest_weight},
           {"weights", v.weights},
           {"action", std::move(action)}};
}

void from_json(const Json& j, GlModule& v) {
  v = GlModule{};
  v.n = j.at("n").get<std::size_t>();
  v.labels = j.at("labels").get<DominantLabels>();
  v.highest_index = j.at("highest_index").get<std::size_t>();
  v.highest_weight = j.at("highest_weight").get<Weight>();
  v.weights = j.at("weights").get<std::vector<Weight>>();
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (v.weights.size() != dim) throw std::invalid_argument("weight list does not match dim");
  if (dim > 0 && v.highest_index >= dim) throw std::invalid_argument("highest_index out of range");
  v.action.assign(v.n * v.n, Matrix(dim, dim));
  for (const auto& t : j.at("action")) {
    const auto a = t.at(0).get<std::size_t>();
    const auto b = t.at(1).get<std::size_t>();
    const auto r = t.at(2).get<std::size_t>();
    const auto c = t.at(3).get<std::size_t>();
    if (a >= v.n || b >= v.n || r >= dim || c >= dim) throw std::invalid_argument("action entry out of range");
    const Integer den = integer_from_json(t.at(5));
    if (den == 0) throw std::invalid_argument("zero denominator in action entry");
    Rational x(integer_from_json(t.at(4)), den);
    x.canonicalize();
    v.action[a * v.n + b].set(r, c, x);
  }
}

void to_json(Json& j, const SpectrumReport& r) {
  Json roots = Json::array();
  for (const auto& x : r.roots) roots.push_back(rational_to_json(x));
  j = Json{{"roots", std::move(roots)}, {"residual_zero", r.residual_is_zero}, {"multiplicities", r.multiplicities}};
}

void from_json(const Json& j, SpectrumReport& r) {
  r.roots.clear();
  for (const auto& x : j.at("roots")) r.roots.push_back(rational_from_json(x));
  r.residual_is_zero = j.at("residual_zero").get<bool>();
  r.multiplicities = j.at("multiplicities").get<std::vector<std::size_t>>();
}

void to_json(Json& j, const FailingPair& p) { j = Json{{"i", p.i}, {"s", p.s}}; }

void from_json(const Json& j, FailingPair& p) {
  p.i = j.at("i").get<std::size_t>();
  p.s = j.at("s").get<long>();
}

void to_json(Json& j, const CriterionWitness& w) {
  j = Json{{"verdict", to_string(w.verdict)}, {"failing_pairs", w.failing_pairs}};
  j["first_failure_degree"] = w.first_failure_degree ? Json(*w.first_failure_degree) : Json(nullptr);
}

void from_json(const Json& j, CriterionWitness& w) {
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "irreducible") {
    w.verdict = Verdict::irreducible;
  } else if (verdict == "reducible") {
    w.verdict = Verdict::reducible;
  } else {
    throw std::invalid_argument("unknown verdict: " + verdict);
  }
  w.failing_pairs = j.at("failing_pairs").get<std::vector<FailingPair>>();
  const auto& f = j.at("first_failure_degree");
  w.first_failure_degree = f.is_null() ? std::nullopt : std::optional<long>(f.get<long>());
}

void to_json(Json& j, const JordanHolderReport& r) {
  j = Json{{"k", r.k},
           {"i0", r.i0},
           {"corollary_k", r.corollary_k},
           {"index_mismatch", r.index_mismatch},
           {"r", r.r},
           {"residual_weight", r.residual_weight},
           {"submodule_dims_by_degree", r.submodule_dims_by_degree},
           {"full_dims_by_degree", r.full_dims_by_degree},
           {"quotient_description", r.quotient_description},
           {"finite_dim", r.finite_dim},
           {"sl_highest_weight", r.sl_highest_weight},
           {"sl_dimension", r.sl_dimension}};
}

void from_json(const Json& j, JordanHolderReport& r) {
  r.k = j.at("k").get<long>();
  r.i0 = j.at("i0").get<std::size_t>();
  r.corollary_k = j.at("corollary_k").get<long>();
  r.index_mismatch = j.at("index_mismatch").get<bool>();
  r.r = j.at("r").get<std::size_t>();
  r.residual_weight = j.at("residual_weight").get<Weight>();
  r.submodule_dims_by_degree = j.at("submodule_dims_by_degree").get<std::vector<std::size_t>>();
  r.full_dims_by_degree = j.at("full_dims_by_degree").get<std::vector<std::size_t>>();
  r.quotient_description = j.at("quotient_description").get<std::string>();
  r.finite_dim = j.at("finite_dim").get<bool>();
  r.sl_highest_weight = j.at("sl_highest_weight").get<std::vector<long>>();
  r.sl_dimension = j.at("sl_dimension").get<std::uint64_t>();
}

}  // namespace gpr
