#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gpr/char_identity.hpp"
#include "gpr/errors.hpp"
#include "gpr/irreducibility.hpp"
#include "gpr/json_io.hpp"
#include "gpr/linalg.hpp"
#include "gpr/selfcheck.hpp"

namespace gpr::cli {

namespace {

struct ModuleArgs {
  std::size_t n = 1;
  std::string dynkin;
  std::string central = "0";
  std::uint64_t dim_cap = BuildOptions{}.dim_cap;

  DominantLabels labels() const {
    DominantLabels l;
    std::stringstream ss(dynkin);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty entry in Dynkin labels \"" + dynkin + "\"");
      std::size_t used = 0;
      const long a = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument("malformed Dynkin label \"" + item + "\"");
      l.dynkin.push_back(a);
    }
    if (l.dynkin.size() + 1 != n) {
      throw std::invalid_argument("expected " + std::to_string(n - 1) + " Dynkin labels for n = " + std::to_string(n) +
                                  ", got " + std::to_string(l.dynkin.size()));
    }
    l.central = parse_rational(central);
    validate(l);
    return l;
  }

  GlModule build() const { return build_irreducible(labels(), BuildOptions{dim_cap}); }
};

void add_module_options(CLI::App& cmd, ModuleArgs& m) {
  cmd.add_option("-n", m.n, "rank of gl(n)")->required()->check(CLI::Range(1, 16));
  cmd.add_option("-a,--dynkin", m.dynkin, "Dynkin labels a_1,...,a_{n-1} (comma-separated, may be empty)")
      ->expected(0, 1);
  cmd.add_option("-b,--central", m.central, "central scalar b as p or p/q")->allow_extra_args(false);
  cmd.add_option("--dim-cap", m.dim_cap, "refuse modules of larger dimension")->check(CLI::PositiveNumber);
}

std::string rat(const Json& j) { return to_string(rational_from_json(j)); }

std::string weight_text(const Json& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + rat(j[i]);
  return s + ")";
}

std::string ints_text(const Json& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + j[i].dump();
  return s + ")";
}

/// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, const std::string& indent = "  ") const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], display_width(r[c]));
      }
    }
    for (const auto& r : rows_) {
      std::string line = indent;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  static std::size_t display_width(const std::string& s) {
    // Counts code points, skipping combining diacritics (U+0300..U+036F).
    std::size_t w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto ch = static_cast<unsigned char>(s[i]);
      if ((ch & 0xC0) == 0x80) continue;
      const auto next = i + 1 < s.size() ? static_cast<unsigned char>(s[i + 1]) : 0;
      if (ch == 0xCC || (ch == 0xCD && next < 0xB0)) continue;
      ++w;
    }
    return w;
  }

  std::vector<std::vector<std::string>> rows_;
};

Json module_header(const GlModule& v) {
  return Json{{"labels", v.labels}, {"highest_weight", v.highest_weight}, {"dim", v.dim()}};
}

void print_module_header(const Json& doc, std::ostream& os) {
  const auto labels = doc.at("labels").get<DominantLabels>();
  os << "module      V(ψ, b) with " << cli_arguments(labels) << '\n';
  os << "mu          " << weight_text(doc.at("highest_weight")) << '\n';
  os << "dim V       " << doc.at("dim").get<std::size_t>() << '\n';
}

// analyze

Json analyze(const ModuleArgs& args, std::optional<long> cap_arg) {
  const GlModule v = args.build();
  const Weight& mu = v.highest_weight;
  ProjectiveModule pm(v);
  const long cap = cap_arg ? *cap_arg : default_degree_cap(mu);

  Json doc = module_header(v);
  doc["command"] = "analyze";
  doc["degree_cap"] = cap;
  const auto witness = criterion(mu);
  doc["criterion"] = witness;
  const Verdict literal = conditions_verdict(mu);
  doc["conditions_verdict"] = to_string(literal);
  if (literal != witness.verdict) throw ConsistencyViolation("the two forms of the criterion disagree");

  Json qs = Json::array();
  for (long j = 0; j <= cap; ++j) {
    for (const auto& c : pieri_index_set(mu, j)) {
      const Rational q = q_coefficient(mu, c);
      Json row{{"c", c},
               {"weight", shifted(mu, c)},
               {"dim", weyl_dimension(shifted(mu, c))},
               {"q", rational_to_json(q)},
               {"q_bruteforce", nullptr}};
      if (j <= 3) {
        const Rational brute = q_coefficient_bruteforce(pm, c);
        if (brute != q) throw ConsistencyViolation("q coefficient closed form and brute force disagree");
        row["q_bruteforce"] = rational_to_json(brute);
      }
      qs.push_back(std::move(row));
    }
  }
  doc["q_coefficients"] = std::move(qs);

  Json degrees = Json::array();
  for (long j = 0; j <= cap; ++j) {
    const std::size_t r = up_submodule_rank(pm, j);
    if (rank_identity_defect(pm, j) != 0) {
      throw ConsistencyViolation("rank identity fails at degree " + std::to_string(j));
    }
    degrees.push_back(Json{{"degree", j}, {"full", pm.piece_dim(j)}, {"rank", r}, {"residual", residual_summands(mu, j)}});
  }
  doc["degrees"] = std::move(degrees);

  const auto deficiency = first_rank_deficiency(pm, cap);
  const bool expected_deficiency = witness.first_failure_degree && *witness.first_failure_degree <= cap;
  if (deficiency.has_value() != expected_deficiency ||
      (deficiency && deficiency != witness.first_failure_degree)) {
    throw ConsistencyViolation("brute-force ranks disagree with the criterion");
  }
  doc["jordan_holder"] = witness.verdict == Verdict::reducible ? Json(jordan_holder(pm, cap)) : Json(nullptr);
  return doc;
}

void print_analyze(const Json& doc, std::ostream& os) {
  print_module_header(doc, os);
  const auto witness = doc.at("criterion").get<CriterionWitness>();
  os << "verdict     " << to_string(witness.verdict) << '\n';
  for (const auto& p : witness.failing_pairs) os << "  failing pair i = " << p.i << ", s = " << p.s << '\n';
  if (witness.first_failure_degree) os << "  first failure degree " << *witness.first_failure_degree << '\n';
  os << "conditions  " << doc.at("conditions_verdict").get<std::string>() << '\n';

  os << "\nq coefficients, |c| <= " << doc.at("degree_cap").get<long>() << '\n';
  Table q({"c", "mu + c", "dim", "q", "q (brute force)"});
  for (const auto& row : doc.at("q_coefficients")) {
    q.add({ints_text(row.at("c")), weight_text(row.at("weight")), row.at("dim").dump(), rat(row.at("q")),
           row.at("q_bruteforce").is_null() ? "-" : rat(row.at("q_bruteforce"))});
  }
  q.print(os);

  os << "\ngraded pieces\n";
  Table d({"degree", "dim", "rank M_j", "residual summands"});
  for (const auto& row : doc.at("degrees")) {
    std::string residual;
    for (const auto& c : row.at("residual")) residual += (residual.empty() ? "" : " ") + ints_text(c);
    d.add({row.at("degree").dump(), row.at("full").dump(), row.at("rank").dump(), residual.empty() ? "-" : residual});
  }
  d.print(os);

  const Json& jh = doc.at("jordan_holder");
  if (jh.is_null()) {
    os << "\nno proper submodule generated by 1 ⊗ V\n";
    return;
  }
  const auto r = jh.get<JordanHolderReport>();
  os << "\nJordan-Hölder series  {0} ⊂ U(P)(1 ⊗ V) ⊂ 𝒜 ⊗ V\n";
  os << "  k                " << r.k << '\n';
  os << "  i0               " << r.i0 << (r.index_mismatch ? "  (differs from the failing pair)" : "") << '\n';
  os << "  residual weight  " << to_string(r.residual_weight) << " at degree " << r.k + 1 << '\n';
  os << "  quotient         central character " << r.quotient_description << '\n';
  std::string dims;
  for (auto x : r.submodule_dims_by_degree) dims += (dims.empty() ? "" : " ") + std::to_string(x);
  os << "  submodule ranks  " << dims << '\n';
  const bool constants = std::all_of(r.submodule_dims_by_degree.begin() + 1, r.submodule_dims_by_degree.end(),
                                    [](std::size_t x) { return x == 0; });
  if (constants) os << "  U(P)(1 ⊗ V)      1 ⊗ V (constants)\n";
  if (r.finite_dim) {
    std::string hw;
    for (std::size_t i = 0; i < r.sl_highest_weight.size(); ++i) {
      hw += (hw.empty() ? "" : " + ") + std::to_string(r.sl_highest_weight[i]) + "ω" + std::to_string(i + 1);
    }
    os << "  submodule        finite-dimensional, sl(n+1) highest weight " << hw << ", dim " << r.sl_dimension
       << '\n';
  } else {
    os << "  submodule        infinite-dimensional\n";
  }
}

// decompose

Json decompose(const ModuleArgs& args, long k) {
  const GlModule v = args.build();
  const Weight& mu = v.highest_weight;
  Json doc = module_header(v);
  doc["command"] = "decompose";
  doc["k"] = k;
  Json rows = Json::array();
  for (const auto& c : pieri_index_set(mu, k)) {
    const Weight w = shifted(mu, c);
    Json row{{"c", c}, {"weight", w}, {"dim", weyl_dimension(w)}, {"q", rational_to_json(q_coefficient(mu, c))}};
    row["projector_rank"] = nullptr;
    if (k == 1) {
      const auto r = static_cast<std::size_t>(std::find(c.begin(), c.end(), 1L) - c.begin()) + 1;
      const std::size_t pr = rank(tensor_projector(v, r, false));
      if (pr != weyl_dimension(w)) throw ConsistencyViolation("projector rank differs from the Weyl dimension");
      row["projector_rank"] = pr;
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

void print_decompose(const Json& doc, std::ostream& os) {
  print_module_header(doc, os);
  os << "\nV ⊗ V(" << doc.at("k").get<long>() << "ε₁) summands\n";
  Table t({"c", "mu + c", "dim", "q", "projector rank"});
  for (const auto& row : doc.at("rows")) {
    t.add({ints_text(row.at("c")), weight_text(row.at("weight")), row.at("dim").dump(), rat(row.at("q")),
           row.at("projector_rank").is_null() ? "-" : row.at("projector_rank").dump()});
  }
  t.print(os);
}

// verify-identity

Json verify_identity(const ModuleArgs& args) {
  const GlModule v = args.build();
  const Weight& mu = v.highest_weight;
  Json doc = module_header(v);
  doc["command"] = "verify-identity";
  const auto [m, md] = adjoint_matrices(v);
  doc["sigma2"] = check_characteristic_identity(sigma2_tilde(v), predicted_sigma2_roots(mu));
  doc["adjoint"] = check_characteristic_identity(m, predicted_adjoint_roots(mu));
  doc["dual_adjoint"] = check_characteristic_identity(md, predicted_dual_adjoint_roots(mu));
  return doc;
}

bool identities_hold(const Json& doc) {
  for (const char* key : {"sigma2", "adjoint", "dual_adjoint"}) {
    if (!doc.at(key).at("residual_zero").get<bool>()) return false;
  }
  return true;
}

void print_verify_identity(const Json& doc, std::ostream& os) {
  print_module_header(doc, os);
  os << '\n';
  Table t({"operator", "roots", "residual", "multiplicities"});
  for (const auto& [key, name] : {std::pair{"sigma2", "σ̃₂ on V(ε₁) ⊗ V"}, std::pair{"adjoint", "M on V(ε₁)* ⊗ V"},
                                  std::pair{"dual_adjoint", "M̃ on V(ε₁) ⊗ V"}}) {
    const auto r = doc.at(key).get<SpectrumReport>();
    std::string roots, mult;
    for (const auto& x : r.roots) roots += (roots.empty() ? "" : " ") + to_string(x);
    for (auto x : r.multiplicities) mult += (mult.empty() ? "" : " ") + std::to_string(x);
    t.add({name, roots, r.residual_is_zero ? "0" : "nonzero", mult});
  }
  t.print(os);
}

// selfcheck

Faults parse_fault(const std::string& text) {
  Faults f;
  if (text == "flip-fn-sign") {
    f.flip_fn_sign = true;
  } else if (text == "drop-delta-shift") {
    f.drop_delta_shift = true;
  } else if (text == "flip-p-central-sign") {
    f.flip_p_central_sign = true;
  } else if (text.rfind("perturb-root:", 0) == 0) {
    const long i = std::stol(text.substr(13));
    if (i < 1) throw std::invalid_argument("perturb-root index is 1-based");
    f.perturb_sigma2_root = static_cast<std::size_t>(i - 1);
  } else {
    throw std::invalid_argument("unknown fault \"" + text + "\"");
  }
  return f;
}

Json selfcheck_json(const SelfcheckSummary& s, const SelfcheckOptions& o) {
  Json suites = Json::object();
  for (const auto& [suite, tally] : s.tallies) suites[to_string(suite)] = Json{{"points", tally.points}, {"failed", tally.failed}};
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    failures.push_back(Json{{"suite", to_string(f.suite)}, {"labels", f.labels}, {"dim", f.dim}, {"details", f.details}});
  }
  return Json{{"command", "selfcheck"},
              {"points", s.points},
              {"n_max", o.n_max},
              {"degree_cap", o.degree_cap},
              {"seed", o.seed},
              {"passed", s.passed()},
              {"suites", std::move(suites)},
              {"failures", std::move(failures)},
              {"reproducer", s.passed() ? Json(nullptr) : Json(minimal_reproducer(s, o.degree_cap))}};
}

void print_selfcheck(const Json& doc, std::ostream& os) {
  os << "sweep points  " << doc.at("points").get<std::size_t>() << "  (n <= " << doc.at("n_max").get<std::size_t>()
     << ", degree cap " << doc.at("degree_cap").get<long>() << ", seed " << doc.at("seed").get<std::uint64_t>()
     << ")\n\n";
  Table t({"suite", "points", "failed"});
  for (const auto& [name, tally] : doc.at("suites").items()) {
    t.add({name, tally.at("points").dump(), tally.at("failed").dump()});
  }
  t.print(os);
  if (doc.at("passed").get<bool>()) {
    os << "\nPASS\n";
    return;
  }
  os << "\nFAIL: " << doc.at("failures").size() << " failing (suite, point) pairs\n";
  os << "minimal reproducer:\n  " << doc.at("reproducer").get<std::string>() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sl(n+1) acting on polynomial-valued gl(n)-modules: irreducibility and composition series"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print JSON instead of tables");

  ModuleArgs analyze_args;
  std::optional<long> analyze_cap;
  auto* analyze_cmd = app.add_subcommand("analyze", "criterion, q coefficients, graded ranks and composition series");
  add_module_options(*analyze_cmd, analyze_args);
  analyze_cmd->add_option("--degree-cap", analyze_cap, "highest degree checked (default max(4, k + 2))")
      ->check(CLI::Range(1L, 64L));
  analyze_cmd->add_flag("--json", json, "print JSON instead of tables");

  ModuleArgs decompose_args;
  long decompose_k = 1;
  auto* decompose_cmd = app.add_subcommand("decompose", "Pieri summands of V ⊗ V(k ε₁)");
  add_module_options(*decompose_cmd, decompose_args);
  decompose_cmd->add_option("-k", decompose_k, "symmetric power")->check(CLI::Range(0L, 64L));
  decompose_cmd->add_flag("--json", json, "print JSON instead of tables");

  ModuleArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-identity", "characteristic identities of σ̃₂, M and M̃");
  add_module_options(*verify_cmd, verify_args);
  verify_cmd->add_flag("--json", json, "print JSON instead of tables");

  SelfcheckOptions sc;
  std::string fault;
  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run every invariant suite over the standard sweep");
  selfcheck_cmd->add_option("--n-max", sc.n_max, "largest n in the sweep")->check(CLI::Range(1, 6));
  selfcheck_cmd->add_option("--max-label", sc.max_label, "largest Dynkin label in the sweep")->check(CLI::Range(0L, 6L));
  selfcheck_cmd->add_option("--degree-cap", sc.degree_cap, "highest degree checked")->check(CLI::Range(1L, 64L));
  selfcheck_cmd->add_option("--seed", sc.seed, "seed for random-vector spot checks");
  selfcheck_cmd->add_option("--threads", sc.threads, "worker threads (0 = hardware)");
  selfcheck_cmd->add_option("--inject-fault", fault,
                            "flip-fn-sign | drop-delta-shift | flip-p-central-sign | perturb-root:<i>")
      ->group("Testing");
  selfcheck_cmd->add_flag("--json", json, "print JSON instead of tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Json doc;
    int status = kOk;
    void (*print)(const Json&, std::ostream&) = nullptr;
    if (analyze_cmd->parsed()) {
      doc = analyze(analyze_args, analyze_cap);
      print = print_analyze;
    } else if (decompose_cmd->parsed()) {
      doc = decompose(decompose_args, decompose_k);
      print = print_decompose;
    } else if (verify_cmd->parsed()) {
      doc = verify_identity(verify_args);
      if (!identities_hold(doc)) status = kConsistency;
      print = print_verify_identity;
    } else {
      if (!fault.empty()) sc.faults = parse_fault(fault);
      const auto summary = run_selfcheck(sc);
      doc = selfcheck_json(summary, sc);
      if (!summary.passed()) status = kConsistency;
      print = print_selfcheck;
    }
    if (json) {
      out << doc.dump(2) << '\n';
    } else {
      print(doc, out);
    }
    return status;
  } catch (const ConsistencyViolation& e) {
    err << "consistency violation: " << e.what() << '\n';
    return kConsistency;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionCapError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kConsistency;
  }
}

}  // namespace gpr::cli
