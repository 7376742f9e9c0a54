#pragma once

#include <json.hpp>

#include "gpr/char_identity.hpp"
#include "gpr/gl_module.hpp"
#include "gpr/irreducibility.hpp"
#include "gpr/matrix.hpp"

namespace gpr {

using Json = nlohmann::json;

/// Rationals are always "num/den" strings. Parsing throws std::invalid_argument
/// on malformed documents (nlohmann errors are passed through as they are).
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"rows", "cols", "entries": [[row, col, "num/den"], ...]}.
void to_json(Json& j, const Matrix& m);
void from_json(const Json& j, Matrix& m);

void to_json(Json& j, const Weight& w);
void from_json(const Json& j, Weight& w);

void to_json(Json& j, const DominantLabels& l);
void from_json(const Json& j, DominantLabels& l);

/// {"n", "labels", "dim", "highest_index", "highest_weight", "weights",
///  "action": [[i, j, row, col, "num", "den"], ...]} with 0-based i, j.
void to_json(Json& j, const GlModule& v);
void from_json(const Json& j, GlModule& v);

/// {"roots", "residual_zero", "multiplicities"}.
void to_json(Json& j, const SpectrumReport& r);
void from_json(const Json& j, SpectrumReport& r);

void to_json(Json& j, const FailingPair& p);
void from_json(const Json& j, FailingPair& p);

void to_json(Json& j, const CriterionWitness& w);
void from_json(const Json& j, CriterionWitness& w);

void to_json(Json& j, const JordanHolderReport& r);
void from_json(const Json& j, JordanHolderReport& r);

}  // namespace gpr
