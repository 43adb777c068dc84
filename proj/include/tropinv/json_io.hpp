#pragma once

#include <json.hpp>

#include "tropinv/invariants.hpp"
#include "tropinv/orbit_embed.hpp"
#include "tropinv/rational_inv.hpp"

namespace tropinv {

/// File formats. Readers validate shape, types, and value ranges and throw
/// SchemaError with the offending path; writers emit the same layout with
/// keys sorted, so output is byte-deterministic.
///
/// polynomial   {"n": 2, "terms": [{"exp": [2, 1], "coef": "3"}, ...]}
///              coefficients are exact decimal rationals in strings; the
///              zero polynomial is an empty term list.
/// polytope     {"n": 3, "vertices": [[2, 1, 0], ...]}
/// group        {"n": 4, "generators": [[2, 1, 3, 4], "(1 2)(3 4)", ...]}
///              generators are 1-based image lists or cycle strings.
/// decomposition{"c": [1, 1, 0]}
/// expression   {"gen": [5, 1]} | {"op": "add"|"mul", "args": [...]}
///              | {"op": "pow", "m": 2, "arg": ...}
///              | {"op": "div", "args": [num, den]}
/// quotient     {"num": polynomial, "den": polynomial}
/// embedding    {"group": group, "e": [polynomial...], "f": [polynomial...]}

nlohmann::json poly_to_json(const TropPoly& f);
TropPoly poly_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const LatticePolytope& a);
LatticePolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const PermGroup& g);
PermGroup group_from_json(const nlohmann::json& j);

nlohmann::json edecomp_to_json(const EDecomposition& d);
EDecomposition edecomp_from_json(const nlohmann::json& j);

nlohmann::json expr_to_json(const InvExpr& e);
InvExpr expr_from_json(const nlohmann::json& j);

nlohmann::json quotient_to_json(const TropRational& r);
TropRational quotient_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const EmbeddingSpec& spec);
EmbeddingSpec embedding_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DistortionReport& r);

/// Canonical text form: two-space indent and a trailing newline.
std::string dump_json(const nlohmann::json& j);

/// Parse with SchemaError on malformed text.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json parse_json_file(const std::string& path);

}  // namespace tropinv
