#pragma once

#include "varjet/hamiltonian.hpp"

#include <json.hpp>

namespace varjet {

struct InputError : std::runtime_error {
	explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// "m,n" -> JetContext
JetContext parse_context(const std::string& spec);

/// Rational from a JSON number or "p/q" string.
Rat rat_from_json(const nlohmann::json& j);
RatMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const RatMatrix& m);

/// Operator corpus: { "context": "m,n", "entries": [{a,b,k,coeff}] },
/// coefficients as expression strings.
DiffOperatorMatrix operator_from_json(const nlohmann::json& j);
nlohmann::json operator_to_json(const DiffOperatorMatrix& d);

/// DNSpec: { "eta": [[..]], "A": [{a,b,c,val}], "B": [[..]] }.
DNSpec dnspec_from_json(const nlohmann::json& j);
nlohmann::json dnspec_to_json(const DNSpec& spec);

} // namespace varjet
