#pragma once

#include <nlohmann/json.hpp>

#include "hyperlat/lattice.hpp"
#include "hyperlat/polynomial.hpp"
#include "hyperlat/salem.hpp"

// JSON wire formats. Integers are emitted as JSON numbers while they fit
// exactly in a double-safe range (|x| < 2^53) and as decimal strings beyond
// that; both forms are accepted on input. Floats are rejected everywhere.
namespace hyperlat::jsonio {

nlohmann::json int_json(const Int& x);
Int json_int(const nlohmann::json& j);

nlohmann::json vec_json(const IntVec& v);
IntVec json_vec(const nlohmann::json& j);

nlohmann::json matrix_json(const IntMatrix& m);
IntMatrix json_matrix(const nlohmann::json& j);

// {"coeffs": [a0, a1, ...]} ascending.
nlohmann::json poly_json(const IntPolynomial& p);
IntPolynomial json_poly(const nlohmann::json& j);

// {"label": ..., "rank": ..., "gram": [[...]]}
nlohmann::json lattice_json(const Lattice& l);
Lattice json_lattice(const nlohmann::json& j);

// {"lattice": label, "matrix": [[...]]}; validated against the owner.
nlohmann::json isometry_json(const Isometry& f);
Isometry json_isometry(const nlohmann::json& j, const Lattice& owner);

// {"lattice": label, "basis": [[...]]}; columns span the sublattice.
nlohmann::json embedding_json(const Embedding& e);
Embedding json_embedding(const nlohmann::json& j, const Lattice& ambient);

nlohmann::json report_json(const FactorReport& r);
FactorReport json_report(const nlohmann::json& j);

// Accessors that throw MalformedInput with the offending key.
const nlohmann::json& field(const nlohmann::json& j, const char* key);
std::string string_field(const nlohmann::json& j, const char* key);

}  // namespace hyperlat::jsonio
