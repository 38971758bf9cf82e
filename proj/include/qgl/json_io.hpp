#pragma once

#include <json.hpp>

#include "qgl/expr.hpp"
#include "qgl/kelement.hpp"
#include "qgl/verify.hpp"

namespace qgl {

// Scalar: exponent (quarter powers of q) -> "num/den"; fraction scalars get a
// {num, den} envelope.
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json evaluated_json(const Evaluated& e);
nlohmann::json matrix_json(const MatrixType& m);
nlohmann::json ncpoly_json(const NCPoly& p);         // list of {word, coeff}
nlohmann::json localized_json(const LocalizedElement& e);
nlohmann::json kelement_json(const KElement& e);
nlohmann::json ktensor_json(const KTensor& t);
nlohmann::json report_json(const Report& r);

MatrixType matrix_from_json(const nlohmann::json& j);

// Structure-constant table export, header L,M,N,value.
std::string table_csv(bool circ_model, long long q, StructureContext& ctx);

} // namespace qgl
