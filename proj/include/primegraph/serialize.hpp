#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "primegraph/matrix.hpp"
#include "primegraph/polynomial.hpp"

namespace primegraph {

// coefficient array, lowest degree first, decimal strings (exact)
nlohmann::json poly_to_json(const IntPolynomial& p);

// rows of decimal / "p/q" strings
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json matrix_to_json(const RatMatrix& m);

// column-aligned plain text
std::string matrix_to_table(const IntMatrix& m);
std::string matrix_to_table(const RatMatrix& m);

}  // namespace primegraph
