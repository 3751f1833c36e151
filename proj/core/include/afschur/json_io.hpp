#pragma once

#include <json.hpp>

#include "afschur/laurent.hpp"
#include "afschur/periodic_matrix.hpp"

namespace afschur {

using Json = nlohmann::ordered_json;

/// Laurent polynomial as a list of [exponent, coefficient] pairs sorted by
/// exponent.  Coefficients that fit in 64 bits are emitted as numbers,
/// anything larger as a decimal string.
Json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j);

/// PeriodicMatrix as {"n": n, "entries": [[i, j, a_ij], ...]} with 1 <= i <= n.
Json matrix_to_json(const PeriodicMatrix& A);
PeriodicMatrix matrix_from_json(const Json& j);

/// Compact one-line forms for CSV cells: "1,2:1;2,1:3" and "v^2 - 1".
std::string matrix_to_compact(const PeriodicMatrix& A);

}  // namespace afschur
