#pragma once

#include <string>

#include <json.hpp>

namespace qd {

using Json = nlohmann::json;

// "%.17g", with "-0" folded to "0".
std::string format_double(double x);

// Deterministic JSON text: object keys sorted (nlohmann's default map), floats
// written with 17 significant digits, two-space indentation.
std::string canonical_dump(const Json& j);

}  // namespace qd
