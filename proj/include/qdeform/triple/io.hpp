#pragma once

#include "qdeform/triple/checks.hpp"
#include "qdeform/triple/qiso.hpp"

namespace qd::triple {

Json to_json(const ExactMatrix& m);       // rows of exact strings
ExactMatrix exact_matrix_from_json(const Json& j);
Json to_json(const IsotypicProfile& p);
IsotypicProfile profile_from_json(const Json& j);
Json to_json(const SpectrumTable& t);
Json to_json(const QisoLabels& l);
Json to_json(const QisoDeformation& d);

}  // namespace qd::triple
