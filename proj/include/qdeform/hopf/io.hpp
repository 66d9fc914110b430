#pragma once

#include <optional>
#include <string>

#include "qdeform/hopf/triple.hpp"
#include "qdeform/scalar/format.hpp"

namespace qd::hopf {

// Scalars are written as [re, im] in %.17g; readers accept that form, exact
// strings such as "1/2" or "-1/2+1/2*sqrt3", and [re, im] pairs of either.
// Doubles are snapped to Q(i, sqrt3) with small denominators.
Json scalar_to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j);

// {"dim", "product": [[i, j, k, c]], "coproduct": [[i, l, r, c]], "counit": [c],
//  "antipode": [[i, j, c]], "star": [[i, j, c]], "unit": index or vector, "names"}
Json to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j);

// {"sigma": [c, ...]} row-major over basis pairs, plus "exact" strings for a lossless round trip.
Json to_json(const DualCocycle& sigma);
DualCocycle cocycle_from_json(const Json& j, int dim);

Json to_json(const FiniteEquivariantTriple& t);
FiniteEquivariantTriple triple_from_json(const Json& j);

// Built-in instances by name: "z2", "z2z2", "z3z3", "z4", "s3".
struct Instance {
    std::string name;
    HopfAlgebra hopf;
    DualCocycle sigma;
    std::optional<FiniteEquivariantTriple> triple;
};

Instance builtin_instance(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace qd::hopf
