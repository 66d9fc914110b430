#pragma once

#include "qdeform/suq2/spinor.hpp"

namespace qd::suq2 {

// {"N", "q", "elements": [{"n","k","l","d","norm2","gauge"}]}
Json to_json(const PeterWeylBasis& pw);
// {"q","t","c","c1","c2","N","basis","A","B","Bstar","D","isotypic","reduced","literal_residual","checks"}
Json to_json(const TruncatedPodles& p);
Json to_json(const RelationResiduals& r);

}  // namespace qd::suq2
