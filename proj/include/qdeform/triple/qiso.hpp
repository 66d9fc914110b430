#pragma once

#include <set>

#include "qdeform/suq2/podles.hpp"
#include "qdeform/triple/profile.hpp"

namespace qd::triple {

struct QisoLabels {
    std::string ambient;          // QISO+ descriptor, e.g. "SU_q(2)"
    repcat::FusionRing ring;
    repcat::Subcategory support;  // I = {x : A_x != 0}
    std::string derived;          // e.g. "SO_q(3)"
};

// Labels r_k of all Peter-Weyl components of words of length <= `length` in
// the generators A, B, B*; pw must reach 2 * length.
std::set<int> algebra_support(const suq2::PeterWeylBasis& pw, const suq2::PodlesData& gens, int length);

// SU_q(2) acting on the Podles sphere: the support is the even subcategory,
// checked against `observed` up to its largest element and closed to `bound`.
// Throws std::invalid_argument when the observed labels are not all even.
QisoLabels podles_qiso(const std::set<int>& observed, int bound = 20);

struct QisoDeformation {
    QisoLabels labels;
    repcat::EquivalenceDescriptor restricted;  // e restricted to the support
    Report checks;

    std::string line() const;  // "QISO: <source> -> <target>"
    std::string source;
};

// Throws std::invalid_argument when the support is not fusion-closed.
QisoDeformation qiso_deform(const QisoLabels& labels, const repcat::EquivalenceDescriptor& e);

}  // namespace qd::triple
