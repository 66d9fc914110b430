#include <algorithm>
#include <stdexcept>

#include "qdeform/triple/qiso.hpp"

namespace qd::triple {

std::set<int> algebra_support(const suq2::PeterWeylBasis& pw, const suq2::PodlesData& gens, int length) {
    if (pw.max_n2() < 2 * length) throw std::invalid_argument("Peter-Weyl basis too short for the requested words");
    const auto& r = pw.ring();
    const std::vector<suq2::Element<Surd>> letters{gens.A, gens.B, r.adjoint(gens.B)};
    std::set<int> out;
    std::vector<suq2::Element<Surd>> frontier(1);
    frontier[0].emplace(suq2::unit_monomial, Surd(1));
    for (int len = 0; len <= length; ++len) {
        for (const auto& w : frontier)
            for (const auto& [idx, v] : pw.decompose(w))
                if (!v.is_zero()) out.insert(idx.n2);
        if (len == length) break;
        std::vector<suq2::Element<Surd>> next;
        for (const auto& w : frontier)
            for (const auto& x : letters) next.push_back(r.mul(w, x));
        frontier = std::move(next);
    }
    return out;
}

QisoLabels podles_qiso(const std::set<int>& observed, int bound) {
    if (observed.empty() || !observed.count(0)) throw std::invalid_argument("support must contain the trivial label");
    const int top = *observed.rbegin();
    for (int k = 0; k <= top; ++k)
        if ((k % 2 == 0) != (observed.count(k) > 0))
            throw std::invalid_argument("observed support is not the even labels up to r_" + std::to_string(top));
    QisoLabels out;
    out.ambient = "SU_q(2)";
    out.ring = repcat::FusionRing::suq2();
    out.support = repcat::even_subcategory(out.ring, std::max(bound, top));
    out.derived = "SO_q(3)";
    return out;
}

std::string QisoDeformation::line() const { return "QISO: " + source + " -> " + labels.derived; }

QisoDeformation qiso_deform(const QisoLabels& labels, const repcat::EquivalenceDescriptor& e) {
    auto closure = repcat::check_fusion_closed(labels.ring, labels.support);
    if (!closure.closed)
        throw std::invalid_argument("support not fusion-closed: r_" + std::to_string(closure.a) + " x r_" +
                                    std::to_string(closure.b) + " contains r_" + std::to_string(closure.witness));
    QisoDeformation out;
    out.source = labels.derived;
    out.checks.title = "QISO bookkeeping";
    out.checks.add("support_fusion_closed", true, "to r_" + std::to_string(labels.support.bound));

    out.labels.ambient = e.target_name;
    out.labels.ring = e.target_ring();
    out.labels.support = labels.support;
    out.labels.support.labels.clear();
    for (int k : labels.support.labels) out.labels.support.labels.push_back(e.map({labels.ring.family, k}).index);
    std::sort(out.labels.support.labels.begin(), out.labels.support.labels.end());

    auto image = repcat::check_fusion_closed(out.labels.ring, out.labels.support);
    out.checks.add("image_fusion_closed", image.closed,
                   image.closed ? "" : "r_" + std::to_string(image.a) + " x r_" + std::to_string(image.b));

    out.restricted = repcat::restrict_equivalence(e, labels.support);
    out.labels.derived = out.restricted.target_name;
    const bool agrees = out.restricted.labels == out.labels.support.labels &&
                        out.restricted.labels_truncated == out.labels.support.truncated &&
                        out.restricted.source_name == labels.derived;
    out.checks.add("restriction_matches_support_image", agrees,
                   out.restricted.source_name + " -> " + out.restricted.target_name);
    return out;
}

}  // namespace qd::triple
