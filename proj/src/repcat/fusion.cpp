#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qdeform/repcat/repcat.hpp"

namespace qd::repcat {

std::string family_name(Family f) { return f == Family::SUq2 ? "SU_q(2)" : "A_o(F)"; }

std::string label_name(const IrrepLabel& x) { return "r_" + std::to_string(x.index); }

std::vector<IrrepLabel> fuse(const FusionRing& ring, const IrrepLabel& a, const IrrepLabel& b) {
    if (a.family != ring.family || b.family != ring.family)
        throw std::invalid_argument("fuse: labels from different fusion rings");
    if (a.index < 0 || b.index < 0) throw std::invalid_argument("fuse: negative label");
    std::vector<IrrepLabel> out;
    for (int c = std::abs(a.index - b.index); c <= a.index + b.index; c += 2) out.push_back({ring.family, c});
    return out;
}

mpz_class dim_classical(const FusionRing& ring, const IrrepLabel& x) {
    if (ring.m < 2) throw std::invalid_argument("dim_classical: need m >= 2");
    if (x.index < 0) throw std::invalid_argument("dim_classical: negative label");
    if (ring.m == 2) return x.index + 1;
    mpz_class prev = 1, cur = ring.m;
    if (x.index == 0) return prev;
    for (int k = 1; k < x.index; ++k) {
        mpz_class next = ring.m * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational dim_quantum(const IrrepLabel& x, const Rational& q) {
    if (sgn(q) == 0) throw std::invalid_argument("dim_quantum: q = 0");
    // [k+1]_q = q^k + q^(k-2) + ... + q^-k
    Rational sum = 0;
    for (int j = -x.index; j <= x.index; j += 2) sum += pow(q, j);
    return sum;
}

bool Subcategory::contains(int k) const {
    if (k > bound) {
        if (!truncated) return false;
        // the listed pattern repeats with period two beyond the bound
        while (k > bound) k -= 2;
    }
    return std::binary_search(labels.begin(), labels.end(), k);
}

ClosureReport check_fusion_closed(const FusionRing& ring, const Subcategory& s) {
    ClosureReport rep;
    if (!std::binary_search(s.labels.begin(), s.labels.end(), 0)) {
        rep.closed = false;
        rep.witness = 0;
        return rep;
    }
    for (int a : s.labels)
        for (int b : s.labels)
            for (const auto& c : fuse(ring, {ring.family, a}, {ring.family, b})) {
                bool known = c.index <= s.bound || !s.truncated;
                if (known && !s.contains(c.index)) {
                    rep = {false, a, b, c.index};
                    return rep;
                }
            }
    return rep;
}

Subcategory even_subcategory(const FusionRing& ring, int bound) {
    Subcategory s;
    for (int k = 0; k <= bound; k += 2) s.labels.push_back(k);
    s.bound = bound;
    s.truncated = true;
    s.name = "even";
    if (!check_fusion_closed(ring, s).closed) throw std::logic_error("even labels not fusion-closed");
    return s;
}

Subcategory full_subcategory(int bound) {
    Subcategory s;
    for (int k = 0; k <= bound; ++k) s.labels.push_back(k);
    s.bound = bound;
    s.name = "full";
    return s;
}

EquivalenceDescriptor restrict_equivalence(const EquivalenceDescriptor& e, const Subcategory& s) {
    auto rep = check_fusion_closed(e.source_ring(), s);
    if (!rep.closed) {
        std::ostringstream msg;
        msg << "restrict_equivalence: label set not fusion-closed (r_" << rep.a << " x r_" << rep.b << " contains r_"
            << rep.witness << ")";
        throw std::invalid_argument(msg.str());
    }
    EquivalenceDescriptor out = e;
    if (s.name == "full") return out;
    out.labels = s.labels;
    out.labels_truncated = s.truncated;
    if (s.name == "even") {
        out.source_name = e.source_name == "SU_q(2)" ? "SO_q(3)" : e.source_name + "_even";
        out.target_name = e.target_name == "A_o(F)" ? "I(F)" : e.target_name + "_even";
    } else {
        out.source_name = e.source_name + "|" + s.name;
        out.target_name = e.target_name + "|" + s.name;
    }
    return out;
}

std::vector<DimensionRow> dimension_table(const FusionRing& ring, int max_k, const Rational& q) {
    std::vector<DimensionRow> rows;
    for (int k = 0; k <= max_k; ++k) {
        IrrepLabel x{ring.family, k};
        rows.push_back({x, dim_classical(ring, x), dim_quantum(x, q)});
    }
    return rows;
}

std::string dimension_csv(const std::vector<DimensionRow>& rows) {
    std::ostringstream out;
    out << "label,classical_dim,quantum_dim\n";
    for (const auto& r : rows) out << label_name(r.label) << "," << r.classical.get_str() << "," << to_string(r.quantum) << "\n";
    return out.str();
}

}  // namespace qd::repcat
