#include <algorithm>

#include "qdeform/triple/finite.hpp"

namespace qd::triple {

IsotypicProfile profile_from_finite(const hopf::FiniteEquivariantTriple& t) {
    IsotypicProfile p;
    p.group = t.name;
    std::vector<std::vector<Surd>> eig(t.irreps.size());
    for (const auto& b : hopf::isotypic_profile(t))
        for (int i = 0; i < b.multiplicity; ++i) eig.at(b.irrep).emplace_back(b.eigenvalue);
    for (std::size_t x = 0; x < eig.size(); ++x) {
        if (eig[x].empty()) continue;
        std::sort(eig[x].begin(), eig[x].end(), [](const Surd& a, const Surd& b) { return a.value() < b.value(); });
        ProfileBlock b;
        b.label = static_cast<int>(x);
        b.irrep_dim = t.irreps[x].dim;
        b.multiplicity = static_cast<int>(eig[x].size());
        b.dirac = ExactMatrix::diagonal(eig[x]);
        b.twist = ExactMatrix::identity(b.multiplicity);
        b.woronowicz = ExactMatrix::identity(t.irreps[x].dim);
        b.qdim = t.irreps[x].dim;
        p.blocks.push_back(std::move(b));
    }
    p.canonicalize();
    return p;
}

LabelEquivalence finite_cocycle_equivalence(const hopf::FiniteEquivariantTriple& t) {
    std::vector<int> dims;
    for (const auto& x : t.irreps) dims.push_back(x.dim);
    return cocycle_equivalence(t.name, t.name + "^sigma", dims);
}

bool same_spectrum(const SpectrumTable& t, const hopf::ExactSpectrum& s) {
    if (!s.resolved || t.size() != s.eigen.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& e = t[i].eigenvalue;
        if (!e.exact || !(*e.exact == Surd(s.eigen[i].first)) || t[i].multiplicity != s.eigen[i].second) return false;
    }
    return true;
}

}  // namespace qd::triple
