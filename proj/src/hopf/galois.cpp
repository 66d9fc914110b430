#include <stdexcept>

#include "qdeform/hopf/galois.hpp"

namespace qd::hopf {

namespace {

// (id (x) f) applied to the H-leg of c(e_i), as a matrix on the space
Matrix leg_functional(const Coaction& c, int dim, const Vec& f) {
    Matrix m = zero_matrix(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (const auto& t : c[i])
            if (!f[t.hopf].is_zero()) m[t.elem][i] += t.coef * f[t.hopf];
    return m;
}

}  // namespace

std::vector<Vec> fixed_vectors(const Coaction& c, int dim, const HopfAlgebra& h) {
    // c(x) = x (x) 1, one equation per (elem, hopf) coordinate
    const int m = h.dim();
    std::map<int, std::map<int, Scalar>> rows;
    for (int i = 0; i < dim; ++i) {
        for (const auto& t : c[i]) rows[t.elem * m + t.hopf][i] += t.coef;
        for (int k = 0; k < m; ++k)
            if (!h.alg.unit[k].is_zero()) rows[i * m + k][i] -= h.alg.unit[k];
    }
    std::vector<Sparse> eqs;
    for (auto& [key, row] : rows) {
        Sparse r;
        for (auto& [u, v] : row)
            if (!v.is_zero()) r.emplace_back(u, v);
        if (!r.empty()) eqs.push_back(r);
    }
    return kernel_basis(eqs, dim);
}

GNSSpace gns(const Bicomodule& b) {
    GNSSpace s;
    const int n = b.alg.dim;
    s.dim = n;
    s.beta1 = b.left;
    s.gram = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) {
        Vec bi_star = b.alg.adjoint(basis_vec(n, i));
        for (int j = 0; j < n; ++j) {
            Vec p = b.alg.mul(bi_star, basis_vec(n, j));
            Scalar w = 0;
            for (int k = 0; k < n; ++k)
                if (!p[k].is_zero()) w += p[k] * b.state[k];
            s.gram[i][j] = w;
        }
    }
    s.checks.title = "GNS space";
    s.checks.add("gram_positive_definite", is_positive_definite(s.gram));

    // <beta(x), beta(y)> = <x, y> 1 as an H-valued inner product
    const HopfAlgebra& h = b.left_hopf;
    std::string bad;
    for (int j = 0; j < n && bad.empty(); ++j)
        for (int l = 0; l < n && bad.empty(); ++l) {
            Vec acc = zero_vec(h.dim());
            for (const auto& t : s.beta1[j])
                for (const auto& u : s.beta1[l]) {
                    const Scalar& g = s.gram[t.elem][u.elem];
                    if (g.is_zero()) continue;
                    Vec hh = h.alg.mul(h.alg.adjoint(basis_vec(h.dim(), t.hopf)), basis_vec(h.dim(), u.hopf));
                    acc = add(acc, scale(hh, t.coef.conj() * u.coef * g));
                }
            if (acc != scale(h.alg.unit, s.gram[j][l])) bad = "(" + b.alg.name(j) + ", " + b.alg.name(l) + ")";
        }
    s.checks.add("beta1_isometric", bad.empty(), bad);
    s.fixed_dim = static_cast<int>(fixed_vectors(s.beta1, n, h).size());
    s.checks.add("ergodic", s.fixed_dim == 1, "fixed space dimension " + std::to_string(s.fixed_dim));
    return s;
}

BoxTensor box_tensor_hilbert(int hilbert_dim, const Coaction& u, const GNSSpace& l2, const HopfAlgebra& h) {
    BoxTensor b;
    b.left_dim = hilbert_dim;
    b.right_dim = l2.dim;
    b.basis = cotensor_space(u, hilbert_dim, l2.beta1, l2.dim, h.dim());
    return b;
}

SpectralDecomposition spectral_subspaces(const Coaction& c, int dim, const HopfAlgebra& h,
                                         const std::vector<Irrep>& irreps) {
    SpectralDecomposition out;
    out.checks.title = "spectral subspaces";
    // dual functionals of the matrix coefficients
    std::vector<Vec> coeffs;
    std::vector<int> owner;
    for (std::size_t x = 0; x < irreps.size(); ++x)
        for (const auto& v : irreps[x].coeffs) {
            coeffs.push_back(v);
            owner.push_back(static_cast<int>(x));
        }
    if (static_cast<int>(coeffs.size()) != h.dim()) throw std::invalid_argument("irreps: coefficients do not span H");
    Coordinates pw(coeffs);
    std::vector<Vec> dual(coeffs.size(), zero_vec(h.dim()));  // dual[a][k] = coefficient a of e_k
    for (int k = 0; k < h.dim(); ++k) {
        auto ck = pw.solve(basis_vec(h.dim(), k));
        for (std::size_t a = 0; a < coeffs.size(); ++a) dual[a][k] = (*ck)[a];
    }
    int total = 0;
    for (std::size_t x = 0; x < irreps.size(); ++x) {
        // kernel of (id (x) f_a) c for every coefficient a outside x
        std::vector<Sparse> eqs;
        for (std::size_t a = 0; a < coeffs.size(); ++a) {
            if (owner[a] == static_cast<int>(x)) continue;
            Matrix m = leg_functional(c, dim, dual[a]);
            for (const auto& row : m) {
                Sparse r = to_sparse(row);
                if (!r.empty()) eqs.push_back(r);
            }
        }
        out.subspaces.push_back(kernel_basis(eqs, dim));
        total += static_cast<int>(out.subspaces.back().size());
    }
    std::vector<Vec> all;
    for (const auto& s : out.subspaces) all.insert(all.end(), s.begin(), s.end());
    bool independent = true;
    try {
        if (!all.empty()) Coordinates check(all);
    } catch (const std::invalid_argument&) {
        independent = false;
    }
    out.checks.add("direct_sum_is_whole_space", independent && total == dim,
                   std::to_string(total) + " of " + std::to_string(dim));
    return out;
}

OmegaBlocks omega_from_sigma(const DualCocycle& sigma, const std::vector<Irrep>& irreps) {
    OmegaBlocks o;
    o.irreps = irreps;
    for (std::size_t x = 0; x < irreps.size(); ++x)
        for (std::size_t y = 0; y < irreps.size(); ++y) {
            const int dx = irreps[x].dim, dy = irreps[y].dim;
            Matrix m = zero_matrix(dx * dy, dx * dy);
            for (int i = 0; i < dx; ++i)
                for (int k = 0; k < dy; ++k)
                    for (int j = 0; j < dx; ++j)
                        for (int l = 0; l < dy; ++l)
                            m[i * dy + k][j * dy + l] = sigma.eval(irreps[x].u(i, j), irreps[y].u(k, l));
            o.blocks[{static_cast<int>(x), static_cast<int>(y)}] = m;
        }
    return o;
}

DualCocycle sigma_from_omega(const OmegaBlocks& omega, int hopf_dim) {
    std::vector<Vec> coeffs;
    struct Slot {
        int x, i, j;
    };
    std::vector<Slot> slots;
    for (std::size_t x = 0; x < omega.irreps.size(); ++x) {
        const auto& r = omega.irreps[x];
        for (int i = 0; i < r.dim; ++i)
            for (int j = 0; j < r.dim; ++j) {
                coeffs.push_back(r.u(i, j));
                slots.push_back({static_cast<int>(x), i, j});
            }
    }
    if (static_cast<int>(coeffs.size()) != hopf_dim) throw std::invalid_argument("irreps: coefficients do not span H");
    Coordinates pw(coeffs);
    std::vector<Vec> c(hopf_dim);
    for (int k = 0; k < hopf_dim; ++k) c[k] = *pw.solve(basis_vec(hopf_dim, k));
    DualCocycle s{hopf_dim, zero_vec(hopf_dim * hopf_dim)};
    for (int a = 0; a < hopf_dim; ++a)
        for (int b = 0; b < hopf_dim; ++b) {
            Scalar v = 0;
            for (std::size_t p = 0; p < slots.size(); ++p) {
                if (c[a][p].is_zero()) continue;
                for (std::size_t q = 0; q < slots.size(); ++q) {
                    if (c[b][q].is_zero()) continue;
                    const auto& sp = slots[p];
                    const auto& sq = slots[q];
                    const int dy = omega.irreps[sq.x].dim;
                    const Matrix& m = omega.blocks.at({sp.x, sq.x});
                    v += c[a][p] * c[b][q] * m[sp.i * dy + sq.i][sp.j * dy + sq.j];
                }
            }
            s.table[a * hopf_dim + b] = v;
        }
    return s;
}

Report check_omega(const OmegaBlocks& omega, const HopfAlgebra& h) {
    Report rep;
    rep.title = "Omega";
    std::string bad;
    for (const auto& [key, m] : omega.blocks)
        if (matmul(dagger(m), m) != identity_matrix(static_cast<int>(m.size())) && bad.empty())
            bad = omega.irreps[key.first].name + " x " + omega.irreps[key.second].name;
    rep.add("unitary", bad.empty(), bad);
    int trivial = -1;
    for (std::size_t x = 0; x < omega.irreps.size(); ++x)
        if (omega.irreps[x].dim == 1 && omega.irreps[x].coeffs[0] == h.alg.unit) trivial = static_cast<int>(x);
    bad = trivial < 0 ? "no trivial irrep" : "";
    for (std::size_t y = 0; y < omega.irreps.size() && bad.empty(); ++y) {
        const int d = omega.irreps[y].dim;
        if (omega.blocks.at({trivial, static_cast<int>(y)}) != identity_matrix(d) ||
            omega.blocks.at({static_cast<int>(y), trivial}) != identity_matrix(d))
            bad = omega.irreps[y].name;
    }
    rep.add("normalized", bad.empty(), bad);
    return rep;
}

}  // namespace qd::hopf
