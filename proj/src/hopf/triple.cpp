#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdeform/hopf/triple.hpp"

namespace qd::hopf {

std::vector<Vec> corep_entries(const Coaction& u, int dim, int hopf_dim) {
    std::vector<Vec> out(dim * dim, zero_vec(hopf_dim));
    for (int j = 0; j < dim; ++j)
        for (const auto& t : u[j]) out[t.elem * dim + j][t.hopf] += t.coef;
    return out;
}

namespace {

std::string pair_name(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

Matrix rep_of(const std::vector<Matrix>& rep, const Vec& x, int d) {
    Matrix m = zero_matrix(d, d);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!rep[k][i][j].is_zero()) m[i][j] += x[k] * rep[k][i][j];
    }
    return m;
}

// checks that `rep` is a unital *-representation of `alg` on the standard inner product
void check_star_rep(const Algebra& alg, const std::vector<Matrix>& rep, int d, Report& out, const std::string& prefix) {
    const int n = alg.dim;
    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j)
            if (rep_of(rep, alg.mul(basis_vec(n, i), basis_vec(n, j)), d) != matmul(rep[i], rep[j]))
                bad = "(" + alg.name(i) + ", " + alg.name(j) + ")";
    out.add(prefix + "multiplicative", bad.empty(), bad);
    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        if (rep_of(rep, alg.adjoint(basis_vec(n, i)), d) != dagger(rep[i])) bad = alg.name(i);
    out.add(prefix + "star_preserving", bad.empty(), bad);
    out.add(prefix + "unital", rep_of(rep, alg.unit, d) == identity_matrix(d));
}

// the operator sum z_ij pi(a_i) (x) L(b_j) on H (x) L^2(B)
Vec act_tensor(const Vec& z, const std::vector<Matrix>& rep, const Algebra& b, int d, const Vec& v) {
    const int nb = b.dim;
    Vec out = zero_vec(d * nb);
    for (std::size_t idx = 0; idx < z.size(); ++idx) {
        if (z[idx].is_zero()) continue;
        const int ai = static_cast<int>(idx) / nb, bj = static_cast<int>(idx) % nb;
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < nb; ++q) {
                const Scalar& x = v[p * nb + q];
                if (x.is_zero()) continue;
                for (int r = 0; r < d; ++r) {
                    const Scalar& m = rep[ai][r][p];
                    if (m.is_zero()) continue;
                    for (const auto& [k, c] : b.product[bj * nb + q]) out[r * nb + k] += z[idx] * m * x * c;
                }
            }
    }
    return out;
}

Scalar inner(const Vec& x, const Vec& y, const Matrix& gram_right, int d) {
    // <x, y> on H (x) L^2(B) with the identity on the first leg
    const int nb = static_cast<int>(gram_right.size());
    Scalar s = 0;
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < nb; ++q) {
            const Scalar& a = x[p * nb + q];
            if (a.is_zero()) continue;
            Scalar ac = a.conj();
            for (int r = 0; r < nb; ++r) {
                const Scalar& b = y[p * nb + r];
                if (!b.is_zero() && !gram_right[q][r].is_zero()) s += ac * gram_right[q][r] * b;
            }
        }
    return s;
}

double max_norm(const std::vector<Vec>& vs) {
    double m = 0;
    for (const auto& v : vs) m = std::max(m, norm(v));
    return m;
}

}  // namespace

Report check_triple(const FiniteEquivariantTriple& t) {
    Report rep;
    rep.title = "equivariant triple " + t.name;
    const int d = t.hilbert_dim, m = t.hopf.dim();
    const HopfAlgebra& h = t.hopf;
    rep.merge(check_comodule_algebra(t.algebra, h), "algebra");
    check_star_rep(t.algebra.alg, t.rep, d, rep, "rep_");

    auto u = corep_entries(t.corep, d, m);
    std::string bad;
    for (int i = 0; i < d && bad.empty(); ++i)
        for (int j = 0; j < d && bad.empty(); ++j) {
            Vec rhs = zero_vec(m * m);
            for (int k = 0; k < d; ++k) rhs = add(rhs, kron(u[i * d + k], u[k * d + j]));
            if (h.delta(u[i * d + j]) != rhs) bad = pair_name(i, j);
        }
    rep.add("corepresentation", bad.empty(), bad);
    bad.clear();
    for (int i = 0; i < d && bad.empty(); ++i)
        for (int j = 0; j < d && bad.empty(); ++j) {
            Vec a = zero_vec(m), b = zero_vec(m);
            for (int k = 0; k < d; ++k) {
                a = add(a, h.alg.mul(h.alg.adjoint(u[k * d + i]), u[k * d + j]));
                b = add(b, h.alg.mul(u[i * d + k], h.alg.adjoint(u[j * d + k])));
            }
            Vec target = i == j ? h.alg.unit : zero_vec(m);
            if (a != target || b != target) bad = pair_name(i, j);
        }
    rep.add("corepresentation_unitary", bad.empty(), bad);

    // (pi (x) id) alpha(a) = U (pi(a) (x) 1) U*
    bad.clear();
    for (int a = 0; a < t.algebra.alg.dim && bad.empty(); ++a)
        for (int i = 0; i < d && bad.empty(); ++i)
            for (int k = 0; k < d && bad.empty(); ++k) {
                Vec lhs = zero_vec(m), rhs = zero_vec(m);
                for (const auto& term : t.algebra.coaction[a])
                    if (!t.rep[term.elem][i][k].is_zero()) lhs[term.hopf] += term.coef * t.rep[term.elem][i][k];
                for (int j = 0; j < d; ++j)
                    for (int l = 0; l < d; ++l)
                        if (!t.rep[a][j][l].is_zero())
                            rhs = add(rhs, scale(h.alg.mul(u[i * d + j], h.alg.adjoint(u[k * d + l])), t.rep[a][j][l]));
                if (lhs != rhs) bad = t.algebra.alg.name(a) + " at " + pair_name(i, k);
            }
    rep.add("covariant", bad.empty(), bad);

    rep.add("dirac_selfadjoint", dagger(t.dirac) == t.dirac);
    bad.clear();
    for (int i = 0; i < d && bad.empty(); ++i)
        for (int j = 0; j < d && bad.empty(); ++j) {
            Vec a = zero_vec(m), b = zero_vec(m);
            for (int k = 0; k < d; ++k) {
                a = add(a, scale(u[i * d + k], t.dirac[k][j]));
                b = add(b, scale(u[k * d + j], t.dirac[i][k]));
            }
            if (a != b) bad = pair_name(i, j);
        }
    rep.add("dirac_equivariant", bad.empty(), bad);
    bool r_ok = matmul(t.twist, t.dirac) == matmul(t.dirac, t.twist) && dagger(t.twist) == t.twist &&
                is_positive_definite(t.twist);
    rep.add("twist_positive_commuting", r_ok);
    return rep;
}

FiniteEquivariantTriple group_toy_triple(const FiniteGroup& g) {
    FiniteEquivariantTriple t;
    t.name = g.name;
    t.hopf = group_algebra(g);
    const int n = g.order;
    t.algebra = {t.hopf.alg, Side::Right, regular_coaction(t.hopf, Side::Right)};
    t.hilbert_dim = n;
    t.corep.resize(n);
    t.dirac = zero_matrix(n, n);
    for (int a = 0; a < n; ++a) {
        Matrix m = zero_matrix(n, n);
        for (int b = 0; b < n; ++b) m[g.mul(a, b)][b] = 1;
        t.rep.push_back(m);
        t.corep[a] = {{a, a, Scalar(1)}};
        int s = 0;
        for (int c : g.coords(a)) s += c;
        t.dirac[a][a] = s;
    }
    t.twist = identity_matrix(n);
    t.irreps = group_algebra_irreps(g);
    return t;
}

FiniteEquivariantTriple s3_toy_triple() {
    FiniteGroup g = symmetric3();
    FiniteEquivariantTriple t;
    t.name = "S3";
    t.hopf = function_algebra(g);
    const int n = g.order;
    t.algebra = {t.hopf.alg, Side::Right, regular_coaction(t.hopf, Side::Right)};
    t.hilbert_dim = n;
    t.corep.resize(n);
    t.dirac = zero_matrix(n, n);
    for (int x = 0; x < n; ++x) {
        Matrix m = zero_matrix(n, n);
        m[x][x] = 1;
        t.rep.push_back(m);
        // u_ij = delta_{i^-1 j}
        for (int i = 0; i < n; ++i) t.corep[x].push_back({i, g.mul(g.inverse[i], x), Scalar(1)});
        for (int s : {3, 4, 5}) t.dirac[g.mul(s, x)][x] += 1;
    }
    t.twist = identity_matrix(n);
    t.irreps = s3_function_irreps(g);
    return t;
}

PiSigma pi_sigma(const FiniteEquivariantTriple& t, const DualCocycle& sigma, StarConvention star) {
    PiSigma out;
    TwistedComodule tw = twist_comodule_algebra(t.algebra, t.hopf, sigma, star);
    out.twisted = tw.algebra.alg;
    DualCocycle inv = convolution_inverse(t.hopf, sigma);
    const int d = t.hilbert_dim;
    for (int k = 0; k < t.algebra.alg.dim; ++k) {
        Matrix m = zero_matrix(d, d);
        for (int j = 0; j < d; ++j)
            for (const auto& a : t.algebra.coaction[k])
                for (const auto& x : t.corep[j]) {
                    Scalar c = inv(a.hopf, x.hopf);
                    if (c.is_zero()) continue;
                    c *= a.coef * x.coef;
                    for (int r = 0; r < d; ++r)
                        if (!t.rep[a.elem][r][x.elem].is_zero()) m[r][j] += c * t.rep[a.elem][r][x.elem];
                }
        out.rep.push_back(m);
    }
    out.checks.title = "pi_sigma";
    check_star_rep(out.twisted, out.rep, d, out.checks, "");
    return out;
}

DeformedTriple deform_triple_finite(const FiniteEquivariantTriple& t, const DualCocycle& sigma) {
    DeformedTriple out;
    const HopfAlgebra& h = t.hopf;
    const int d = t.hilbert_dim;
    out.galois = smash_left(h, sigma);
    const Bicomodule& b = out.galois.object;
    const int nb = b.alg.dim;
    out.l2 = gns(b);
    out.htilde = box_tensor_hilbert(d, t.corep, out.l2, h);
    out.atilde = cotensor(t.algebra, b.as_left(), h);
    Report& rep = out.checks;
    rep.title = "deformed triple " + t.name;
    rep.merge(out.galois.checks, "galois");
    rep.merge(out.l2.checks, "l2");
    rep.merge(out.atilde.sub.checks, "atilde");
    const auto& basis = out.htilde.basis;
    const int n = static_cast<int>(basis.size());
    rep.add("dimension_preserved", n == d, std::to_string(n) + " vs " + std::to_string(d));
    if (n == 0) return out;
    Coordinates coords(basis);

    out.gram = zero_matrix(n, n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) out.gram[a][c] = inner(basis[a], basis[c], out.l2.gram, d);
    rep.add("htilde_inner_product_positive", is_positive_definite(out.gram));

    // D~ = (D (x) id) restricted
    Matrix d_ext = kron_matrix(t.dirac, identity_matrix(nb));
    out.dirac = zero_matrix(n, n);
    bool preserved = true;
    for (int a = 0; a < n; ++a) {
        auto c = coords.solve(mat_vec(d_ext, basis[a]));
        if (!c) {
            preserved = false;
            continue;
        }
        for (int r = 0; r < n; ++r) out.dirac[r][a] = (*c)[r];
    }
    rep.add("dirac_preserves_htilde", preserved);
    rep.add("dirac_selfadjoint", matmul(out.gram, out.dirac) == matmul(dagger(out.dirac), out.gram));

    // A~ acting on H~
    const auto& az = out.atilde.sub.basis;
    bool acts = true;
    for (const auto& z : az) {
        Matrix m = zero_matrix(n, n);
        for (int a = 0; a < n; ++a) {
            auto c = coords.solve(act_tensor(z, t.rep, b.alg, d, basis[a]));
            if (!c) {
                acts = false;
                continue;
            }
            for (int r = 0; r < n; ++r) m[r][a] = (*c)[r];
        }
        out.rep.push_back(m);
    }
    rep.add("atilde_preserves_htilde", acts);
    if (acts) {
        const Algebra& at = out.atilde.sub.alg;
        const int na = at.dim;
        std::string bad;
        for (int i = 0; i < na && bad.empty(); ++i) {
            for (int j = 0; j < na && bad.empty(); ++j) {
                Vec p = at.mul(basis_vec(na, i), basis_vec(na, j));
                Matrix lhs = zero_matrix(n, n);
                for (int k = 0; k < na; ++k)
                    if (!p[k].is_zero())
                        for (int r = 0; r < n; ++r)
                            for (int c = 0; c < n; ++c) lhs[r][c] += p[k] * out.rep[k][r][c];
                if (lhs != matmul(out.rep[i], out.rep[j])) bad = "(z" + std::to_string(i) + ", z" + std::to_string(j) + ")";
            }
            Vec s = at.adjoint(basis_vec(na, i));
            Matrix star = zero_matrix(n, n);
            for (int k = 0; k < na; ++k)
                if (!s[k].is_zero())
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c) star[r][c] += s[k] * out.rep[k][r][c];
            if (bad.empty() && matmul(out.gram, star) != matmul(dagger(out.rep[i]), out.gram)) bad = "z" + std::to_string(i) + " (star)";
        }
        rep.add("atilde_star_representation", bad.empty(), bad);
    }

    // U~ from beta_2 on the L^2(B) leg
    const HopfAlgebra& hs = b.right_hopf;
    const int m = hs.dim();
    out.corep.assign(n, {});
    bool corep_ok = true;
    std::vector<std::vector<Vec>> slices(n);
    for (int a = 0; a < n; ++a) {
        std::vector<Vec> slice(m, zero_vec(d * nb));
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < nb; ++q) {
                const Scalar& x = basis[a][p * nb + q];
                if (x.is_zero()) continue;
                for (const auto& term : b.right[q]) slice[term.hopf][p * nb + term.elem] += x * term.coef;
            }
        for (int k = 0; k < m; ++k) {
            if (is_zero_vec(slice[k])) continue;
            auto c = coords.solve(slice[k]);
            if (!c) {
                corep_ok = false;
                continue;
            }
            for (int r = 0; r < n; ++r)
                if (!(*c)[r].is_zero()) out.corep[a].push_back({r, k, (*c)[r]});
        }
    }
    rep.add("utilde_preserves_htilde", corep_ok);
    if (corep_ok) {
        // D~ (x) id commutes with U~
        std::string bad;
        for (int a = 0; a < n && bad.empty(); ++a) {
            Vec lhs = zero_vec(n * m), rhs = zero_vec(n * m);
            for (const auto& term : out.corep[a])
                for (int r = 0; r < n; ++r)
                    if (!out.dirac[r][term.elem].is_zero()) lhs[r * m + term.hopf] += out.dirac[r][term.elem] * term.coef;
            for (int c = 0; c < n; ++c) {
                if (out.dirac[c][a].is_zero()) continue;
                for (const auto& term : out.corep[c]) rhs[term.elem * m + term.hopf] += out.dirac[c][a] * term.coef;
            }
            if (lhs != rhs) bad = "v" + std::to_string(a);
        }
        rep.add("utilde_commutes_with_dirac", bad.empty(), bad);
    }

    out.spectrum = exact_spectrum(out.dirac);
    out.original_spectrum = exact_spectrum(t.dirac);
    rep.add("spectrum_exact", out.spectrum.resolved && out.original_spectrum.resolved);
    rep.add("isospectral", out.spectrum.eigen == out.original_spectrum.eigen);
    return out;
}

EquivalenceReport verify_cocycle_equivalence(const FiniteEquivariantTriple& t, const DualCocycle& sigma,
                                             StarConvention star) {
    EquivalenceReport out;
    Report& rep = out.checks;
    rep.title = "cocycle equivalence " + t.name;
    DeformedTriple dt = deform_triple_finite(t, sigma);
    rep.merge(dt.checks, "deformed");
    PiSigma ps = pi_sigma(t, sigma, star);
    rep.merge(ps.checks, "pi_sigma");

    const int d = t.hilbert_dim, m = t.hopf.dim();
    const Algebra& b = dt.galois.object.alg;
    const int nb = b.dim;
    auto u = corep_entries(t.corep, d, m);
    // phi(e_j) = sum_i e_i (x) Lambda(u_ij)
    std::vector<Vec> phi(d, zero_vec(d * nb));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < m; ++k) phi[j][i * nb + k] += u[i * d + j][k];

    if (dt.htilde.basis.empty()) {
        rep.add("phi_into_htilde", false, "empty box tensor");
        return out;
    }
    Coordinates coords(dt.htilde.basis);
    bool into = true;
    for (const auto& v : phi) into = into && coords.solve(v).has_value();
    rep.add("phi_into_htilde", into);
    bool isometric = true;
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l)
            isometric = isometric && inner(phi[j], phi[l], dt.l2.gram, d) == Scalar(j == l ? 1 : 0);
    rep.add("phi_isometric", isometric);
    rep.add("phi_onto", static_cast<int>(dt.htilde.basis.size()) == d);

    Matrix d_ext = kron_matrix(t.dirac, identity_matrix(nb));
    std::vector<Vec> dres;
    for (int j = 0; j < d; ++j) {
        Vec lhs = zero_vec(d * nb);
        for (int k = 0; k < d; ++k)
            if (!t.dirac[k][j].is_zero()) lhs = add(lhs, scale(phi[k], t.dirac[k][j]));
        dres.push_back(sub(lhs, mat_vec(d_ext, phi[j])));
    }
    out.dirac_residual = max_norm(dres);
    bool dirac_exact = std::all_of(dres.begin(), dres.end(), [](const Vec& v) { return is_zero_vec(v); });
    rep.add("phi_intertwines_dirac", dirac_exact, "residual " + format_double(out.dirac_residual));

    // phi(a ._sigma xi) = lambda(a) phi(xi), lambda(a) = a0 (x) (a1 # 1)
    std::vector<Vec> mres;
    for (int a = 0; a < t.algebra.alg.dim; ++a) {
        Vec lam = coact(t.algebra, m, basis_vec(t.algebra.alg.dim, a));
        for (int j = 0; j < d; ++j) {
            Vec lhs = zero_vec(d * nb);
            for (int k = 0; k < d; ++k)
                if (!ps.rep[a][k][j].is_zero()) lhs = add(lhs, scale(phi[k], ps.rep[a][k][j]));
            mres.push_back(sub(lhs, act_tensor(lam, t.rep, b, d, phi[j])));
        }
    }
    out.module_residual = max_norm(mres);
    bool module_exact = std::all_of(mres.begin(), mres.end(), [](const Vec& v) { return is_zero_vec(v); });
    rep.add("phi_module_map", module_exact, "residual " + format_double(out.module_residual));
    return out;
}

FiniteEquivariantTriple twisted_triple(const FiniteEquivariantTriple& t, const DualCocycle& sigma) {
    FiniteEquivariantTriple out = t;
    out.name = t.name + "^sigma";
    PiSigma ps = pi_sigma(t, sigma);
    out.hopf = twist_hopf(t.hopf, sigma);
    out.algebra.alg = ps.twisted;
    out.rep = ps.rep;
    return out;
}

Report round_trip(const FiniteEquivariantTriple& t, const DualCocycle& sigma) {
    Report rep;
    rep.title = "round trip " + t.name;
    FiniteEquivariantTriple tw = twisted_triple(t, sigma);
    rep.merge(check_triple(tw), "twisted");
    DualCocycle inv = convolution_inverse(t.hopf, sigma);
    rep.merge(check_dual_cocycle(tw.hopf, inv), "inverse_cocycle");
    FiniteEquivariantTriple back = twisted_triple(tw, inv);
    rep.add("hopf_restored", same_structure(back.hopf, t.hopf));
    const int n = t.algebra.alg.dim;
    bool alg = true;
    for (int i = 0; i < n; ++i) {
        Vec e = basis_vec(n, i);
        alg = alg && back.algebra.alg.adjoint(e) == t.algebra.alg.adjoint(e);
        for (int j = 0; j < n; ++j) alg = alg && back.algebra.alg.mul(e, basis_vec(n, j)) == t.algebra.alg.mul(e, basis_vec(n, j));
    }
    rep.add("algebra_restored", alg);
    rep.add("representation_restored", back.rep == t.rep);
    rep.add("dirac_restored", back.dirac == t.dirac);
    return rep;
}

std::vector<IsotypicBlock> isotypic_profile(const FiniteEquivariantTriple& t) {
    const int d = t.hilbert_dim;
    auto spec = spectral_subspaces(t.corep, d, t.hopf, t.irreps);
    auto dspec = exact_spectrum(t.dirac);
    if (!dspec.resolved) throw std::runtime_error("isotypic_profile: Dirac spectrum not exactly resolvable");
    std::vector<IsotypicBlock> out;
    for (const auto& [lambda, mult] : dspec.eigen) {
        Matrix shifted = t.dirac;
        for (int i = 0; i < d; ++i) shifted[i][i] -= Scalar(lambda);
        std::vector<Sparse> eqs;
        for (const auto& row : shifted) eqs.push_back(to_sparse(row));
        auto eig = kernel_basis(eqs, d);
        for (std::size_t x = 0; x < t.irreps.size(); ++x) {
            const auto& sx = spec.subspaces[x];
            std::vector<Sparse> all;
            for (const auto& v : sx) all.push_back(to_sparse(v));
            for (const auto& v : eig) all.push_back(to_sparse(v));
            int joint = static_cast<int>(sx.size() + eig.size()) - static_cast<int>(rank_of(all, d));
            if (joint == 0) continue;
            out.push_back({static_cast<int>(x), t.irreps[x].dim, lambda, joint / t.irreps[x].dim});
        }
    }
    return out;
}

}  // namespace qd::hopf
