#include <stdexcept>

#include "qdeform/hopf/twist.hpp"

namespace qd::hopf {

Scalar DualCocycle::eval(const Vec& x, const Vec& y) const {
    Scalar s = 0;
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            if (!y[j].is_zero() && !table[i * dim + j].is_zero()) s += x[i] * y[j] * table[i * dim + j];
    }
    return s;
}

DualCocycle DualCocycle::trivial(const HopfAlgebra& h) {
    DualCocycle s{h.dim(), zero_vec(h.dim() * h.dim())};
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) s.table[i * h.dim() + j] = h.counit[i] * h.counit[j];
    return s;
}

namespace {

// (f * g)(a, b) = f(a1, b1) g(a2, b2)
Vec convolve2(const HopfAlgebra& h, const Vec& f, const Vec& g) {
    const int n = h.dim();
    Vec out = zero_vec(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& s : h.coproduct[a])
                for (const auto& t : h.coproduct[b]) {
                    const Scalar& x = f[s.left * n + t.left];
                    if (x.is_zero()) continue;
                    const Scalar& y = g[s.right * n + t.right];
                    if (!y.is_zero()) out[a * n + b] += s.coef * t.coef * x * y;
                }
    return out;
}

Vec eps_eps(const HopfAlgebra& h) { return DualCocycle::trivial(h).table; }

std::string triple_name(const HopfAlgebra& h, int a, int b, int c) {
    return "(" + h.alg.name(a) + ", " + h.alg.name(b) + ", " + h.alg.name(c) + ")";
}

// columns S^-1(e_i)
std::vector<Vec> inverse_antipode(const HopfAlgebra& h) {
    std::vector<Vec> cols;
    for (int j = 0; j < h.dim(); ++j) cols.push_back(h.apply_antipode(basis_vec(h.dim(), j)));
    Coordinates s(cols);
    std::vector<Vec> out;
    for (int i = 0; i < h.dim(); ++i) {
        auto c = s.solve(basis_vec(h.dim(), i));
        if (!c) throw std::runtime_error("antipode is not invertible");
        out.push_back(*c);
    }
    return out;
}

}  // namespace

Report check_dual_cocycle(const HopfAlgebra& h, const DualCocycle& sigma) {
    Report rep;
    rep.title = "dual cocycle";
    const int n = h.dim();
    if (sigma.dim != n || static_cast<int>(sigma.table.size()) != n * n)
        throw std::invalid_argument("cocycle table does not match the Hopf algebra");

    // sigma(e_a e_b, e_c) and sigma(e_a, e_b e_c)
    std::vector<Vec> prod(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) prod[a * n + b] = h.alg.mul(basis_vec(n, a), basis_vec(n, b));
    Vec left_m = zero_vec(n * n * n), right_m = zero_vec(n * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                left_m[(a * n + b) * n + c] = sigma.eval(prod[a * n + b], basis_vec(n, c));
                right_m[(a * n + b) * n + c] = sigma.eval(basis_vec(n, a), prod[b * n + c]);
            }

    std::string bad;
    for (int a = 0; a < n && bad.empty(); ++a)
        for (int b = 0; b < n && bad.empty(); ++b)
            for (int c = 0; c < n && bad.empty(); ++c) {
                Scalar lhs = 0, rhs = 0;
                for (const auto& s : h.coproduct[a])
                    for (const auto& t : h.coproduct[b]) {
                        const Scalar& x = sigma(s.left, t.left);
                        if (!x.is_zero()) lhs += s.coef * t.coef * x * left_m[(s.right * n + t.right) * n + c];
                    }
                for (const auto& t : h.coproduct[b])
                    for (const auto& u : h.coproduct[c]) {
                        const Scalar& x = sigma(t.left, u.left);
                        if (!x.is_zero()) rhs += t.coef * u.coef * x * right_m[(a * n + t.right) * n + u.right];
                    }
                if (lhs != rhs) bad = triple_name(h, a, b, c) + ": " + lhs.str() + " != " + rhs.str();
            }
    rep.add("cocycle_identity", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        if (sigma.eval(h.alg.unit, basis_vec(n, i)) != h.counit[i] || sigma.eval(basis_vec(n, i), h.alg.unit) != h.counit[i])
            bad = h.alg.name(i);
    rep.add("normalized", bad.empty(), bad);

    std::optional<DualCocycle> inv;
    try {
        inv = convolution_inverse(h, sigma);
        rep.add("invertible", true);
    } catch (const std::domain_error& e) {
        rep.add("invertible", false, e.what());
    }

    bad.clear();
    if (inv) {
        std::vector<Vec> sa(n);
        for (int i = 0; i < n; ++i) sa[i] = h.alg.adjoint(h.apply_antipode(basis_vec(n, i)));
        for (int a = 0; a < n && bad.empty(); ++a)
            for (int b = 0; b < n && bad.empty(); ++b)
                if (sigma(a, b).conj() != inv->eval(sa[a], sa[b]))
                    bad = "(" + h.alg.name(a) + ", " + h.alg.name(b) + ")";
    } else {
        bad = "no inverse";
    }
    rep.add("unitary", bad.empty(), bad);
    return rep;
}

DualCocycle convolution_inverse(const HopfAlgebra& h, const DualCocycle& sigma) {
    const int n = h.dim();
    const int nn = n * n;
    Echelon<Scalar> ech(nn);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::map<int, Scalar> row;
            for (const auto& s : h.coproduct[a])
                for (const auto& t : h.coproduct[b]) {
                    const Scalar& x = sigma(s.left, t.left);
                    if (!x.is_zero()) row[s.right * n + t.right] += s.coef * t.coef * x;
                }
            Sparse r;
            for (auto& [k, v] : row)
                if (!v.is_zero()) r.emplace_back(k, v);
            ech.add(r, h.counit[a] * h.counit[b]);
        }
    if (ech.inconsistent() || static_cast<int>(ech.rank()) != nn) throw std::domain_error("not invertible");
    DualCocycle inv{n, *ech.particular_solution()};
    if (convolve2(h, inv.table, sigma.table) != eps_eps(h) || convolve2(h, sigma.table, inv.table) != eps_eps(h))
        throw std::domain_error("not invertible (one-sided inverse only)");
    return inv;
}

UVFunctionals uv_functionals(const HopfAlgebra& h, const DualCocycle& sigma) {
    const int n = h.dim();
    DualCocycle inv = convolution_inverse(h, sigma);
    UVFunctionals uv{zero_vec(n), zero_vec(n), zero_vec(n), zero_vec(n), {}};
    for (int i = 0; i < n; ++i)
        for (const auto& t : h.coproduct[i]) {
            Vec a = basis_vec(n, t.left), b = basis_vec(n, t.right);
            uv.U[i] += t.coef * sigma.eval(a, h.apply_antipode(b));
            uv.U_inv[i] += t.coef * inv.eval(h.apply_antipode(a), b);
        }
    auto pair_with = [&](const Vec& f, const Vec& x) {
        Scalar s = 0;
        for (int k = 0; k < n; ++k)
            if (!x[k].is_zero()) s += f[k] * x[k];
        return s;
    };
    const auto s_inv = inverse_antipode(h);
    for (int i = 0; i < n; ++i) {
        const Vec& si = s_inv[i];
        uv.V[i] = pair_with(uv.U, si);
        uv.V_inv[i] = pair_with(uv.U_inv, si);
    }
    uv.checks.title = "U/V functionals";
    uv.checks.add("U_convolution_inverse", convolve(h, uv.U, uv.U_inv) == h.counit && convolve(h, uv.U_inv, uv.U) == h.counit);
    uv.checks.add("V_convolution_inverse", convolve(h, uv.V, uv.V_inv) == h.counit && convolve(h, uv.V_inv, uv.V) == h.counit);
    return uv;
}

}  // namespace qd::hopf
