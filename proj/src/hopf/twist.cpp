#include <stdexcept>

#include "qdeform/hopf/twist.hpp"

namespace qd::hopf {

namespace {

Scalar pair_with(const Vec& f, const Vec& x) {
    Scalar s = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero() && !f[k].is_zero()) s += f[k] * x[k];
    return s;
}

Coaction coaction_from_delta(const HopfAlgebra& h, Side side) {
    Coaction c(h.dim());
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& t : h.coproduct[i])
            c[i].push_back(side == Side::Right ? CoactionTerm{t.left, t.right, t.coef} : CoactionTerm{t.right, t.left, t.coef});
    return c;
}

// out += c e_i e_j
void add_product(const Algebra& a, int i, int j, const Scalar& c, Vec& out) {
    for (const auto& [k, v] : a.product[i * a.dim + j]) out[k] += c * v;
}

// out += c row, for a sparse row (star or antipode image)
void add_row(const Sparse& row, const Scalar& c, Vec& out) {
    for (const auto& [k, v] : row) out[k] += c * v;
}

void set_star(Algebra& a, int i, const Vec& v) { a.star[i] = to_sparse(v); }

void set_product(Algebra& a, int i, int j, const Vec& v) { a.product[i * a.dim + j] = to_sparse(v); }

std::string failure_text(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.pass) return c.name + (c.detail.empty() ? "" : " at " + c.detail);
    return {};
}

}  // namespace

HopfAlgebra twist_hopf(const HopfAlgebra& h, const DualCocycle& sigma) {
    const int n = h.dim();
    DualCocycle inv = convolution_inverse(h, sigma);
    UVFunctionals uv = uv_functionals(h, sigma);
    HopfAlgebra out = h;
    std::vector<std::vector<IteratedTerm>> d2(n);
    for (int i = 0; i < n; ++i) d2[i] = delta2(h, i);

    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
            Vec v = zero_vec(n);
            for (const auto& s : d2[g])
                for (const auto& t : d2[k]) {
                    Scalar c = sigma(s.a, t.a);
                    if (c.is_zero()) continue;
                    c *= inv(s.c, t.c);
                    if (c.is_zero()) continue;
                    add_product(h.alg, s.b, t.b, c * s.coef * t.coef, v);
                }
            set_product(out.alg, g, k, v);
        }
    // (V(e_k*), V^-1(e_k*))
    std::vector<std::pair<Scalar, Scalar>> star_pair;
    for (int k = 0; k < n; ++k) {
        Vec ks = h.alg.adjoint(basis_vec(n, k));
        star_pair.emplace_back(pair_with(uv.V, ks), pair_with(uv.V_inv, ks));
    }
    for (int i = 0; i < n; ++i) {
        Vec s = zero_vec(n), st = zero_vec(n);
        for (const auto& t : d2[i]) {
            Scalar c = uv.U[t.a] * uv.U_inv[t.c];
            if (!c.is_zero()) add_row(h.antipode[t.b], c * t.coef, s);
            // antilinear: conj(coef) e_a* (x) e_b* (x) e_c*
            Scalar w = star_pair[t.a].second * star_pair[t.c].first;
            if (!w.is_zero()) add_row(h.alg.star[t.b], w * t.coef.conj(), st);
        }
        out.antipode[i] = to_sparse(s);
        set_star(out.alg, i, st);
    }
    for (auto& name : out.alg.names) name += "~";
    Report rep = check_hopf_axioms(out);
    if (!rep.pass()) throw std::runtime_error("twisted Hopf algebra fails " + failure_text(rep));
    return out;
}

namespace {

Algebra twisted_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h, const DualCocycle& sigma, StarConvention star) {
    const int n = a.alg.dim, m = h.dim();
    DualCocycle inv = convolution_inverse(h, sigma);
    UVFunctionals uv = uv_functionals(h, sigma);
    Algebra t = a.alg;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = zero_vec(n);
            for (const auto& x : a.coaction[i])
                for (const auto& y : a.coaction[j]) {
                    Scalar c = inv(x.hopf, y.hopf);
                    if (!c.is_zero()) add_product(a.alg, x.elem, y.elem, c * x.coef * y.coef, v);
                }
            set_product(t, i, j, v);
        }
    if (star == StarConvention::Corrected) {
        for (int i = 0; i < n; ++i) {
            Vec v = zero_vec(n);
            for (const auto& x : a.coaction[i]) {
                Scalar w = pair_with(uv.V, h.alg.adjoint(basis_vec(m, x.hopf)));
                if (!w.is_zero()) add_row(a.alg.star[x.elem], w * x.coef.conj(), v);
            }
            set_star(t, i, v);
        }
    }
    return t;
}

}  // namespace

TwistedComodule twist_comodule_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h, const DualCocycle& sigma,
                                       StarConvention star) {
    if (a.side != Side::Right) throw std::invalid_argument("twist_comodule_algebra expects a right comodule algebra");
    TwistedComodule out;
    out.algebra = a;
    out.algebra.alg = twisted_algebra(a, h, sigma, star);
    HopfAlgebra hs = twist_hopf(h, sigma);
    out.checks = check_star_algebra(out.algebra.alg);
    out.checks.title = "twisted comodule algebra";
    out.checks.merge(check_comodule_algebra(out.algebra, hs));
    return out;
}

GaloisObject smash_left(const HopfAlgebra& h, const DualCocycle& sigma, StarConvention star) {
    ComoduleAlgebra regular{h.alg, Side::Right, coaction_from_delta(h, Side::Right)};
    GaloisObject g;
    Bicomodule& b = g.object;
    b.alg = twisted_algebra(regular, h, sigma, star);
    for (auto& name : b.alg.names) name += "#1";
    b.left_hopf = h;
    b.right_hopf = twist_hopf(h, sigma);
    b.left = coaction_from_delta(h, Side::Left);
    b.right = coaction_from_delta(h, Side::Right);
    b.state = haar_functional(h);

    g.checks = check_star_algebra(b.alg);
    g.checks.title = "bi-Galois object H #_{sigma^-1} C";
    g.checks.merge(check_comodule_algebra(b.as_left(), b.left_hopf), "left");
    g.checks.merge(check_comodule_algebra(b.as_right(), b.right_hopf), "right");
    // (h (x) id) beta_1 (b) = omega(b) 1
    std::string bad;
    const int n = h.dim();
    for (int i = 0; i < n && bad.empty(); ++i) {
        Vec v = zero_vec(n);
        for (const auto& t : b.left[i]) v[t.elem] += t.coef * b.state[t.hopf];
        if (v != scale(b.alg.one(), b.state[i])) bad = b.alg.name(i);
    }
    g.checks.add("state_invariant", bad.empty(), bad);
    return g;
}

GaloisObject smash_right(const HopfAlgebra& h, const DualCocycle& sigma) {
    const int n = h.dim();
    UVFunctionals uv = uv_functionals(h, sigma);
    GaloisObject g;
    Bicomodule& b = g.object;
    b.alg = h.alg;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = zero_vec(n);
            for (const auto& s : h.coproduct[i])
                for (const auto& t : h.coproduct[j]) {
                    Scalar c = sigma(s.left, t.left);
                    if (!c.is_zero()) add_product(h.alg, s.right, t.right, c * s.coef * t.coef, v);
                }
            set_product(b.alg, i, j, v);
        }
    for (int i = 0; i < n; ++i) {
        Vec v = zero_vec(n);
        for (const auto& s : h.coproduct[i]) {
            Scalar w = pair_with(uv.V_inv, h.alg.adjoint(basis_vec(n, s.left)));
            if (!w.is_zero()) add_row(h.alg.star[s.right], w * s.coef.conj(), v);
        }
        set_star(b.alg, i, v);
    }
    for (auto& name : b.alg.names) name = "1#" + name;
    b.left_hopf = twist_hopf(h, sigma);
    b.right_hopf = h;
    b.left = coaction_from_delta(h, Side::Left);
    b.right = coaction_from_delta(h, Side::Right);
    b.state = haar_functional(h);
    g.checks = check_star_algebra(b.alg);
    g.checks.title = "C #_sigma H";
    g.checks.merge(check_comodule_algebra(b.as_left(), b.left_hopf), "left");
    g.checks.merge(check_comodule_algebra(b.as_right(), b.right_hopf), "right");
    return g;
}

}  // namespace qd::hopf
