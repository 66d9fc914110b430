#include <algorithm>
#include <map>

#include "qdeform/hopf/supergroup.hpp"

namespace qd::hopf {

namespace {

std::function<Vec(const Vec&, const Vec&)> tensor_product_of(const Algebra& a, const Algebra& b) {
    return [&a, &b](const Vec& x, const Vec& y) { return tensor_mul(a, b, x, y); };
}

std::function<Vec(const Vec&)> tensor_star_of(const Algebra& a, const Algebra& b) {
    return [&a, &b](const Vec& x) { return tensor_adjoint(a, b, x); };
}

// (id (x) pi) Delta or (pi (x) id) Delta as coactions of G on H
Coaction induced_coaction(const HopfAlgebra& h, const HopfMap& pi, Side side) {
    Coaction c(h.dim());
    for (int i = 0; i < h.dim(); ++i) {
        std::map<std::pair<int, int>, Scalar> acc;
        for (const auto& t : h.coproduct[i]) {
            const int keep = side == Side::Right ? t.left : t.right;
            const Vec& img = pi.images[side == Side::Right ? t.right : t.left];
            for (std::size_t k = 0; k < img.size(); ++k)
                if (!img[k].is_zero()) acc[{keep, static_cast<int>(k)}] += t.coef * img[k];
        }
        for (auto& [key, v] : acc)
            if (!v.is_zero()) c[i].push_back({key.first, key.second, v});
    }
    return c;
}

}  // namespace

Vec HopfMap::apply(const Vec& x) const {
    Vec out = zero_vec(images.empty() ? 0 : static_cast<int>(images[0].size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out = add(out, scale(images[i], x[i]));
    return out;
}

Report reconstruct_hopf(const HopfAlgebra& h, const DualCocycle& sigma) {
    Report rep;
    rep.title = "H from B box B~";
    HopfAlgebra hs = twist_hopf(h, sigma);
    DualCocycle inv = convolution_inverse(h, sigma);
    rep.merge(check_dual_cocycle(hs, inv), "inverse_cocycle");
    rep.add("double_twist_is_identity", same_structure(twist_hopf(hs, inv), h));

    GaloisObject b = smash_left(h, sigma);
    GaloisObject bt = smash_left(hs, inv);
    rep.merge(b.checks, "B");
    rep.merge(bt.checks, "Btilde");
    const Algebra& ba = b.object.alg;
    const Algebra& bb = bt.object.alg;
    auto basis = cotensor_space(b.object.right, ba.dim, bt.object.left, bb.dim, hs.dim());
    Subalgebra c = make_subalgebra(std::move(basis), kron(ba.unit, bb.unit), tensor_product_of(ba, bb), tensor_star_of(ba, bb));
    rep.merge(c.checks, "cotensor");

    std::vector<Vec> images;
    for (int i = 0; i < h.dim(); ++i) images.push_back(h.delta(basis_vec(h.dim(), i)));
    rep.merge(check_isomorphism_onto(h.alg, images, c, tensor_product_of(ba, bb), tensor_star_of(ba, bb)), "iso");

    // (beta_1 (x) id)(h1 (x) h2) = (id (x) iota) Delta(h)
    std::string bad;
    const int n = h.dim();
    for (int i = 0; i < n && bad.empty(); ++i) {
        Vec lhs = zero_vec(n * n * n), rhs = zero_vec(n * n * n);
        for (const auto& t : h.coproduct[i]) {
            for (const auto& u : b.object.left[t.left]) lhs[(u.hopf * n + u.elem) * n + t.right] += t.coef * u.coef;
            for (const auto& u : h.coproduct[t.right]) rhs[(t.left * n + u.left) * n + u.right] += t.coef * u.coef;
        }
        if (lhs != rhs) bad = h.alg.name(i);
    }
    rep.add("coproduct_matches_beta1", bad.empty(), bad);
    return rep;
}

Report check_hopf_surjection(const HopfAlgebra& src, const HopfAlgebra& dst, const HopfMap& pi) {
    Report rep;
    rep.title = "Hopf surjection";
    const int n = src.dim(), m = dst.dim();
    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i) {
        Vec e = basis_vec(n, i);
        if (pi.apply(src.alg.adjoint(e)) != dst.alg.adjoint(pi.images[i])) bad = src.alg.name(i) + " (star)";
        if (pi.apply(src.apply_antipode(e)) != dst.apply_antipode(pi.images[i])) bad = src.alg.name(i) + " (antipode)";
        if (dst.eps(pi.images[i]) != src.counit[i]) bad = src.alg.name(i) + " (counit)";
        Vec lhs = zero_vec(m * m);
        for (const auto& t : src.coproduct[i]) lhs = add(lhs, scale(kron(pi.images[t.left], pi.images[t.right]), t.coef));
        if (lhs != dst.delta(pi.images[i])) bad = src.alg.name(i) + " (coproduct)";
        for (int j = 0; j < n && bad.empty(); ++j)
            if (pi.apply(src.alg.mul(e, basis_vec(n, j))) != dst.alg.mul(pi.images[i], pi.images[j]))
                bad = "(" + src.alg.name(i) + ", " + src.alg.name(j) + ")";
    }
    rep.add("hopf_star_morphism", bad.empty(), bad);
    rep.add("unital", pi.apply(src.alg.unit) == dst.alg.unit);
    std::vector<Sparse> rows;
    for (const auto& v : pi.images) rows.push_back(to_sparse(v));
    rep.add("surjective", kernel_basis(rows, m).empty());
    return rep;
}

DualCocycle pullback(const DualCocycle& sigma, const HopfMap& pi, int src_dim) {
    DualCocycle out{src_dim, zero_vec(src_dim * src_dim)};
    for (int a = 0; a < src_dim; ++a)
        for (int b = 0; b < src_dim; ++b) out.table[a * src_dim + b] = sigma.eval(pi.images[a], pi.images[b]);
    return out;
}

Report cotensor_chain_supergroup(const HopfAlgebra& h1, const HopfAlgebra& g1, const HopfMap& pi, const DualCocycle& sigma) {
    Report rep;
    rep.title = "supergroup cotensor chain";
    Report surj = check_hopf_surjection(h1, g1, pi);
    rep.merge(surj, "pi");
    if (!surj.pass()) return rep;
    const int n = h1.dim();
    DualCocycle sigma1 = pullback(sigma, pi, n);
    rep.merge(check_dual_cocycle(h1, sigma1), "sigma1");

    GaloisObject b = smash_left(g1, sigma);
    GaloisObject b1 = smash_left(h1, sigma1);
    const Algebra& ha = b1.object.alg;  // H1 #_{sigma1^-1} C
    const Algebra& ga = b.object.alg;
    ComoduleAlgebra h1_right{h1.alg, Side::Right, induced_coaction(h1, pi, Side::Right)};
    rep.merge(check_comodule_algebra(h1_right, g1), "h1_right");
    Cotensor bp = cotensor(h1_right, b.object.as_left(), g1);
    rep.merge(bp.sub.checks, "B'");
    std::vector<Vec> images;
    for (int i = 0; i < n; ++i) {
        Vec v = zero_vec(n * ga.dim);
        for (const auto& t : h1.coproduct[i]) v = add(v, scale(kron(basis_vec(n, t.left), pi.images[t.right]), t.coef));
        images.push_back(v);
    }
    rep.merge(check_isomorphism_onto(ha, images, bp.sub, tensor_product_of(h1.alg, ga), tensor_star_of(h1.alg, ga)),
              "B'_iso");

    // B~ box H1 box B with B~ = G1^sigma #_{sigma} C
    HopfAlgebra gs = twist_hopf(g1, sigma);
    DualCocycle inv = convolution_inverse(g1, sigma);
    GaloisObject bt = smash_left(gs, inv);
    const Algebra& ta = bt.object.alg;
    // left G1-coaction on H1 box B through the first leg
    ComoduleAlgebra h1_left{h1.alg, Side::Left, induced_coaction(h1, pi, Side::Left)};
    rep.merge(check_comodule_algebra(h1_left, g1), "h1_left");
    const Subalgebra& c1 = bp.sub;
    Coaction c1_left(c1.alg.dim);
    bool closed = true;
    const int mg = g1.dim();
    for (int z = 0; z < c1.alg.dim; ++z) {
        std::vector<Vec> slices(mg, zero_vec(n * ga.dim));
        const Vec& v = c1.basis[z];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < ga.dim; ++j) {
                const Scalar& x = v[i * ga.dim + j];
                if (x.is_zero()) continue;
                for (const auto& t : h1_left.coaction[i]) slices[t.hopf][t.elem * ga.dim + j] += x * t.coef;
            }
        for (int k = 0; k < mg; ++k) {
            if (is_zero_vec(slices[k])) continue;
            auto c = c1.coordinates(slices[k]);
            if (!c) {
                closed = false;
                continue;
            }
            for (int r = 0; r < c1.alg.dim; ++r)
                if (!(*c)[r].is_zero()) c1_left[z].push_back({r, k, (*c)[r]});
        }
    }
    rep.add("B'_left_coaction_closed", closed);
    ComoduleAlgebra c1_comod{c1.alg, Side::Left, c1_left};
    Cotensor triple = cotensor(bt.object.as_right(), c1_comod, g1);
    rep.merge(triple.sub.checks, "triple");

    // h -> pi(h1) (x) h2 (x) pi(h3), with the H1 (x) B part in c1 coordinates
    HopfAlgebra h2 = twist_hopf(h1, sigma1);
    std::vector<Vec> timages;
    bool in_c1 = true;
    for (int i = 0; i < n; ++i) {
        std::vector<Vec> slices(ta.dim, zero_vec(n * ga.dim));
        for (const auto& t : delta2(h1, i)) {
            const Vec& p1 = pi.images[t.a];
            const Vec& p3 = pi.images[t.c];
            for (int g = 0; g < ta.dim; ++g) {
                if (p1[g].is_zero()) continue;
                for (int k = 0; k < ga.dim; ++k)
                    if (!p3[k].is_zero()) slices[g][t.b * ga.dim + k] += t.coef * p1[g] * p3[k];
            }
        }
        Vec img = zero_vec(ta.dim * c1.alg.dim);
        for (int g = 0; g < ta.dim; ++g) {
            if (is_zero_vec(slices[g])) continue;
            auto c = c1.coordinates(slices[g]);
            if (!c) {
                in_c1 = false;
                continue;
            }
            for (int r = 0; r < c1.alg.dim; ++r) img[g * c1.alg.dim + r] = (*c)[r];
        }
        timages.push_back(img);
    }
    rep.add("middle_leg_in_B'", in_c1);
    rep.merge(check_isomorphism_onto(h2.alg, timages, triple.sub, tensor_product_of(ta, c1.alg), tensor_star_of(ta, c1.alg)),
              "H2_iso");
    return rep;
}

Report check_subobject(const HopfAlgebra& g, const DualCocycle& sigma, const std::vector<int>& sub_basis) {
    Report rep;
    rep.title = "Galois object of a Hopf subalgebra";
    const int n = g.dim();
    const int k = static_cast<int>(sub_basis.size());
    auto in_sub = [&](int i) { return std::find(sub_basis.begin(), sub_basis.end(), i) != sub_basis.end(); };

    // the subalgebra is a Hopf *-subalgebra on the listed basis vectors
    std::string bad;
    for (int i : sub_basis) {
        for (const auto& [x, c] : g.alg.star[i])
            if (!in_sub(static_cast<int>(x))) bad = g.alg.name(i);
        for (const auto& [x, c] : g.antipode[i])
            if (!in_sub(static_cast<int>(x))) bad = g.alg.name(i);
        for (const auto& t : g.coproduct[i])
            if (!in_sub(t.left) || !in_sub(t.right)) bad = g.alg.name(i);
        for (int j : sub_basis)
            for (const auto& [x, c] : g.alg.product[i * n + j])
                if (!in_sub(static_cast<int>(x))) bad = g.alg.name(i);
    }
    rep.add("hopf_subalgebra", bad.empty(), bad);

    GaloisObject b = smash_left(g, sigma);
    // {b : beta_1(b) in A (x) B}: coefficients on H-indices outside the subalgebra vanish
    std::map<int, std::map<int, Scalar>> rows;
    for (int i = 0; i < n; ++i)
        for (const auto& t : b.object.left[i])
            if (!in_sub(t.hopf)) rows[t.hopf * n + t.elem][i] += t.coef;
    std::vector<Sparse> eqs;
    for (auto& [key, row] : rows) {
        Sparse r;
        for (auto& [u, v] : row)
            if (!v.is_zero()) r.emplace_back(u, v);
        if (!r.empty()) eqs.push_back(r);
    }
    auto sub = kernel_basis(eqs, n);
    rep.add("dimension", static_cast<int>(sub.size()) == k, std::to_string(sub.size()) + " vs " + std::to_string(k));

    // restricted Hopf algebra and cocycle, then compare structure
    HopfAlgebra a;
    a.alg.dim = k;
    a.alg.product.resize(k * k);
    a.alg.star.resize(k);
    a.coproduct.resize(k);
    a.antipode.resize(k);
    a.counit = zero_vec(k);
    std::map<int, int> local;
    for (int p = 0; p < k; ++p) local[sub_basis[p]] = p;
    auto restrict_row = [&](const Sparse& row) {
        Sparse out;
        for (const auto& [x, c] : row)
            if (local.count(static_cast<int>(x))) out.emplace_back(local[static_cast<int>(x)], c);
        std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        return out;
    };
    Vec unit = zero_vec(k);
    for (int p = 0; p < k; ++p) {
        const int i = sub_basis[p];
        unit[p] = g.alg.unit[i];
        a.alg.names.push_back(g.alg.name(i));
        a.alg.star[p] = restrict_row(g.alg.star[i]);
        a.antipode[p] = restrict_row(g.antipode[i]);
        a.counit[p] = g.counit[i];
        for (const auto& t : g.coproduct[i])
            if (local.count(t.left) && local.count(t.right)) a.coproduct[p].push_back({local[t.left], local[t.right], t.coef});
        for (int q = 0; q < k; ++q) a.alg.product[p * k + q] = restrict_row(g.alg.product[i * n + sub_basis[q]]);
    }
    a.alg.unit = unit;
    rep.add("unit_in_subalgebra", bad.empty() && g.alg.unit == [&] {
        Vec u = zero_vec(n);
        for (int p = 0; p < k; ++p) u[sub_basis[p]] = unit[p];
        return u;
    }());
    if (!rep.pass()) return rep;
    rep.merge(check_hopf_axioms(a), "A");
    DualCocycle rs{k, zero_vec(k * k)};
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) rs.table[p * k + q] = sigma(sub_basis[p], sub_basis[q]);
    GaloisObject ba = smash_left(a, rs);
    rep.merge(ba.checks, "restricted");

    Subalgebra target = make_subalgebra(
        sub, b.object.alg.unit, [&](const Vec& x, const Vec& y) { return b.object.alg.mul(x, y); },
        [&](const Vec& x) { return b.object.alg.adjoint(x); });
    std::vector<Vec> images;
    for (int p = 0; p < k; ++p) images.push_back(basis_vec(n, sub_basis[p]));
    rep.merge(check_isomorphism_onto(
                  ba.object.alg, images, target, [&](const Vec& x, const Vec& y) { return b.object.alg.mul(x, y); },
                  [&](const Vec& x) { return b.object.alg.adjoint(x); }),
              "iso");
    // gamma_1 is the restriction of beta_1
    bad.clear();
    for (int p = 0; p < k && bad.empty(); ++p) {
        Vec lhs = zero_vec(n * n), rhs = zero_vec(n * n);
        for (const auto& t : b.object.left[sub_basis[p]]) lhs[t.hopf * n + t.elem] += t.coef;
        for (const auto& t : ba.object.left[p]) rhs[sub_basis[t.hopf] * n + sub_basis[t.elem]] += t.coef;
        if (lhs != rhs) bad = a.alg.name(p);
    }
    rep.add("coaction_restricts", bad.empty(), bad);
    return rep;
}

}  // namespace qd::hopf
