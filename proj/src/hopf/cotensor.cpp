#include <map>
#include <memory>

#include "qdeform/hopf/cotensor.hpp"

namespace qd::hopf {

Coaction regular_coaction(const HopfAlgebra& h, Side side) {
    Coaction c(h.dim());
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& t : h.coproduct[i])
            c[i].push_back(side == Side::Right ? CoactionTerm{t.left, t.right, t.coef} : CoactionTerm{t.right, t.left, t.coef});
    return c;
}

std::vector<Vec> cotensor_space(const Coaction& right, int dim_a, const Coaction& left, int dim_b, int hopf_dim) {
    // one equation per coordinate (p, k, q) of A (x) H (x) B
    std::map<long, std::map<int, Scalar>> rows;
    auto at = [&](int p, int k, int q) { return (static_cast<long>(p) * hopf_dim + k) * dim_b + q; };
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j) {
            const int unknown = i * dim_b + j;
            for (const auto& t : right[i]) rows[at(t.elem, t.hopf, j)][unknown] += t.coef;
            for (const auto& t : left[j]) rows[at(i, t.hopf, t.elem)][unknown] -= t.coef;
        }
    std::vector<Sparse> eqs;
    for (auto& [key, row] : rows) {
        Sparse r;
        for (auto& [u, c] : row)
            if (!c.is_zero()) r.emplace_back(u, c);
        if (!r.empty()) eqs.push_back(std::move(r));
    }
    return kernel_basis(eqs, dim_a * dim_b);
}

std::optional<Vec> Subalgebra::coordinates(const Vec& ambient) const {
    if (!coords_) return std::nullopt;
    return coords_->solve(ambient);
}

Subalgebra make_subalgebra(std::vector<Vec> basis, const Vec& ambient_unit,
                           const std::function<Vec(const Vec&, const Vec&)>& mul,
                           const std::function<Vec(const Vec&)>& adjoint) {
    Subalgebra s;
    s.basis = std::move(basis);
    const int n = static_cast<int>(s.basis.size());
    s.checks.title = "subalgebra";
    s.alg.dim = n;
    s.alg.product.resize(n * n);
    s.alg.star.resize(n);
    for (int i = 0; i < n; ++i) s.alg.names.push_back("z" + std::to_string(i));
    if (n == 0) {
        s.checks.add("nonempty", false);
        return s;
    }
    s.coords_ = std::make_shared<Coordinates>(s.basis);
    std::string bad;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto c = s.coords_->solve(mul(s.basis[i], s.basis[j]));
            if (!c) {
                if (bad.empty()) bad = "(z" + std::to_string(i) + ", z" + std::to_string(j) + ")";
                continue;
            }
            s.alg.product[i * n + j] = to_sparse(*c);
        }
    s.checks.add("closed_under_product", bad.empty(), bad);
    bad.clear();
    for (int i = 0; i < n; ++i) {
        auto c = s.coords_->solve(adjoint(s.basis[i]));
        if (!c) {
            if (bad.empty()) bad = "z" + std::to_string(i);
            continue;
        }
        s.alg.star[i] = to_sparse(*c);
    }
    s.checks.add("closed_under_star", bad.empty(), bad);
    auto u = s.coords_->solve(ambient_unit);
    s.checks.add("contains_unit", u.has_value());
    s.alg.unit = u ? *u : zero_vec(n);
    return s;
}

Cotensor cotensor(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const HopfAlgebra& h) {
    if (a.side != Side::Right || b.side != Side::Left)
        throw std::invalid_argument("cotensor expects a right and a left comodule algebra");
    Cotensor c;
    c.dim_a = a.alg.dim;
    c.dim_b = b.alg.dim;
    auto basis = cotensor_space(a.coaction, c.dim_a, b.coaction, c.dim_b, h.dim());
    const Algebra& aa = a.alg;
    const Algebra& bb = b.alg;
    c.sub = make_subalgebra(
        std::move(basis), kron(aa.unit, bb.unit), [&](const Vec& x, const Vec& y) { return tensor_mul(aa, bb, x, y); },
        [&](const Vec& x) { return tensor_adjoint(aa, bb, x); });
    c.sub.checks.title = "cotensor product";
    return c;
}

Report check_isomorphism_onto(const Algebra& src, const std::vector<Vec>& images, const Subalgebra& target,
                              const std::function<Vec(const Vec&, const Vec&)>& mul,
                              const std::function<Vec(const Vec&)>& adjoint) {
    Report rep;
    rep.title = "isomorphism";
    const int n = src.dim;
    rep.add("dimension", n == target.alg.dim, std::to_string(n) + " vs " + std::to_string(target.alg.dim));
    std::string bad;
    std::vector<Vec> coords;
    for (int i = 0; i < n; ++i) {
        auto c = target.coordinates(images[i]);
        if (!c) {
            if (bad.empty()) bad = src.name(i);
            coords.push_back(zero_vec(target.alg.dim));
        } else {
            coords.push_back(*c);
        }
    }
    rep.add("image_in_target", bad.empty(), bad);
    bool independent = true;
    try {
        Coordinates check(images);
    } catch (const std::invalid_argument&) {
        independent = false;
    }
    rep.add("injective", independent);

    auto image_of = [&](const Vec& x) {
        Vec out = zero_vec(static_cast<int>(images.empty() ? 0 : images[0].size()));
        for (int i = 0; i < n; ++i)
            if (!x[i].is_zero()) out = add(out, scale(images[i], x[i]));
        return out;
    };
    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j)
            if (image_of(src.mul(basis_vec(n, i), basis_vec(n, j))) != mul(images[i], images[j]))
                bad = "(" + src.name(i) + ", " + src.name(j) + ")";
    rep.add("multiplicative", bad.empty(), bad);
    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        if (image_of(src.adjoint(basis_vec(n, i))) != adjoint(images[i])) bad = src.name(i);
    rep.add("star_preserving", bad.empty(), bad);
    bool unital = target.coordinates(image_of(src.unit)) == target.alg.unit;
    rep.add("unital", unital);

    // structure tensors of the target rewritten through the map
    bad.clear();
    if (rep.pass()) {
        Coordinates inv(coords);
        for (int i = 0; i < n && bad.empty(); ++i)
            for (int j = 0; j < n && bad.empty(); ++j) {
                auto back = inv.solve(target.alg.mul(coords[i], coords[j]));
                if (!back || *back != src.mul(basis_vec(n, i), basis_vec(n, j)))
                    bad = "(" + src.name(i) + ", " + src.name(j) + ")";
            }
    } else {
        bad = "map is not an isomorphism";
    }
    rep.add("structure_tensors_equal", bad.empty(), bad);
    return rep;
}

Report check_bhalg(const ComoduleAlgebra& a, const HopfAlgebra& h, const DualCocycle& sigma) {
    TwistedComodule tw = twist_comodule_algebra(a, h, sigma);
    GaloisObject g = smash_left(h, sigma);
    Cotensor c = cotensor(a, g.object.as_left(), h);
    Report rep;
    rep.title = "A box (H # C) vs A # C";
    rep.merge(tw.checks, "twisted");
    rep.merge(g.checks, "galois");
    rep.merge(c.sub.checks, "cotensor");
    std::vector<Vec> images;
    for (int i = 0; i < a.alg.dim; ++i) images.push_back(coact(a, h.dim(), basis_vec(a.alg.dim, i)));
    const Algebra& aa = a.alg;
    const Algebra& bb = g.object.alg;
    rep.merge(check_isomorphism_onto(
        tw.algebra.alg, images, c.sub, [&](const Vec& x, const Vec& y) { return tensor_mul(aa, bb, x, y); },
        [&](const Vec& x) { return tensor_adjoint(aa, bb, x); }));
    return rep;
}

}  // namespace qd::hopf
