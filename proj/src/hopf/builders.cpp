#include <array>
#include <numeric>
#include <stdexcept>

#include "qdeform/hopf/builders.hpp"

namespace qd::hopf {

std::vector<int> FiniteGroup::coords(int g) const {
    if (factors.empty()) throw std::logic_error("coords: not a product of cyclic groups");
    std::vector<int> c(factors.size());
    for (int r = static_cast<int>(factors.size()) - 1; r >= 0; --r) {
        c[r] = g % factors[r];
        g /= factors[r];
    }
    return c;
}

FiniteGroup abelian_group(const std::vector<int>& factors) {
    FiniteGroup g;
    g.factors = factors;
    g.order = 1;
    g.name = "";
    for (std::size_t r = 0; r < factors.size(); ++r) {
        if (factors[r] < 1) throw std::invalid_argument("abelian_group: factor must be positive");
        g.order *= factors[r];
        g.name += (r ? "x" : "") + std::string("Z") + std::to_string(factors[r]);
    }
    auto index = [&](const std::vector<int>& c) {
        int k = 0;
        for (std::size_t r = 0; r < factors.size(); ++r) k = k * factors[r] + c[r];
        return k;
    };
    g.table.resize(g.order * g.order);
    g.inverse.resize(g.order);
    for (int a = 0; a < g.order; ++a) {
        auto ca = g.coords(a);
        std::vector<int> inv(ca.size());
        for (std::size_t r = 0; r < ca.size(); ++r) inv[r] = (factors[r] - ca[r]) % factors[r];
        g.inverse[a] = index(inv);
        std::string n = "(";
        for (std::size_t r = 0; r < ca.size(); ++r) n += (r ? "," : "") + std::to_string(ca[r]);
        g.names.push_back(n + ")");
        for (int b = 0; b < g.order; ++b) {
            auto cb = g.coords(b);
            for (std::size_t r = 0; r < cb.size(); ++r) cb[r] = (ca[r] + cb[r]) % factors[r];
            g.table[a * g.order + b] = index(cb);
        }
    }
    return g;
}

FiniteGroup symmetric3() {
    FiniteGroup g;
    g.name = "S3";
    g.order = 6;
    g.names = {"e", "r", "r2", "s", "rs", "r2s"};
    g.table.resize(36);
    g.inverse.resize(6);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
            int k = ((a + (b ? -c : c)) % 3 + 3) % 3;
            g.table[x * 6 + y] = k + 3 * ((b + d) % 2);
        }
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            if (g.mul(x, y) == 0) g.inverse[x] = y;
    return g;
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
    const int n = g.order;
    HopfAlgebra h;
    h.alg.dim = n;
    h.alg.unit = basis_vec(n, g.identity);
    h.alg.product.resize(n * n);
    h.alg.star.resize(n);
    h.coproduct.resize(n);
    h.counit.assign(n, Scalar(1));
    h.antipode.resize(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) h.alg.product[a * n + b] = {{static_cast<std::size_t>(g.mul(a, b)), Scalar(1)}};
        h.alg.star[a] = {{static_cast<std::size_t>(g.inverse[a]), Scalar(1)}};
        h.antipode[a] = h.alg.star[a];
        h.coproduct[a] = {{a, a, Scalar(1)}};
        h.alg.names.push_back(g.names[a]);
    }
    return h;
}

Vec function_coords(const FiniteGroup&, const Vec& values) { return values; }

HopfAlgebra function_algebra(const FiniteGroup& g) {
    const int n = g.order;
    HopfAlgebra h;
    h.alg.dim = n;
    h.alg.unit = Vec(n, Scalar(1));
    h.alg.product.resize(n * n);
    h.alg.star.resize(n);
    h.coproduct.resize(n);
    h.counit = zero_vec(n);
    h.antipode.resize(n);
    for (int x = 0; x < n; ++x) {
        h.alg.names.push_back("d_" + g.names[x]);
        h.alg.product[x * n + x] = {{static_cast<std::size_t>(x), Scalar(1)}};
        h.alg.star[x] = {{static_cast<std::size_t>(x), Scalar(1)}};
        h.antipode[x] = {{static_cast<std::size_t>(g.inverse[x]), Scalar(1)}};
        for (int y = 0; y < n; ++y) h.coproduct[x].push_back({y, g.mul(g.inverse[y], x), Scalar(1)});
    }
    h.counit[g.identity] = 1;
    return h;
}

DualCocycle bicharacter(const FiniteGroup& g, const std::vector<std::vector<int>>& B) {
    const int k = static_cast<int>(g.factors.size());
    if (static_cast<int>(B.size()) != k) throw std::invalid_argument("bicharacter: matrix size does not match the group");
    DualCocycle s{g.order, zero_vec(g.order * g.order)};
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            auto ca = g.coords(a), cb = g.coords(b);
            Scalar v = 1;
            for (int r = 0; r < k; ++r)
                for (int t = 0; t < k; ++t) {
                    if (static_cast<int>(B[r].size()) != k) throw std::invalid_argument("bicharacter: matrix is not square");
                    int d = std::gcd(g.factors[r], g.factors[t]);
                    int e = ((B[r][t] * ca[r] * cb[t]) % d + d) % d;
                    if (e) v *= Cyclo::root_of_unity(e, d);
                }
            s.table[a * g.order + b] = v;
        }
    return s;
}

DualCocycle s3_rotation_twist(const FiniteGroup& s3) {
    // J(r^k, r^l) = (1/9) sum_{a,b} zeta^{ab - ak - bl}, zero off the rotations
    const int n = s3.order;
    Vec J = zero_vec(n * n);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            Scalar v = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) v += Cyclo::root_of_unity(((a * b - a * k - b * l) % 3 + 3) % 3, 3);
            J[k * n + l] = v * Scalar(Rational(1, 9));
        }
    // sigma(d_x, d_y) = J(x, y)
    return {n, J};
}

std::vector<Irrep> group_algebra_irreps(const FiniteGroup& g) {
    std::vector<Irrep> out;
    for (int a = 0; a < g.order; ++a) out.push_back({g.names[a], 1, {basis_vec(g.order, a)}});
    return out;
}

std::vector<Irrep> s3_function_irreps(const FiniteGroup& s3) {
    const int n = s3.order;
    Vec ones(n, Scalar(1)), sign(n);
    for (int x = 0; x < n; ++x) sign[x] = x / 3 ? -1 : 1;
    std::vector<Irrep> out;
    out.push_back({"trivial", 1, {function_coords(s3, ones)}});
    out.push_back({"sign", 1, {function_coords(s3, sign)}});

    // rho(r^k s^j) = R^k S^j, R the rotation by 2 pi / 3, S = diag(1, -1)
    using M2 = std::array<Scalar, 4>;
    auto mm = [](const M2& a, const M2& b) {
        return M2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    const Scalar c = Rational(-1, 2), s = Cyclo(Q3{0, Rational(1, 2)});
    const M2 R{c, -s, s, c}, S{1, 0, 0, -1}, I{1, 0, 0, 1};
    std::vector<M2> rho(n);
    for (int x = 0; x < n; ++x) {
        M2 m = I;
        for (int k = 0; k < x % 3; ++k) m = mm(m, R);
        if (x / 3) m = mm(m, S);
        rho[x] = m;
    }
    Irrep two{"rotation", 2, {}};
    for (int e = 0; e < 4; ++e) {
        Vec v(n);
        for (int x = 0; x < n; ++x) v[x] = rho[x][e];
        two.coeffs.push_back(function_coords(s3, v));
    }
    out.push_back(two);
    return out;
}

}  // namespace qd::hopf
