#include "qdeform/hopf/algebra.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qd::hopf {

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Scalar(0)); }

Vec basis_vec(int n, int i) {
    Vec v = zero_vec(n);
    v.at(i) = 1;
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(Vec x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

Vec sub(Vec x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

Vec scale(Vec x, const Scalar& c) {
    for (auto& v : x) v *= c;
    return x;
}

Vec kron(const Vec& x, const Vec& y) {
    Vec out = zero_vec(static_cast<int>(x.size() * y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
    }
    return out;
}

std::string vec_str(const Vec& v, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << v[i].str() << ")" << (i < names.size() ? names[i] : "e" + std::to_string(i));
    }
    return first ? "0" : out.str();
}

namespace {

std::vector<int> support(const Vec& x) {
    std::vector<int> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    Vec out = zero_vec(dim);
    const auto sx = support(x), sy = support(y);
    for (int i : sx)
        for (int j : sy) {
            const auto& p = product[i * dim + j];
            if (p.empty()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : p) out[k] += c * v;
        }
    return out;
}

Vec tensor_mul(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y) {
    Vec out = zero_vec(a.dim * b.dim);
    const auto sx = support(x), sy = support(y);
    for (int i : sx)
        for (int j : sy) {
            const auto& pa = a.product[(i / b.dim) * a.dim + j / b.dim];
            const auto& pb = b.product[(i % b.dim) * b.dim + j % b.dim];
            if (pa.empty() || pb.empty()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [m, u] : pa) {
                Scalar cu = c * u;
                for (const auto& [n, v] : pb) out[m * b.dim + n] += cu * v;
            }
        }
    return out;
}

Vec tensor_adjoint(const Algebra& a, const Algebra& b, const Vec& x) {
    Vec out = zero_vec(a.dim * b.dim);
    for (int i : support(x)) {
        Scalar c = x[i].conj();
        for (const auto& [m, u] : a.star[i / b.dim]) {
            Scalar cu = c * u;
            for (const auto& [n, v] : b.star[i % b.dim]) out[m * b.dim + n] += cu * v;
        }
    }
    return out;
}

Vec Algebra::adjoint(const Vec& x) const {
    Vec out = zero_vec(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        Scalar c = x[i].conj();
        for (const auto& [k, v] : star[i]) out[k] += c * v;
    }
    return out;
}

std::string Algebra::name(int i) const { return i < static_cast<int>(names.size()) ? names[i] : "e" + std::to_string(i); }

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    Algebra t;
    t.dim = a.dim * b.dim;
    t.unit = kron(a.unit, b.unit);
    t.product.resize(static_cast<std::size_t>(t.dim) * t.dim);
    t.star.resize(t.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            int ij = i * b.dim + j;
            Sparse s;
            for (const auto& [k, u] : a.star[i])
                for (const auto& [l, v] : b.star[j]) s.emplace_back(k * b.dim + l, u * v);
            std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            t.star[ij] = s;
            for (int k = 0; k < a.dim; ++k)
                for (int l = 0; l < b.dim; ++l) {
                    const auto& pa = a.product[i * a.dim + k];
                    const auto& pb = b.product[j * b.dim + l];
                    if (pa.empty() || pb.empty()) continue;
                    Sparse p;
                    for (const auto& [m, u] : pa)
                        for (const auto& [n, v] : pb) p.emplace_back(m * b.dim + n, u * v);
                    std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                    t.product[static_cast<std::size_t>(ij) * t.dim + k * b.dim + l] = p;
                }
        }
    for (int i = 0; i < t.dim; ++i) t.names.push_back(a.name(i / b.dim) + "(x)" + b.name(i % b.dim));
    return t;
}

Report check_star_algebra(const Algebra& a) {
    Report rep;
    rep.title = "star algebra";
    const int n = a.dim;
    std::vector<Vec> e;
    for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));

    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j) {
            Vec ij = a.mul(e[i], e[j]);
            for (int k = 0; k < n && bad.empty(); ++k)
                if (a.mul(ij, e[k]) != a.mul(e[i], a.mul(e[j], e[k])))
                    bad = "(" + a.name(i) + ", " + a.name(j) + ", " + a.name(k) + ")";
        }
    rep.add("associativity", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        if (a.mul(a.one(), e[i]) != e[i] || a.mul(e[i], a.one()) != e[i]) bad = a.name(i);
    rep.add("unit", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        if (a.adjoint(a.adjoint(e[i])) != e[i]) bad = a.name(i);
    rep.add("star_involutive", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i)
        for (int j = 0; j < n && bad.empty(); ++j)
            if (a.adjoint(a.mul(e[i], e[j])) != a.mul(a.adjoint(e[j]), a.adjoint(e[i])))
                bad = "(" + a.name(i) + ", " + a.name(j) + ")";
    rep.add("star_antimultiplicative", bad.empty(), bad);
    return rep;
}

Vec HopfAlgebra::delta(const Vec& x) const {
    const int n = dim();
    Vec out = zero_vec(n * n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& t : coproduct[i]) out[t.left * n + t.right] += x[i] * t.coef;
    }
    return out;
}

Vec HopfAlgebra::apply_antipode(const Vec& x) const {
    Vec out = zero_vec(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [k, v] : antipode[i]) out[k] += x[i] * v;
    }
    return out;
}

Scalar HopfAlgebra::eps(const Vec& x) const {
    Scalar s = 0;
    for (int i = 0; i < dim(); ++i)
        if (!x[i].is_zero()) s += x[i] * counit[i];
    return s;
}

std::vector<IteratedTerm> delta2(const HopfAlgebra& h, int i) {
    std::vector<IteratedTerm> out;
    for (const auto& t : h.coproduct[i])
        for (const auto& u : h.coproduct[t.left]) out.push_back({u.left, u.right, t.right, t.coef * u.coef});
    return out;
}

namespace {

// (id (x) Delta) Delta (e_i) as a dense triple tensor.
Vec delta2_right(const HopfAlgebra& h, int i) {
    const int n = h.dim();
    Vec out = zero_vec(n * n * n);
    for (const auto& t : h.coproduct[i])
        for (const auto& u : h.coproduct[t.right]) out[(t.left * n + u.left) * n + u.right] += t.coef * u.coef;
    return out;
}

Vec delta2_left(const HopfAlgebra& h, int i) {
    const int n = h.dim();
    Vec out = zero_vec(n * n * n);
    for (const auto& t : delta2(h, i)) out[(t.a * n + t.b) * n + t.c] += t.coef;
    return out;
}

}  // namespace

Report check_hopf_axioms(const HopfAlgebra& h) {
    Report rep = check_star_algebra(h.alg);
    rep.title = "hopf axioms";
    const int n = h.dim();
    const Algebra& a = h.alg;
    std::vector<Vec> e;
    for (int i = 0; i < n; ++i) e.push_back(basis_vec(n, i));

    auto first_failure = [&](auto&& ok) {
        for (int i = 0; i < n; ++i)
            if (!ok(i)) return a.name(i);
        return std::string{};
    };
    auto pair_failure = [&](auto&& ok) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!ok(i, j)) return "(" + a.name(i) + ", " + a.name(j) + ")";
        return std::string{};
    };

    std::string bad = first_failure([&](int i) { return delta2_left(h, i) == delta2_right(h, i); });
    rep.add("coassociativity", bad.empty(), bad);

    bad = first_failure([&](int i) {
        Vec l = zero_vec(n), r = zero_vec(n);
        for (const auto& t : h.coproduct[i]) {
            l[t.right] += h.counit[t.left] * t.coef;
            r[t.left] += h.counit[t.right] * t.coef;
        }
        return l == e[i] && r == e[i];
    });
    rep.add("counit", bad.empty(), bad);

    bad = pair_failure([&](int i, int j) { return h.delta(a.mul(e[i], e[j])) == tensor_mul(a, a, h.delta(e[i]), h.delta(e[j])); });
    rep.add("coproduct_multiplicative", bad.empty(), bad);

    bad = pair_failure([&](int i, int j) { return h.eps(a.mul(e[i], e[j])) == h.counit[i] * h.counit[j]; });
    rep.add("counit_multiplicative", bad.empty(), bad);
    rep.add("unit_grouplike", h.delta(a.one()) == kron(a.one(), a.one()) && h.eps(a.one()) == Scalar(1));

    bad = first_failure([&](int i) {
        Vec l = zero_vec(n), r = zero_vec(n);
        for (const auto& t : h.coproduct[i]) {
            l = add(l, scale(a.mul(h.apply_antipode(e[t.left]), e[t.right]), t.coef));
            r = add(r, scale(a.mul(e[t.left], h.apply_antipode(e[t.right])), t.coef));
        }
        Vec target = scale(a.one(), h.counit[i]);
        return l == target && r == target;
    });
    rep.add("antipode", bad.empty(), bad);

    bad = first_failure([&](int i) { return h.delta(a.adjoint(e[i])) == tensor_adjoint(a, a, h.delta(e[i])); });
    rep.add("coproduct_star", bad.empty(), bad);

    bad = first_failure([&](int i) { return h.eps(a.adjoint(e[i])) == h.counit[i].conj(); });
    rep.add("counit_star", bad.empty(), bad);

    bad = first_failure([&](int i) {
        Vec x = a.adjoint(h.apply_antipode(a.adjoint(h.apply_antipode(e[i]))));
        return x == e[i];
    });
    rep.add("star_antipode_square", bad.empty(), bad);
    return rep;
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
    const int n = a.dim();
    if (n != b.dim() || a.alg.unit != b.alg.unit) return false;
    for (int i = 0; i < n; ++i) {
        Vec e = basis_vec(n, i);
        if (a.delta(e) != b.delta(e) || a.apply_antipode(e) != b.apply_antipode(e)) return false;
        if (a.alg.adjoint(e) != b.alg.adjoint(e) || a.counit[i] != b.counit[i]) return false;
        for (int j = 0; j < n; ++j) {
            Vec f = basis_vec(n, j);
            if (a.alg.mul(e, f) != b.alg.mul(e, f)) return false;
        }
    }
    return true;
}

Vec haar_functional(const HopfAlgebra& h) {
    const int n = h.dim();
    Echelon<Scalar> ech(n);
    for (int i = 0; i < n; ++i) {
        // (h (x) id) Delta(e_i) = h(e_i) 1 and (id (x) h) Delta(e_i) = h(e_i) 1, per output coordinate
        std::map<int, std::map<int, Scalar>> left, right;
        for (const auto& t : h.coproduct[i]) {
            left[t.right][t.left] += t.coef;
            right[t.left][t.right] += t.coef;
        }
        for (auto* side : {&left, &right}) {
            for (int k = 0; k < n; ++k)
                if (!h.alg.unit[k].is_zero()) (*side)[k][i] -= h.alg.unit[k];
            for (auto& [k, row] : *side) {
                Sparse r;
                for (auto& [j, c] : row)
                    if (!c.is_zero()) r.emplace_back(j, c);
                if (!r.empty()) ech.add(r);
            }
        }
    }
    ech.add(to_sparse(h.alg.unit), Scalar(1));
    if (ech.inconsistent()) throw std::runtime_error("haar: invariance system inconsistent");
    if (static_cast<int>(ech.rank()) != n) throw std::runtime_error("haar: invariant functional not unique");
    return *ech.particular_solution();
}

Vec convolve(const HopfAlgebra& h, const Vec& f, const Vec& g) {
    Vec out = zero_vec(h.dim());
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& t : h.coproduct[i]) out[i] += t.coef * f[t.left] * g[t.right];
    return out;
}

Vec coact(const ComoduleAlgebra& a, int hopf_dim, const Vec& x) {
    const int n = a.alg.dim;
    Vec out = zero_vec(n * hopf_dim);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& t : a.coaction[i]) {
            int idx = a.side == Side::Right ? t.elem * hopf_dim + t.hopf : t.hopf * n + t.elem;
            out[idx] += x[i] * t.coef;
        }
    }
    return out;
}

Report check_comodule_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h) {
    Report rep;
    rep.title = "comodule algebra";
    const int n = a.alg.dim, m = h.dim();
    const bool right = a.side == Side::Right;
    const Algebra& first = right ? a.alg : h.alg;
    const Algebra& second = right ? h.alg : a.alg;
    std::string bad;
    for (int i = 0; i < n && bad.empty(); ++i) {
        // coassociativity: (alpha (x) id) alpha = (id (x) Delta) alpha, checked on triple coordinates
        Vec lhs = zero_vec(n * m * m), rhs = zero_vec(n * m * m);
        for (const auto& t : a.coaction[i]) {
            for (const auto& u : a.coaction[t.elem]) {
                int idx = right ? (u.elem * m + u.hopf) * m + t.hopf : (t.hopf * m + u.hopf) * n + u.elem;
                lhs[idx] += t.coef * u.coef;
            }
            for (const auto& d : h.coproduct[t.hopf]) {
                int idx = right ? (t.elem * m + d.left) * m + d.right : (d.left * m + d.right) * n + t.elem;
                rhs[idx] += t.coef * d.coef;
            }
        }
        if (lhs != rhs) bad = a.alg.name(i);
    }
    rep.add("coaction_coassociative", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i) {
        Vec x = zero_vec(n);
        for (const auto& t : a.coaction[i]) x[t.elem] += t.coef * h.counit[t.hopf];
        if (x != basis_vec(n, i)) bad = a.alg.name(i);
    }
    rep.add("coaction_counital", bad.empty(), bad);

    bad.clear();
    for (int i = 0; i < n && bad.empty(); ++i) {
        Vec ei = basis_vec(n, i);
        for (int j = 0; j < n && bad.empty(); ++j) {
            Vec ej = basis_vec(n, j);
            if (coact(a, m, a.alg.mul(ei, ej)) != tensor_mul(first, second, coact(a, m, ei), coact(a, m, ej)))
                bad = "(" + a.alg.name(i) + ", " + a.alg.name(j) + ")";
        }
        if (bad.empty() && coact(a, m, a.alg.adjoint(ei)) != tensor_adjoint(first, second, coact(a, m, ei))) bad = a.alg.name(i) + " (star)";
    }
    if (bad.empty() && coact(a, m, a.alg.one()) != kron(first.unit, second.unit)) bad = "unit";
    rep.add("coaction_star_homomorphism", bad.empty(), bad);
    return rep;
}

Coordinates::Coordinates(std::vector<Vec> basis) : basis_(std::move(basis)) {
    const int r = size();
    if (r == 0) return;
    const int n = static_cast<int>(basis_[0].size());
    // choose r independent coordinates by elimination on the transposed family
    Echelon<Scalar> ech(r);
    for (int row = 0; row < n && static_cast<int>(rows_.size()) < r; ++row) {
        Sparse eq;
        for (int k = 0; k < r; ++k)
            if (!basis_[k][row].is_zero()) eq.emplace_back(k, basis_[k][row]);
        if (!eq.empty() && ech.add(eq)) rows_.push_back(row);
    }
    if (static_cast<int>(rows_.size()) != r) throw std::invalid_argument("Coordinates: family is linearly dependent");
    DenseMatrix<Scalar> m(r, std::vector<Scalar>(r));
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) m[i][k] = basis_[k][rows_[i]];
    inverse_.assign(r, std::vector<Scalar>(r));
    for (int c = 0; c < r; ++c) {
        std::vector<Scalar> b(r, Scalar(0));
        b[c] = 1;
        auto x = solve_square(m, b);
        for (int i = 0; i < r; ++i) inverse_[i][c] = (*x)[i];
    }
}

std::optional<Vec> Coordinates::solve(const Vec& v) const {
    const int r = size();
    Vec c = zero_vec(r);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
            if (!v[rows_[k]].is_zero() && !inverse_[i][k].is_zero()) c[i] += inverse_[i][k] * v[rows_[k]];
    Vec back = zero_vec(static_cast<int>(v.size()));
    for (int k = 0; k < r; ++k)
        if (!c[k].is_zero()) back = add(back, scale(basis_[k], c[k]));
    if (back != v) return std::nullopt;
    return c;
}

std::vector<Vec> kernel_basis(const std::vector<Sparse>& equations, int cols) {
    Echelon<Scalar> ech(cols);
    for (const auto& e : equations)
        if (!e.empty()) ech.add(e);
    std::vector<Vec> out;
    for (const auto& k : ech.kernel()) out.push_back(to_dense(k, cols));
    return out;
}

}  // namespace qd::hopf
