#include <cmath>
#include <cstdlib>
#include <optional>

#include "qdeform/suq2/peter_weyl.hpp"

namespace qd::suq2 {

Monomial top_monomial(const PWIndex& x) {
    const int a = -(x.k2 + x.l2) / 2;
    if (a >= 0) return make_monomial(false, a, (x.n2 + x.k2) / 2, (x.n2 + x.l2) / 2);
    return make_monomial(true, (x.k2 + x.l2) / 2, (x.n2 - x.l2) / 2, (x.n2 - x.k2) / 2);
}

namespace {

Rational inner(const Ring& r, const Element<Rational>& x, const Element<Rational>& y) {
    return haar(r, r.mul(r.adjoint(x), y));
}

Rational coefficient(const Tensor<Rational>& t, const Monomial& x, const Monomial& y) {
    auto it = t.find({x, y});
    return it == t.end() ? Rational(0) : it->second;
}

}  // namespace

PeterWeylBasis::PeterWeylBasis(Ring ring, int max_n2) : ring_(std::move(ring)), max_n2_(max_n2) {
    if (max_n2 < 0) throw std::invalid_argument("truncation level must be non-negative");
    for (int n2 = 0; n2 <= max_n2; ++n2)
        for (int k2 = -n2; k2 <= n2; k2 += 2)
            for (int l2 = -n2; l2 <= n2; l2 += 2) {
                Element<Rational> x{{top_monomial({n2, k2, l2}), Rational(1)}};
                for (int m2 = std::max(std::abs(k2), std::abs(l2)); m2 < n2; m2 += 2) {
                    const Entry& e = d_.at({m2, k2, l2});
                    Rational c = inner(ring_, e.value, x) / e.norm2;
                    x = combine(x, Rational(1), e.value, Rational(-c));
                }
                Rational n = inner(ring_, x, x);
                if (sgn(n) <= 0) throw std::runtime_error("Gram matrix is not positive definite");
                d_.emplace(PWIndex{n2, k2, l2}, Entry{std::move(x), n, Rational(0)});
            }
    for (int n2 = 0; n2 <= max_n2; ++n2) {
        const int f = -n2;
        for (int a2 = -n2; a2 <= n2; a2 += 2) {
            const Tensor<Rational> dd = ring_.delta(d({n2, a2, f}));
            for (int c2 = -n2; c2 <= n2; c2 += 2) {
                Rational g = coefficient(dd, top_monomial({n2, a2, c2}), top_monomial({n2, c2, f}));
                if (sgn(g) == 0) throw std::runtime_error("Peter-Weyl gauge coefficient vanishes");
                d_.at({n2, a2, c2}).gauge = g;
            }
        }
    }
}

Element<Rational> PeterWeylBasis::u(const PWIndex& x) const {
    Element<Rational> out;
    for (const auto& [m, v] : d(x)) out.emplace(m, v * gauge(x));
    return out;
}

double PeterWeylBasis::e_scale(const PWIndex& x) const {
    return (sgn(gauge(x)) > 0 ? 1.0 : -1.0) / std::sqrt(to_double(norm2(x)));
}

std::vector<PWIndex> PeterWeylBasis::indices() const {
    std::vector<PWIndex> out;
    for (const auto& [k, v] : d_) out.push_back(k);
    return out;
}

Report check_peter_weyl(const PeterWeylBasis& pw, int corep_n2, int exact_n2) {
    Report rep;
    rep.title = "Peter-Weyl basis";
    const Ring& r = pw.ring();
    auto idx = pw.indices();
    bool positive = true;
    for (const auto& x : idx) positive = positive && sgn(pw.norm2(x)) > 0;
    rep.add("norms_positive", positive);

    long pairs = 0, structural = 0;
    std::string bad;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            const bool same_weight = idx[i].k2 == idx[j].k2 && idx[i].l2 == idx[j].l2;
            if (!same_weight && std::max(idx[i].n2, idx[j].n2) > exact_n2) {
                ++structural;
                continue;
            }
            ++pairs;
            if (bad.empty() && sgn(inner(r, pw.d(idx[i]), pw.d(idx[j]))) != 0)
                bad = "n = " + half_to_string(idx[i].n2) + ", " + half_to_string(idx[j].n2);
        }
    rep.add("orthogonal", bad.empty(),
            bad.empty() ? std::to_string(pairs) + " exact pairs, " + std::to_string(structural) + " by weight" : bad);

    bad.clear();
    for (int n2 = 0; n2 <= std::min(corep_n2, pw.max_n2()) && bad.empty(); ++n2)
        for (int k2 = -n2; k2 <= n2 && bad.empty(); k2 += 2)
            for (int l2 = -n2; l2 <= n2 && bad.empty(); l2 += 2) {
                Tensor<Rational> lhs = r.delta(pw.u({n2, k2, l2}));
                for (int m2 = -n2; m2 <= n2; m2 += 2) {
                    auto x = pw.u({n2, k2, m2});
                    auto y = pw.u({n2, m2, l2});
                    for (const auto& [p, a] : x)
                        for (const auto& [s, b] : y) {
                            auto [it, fresh] = lhs.try_emplace({p, s}, -a * b);
                            if (!fresh) it->second -= a * b;
                        }
                }
                std::erase_if(lhs, [](const auto& e) { return sgn(e.second) == 0; });
                if (!lhs.empty()) bad = "u^" + half_to_string(n2) + "_(" + half_to_string(k2) + ", " + half_to_string(l2) + ")";
            }
    rep.add("corepresentation", bad.empty(), bad);
    return rep;
}

std::array<std::array<Element<Rational>, 2>, 2> printed_d_half(const Ring& r) {
    auto s = [](Element<Rational> x, const Rational& c) {
        for (auto& [m, v] : x) v *= c;
        return x;
    };
    return {{{r.word("a"), s(r.word("G"), -r.q())}, {r.word("g"), r.word("A")}}};
}

std::array<std::array<Element<Rational>, 3>, 3> printed_d_one(const Ring& r) {
    const Rational q = r.q();
    const Rational p = q * q + 1;
    auto s = [](Element<Rational> x, const Rational& c) {
        for (auto& [m, v] : x) v *= c;
        return x;
    };
    Element<Rational> middle = combine(r.word(""), Rational(1), r.word("Gg"), Rational(-p));
    return {{{r.word("AA"), s(r.word("Ag"), -p), s(r.word("gg"), -q)},
             {r.word("GA"), middle, r.word("ag")},
             {s(r.word("GG"), -q), s(r.word("Ga"), -p), r.word("aa")}}};
}

namespace {

// c with x = c y, if it exists
std::optional<Rational> ratio(const Element<Rational>& x, const Element<Rational>& y) {
    if (x.size() != y.size() || y.empty()) return std::nullopt;
    const Rational c = x.begin()->second / y.begin()->second;
    for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy)
        if (ix->first != iy->first || ix->second != c * iy->second) return std::nullopt;
    return c;
}

}  // namespace

Report check_printed_matrices(const PeterWeylBasis& pw) {
    Report rep;
    rep.title = "printed Peter-Weyl matrices";
    const Ring& r = pw.ring();
    auto half = printed_d_half(r);
    std::string bad;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (pw.u({1, 2 * i - 1, 2 * j - 1}) != half[i][j]) bad += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    rep.add("d_half_entrywise", bad.empty(), bad);

    auto one = printed_d_one(r);
    rep.add("d_one_middle_entry", one[1][1] == pw.u({2, 0, 0}), element_str(pw.u({2, 0, 0})));

    bad.clear();
    for (int i = 0; i < 3 && bad.empty(); ++i)
        for (int j = 0; j < 3 && bad.empty(); ++j) {
            Tensor<Rational> lhs = r.delta(one[i][j]);
            for (int m = 0; m < 3; ++m)
                for (const auto& [p, a] : one[i][m])
                    for (const auto& [s, b] : one[m][j]) {
                        auto [it, fresh] = lhs.try_emplace({p, s}, -a * b);
                        if (!fresh) it->second -= a * b;
                    }
            std::erase_if(lhs, [](const auto& e) { return sgn(e.second) == 0; });
            if (!lhs.empty()) bad = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    rep.add("d_one_corepresentation", bad.empty(), bad);

    // printed row i carries k = 1 - i; entries are t_i / t_j times ours
    std::array<std::array<std::optional<Rational>, 3>, 3> rho;
    bool proportional = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            rho[i][j] = ratio(one[i][j], pw.u({2, 2 - 2 * i, 2 - 2 * j}));
            proportional = proportional && rho[i][j].has_value();
        }
    bool conjugate = proportional;
    for (int i = 0; i < 3 && conjugate; ++i)
        for (int j = 0; j < 3 && conjugate; ++j)
            conjugate = *rho[i][i] == 1 && *rho[i][j] * *rho[j][i] == 1 && *rho[i][j] == *rho[i][0] * *rho[0][j];
    rep.add("d_one_diagonal_conjugate", conjugate);
    return rep;
}

}  // namespace qd::suq2
