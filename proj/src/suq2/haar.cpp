#include <stdexcept>

#include "qdeform/scalar/linalg.hpp"
#include "qdeform/suq2/haar.hpp"

namespace qd::suq2 {

Rational haar_monomial(const Rational& q, const Monomial& m) {
    if (m.a != 0 || m.b != m.c) return 0;
    const Rational q2 = q * q;
    if (q2 == 1) return Rational(1, m.b + 1);
    Rational out = (1 - q2) / (1 - pow(q2, m.b + 1));
    out.canonicalize();
    return out;
}

std::vector<Monomial> monomials_up_to(int degree) {
    std::vector<Monomial> out;
    for (int d = 0; d <= degree; ++d)
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) {
                out.push_back(make_monomial(false, a, b, d - a - b));
                if (a > 0) out.push_back(make_monomial(true, a, b, d - a - b));
            }
    return out;
}

HaarTable solve_haar(const Ring& r, int degree) {
    HaarTable table;
    table.degree = degree;
    const auto monos = monomials_up_to(degree);
    std::map<Monomial, std::size_t> index;
    for (const auto& m : monos) index.emplace(m, index.size());
    const std::size_t n = monos.size();
    table.unknowns = static_cast<int>(n);

    Echelon<Rational> ech(n);
    auto column = [&](const Monomial& m) {
        auto it = index.find(m);
        if (it == index.end()) throw std::logic_error("coproduct leaves the degree filtration");
        return it->second;
    };
    for (const auto& m : monos) {
        // for each fixed leg monomial p: sum_q coef h(q) - [p = 1] h(m) = 0
        std::map<Monomial, std::map<std::size_t, Rational>> left, right;
        for (const auto& [pair, c] : r.coproduct(m)) {
            left[pair.first][column(pair.second)] += c;
            right[pair.second][column(pair.first)] += c;
        }
        left[unit_monomial][column(m)] -= 1;
        right[unit_monomial][column(m)] -= 1;
        for (auto* side : {&left, &right})
            for (auto& [leg, row] : *side) {
                SparseVec<Rational> eq;
                for (auto& [col, v] : row)
                    if (sgn(v) != 0) eq.emplace_back(col, v);
                if (eq.empty()) continue;
                ech.add(eq, Rational(0));
                ++table.equations;
            }
    }
    ech.add({{column(unit_monomial), Rational(1)}}, Rational(1));
    ++table.equations;
    if (ech.inconsistent()) throw std::runtime_error("Haar system is inconsistent");
    if (ech.rank() != n) throw std::runtime_error("Haar system is underdetermined");
    auto x = ech.particular_solution();
    for (std::size_t i = 0; i < n; ++i)
        if (sgn((*x)[i]) != 0) table.values.emplace(monos[i], (*x)[i]);
    return table;
}

}  // namespace qd::suq2
