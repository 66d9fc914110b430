#pragma once

#include <map>

#include "qdeform/common/report.hpp"
#include "qdeform/suq2/pbw.hpp"

namespace qd::suq2 {

// h(alpha^a gamma^b gamma*^c) = delta_a0 delta_bc (1 - q^2) / (1 - q^(2b+2)),
// 1 / (b + 1) at |q| = 1.
Rational haar_monomial(const Rational& q, const Monomial& m);

template <class K>
K haar(const Ring& r, const Element<K>& x) {
    K out(0);
    for (const auto& [m, v] : x) {
        Rational h = haar_monomial(r.q(), m);
        if (sgn(h) != 0) out = out + v * K(h);
    }
    return out;
}

// Haar state on all monomials of degree <= `degree`, from the exact linear
// system (h (x) id) Delta = h(.) 1 = (id (x) h) Delta, h(1) = 1.
struct HaarTable {
    int degree = 0;
    std::map<Monomial, Rational> values;
    int unknowns = 0, equations = 0;
};

// Throws std::runtime_error when the system is inconsistent or underdetermined.
HaarTable solve_haar(const Ring& r, int degree);

std::vector<Monomial> monomials_up_to(int degree);

}  // namespace qd::suq2
