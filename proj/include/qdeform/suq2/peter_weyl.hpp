#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "qdeform/common/report.hpp"
#include "qdeform/suq2/haar.hpp"

namespace qd::suq2 {

// Doubled labels: spin n = n2 / 2, row k = k2 / 2, column l = l2 / 2.
struct PWIndex {
    int n2 = 0, k2 = 0, l2 = 0;
    friend auto operator<=>(const PWIndex&, const PWIndex&) = default;
};

// The unique PBW monomial of degree n2 and bidegree (k2, l2).
Monomial top_monomial(const PWIndex& x);

class PeterWeylBasis {
  public:
    PeterWeylBasis(Ring ring, int max_n2);

    const Ring& ring() const { return ring_; }
    int max_n2() const { return max_n2_; }

    // Monic in top_monomial, orthogonal for <x, y> = h(x* y).
    const Element<Rational>& d(const PWIndex& x) const { return at(d_, x).value; }
    const Rational& norm2(const PWIndex& x) const { return at(d_, x).norm2; }
    // Scale making u^n_kl = gauge * d^n_kl a corepresentation matrix with monic first column.
    const Rational& gauge(const PWIndex& x) const { return at(d_, x).gauge; }
    Element<Rational> u(const PWIndex& x) const;
    // e^n_kl = sign(gauge) d / sqrt(norm2)
    double e_scale(const PWIndex& x) const;

    // Coefficients of x on the d basis; throws std::out_of_range past max_n2.
    template <class K>
    std::map<PWIndex, K> decompose(Element<K> x) const {
        std::map<PWIndex, K> out;
        while (!x.empty()) {
            auto top = x.begin();
            for (auto it = x.begin(); it != x.end(); ++it)
                if (it->first.degree() > top->first.degree()) top = it;
            const Monomial m = top->first;
            const PWIndex idx{m.degree(), m.k2(), m.l2()};
            const K v = top->second;
            const auto& dd = d(idx);
            for (const auto& [p, c] : dd) add_term(x, p, K(-v * K(c)));
            out.emplace(idx, v);
        }
        return out;
    }

    std::vector<PWIndex> indices() const;

  private:
    struct Entry {
        Element<Rational> value;
        Rational norm2, gauge;
    };
    static const Entry& at(const std::map<PWIndex, Entry>& m, const PWIndex& x) {
        auto it = m.find(x);
        if (it == m.end())
            throw std::out_of_range("Peter-Weyl index (" + std::to_string(x.n2) + ", " + std::to_string(x.k2) + ", " +
                                    std::to_string(x.l2) + ")/2 not built");
        return it->second;
    }

    Ring ring_;
    int max_n2_ = 0;
    std::map<PWIndex, Entry> d_;
};

// Exact orthogonality on every pair of equal bidegree and on all pairs up to
// `exact_n2` (beyond it, pairs of different bidegree vanish by the torus weight
// of h), positivity of the norms, and the corepresentation identity
// Delta u_kl = sum_m u_km (x) u_ml up to `corep_n2`.
Report check_peter_weyl(const PeterWeylBasis& pw, int corep_n2, int exact_n2);

// The printed fundamental matrix [[alpha, -q gamma*], [gamma, alpha*]] and the
// printed spin-1 matrix, rows and columns in printed order.
std::array<std::array<Element<Rational>, 2>, 2> printed_d_half(const Ring& r);
std::array<std::array<Element<Rational>, 3>, 3> printed_d_one(const Ring& r);

// d^1/2 equals the printed matrix entrywise; the printed d^1 is a
// corepresentation, has the printed middle entry, and is a diagonal
// conjugate of u^1 with the index order reversed.
Report check_printed_matrices(const PeterWeylBasis& pw);

}  // namespace qd::suq2
