#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <Eigen/Dense>

#include "qdeform/hopf/iso.hpp"

namespace qd::hopf {

std::vector<Vec> center_basis(const Algebra& a) {
    const int n = a.dim;
    std::vector<Sparse> eqs;
    for (int j = 0; j < n; ++j) {
        // [x, e_j] = 0, one equation per output coordinate
        std::vector<std::map<int, Scalar>> acc(n);
        for (int i = 0; i < n; ++i) {
            for (const auto& [k, c] : a.product[i * n + j]) acc[k][i] += c;
            for (const auto& [k, c] : a.product[j * n + i]) acc[k][i] -= c;
        }
        for (int k = 0; k < n; ++k) {
            Sparse r;
            for (auto& [i, v] : acc[k])
                if (!v.is_zero()) r.emplace_back(i, v);
            if (!r.empty()) eqs.push_back(std::move(r));
        }
    }
    return kernel_basis(eqs, n);
}

AlgebraInvariants algebra_invariants(const Algebra& a, std::uint64_t seed) {
    AlgebraInvariants out;
    out.dim = a.dim;
    auto center = center_basis(a);
    out.center_dim = static_cast<int>(center.size());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    Vec z = zero_vec(a.dim);
    for (const auto& c : center) z = add(z, scale(c, Scalar(Rational(coef(rng), 97))));
    z = add(z, a.adjoint(z));

    const int n = a.dim;
    Eigen::MatrixXcd left(n, n);
    for (int j = 0; j < n; ++j) {
        Vec col = a.mul(z, basis_vec(n, j));
        for (int i = 0; i < n; ++i) left(i, j) = col[i].value();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(left, false);
    std::vector<double> ev;
    for (int i = 0; i < n; ++i) ev.push_back(es.eigenvalues()[i].real());
    std::sort(ev.begin(), ev.end());
    const double scale_ref = std::max(1.0, std::abs(ev.empty() ? 0.0 : ev.back()) + std::abs(ev.empty() ? 0.0 : ev.front()));
    std::vector<int> mult;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (i > 0 && std::abs(ev[i] - ev[i - 1]) < 1e-8 * scale_ref)
            ++mult.back();
        else
            mult.push_back(1);
    }
    out.resolved = static_cast<int>(mult.size()) == out.center_dim;
    for (int m : mult) {
        int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
        if (r * r != m) out.resolved = false;
        out.blocks.push_back(r);
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

}  // namespace qd::hopf
