#include <algorithm>
#include <cmath>

#include "qdeform/hopf/matrix.hpp"

namespace qd::hopf {

Matrix zero_matrix(int rows, int cols) { return Matrix(rows, Vec(cols, Scalar(0))); }

Matrix identity_matrix(int n) {
    Matrix m = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    const int r = static_cast<int>(a.size());
    const int k = b.empty() ? 0 : static_cast<int>(b.size());
    const int c = b.empty() ? 0 : static_cast<int>(b[0].size());
    Matrix out = zero_matrix(r, c);
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < c; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Vec mat_vec(const Matrix& a, const Vec& x) {
    Vec out = zero_vec(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero() && !a[i][j].is_zero()) out[i] += a[i][j] * x[j];
    return out;
}

Matrix dagger(const Matrix& a) {
    if (a.empty()) return {};
    Matrix out = zero_matrix(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j].conj();
    return out;
}

Matrix kron_matrix(const Matrix& a, const Matrix& b) {
    const int ar = static_cast<int>(a.size()), ac = ar ? static_cast<int>(a[0].size()) : 0;
    const int br = static_cast<int>(b.size()), bc = br ? static_cast<int>(b[0].size()) : 0;
    Matrix out = zero_matrix(ar * br, ac * bc);
    for (int i = 0; i < ar; ++i)
        for (int j = 0; j < ac; ++j) {
            if (a[i][j].is_zero()) continue;
            for (int k = 0; k < br; ++k)
                for (int l = 0; l < bc; ++l)
                    if (!b[k][l].is_zero()) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
        }
    return out;
}

Matrix columns_to_matrix(const std::vector<Vec>& cols) {
    if (cols.empty()) return {};
    Matrix m = zero_matrix(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
    return m;
}

Eigen::MatrixXcd to_eigen(const Matrix& a) {
    const int r = static_cast<int>(a.size()), c = r ? static_cast<int>(a[0].size()) : 0;
    Eigen::MatrixXcd m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = a[i][j].value();
    return m;
}

Eigen::VectorXcd to_eigen(const Vec& v) {
    Eigen::VectorXcd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i].value();
    return out;
}

double norm(const Vec& v) { return to_eigen(v).norm(); }

int kernel_dimension(const Matrix& a) {
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    Echelon<Scalar> e(cols);
    for (const auto& row : a) e.add(to_sparse(row));
    return static_cast<int>(cols - e.rank());
}

Rational rationalize(double x, long max_den) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-13 * std::max(1.0, std::abs(x))) break;
        double frac = r - a;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    Rational out(p1, q1);
    out.canonicalize();
    return out;
}

ExactSpectrum exact_spectrum(const Matrix& a) {
    ExactSpectrum out;
    const int n = static_cast<int>(a.size());
    if (n == 0) {
        out.resolved = true;
        return out;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), false);
    std::vector<Rational> candidates;
    for (int i = 0; i < n; ++i) {
        auto z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-8) return out;
        Rational r = rationalize(z.real());
        if (std::abs(to_double(r) - z.real()) > 1e-8) return out;
        if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
    }
    std::sort(candidates.begin(), candidates.end());
    int total = 0;
    for (const auto& r : candidates) {
        Matrix shifted = a;
        for (int i = 0; i < n; ++i) shifted[i][i] -= Scalar(r);
        int k = kernel_dimension(shifted);
        if (k > 0) out.eigen.emplace_back(r, k);
        total += k;
    }
    out.resolved = total == n;
    return out;
}

}  // namespace qd::hopf
