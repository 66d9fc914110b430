#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qdeform/hopf/algebra.hpp"

namespace qd::hopf {

using Matrix = DenseMatrix<Scalar>;

Matrix zero_matrix(int rows, int cols);
Matrix identity_matrix(int n);
Matrix matmul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& a, const Vec& x);
Matrix dagger(const Matrix& a);
Matrix kron_matrix(const Matrix& a, const Matrix& b);
Matrix columns_to_matrix(const std::vector<Vec>& cols);

Eigen::MatrixXcd to_eigen(const Matrix& a);
Eigen::VectorXcd to_eigen(const Vec& v);
// Euclidean norm of an exact vector, in double precision.
double norm(const Vec& v);

// Spectrum of an exact matrix that is diagonalizable with rational
// eigenvalues; `resolved` is false when the exact kernel dimensions of the
// rationalized numerical eigenvalues do not add up to the size.
struct ExactSpectrum {
    bool resolved = false;
    std::vector<std::pair<Rational, int>> eigen;  // ascending, with multiplicity
};

// Continued-fraction approximation with bounded denominator.
Rational rationalize(double x, long max_den = 1000000);

ExactSpectrum exact_spectrum(const Matrix& a);
int kernel_dimension(const Matrix& a);

}  // namespace qd::hopf
