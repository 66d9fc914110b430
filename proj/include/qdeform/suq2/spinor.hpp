#pragma once

#include <array>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qdeform/suq2/podles.hpp"

namespace qd::suq2 {

// e^n_{k,l} with k = bundle / 2 (bundle = +1 or -1).
struct SpinorIndex {
    int bundle = 1;
    int n2 = 1, l2 = -1;
};

// One eigenvalue block of D: the multiplet l = -n..n carries the irrep r_{2n}.
struct IsotypicEntry {
    int n2 = 1;
    Rational eigenvalue;
    int dim = 2;
};

// Truncated Podles triple on H_N = span{e^n_{+-1/2,l} : n <= N}.  The
// generators act through an equivariant representation: on each bundle,
// pi(x_j) = sum r_{n'n} T_j^{(n'n)} with T the column factors of left
// multiplication at c = 0 and r reduced matrix elements solved by
// continuation in c.
struct TruncatedPodles {
    Rational q, t, c, c1, c2;
    int max_n2 = 1;
    std::vector<SpinorIndex> basis;  // bundle +1 first, then -1; n ascending; l ascending
    Eigen::MatrixXd A, B, Bstar, D;
    std::array<std::map<std::pair<int, int>, double>, 2> reduced;  // bundle +1, -1; keys (n2', n2)
    double literal_residual = 0;     // relations of the literal compression, interior block
    std::vector<IsotypicEntry> isotypic;
    Report checks;

    int dim() const { return static_cast<int>(basis.size()); }
    int position(const SpinorIndex& x) const;
};

struct SpinorOptions {
    int continuation_steps = 15;
    double tolerance = 1e-10;
};

// Needs pw built to max_n2 + 2.
TruncatedPodles truncated_podles_triple(const PeterWeylBasis& pw, const Rational& t, const Rational& c1,
                                        const Rational& c2, int max_n2, const SpinorOptions& opts = {});

struct RelationResiduals {
    double selfadjoint = 0;   // ||A - A*||
    double commutation = 0;   // ||AB - q^-2 BA|| on the interior columns
    double bstar_b = 0;       // ||B*B - A + A^2 - c||
    double b_bstar = 0;       // ||BB* - q^2 A + q^4 A^2 - c||
    double max() const;
};

// Operator norms of the relation defects restricted to columns with n2 <= interior_n2.
RelationResiduals relation_residuals(const TruncatedPodles& p, int interior_n2);
RelationResiduals relation_residuals(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, const Eigen::MatrixXd& Bstar,
                                     double q, double c, const std::vector<int>& interior_columns);

double commutator_norm(const Eigen::MatrixXd& D, const Eigen::MatrixXd& X);
// Operator norm of [D, X] on the columns with n2 <= interior_n2.
double commutator_norm(const TruncatedPodles& p, const Eigen::MatrixXd& X, int interior_n2);

// ||[D, A]|| and ||[D, B]|| on columns n <= N - 1, computed at N and at N + 1.
struct CommutatorStability {
    double a_at_n = 0, a_at_next = 0, b_at_n = 0, b_at_next = 0;
    bool stable(double tol = 1e-6) const;
};
// pw must reach N + 2.
CommutatorStability commutator_stability(const PeterWeylBasis& pw, const Rational& t, const Rational& c1,
                                         const Rational& c2, int max_n2);

// Multiplicity of each eigenvalue of D, from the isotypic data.
std::map<Rational, int> dirac_spectrum(const TruncatedPodles& p);

}  // namespace qd::suq2
