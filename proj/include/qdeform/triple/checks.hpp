#pragma once

#include "qdeform/suq2/spinor.hpp"
#include "qdeform/triple/profile.hpp"

namespace qd::triple {

struct SpectralTripleCheck {
    Report checks;
    std::vector<double> commutator_norms;        // ||[D, a]|| per generator
    std::vector<std::pair<double, int>> growth;  // distinct |eigenvalue| with multiplicity, ascending
};

// Throws std::invalid_argument on a shape mismatch.
SpectralTripleCheck check_spectral_triple(const std::vector<Eigen::MatrixXcd>& generators, const Eigen::MatrixXcd& D,
                                          double tol = 1e-12);

// Basis vector e = (row of irrep `label`) (x) (copy in the multiplicity space).
struct BasisLabel {
    int label = 0;
    int copy = 0;
    int row = 0;
};

std::vector<BasisLabel> spinor_labels(const suq2::TruncatedPodles& t);

// D = sum_x 1 (x) D_x on the listed blocks, and every generator only connects
// labels at most `max_shift` apart.
Report check_equivariance(const Eigen::MatrixXd& D, const std::vector<BasisLabel>& basis,
                          const std::vector<Eigen::MatrixXd>& generators, int max_shift, double tol = 1e-12);

using HaarOracle = std::function<Rational(const suq2::Element<Rational>&)>;
HaarOracle closed_form_haar(const suq2::Ring& r);
// Throws std::out_of_range on monomials beyond the table degree.
HaarOracle table_haar(suq2::HaarTable table);

struct WoronowiczSolve {
    ExactMatrix F;
    Surd trace, inverse_trace;
    Report checks;
};

// F_x for the spin n2/2 corepresentation from h(u_ij u_st*) = delta_is F_jt / Tr F,
// normalized by Tr F = Tr F^-1.  The PW matrices are unitary only up to a
// diagonal conjugation, which is solved for along the way.
WoronowiczSolve woronowicz_F(const suq2::PeterWeylBasis& pw, int n2, const HaarOracle& h);

// Per block: [R_x, D_x] = 0, R_x > 0, F_x normalized with Tr F_x = |qdim|, and
// F_x equal to `reference` where the reference is known.
Report check_r_twisted_volume(const IsotypicProfile& p, const FOracle& reference);

// R = sum_n F_{r_2n} (x) 1_2 on the spinor basis.
Eigen::MatrixXd podles_twist(const suq2::TruncatedPodles& t, const FOracle& F);
// R against the block form sum_n F_{r_2n} (x) 1_2 and [R, D] = 0.
Report check_r_twisted_volume(const suq2::TruncatedPodles& t, const Eigen::MatrixXd& R, const FOracle& F,
                              double tol = 1e-12);

}  // namespace qd::triple
