#pragma once

#include <map>

#include "qdeform/hopf/builders.hpp"
#include "qdeform/hopf/cotensor.hpp"
#include "qdeform/hopf/matrix.hpp"

namespace qd::hopf {

// L^2(B) for the invariant state: basis Lambda(b_i), Gram omega(b_i* b_j),
// and beta'_1 carried by the coefficients of beta_1.
struct GNSSpace {
    int dim = 0;
    Matrix gram;
    Coaction beta1;  // Side::Left, same data as beta_1
    Report checks;   // gram_positive_definite, beta1_isometric, ergodic
    int fixed_dim = 0;
};

GNSSpace gns(const Bicomodule& b);

// Fixed vectors of a coaction (either side) on a space of dimension `dim`.
std::vector<Vec> fixed_vectors(const Coaction& c, int dim, const HopfAlgebra& h);

// H box L^2(B) inside H (x) L^2(B), for a right corepresentation u on H.
struct BoxTensor {
    std::vector<Vec> basis;  // coordinates i * dim(L^2) + j
    int left_dim = 0, right_dim = 0;
};

BoxTensor box_tensor_hilbert(int hilbert_dim, const Coaction& u, const GNSSpace& l2, const HopfAlgebra& h);

// Subspaces transforming under each irrep: {x : coaction(x) lies in X (x) C_x}.
struct SpectralDecomposition {
    std::vector<std::vector<Vec>> subspaces;  // one per irrep
    Report checks;                            // direct sum equals the whole space
};

SpectralDecomposition spectral_subspaces(const Coaction& c, int dim, const HopfAlgebra& h,
                                         const std::vector<Irrep>& irreps);

// Omega as blocks on H_x (x) H_y, rows (i, k) and columns (j, l):
// <xi_i (x) xi_k, Omega (xi_j (x) xi_l)> = sigma(u^x_ij, u^y_kl).
struct OmegaBlocks {
    std::vector<Irrep> irreps;
    std::map<std::pair<int, int>, Matrix> blocks;
};

OmegaBlocks omega_from_sigma(const DualCocycle& sigma, const std::vector<Irrep>& irreps);
DualCocycle sigma_from_omega(const OmegaBlocks& omega, int hopf_dim);
// Unitary blocks and identity blocks against the trivial irrep.
Report check_omega(const OmegaBlocks& omega, const HopfAlgebra& h);

}  // namespace qd::hopf
