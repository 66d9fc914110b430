#pragma once

#include "qdeform/hopf/galois.hpp"

namespace qd::hopf {

// Finite spectral triple with an equivariant corepresentation; the Hilbert
// space carries the standard inner product.
struct FiniteEquivariantTriple {
    std::string name;
    HopfAlgebra hopf;
    ComoduleAlgebra algebra;     // right comodule algebra, alpha(a) = U (a (x) 1) U*
    int hilbert_dim = 0;
    std::vector<Matrix> rep;     // pi(e_i)
    Coaction corep;              // e_j -> sum_i e_i (x) u_ij
    Matrix dirac;
    Matrix twist;                // R, positive and commuting with D
    std::vector<Irrep> irreps;   // of hopf, for isotypic profiles
};

// u_ij as elements of H, at i * dim + j.
std::vector<Vec> corep_entries(const Coaction& u, int dim, int hopf_dim);

Report check_triple(const FiniteEquivariantTriple& t);

// C[G] acting on l^2(G) by left translation, U e_g = e_g (x) g, D e_g = (sum of
// coordinates of g) e_g.
FiniteEquivariantTriple group_toy_triple(const FiniteGroup& g);
// C(S3) acting on l^2(S3) by multiplication, D the sum of left translations by
// the three transpositions.
FiniteEquivariantTriple s3_toy_triple();

struct PiSigma {
    Algebra twisted;             // A #_{sigma^-1} C
    std::vector<Matrix> rep;
    Report checks;
};

PiSigma pi_sigma(const FiniteEquivariantTriple& t, const DualCocycle& sigma,
                 StarConvention star = StarConvention::Corrected);

struct DeformedTriple {
    GaloisObject galois;
    GNSSpace l2;
    BoxTensor htilde;
    Cotensor atilde;
    Matrix gram;                 // inner product on the htilde basis
    Matrix dirac;                // D~ in htilde coordinates
    std::vector<Matrix> rep;     // A~ basis elements in htilde coordinates
    Coaction corep;              // U~ on htilde, right coaction of H^sigma
    ExactSpectrum spectrum;
    ExactSpectrum original_spectrum;
    Report checks;
};

DeformedTriple deform_triple_finite(const FiniteEquivariantTriple& t, const DualCocycle& sigma);

struct EquivalenceReport {
    Report checks;
    double dirac_residual = 0;   // max ||phi D xi - D~ phi xi||
    double module_residual = 0;  // max ||phi(a . xi) - lambda(a) phi(xi)||
};

EquivalenceReport verify_cocycle_equivalence(const FiniteEquivariantTriple& t, const DualCocycle& sigma,
                                             StarConvention star = StarConvention::Corrected);

// (A #_{sigma^-1} C, H, D) over H^sigma with the representation pi_sigma.
FiniteEquivariantTriple twisted_triple(const FiniteEquivariantTriple& t, const DualCocycle& sigma);
// Twisting by sigma and then by sigma^-1 over H^sigma returns the original
// algebra, representation and Dirac operator exactly.
Report round_trip(const FiniteEquivariantTriple& t, const DualCocycle& sigma);

struct IsotypicBlock {
    int irrep = 0;
    int irrep_dim = 1;
    Rational eigenvalue;
    int multiplicity = 0;        // copies of the irrep in the eigenspace
};

std::vector<IsotypicBlock> isotypic_profile(const FiniteEquivariantTriple& t);

}  // namespace qd::hopf
