#pragma once

#include "qdeform/hopf/algebra.hpp"

namespace qd::hopf {

// Bilinear functional on H (x) H as a table over basis pairs.
struct DualCocycle {
    int dim = 0;
    Vec table;  // sigma(e_i, e_j) at i * dim + j

    Scalar operator()(int i, int j) const { return table[i * dim + j]; }
    Scalar eval(const Vec& x, const Vec& y) const;

    static DualCocycle trivial(const HopfAlgebra& h);  // eps (x) eps
};

// Cocycle identity on all basis triples, normalization, invertibility and
// unitarity; the first violating triple is reported.
Report check_dual_cocycle(const HopfAlgebra& h, const DualCocycle& sigma);

// Throws std::domain_error("not invertible") when the convolution operator is singular.
DualCocycle convolution_inverse(const HopfAlgebra& h, const DualCocycle& sigma);

struct UVFunctionals {
    Vec U, U_inv, V, V_inv;
    Report checks;  // the four convolution-inverse identities
};

UVFunctionals uv_functionals(const HopfAlgebra& h, const DualCocycle& sigma);

// H^sigma; throws std::runtime_error when the output fails the Hopf-* axioms.
HopfAlgebra twist_hopf(const HopfAlgebra& h, const DualCocycle& sigma);

enum class StarConvention {
    Corrected,  // (a#1)* = a0* V(a1*) # 1
    Plain,      // (a#1)* = a* # 1, kept as a regression guard
};

struct TwistedComodule {
    ComoduleAlgebra algebra;  // A #_{sigma^-1} C, right comodule over H^sigma
    Report checks;
};

TwistedComodule twist_comodule_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h, const DualCocycle& sigma,
                                       StarConvention star = StarConvention::Corrected);

// Bicomodule algebra with a left coaction of `left_hopf` and a right
// coaction of `right_hopf`; `state` is the invariant functional when known.
struct Bicomodule {
    Algebra alg;
    HopfAlgebra left_hopf, right_hopf;
    Coaction left, right;
    Vec state;

    ComoduleAlgebra as_left() const { return {alg, Side::Left, left}; }
    ComoduleAlgebra as_right() const { return {alg, Side::Right, right}; }
};

struct GaloisObject {
    Bicomodule object;
    Report checks;
};

// B = H #_{sigma^-1} C: left coaction Delta over H, right coaction Delta over
// H^sigma, state = Haar functional of H.
GaloisObject smash_left(const HopfAlgebra& h, const DualCocycle& sigma,
                        StarConvention star = StarConvention::Corrected);

// C #_sigma H: left coaction over H^sigma, right coaction over H.
GaloisObject smash_right(const HopfAlgebra& h, const DualCocycle& sigma);

}  // namespace qd::hopf
