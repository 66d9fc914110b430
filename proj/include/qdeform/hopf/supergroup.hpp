#pragma once

#include "qdeform/hopf/cotensor.hpp"

namespace qd::hopf {

// B box_{H^sigma} B~ with B = H #_{sigma^-1} C and B~ = H^sigma #_{sigma} C,
// compared with H through h -> h1 (x) h2, plus (H^sigma)^{sigma^-1} = H.
Report reconstruct_hopf(const HopfAlgebra& h, const DualCocycle& sigma);

// A linear map H1 -> G1 given by the images of the basis of H1.
struct HopfMap {
    std::vector<Vec> images;
    Vec apply(const Vec& x) const;
};

Report check_hopf_surjection(const HopfAlgebra& src, const HopfAlgebra& dst, const HopfMap& pi);

// sigma o (pi (x) pi)
DualCocycle pullback(const DualCocycle& sigma, const HopfMap& pi, int src_dim);

// H1 box_{G1} B against H1 #_{sigma1^-1} C (h -> h1 (x) pi(h2)), and
// B~ box_{G1} H1 box_{G1} B against H1^{sigma1} (h -> pi(h1) (x) h2 (x) pi(h3)).
Report cotensor_chain_supergroup(const HopfAlgebra& h1, const HopfAlgebra& g1, const HopfMap& pi, const DualCocycle& sigma);

// The bi-Galois object of a Hopf *-subalgebra spanned by basis elements of G:
// {b : beta_1(b) in A (x) B} equals A #_{sigma^-1} C for the restricted cocycle.
Report check_subobject(const HopfAlgebra& g, const DualCocycle& sigma, const std::vector<int>& sub_basis);

}  // namespace qd::hopf
