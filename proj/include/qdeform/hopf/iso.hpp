#pragma once

#include <cstdint>

#include "qdeform/hopf/algebra.hpp"

namespace qd::hopf {

// Isomorphism invariants of a finite-dimensional C*-algebra: dimension,
// center dimension and the Artin-Wedderburn block sizes.
struct AlgebraInvariants {
    int dim = 0;
    int center_dim = 0;
    std::vector<int> blocks;  // ascending
    bool resolved = false;    // eigenvalue multiplicities were perfect squares summing to dim

    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

std::vector<Vec> center_basis(const Algebra& a);
// Blocks from the eigenvalue multiplicities of left multiplication by a
// random self-adjoint central element.
AlgebraInvariants algebra_invariants(const Algebra& a, std::uint64_t seed = 1);

}  // namespace qd::hopf
