#pragma once

#include <string>
#include <vector>

#include "qdeform/hopf/twist.hpp"

namespace qd::hopf {

struct FiniteGroup {
    std::string name;
    int order = 0;
    int identity = 0;
    std::vector<int> table;     // g * h at g * order + h
    std::vector<int> inverse;
    std::vector<int> factors;   // cyclic orders for Z_n1 x Z_n2 x ...; empty otherwise
    std::vector<std::string> names;

    int mul(int g, int h) const { return table[g * order + h]; }
    std::vector<int> coords(int g) const;  // abelian products only
};

// Z_n1 x ... x Z_nk, mixed radix with the first factor most significant.
FiniteGroup abelian_group(const std::vector<int>& factors);
// Elements r^k s^j at index k + 3j, s r s = r^-1.
FiniteGroup symmetric3();

// C[G]: group-likes, g* = g^-1.
HopfAlgebra group_algebra(const FiniteGroup& g);
// C(G) in the basis of delta functions; the unit is their sum.
HopfAlgebra function_algebra(const FiniteGroup& g);
// Coordinates in the function_algebra basis of the function with the given values.
Vec function_coords(const FiniteGroup& g, const Vec& values);

// sigma(g, h) = prod_{r,s} zeta_{gcd(n_r, n_s)}^{B_rs g_r h_s} on C[Z_n1 x ...].
DualCocycle bicharacter(const FiniteGroup& g, const std::vector<std::vector<int>>& B);

// Dual cocycle on C(S3) from the abelian twist on the rotation subgroup Z3.
DualCocycle s3_rotation_twist(const FiniteGroup& s3);

// Irreducible unitary corepresentation with matrix coefficients u_ij in H.
struct Irrep {
    std::string name;
    int dim = 1;
    std::vector<Vec> coeffs;  // u_ij at i * dim + j

    const Vec& u(int i, int j) const { return coeffs[i * dim + j]; }
};

// For C[G] every group-like is a one-dimensional irrep.
std::vector<Irrep> group_algebra_irreps(const FiniteGroup& g);
// Trivial, sign and the two-dimensional rotation representation of S3 as
// coefficient functions in C(S3).
std::vector<Irrep> s3_function_irreps(const FiniteGroup& s3);

}  // namespace qd::hopf
