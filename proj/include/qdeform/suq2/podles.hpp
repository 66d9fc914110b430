#pragma once

#include "qdeform/suq2/peter_weyl.hpp"

namespace qd::suq2 {

enum class PodlesVariant { Printed, Corrected };

// Generators of O(S^2_qc) inside O(SU_q(2)), c = 1/t - t, with rho tracked as
// an exact square root.
struct PodlesData {
    PodlesVariant variant = PodlesVariant::Corrected;
    Rational q, t, c, rho2;
    Element<Surd> A, B;
};

// rho^2 = q^2 t^2 / ((q^2+1)^2 (1-t)), prefactor 1/t.
PodlesData printed_podles_generators(const Ring& r, const Rational& t);
// rho^2 = q^2 t / ((q^2+1)^2 (1-t^2)), prefactor 1/rho:
//   A = gamma* gamma + (q gamma* alpha + gamma alpha*) / (rho (1+q^2)),
//   B = (q alpha^2 + rho (1+q^2) alpha gamma - q^2 gamma^2) / (rho (1+q^2)).
PodlesData corrected_podles_generators(const Ring& r, const Rational& t);

// A* = A, AB = q^-2 BA, B*B = A - A^2 + c, BB* = q^2 A - q^4 A^2 + c, each an
// exact normal-form identity; details give the number of surviving terms.
Report check_podles_relations(const Ring& r, const PodlesData& p);

// x0 = t (1 - (1+q^2) A) lies in span{d^1_k0} and has Haar mean zero.
Report check_spherical_generator(const PeterWeylBasis& pw, const PodlesData& p);

}  // namespace qd::suq2
