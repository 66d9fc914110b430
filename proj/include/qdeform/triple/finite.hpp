#pragma once

#include "qdeform/hopf/triple.hpp"
#include "qdeform/triple/profile.hpp"

namespace qd::triple {

// One block per irrep of t.hopf; W_x carries the eigenvalues of D on the
// x-isotypic part, F_x = 1.
IsotypicProfile profile_from_finite(const hopf::FiniteEquivariantTriple& t);

// Identity on the irreps of t.hopf into the twisted Hopf algebra.
LabelEquivalence finite_cocycle_equivalence(const hopf::FiniteEquivariantTriple& t);

// Spectrum table against an exact eigendecomposition, value by value.
bool same_spectrum(const SpectrumTable& t, const hopf::ExactSpectrum& s);

}  // namespace qd::triple
