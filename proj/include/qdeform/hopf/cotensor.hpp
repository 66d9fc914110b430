#pragma once

#include <functional>
#include <memory>

#include "qdeform/hopf/twist.hpp"

namespace qd::hopf {

// Kernel of (alpha (x) id - id (x) beta) inside A (x) B, coordinates i * dim_b + j;
// `right` is a right coaction on A, `left` a left coaction on B.
std::vector<Vec> cotensor_space(const Coaction& right, int dim_a, const Coaction& left, int dim_b, int hopf_dim);

// A *-subalgebra of an ambient algebra given by a basis of vectors, with the
// product and star rewritten in that basis.
struct Subalgebra {
    Algebra alg;
    std::vector<Vec> basis;  // ambient coordinates
    Report checks;           // closure under product, star and unit

    std::optional<Vec> coordinates(const Vec& ambient) const;

  private:
    std::shared_ptr<const Coordinates> coords_;
    friend Subalgebra make_subalgebra(std::vector<Vec>, const Vec&, const std::function<Vec(const Vec&, const Vec&)>&,
                                      const std::function<Vec(const Vec&)>&);
};

Subalgebra make_subalgebra(std::vector<Vec> basis, const Vec& ambient_unit,
                           const std::function<Vec(const Vec&, const Vec&)>& mul,
                           const std::function<Vec(const Vec&)>& adjoint);

// A box_H B for a right H-comodule algebra A and a left H-comodule algebra B.
struct Cotensor {
    Subalgebra sub;
    int dim_a = 0, dim_b = 0;
};

Cotensor cotensor(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const HopfAlgebra& h);

// Checks that x -> images[x] is a unital *-isomorphism from `src` onto the subalgebra.
Report check_isomorphism_onto(const Algebra& src, const std::vector<Vec>& images, const Subalgebra& target,
                              const std::function<Vec(const Vec&, const Vec&)>& mul,
                              const std::function<Vec(const Vec&)>& adjoint);

// A box_H (H #_{sigma^-1} C) against A #_{sigma^-1} C through a#1 -> a0 (x) (a1#1).
Report check_bhalg(const ComoduleAlgebra& a, const HopfAlgebra& h, const DualCocycle& sigma);

Coaction regular_coaction(const HopfAlgebra& h, Side side);

}  // namespace qd::hopf
