#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdeform/common/report.hpp"
#include "qdeform/scalar/cyclo.hpp"
#include "qdeform/scalar/linalg.hpp"

namespace qd::hopf {

using Scalar = Cyclo;
using Vec = std::vector<Scalar>;  // dense coordinates in a fixed basis
using Sparse = SparseVec<Scalar>;

Vec zero_vec(int n);
Vec basis_vec(int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(Vec x, const Vec& y);
Vec sub(Vec x, const Vec& y);
Vec scale(Vec x, const Scalar& c);
// Coordinates of x (x) y, index i * dim(y) + j.
Vec kron(const Vec& x, const Vec& y);
std::string vec_str(const Vec& v, const std::vector<std::string>& names = {});

// Finite-dimensional *-algebra given by structure tensors.
struct Algebra {
    int dim = 0;
    Vec unit;
    std::vector<Sparse> product;      // e_i e_j at i * dim + j
    std::vector<Sparse> star;         // (e_i)*, extended antilinearly
    std::vector<std::string> names;

    Vec one() const { return unit; }
    Vec mul(const Vec& x, const Vec& y) const;
    Vec adjoint(const Vec& x) const;
    std::string name(int i) const;
};

// Product and star of A (x) B on coordinates i * B.dim + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Vec tensor_mul(const Algebra& a, const Algebra& b, const Vec& x, const Vec& y);
Vec tensor_adjoint(const Algebra& a, const Algebra& b, const Vec& x);

// Associativity, unit, involutivity and antimultiplicativity on all basis
// pairs and triples.
Report check_star_algebra(const Algebra& a);

struct TensorTerm {
    int left = 0, right = 0;
    Scalar coef;
};

struct HopfAlgebra {
    Algebra alg;
    std::vector<std::vector<TensorTerm>> coproduct;  // Delta(e_i)
    Vec counit;
    std::vector<Sparse> antipode;                    // S(e_i)

    int dim() const { return alg.dim; }
    Vec delta(const Vec& x) const;                   // in H (x) H
    Vec apply_antipode(const Vec& x) const;
    Scalar eps(const Vec& x) const;
};

struct IteratedTerm {
    int a = 0, b = 0, c = 0;
    Scalar coef;
};
// (Delta (x) id) Delta (e_i)
std::vector<IteratedTerm> delta2(const HopfAlgebra& h, int i);

Report check_hopf_axioms(const HopfAlgebra& h);
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

// The unique unital bi-invariant functional, by an exact linear solve.
Vec haar_functional(const HopfAlgebra& h);

// Convolution of two functionals on H.
Vec convolve(const HopfAlgebra& h, const Vec& f, const Vec& g);

struct CoactionTerm {
    int elem = 0;  // index in the comodule
    int hopf = 0;  // index in H
    Scalar coef;
};
using Coaction = std::vector<std::vector<CoactionTerm>>;

enum class Side { Left, Right };

// A *-algebra with one coaction; for Side::Right, e_i -> sum coef e_elem (x) h_hopf,
// for Side::Left, e_i -> sum coef h_hopf (x) e_elem.
struct ComoduleAlgebra {
    Algebra alg;
    Side side = Side::Right;
    Coaction coaction;
};

// Coaction applied to a vector; result laid out as A (x) H for Right and
// H (x) A for Left.
Vec coact(const ComoduleAlgebra& a, int hopf_dim, const Vec& x);

// Coaction axioms and the *-homomorphism property.
Report check_comodule_algebra(const ComoduleAlgebra& a, const HopfAlgebra& h);

// Exact coordinates with respect to a fixed linearly independent family.
class Coordinates {
  public:
    explicit Coordinates(std::vector<Vec> basis);
    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    std::optional<Vec> solve(const Vec& v) const;

  private:
    std::vector<Vec> basis_;
    std::vector<int> rows_;            // pivot coordinates
    DenseMatrix<Scalar> inverse_;      // of the basis restricted to rows_
};

// Exact kernel of a linear map given by sparse equations over `cols` unknowns.
std::vector<Vec> kernel_basis(const std::vector<Sparse>& equations, int cols);

}  // namespace qd::hopf
