#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdeform/common/report.hpp"
#include "qdeform/repcat/repcat.hpp"
#include "qdeform/scalar/surd.hpp"

namespace qd::triple {

// Small dense matrix over Surd, row-major.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Surd(0)) {}

    static ExactMatrix identity(int n);
    static ExactMatrix diagonal(const std::vector<Surd>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Surd& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Surd& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    bool is_diagonal() const;
    bool is_symmetric() const;
    Surd trace() const;
    ExactMatrix transpose() const;
    Eigen::MatrixXd to_eigen() const;
    std::string str() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Surd> data_;
};

bool is_zero(const ExactMatrix& m);

// One isotypic block H_x (x) W_x.
struct ProfileBlock {
    int label = 0;                          // irrep index r_k in the group's labelling
    mpz_class irrep_dim = 1;                // d_x
    int multiplicity = 1;                   // w_x = dim W_x
    ExactMatrix dirac;                      // D_x on W_x
    ExactMatrix twist;                      // R_x on W_x
    std::optional<ExactMatrix> woronowicz;  // F_x on H_x; empty when only the q-dimension is tracked
    Rational qdim;

    friend bool operator==(const ProfileBlock& a, const ProfileBlock& b);
};

struct IsotypicProfile {
    std::string group;
    Rational q = 1;
    std::vector<ProfileBlock> blocks;

    mpz_class total_dim() const;
    // Sort by (lowest eigenvalue of D_x, label, multiplicity).
    void canonicalize();

    friend bool operator==(const IsotypicProfile& a, const IsotypicProfile& b);
};

// Block invariants: shapes, D_x symmetric, [D_x, R_x] = 0, F_x normalized.
Report check_profile(const IsotypicProfile& p);

using FOracle = std::function<std::optional<ExactMatrix>(int)>;

// Label-level monoidal equivalence between two representation categories.
struct LabelEquivalence {
    std::string source, target;
    std::function<bool(int)> in_domain;
    std::function<int(int)> map, unmap;
    std::function<mpz_class(int)> source_dim, target_dim;
    FOracle source_F, target_F;

    LabelEquivalence inverse() const;
};

// F_{r_k} of SU_q(2) in the weight basis: diag(|q|^-k, |q|^(2-k), ..., |q|^k).
ExactMatrix suq2_woronowicz(const Rational& q, int k);
// F*F for an accepted partner matrix, in the block order of its canonical
// shape; requires exact lambda squares.
std::optional<ExactMatrix> partner_woronowicz(const repcat::EquivalenceDescriptor& e);

// SU_q(2) -> A_o(F) on labels; F_x is tracked for r_0 and r_1 on the target
// side and for every label on the SU_q(2) side.
LabelEquivalence partner_equivalence(const repcat::EquivalenceDescriptor& e);
// Identity on labels with unchanged dimensions and F_x = identity (finite
// quantum groups are of Kac type).
LabelEquivalence cocycle_equivalence(std::string source, std::string target, std::vector<int> dims);

// Throws std::invalid_argument on a group or label outside the domain.
IsotypicProfile deform_profile(const IsotypicProfile& p, const LabelEquivalence& e);

struct Eigenvalue {
    std::optional<Surd> exact;
    double value = 0;

    std::string str() const;
};

bool same_eigenvalue(const Eigenvalue& a, const Eigenvalue& b);

struct SpectrumRow {
    Eigenvalue eigenvalue;
    mpz_class multiplicity;
    std::vector<int> labels;
};
using SpectrumTable = std::vector<SpectrumRow>;

// Eigenvalues of one D_x: exact for diagonal and 2x2 rational blocks.
std::vector<Eigenvalue> block_eigenvalues(const ExactMatrix& d);
SpectrumTable spectrum_table(const IsotypicProfile& p);
std::string spectrum_csv(const SpectrumTable& t);

// Deform by e, then by e^-1, and compare all fields exactly.
Report round_trip(const IsotypicProfile& p, const LabelEquivalence& e);

// Blockwise invariants of one deformation: multiplicities w_x, eigenvalue set,
// q-dimensions, and total dimension sum d_phi(x) w_x.
Report check_deformation(const IsotypicProfile& before, const IsotypicProfile& after, const LabelEquivalence& e);

// Podles profile: block r_{2n} with W = C^2 (bundles +-1/2),
// D_x = [[0, c1 n + c2], [c1 n + c2, 0]], R_x = 1 and F_x = F_{r_2n}.
IsotypicProfile podles_profile(const Rational& q, const Rational& c1, const Rational& c2, int max_n2);

IsotypicProfile random_profile(std::mt19937_64& rng, const Rational& q, int max_label = 6, int max_blocks = 5);

}  // namespace qd::triple
