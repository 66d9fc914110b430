#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdeform/scalar/format.hpp"
#include "qdeform/scalar/rational.hpp"
#include "qdeform/scalar/surd.hpp"

namespace qd::repcat {

enum class Family { SUq2, AoF };

std::string family_name(Family f);

// Banica label r_k; for SU_q(2) the spin is k/2.
struct IrrepLabel {
    Family family = Family::SUq2;
    int index = 0;

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

std::string label_name(const IrrepLabel& x);

struct FusionRing {
    Family family = Family::SUq2;
    int m = 2;  // classical dimension of the fundamental, dim F

    static FusionRing suq2() { return {Family::SUq2, 2}; }
    static FusionRing aof(int m) { return {Family::AoF, m}; }
};

std::vector<IrrepLabel> fuse(const FusionRing& ring, const IrrepLabel& a, const IrrepLabel& b);
mpz_class dim_classical(const FusionRing& ring, const IrrepLabel& x);
// [k+1]_q; q = 1 and q = -1 give the integer (+-)^k (k+1).
Rational dim_quantum(const IrrepLabel& x, const Rational& q);

using ComplexMatrix = Eigen::MatrixXcd;

// A real matrix entry; `square` is exact when the entry was written as a
// rational or as k*sqrt(a + b*sqrt(m)).
struct RealEntry {
    double value = 0;
    std::optional<Surd> square;
    std::optional<Rational> exact;  // the value itself when rational
};

RealEntry parse_real_entry(const std::string& text);

enum class CanonicalShape { None, Symmetric, Antisymmetric };

struct OrthogonalMatrixSpec {
    ComplexMatrix F;
    std::vector<RealEntry> entries; // real parts, row-major, when read from text
    std::vector<RealEntry> lambda;  // from the file or read off a canonical shape
    int n = 0;
    int k = 0;                      // number of lambda blocks
    CanonicalShape shape = CanonicalShape::None;
};

struct AdmissibilityReport {
    bool admissible = false;
    double c = 0;                   // F * conj(F) = c I
    double scalar_residual = 0;
    CanonicalShape shape = CanonicalShape::None;
    int k = 0;
    std::vector<double> lambda;
    std::string reason;
};

// Throws on a non-square or singular F; inadmissibility is reported.
AdmissibilityReport check_orthogonal_matrix(const ComplexMatrix& F, double tol = 1e-12);

struct EquivalenceDescriptor {
    Rational q;
    OrthogonalMatrixSpec target;
    bool accepted = false;
    bool exact = false;             // constraint decided in exact arithmetic
    bool dimension_preserving = false;
    double trace_FstarF = 0;
    std::optional<Surd> trace_FstarF_exact;  // from the lambda list
    double residual = 0;
    std::optional<Surd> residual_exact;
    std::string reason;
    std::vector<int> labels;        // empty = full category
    bool labels_truncated = true;   // labels continue beyond the listed bound
    std::string source_name = "SU_q(2)";
    std::string target_name = "A_o(F)";

    FusionRing source_ring() const { return FusionRing::suq2(); }
    FusionRing target_ring() const { return FusionRing::aof(target.n); }
    IrrepLabel map(const IrrepLabel& x) const { return {Family::AoF, x.index}; }
};

EquivalenceDescriptor validate_partner(const Rational& q, const OrthogonalMatrixSpec& F, double tol = 1e-12);

// The identity equivalence SU_q(2) -> A_o(F_q) with F_q = [[0, |q|^1/2], [-sgn(q)|q|^-1/2, 0]].
OrthogonalMatrixSpec fq_matrix(const Rational& q);

struct Subcategory {
    std::vector<int> labels;  // sorted, contains 0
    int bound = 0;            // labels are complete up to this index
    bool truncated = true;    // the set continues past `bound` by the same pattern
    std::string name;

    bool contains(int k) const;
};

struct ClosureReport {
    bool closed = true;
    int a = -1, b = -1, witness = -1;  // first product leaving the set
};

ClosureReport check_fusion_closed(const FusionRing& ring, const Subcategory& s);
Subcategory even_subcategory(const FusionRing& ring, int bound = 20);
Subcategory full_subcategory(int bound = 20);

// Throws std::invalid_argument when s is not fusion-closed.
EquivalenceDescriptor restrict_equivalence(const EquivalenceDescriptor& e, const Subcategory& s);

struct DimensionRow {
    IrrepLabel label;
    mpz_class classical;
    Rational quantum;
};

OrthogonalMatrixSpec matrix_spec_from_json(const Json& j);
Json to_json(const OrthogonalMatrixSpec& s);
Json to_json(const EquivalenceDescriptor& e);
Json to_json(const ClosureReport& r);

std::vector<DimensionRow> dimension_table(const FusionRing& ring, int max_k, const Rational& q);
std::string dimension_csv(const std::vector<DimensionRow>& rows);
Json to_json(const std::vector<DimensionRow>& rows);

}  // namespace qd::repcat
