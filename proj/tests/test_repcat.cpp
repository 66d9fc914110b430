#include <doctest.h>

#include <cmath>

#include "qdeform/repcat/repcat.hpp"

using namespace qd;
using namespace qd::repcat;

namespace {

IrrepLabel r(int k) { return {Family::SUq2, k}; }

std::vector<int> indices(const std::vector<IrrepLabel>& xs) {
    std::vector<int> out;
    for (const auto& x : xs) out.push_back(x.index);
    return out;
}

OrthogonalMatrixSpec spec_from(const char* text) { return matrix_spec_from_json(Json::parse(text)); }

// d_k from x^(k+1) - y^(k+1) / (x - y) with x + y = m, xy = 1, evaluated as
// the coefficient recursion of the Chebyshev polynomial U_k(m/2).
mpz_class closed_form(int m, int k) {
    // sum_j (-1)^j binom(k-j, j) m^(k-2j)
    mpz_class total = 0;
    for (int j = 0; 2 * j <= k; ++j) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), k - j, j);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), m, k - 2 * j);
        total += (j % 2 ? -1 : 1) * b * p;
    }
    return total;
}

}  // namespace

TEST_CASE("fusion rule") {
    auto ring = FusionRing::suq2();
    CHECK(indices(fuse(ring, r(0), r(5))) == std::vector<int>{5});
    CHECK(indices(fuse(ring, r(1), r(1))) == std::vector<int>{0, 2});
    auto ao = FusionRing::aof(3);
    auto out = fuse(ao, {Family::AoF, 2}, {Family::AoF, 2});
    CHECK(indices(out) == std::vector<int>{0, 2, 4});
    mpz_class total = 0;
    for (auto& x : out) total += dim_classical(ao, x);
    CHECK(total == 64);
    CHECK_THROWS(fuse(ring, r(1), {Family::AoF, 1}));
}

TEST_CASE("classical dimensions") {
    CHECK(dim_classical(FusionRing::suq2(), r(7)) == 8);
    CHECK(dim_classical(FusionRing::aof(3), {Family::AoF, 2}) == 8);
    CHECK(dim_classical(FusionRing::aof(3), {Family::AoF, 0}) == 1);
    CHECK_THROWS(dim_classical(FusionRing::aof(1), {Family::AoF, 0}));
    for (int m = 3; m <= 6; ++m) {
        auto ring = FusionRing::aof(m);
        for (int k = 0; k <= 30; ++k) {
            mpz_class d = dim_classical(ring, {Family::AoF, k});
            CHECK(d == closed_form(m, k));
            if (k >= 1) {
                CHECK(d > k + 1);
                mpz_class prev = dim_classical(ring, {Family::AoF, k - 1});
                mpz_class next = dim_classical(ring, {Family::AoF, k + 1});
                CHECK(next * prev <= d * d);
            }
        }
    }
}

TEST_CASE("quantum dimensions") {
    CHECK(dim_quantum(r(1), Rational(1, 2)) == Rational(5, 2));
    CHECK(dim_quantum(r(0), Rational(-2, 7)) == 1);
    CHECK(dim_quantum(r(2), Rational(1, 2)) == Rational(21, 4));
    CHECK(dim_quantum(r(6), Rational(1)) == 7);
    CHECK_THROWS(dim_quantum(r(1), Rational(0)));
}

TEST_CASE("dimension functions are compatible with fusion") {
    auto ring = FusionRing::aof(4);
    const Rational q(-1, 3);
    for (int j = 0; j <= 15; ++j)
        for (int k = 0; k <= 15; ++k) {
            mpz_class dc = 0;
            Rational dq = 0;
            for (auto& x : fuse(ring, {Family::AoF, j}, {Family::AoF, k})) {
                dc += dim_classical(ring, x);
                dq += dim_quantum(x, q);
            }
            CHECK(dc == dim_classical(ring, {Family::AoF, j}) * dim_classical(ring, {Family::AoF, k}));
            CHECK(dq == dim_quantum({Family::AoF, j}, q) * dim_quantum({Family::AoF, k}, q));
        }
}

TEST_CASE("orthogonal matrix admissibility") {
    auto fq = fq_matrix(Rational(1, 2));
    auto rep = check_orthogonal_matrix(fq.F);
    CHECK(rep.admissible);
    CHECK(rep.c == doctest::Approx(-1.0));
    CHECK(rep.shape == CanonicalShape::Antisymmetric);

    auto id = check_orthogonal_matrix(ComplexMatrix::Identity(3, 3));
    CHECK(id.admissible);
    CHECK(id.c == doctest::Approx(1.0));
    CHECK(id.shape == CanonicalShape::Symmetric);
    CHECK(id.k == 0);

    ComplexMatrix bad(2, 2);
    bad << 1, 1, 0, 1;
    CHECK_FALSE(check_orthogonal_matrix(bad).admissible);
    CHECK_THROWS(check_orthogonal_matrix(ComplexMatrix::Zero(2, 2)));
}

TEST_CASE("partner validation") {
    auto e = validate_partner(Rational(1, 2), fq_matrix(Rational(1, 2)));
    CHECK(e.accepted);
    CHECK(e.exact);
    CHECK(e.dimension_preserving);

    // lambda^2 + lambda^-2 + 1 = 10/3
    auto f3 = spec_from(R"J({"n": 3, "entries": [0, "sqrt(7/6-1/6*sqrt(13))", 0,
                                                "sqrt(7/6+1/6*sqrt(13))", 0, 0, 0, 0, 1],
                            "lambda": ["sqrt(7/6-1/6*sqrt(13))"]})J");
    auto e3 = validate_partner(Rational(-1, 3), f3);
    CHECK(e3.accepted);
    CHECK(e3.exact);
    CHECK_FALSE(e3.dimension_preserving);
    CHECK((*e3.trace_FstarF_exact == Surd(Rational(10, 3))));
    CHECK(e3.trace_FstarF == doctest::Approx(10.0 / 3));

    auto f4 = spec_from(R"J({"n": 4, "entries": [0,0,1,0, 0,0,0,1, -1,0,0,0, 0,-1,0,0]})J");
    auto e4 = validate_partner(Rational(1, 2), f4);
    CHECK_FALSE(e4.accepted);
    CHECK((*e4.residual_exact == Surd(Rational(3, 2))));

    // q < 0 needs the symmetric shape
    CHECK_FALSE(validate_partner(Rational(-1, 2), fq_matrix(Rational(1, 2))).accepted);
    CHECK(validate_partner(Rational(-1, 2), fq_matrix(Rational(-1, 2))).accepted);
}

TEST_CASE("fq partners always accepted") {
    for (int p = 1; p <= 6; ++p)
        for (int s : {-1, 1}) {
            Rational q(s * p, 7);
            auto e = validate_partner(q, fq_matrix(q));
            CHECK(e.accepted);
            CHECK(e.dimension_preserving);
        }
}

TEST_CASE("subcategories") {
    auto ring = FusionRing::suq2();
    auto even = even_subcategory(ring);
    CHECK(check_fusion_closed(ring, even).closed);
    CHECK(even.contains(40));
    CHECK_FALSE(even.contains(41));

    Subcategory odd{{0, 1, 3, 5, 7, 9, 11, 13, 15, 17, 19}, 20, true, "odd"};
    auto rep = check_fusion_closed(ring, odd);
    CHECK_FALSE(rep.closed);
    CHECK(rep.witness == 2);

    auto e = validate_partner(Rational(1, 2), fq_matrix(Rational(1, 2)));
    CHECK(restrict_equivalence(e, full_subcategory()).labels.empty());
    auto so3 = restrict_equivalence(e, even);
    CHECK(so3.source_name == "SO_q(3)");
    CHECK(so3.target_name == "I(F)");
    CHECK(so3.labels == even.labels);

    Subcategory small{{0, 1}, 1, false, "small"};
    CHECK_THROWS_AS(restrict_equivalence(e, small), std::invalid_argument);
}

TEST_CASE("dimension csv") {
    auto rows = dimension_table(FusionRing::aof(3), 6, Rational(1));
    std::string csv = dimension_csv(rows);
    CHECK(csv.rfind("label,classical_dim,quantum_dim\n", 0) == 0);
    CHECK(csv.find("r_6,377,7") != std::string::npos);
}
