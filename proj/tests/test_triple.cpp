#include <doctest.h>

#include <chrono>

#include "qdeform/hopf/builders.hpp"
#include "qdeform/suq2/io.hpp"
#include "qdeform/triple/finite.hpp"
#include "qdeform/triple/io.hpp"

using namespace qd;
using namespace qd::triple;

namespace {

bool passes(const Report& r) {
    if (!r.pass())
        for (const auto& c : r.checks)
            if (!c.pass) MESSAGE(r.title << ": " << c.name << " " << c.detail);
    return r.pass();
}

repcat::EquivalenceDescriptor f3_partner() {
    auto f3 = repcat::matrix_spec_from_json(Json::parse(R"J({"n": 3,
        "entries": [0, "sqrt(7/6-1/6*sqrt(13))", 0, "sqrt(7/6+1/6*sqrt(13))", 0, 0, 0, 0, 1],
        "lambda": ["sqrt(7/6-1/6*sqrt(13))"]})J"));
    return repcat::validate_partner(Rational(-1, 3), f3);
}

std::map<Rational, long> table_counts(const SpectrumTable& t) {
    std::map<Rational, long> out;
    for (const auto& r : t) {
        REQUIRE(r.eigenvalue.exact);
        REQUIRE(r.eigenvalue.exact->is_rational());
        out[r.eigenvalue.exact->rational_part()] = r.multiplicity.get_si();
    }
    return out;
}

std::map<Rational, long> signed_counts(std::vector<std::pair<Rational, long>> half) {
    std::map<Rational, long> out;
    for (auto [v, m] : half) {
        out[v] = m;
        out[Rational(-v)] = m;
    }
    return out;
}

}  // namespace

TEST_CASE("exact matrices") {
    auto a = ExactMatrix::diagonal({Surd(2), Surd(Rational(1, 2))});
    CHECK(a.trace() == Surd(Rational(5, 2)));
    CHECK(a.is_diagonal());
    ExactMatrix b(2, 2);
    b(0, 1) = b(1, 0) = 3;
    CHECK(b.is_symmetric());
    CHECK_FALSE(b.is_diagonal());
    CHECK((b * b)(0, 0) == Surd(9));
    CHECK(is_zero(a * ExactMatrix::identity(2) - a));
    auto ev = block_eigenvalues(b);
    REQUIRE(ev.size() == 2);
    CHECK(*ev[0].exact == Surd(-3));
    CHECK(*ev[1].exact == Surd(3));
}

TEST_CASE("Woronowicz F from the Haar state") {
    suq2::Ring r(Rational(1, 2));
    suq2::PeterWeylBasis pw(r, 4);
    auto fund = woronowicz_F(pw, 1, closed_form_haar(r));
    CHECK(passes(fund.checks));
    CHECK(fund.F == ExactMatrix::diagonal({Surd(2), Surd(Rational(1, 2))}));
    CHECK(fund.trace == Surd(Rational(5, 2)));
    CHECK(fund.inverse_trace == Surd(Rational(5, 2)));

    // the same matrix from the linear-solve Haar table
    auto solved = woronowicz_F(pw, 1, table_haar(suq2::solve_haar(r, 2)));
    CHECK(solved.F == fund.F);
    CHECK_THROWS_AS(woronowicz_F(pw, 2, table_haar(suq2::solve_haar(r, 2))), std::out_of_range);

    for (int n2 = 0; n2 <= 4; ++n2) {
        CAPTURE(n2);
        auto w = woronowicz_F(pw, n2, closed_form_haar(r));
        CHECK(passes(w.checks));
        CHECK(w.F == suq2_woronowicz(r.q(), n2));
        CHECK(w.trace == Surd(repcat::dim_quantum({repcat::Family::SUq2, n2}, r.q())));
    }

    suq2::Ring classical(Rational(1));
    suq2::PeterWeylBasis pw1(classical, 2);
    CHECK(woronowicz_F(pw1, 2, closed_form_haar(classical)).F == ExactMatrix::identity(3));

    suq2::Ring neg(Rational(-1, 3));
    suq2::PeterWeylBasis pwn(neg, 2);
    auto wn = woronowicz_F(pwn, 1, closed_form_haar(neg));
    CHECK(passes(wn.checks));
    CHECK(wn.F == ExactMatrix::diagonal({Surd(3), Surd(Rational(1, 3))}));
}

TEST_CASE("partner F matrices satisfy the trace constraint") {
    auto eq = repcat::validate_partner(Rational(1, 2), repcat::fq_matrix(Rational(1, 2)));
    auto g = partner_woronowicz(eq);
    REQUIRE(g);
    CHECK(*g == suq2_woronowicz(Rational(1, 2), 1));
    auto e3 = f3_partner();
    REQUIRE(e3.accepted);
    auto g3 = partner_woronowicz(e3);
    REQUIRE(g3);
    CHECK(g3->trace() == Surd(Rational(10, 3)));
    Surd inv;
    for (int i = 0; i < 3; ++i) inv += (*g3)(i, i).inverse();
    CHECK(inv == g3->trace());
}

TEST_CASE("Podles profile and its deformations") {
    auto p = podles_profile(Rational(1, 2), Rational(1), Rational(0), 5);
    CHECK(passes(check_profile(p)));
    CHECK(p.total_dim() == 24);
    auto undeformed = spectrum_table(p);
    CHECK(table_counts(undeformed) == signed_counts({{Rational(1, 2), 2}, {Rational(3, 2), 4}, {Rational(5, 2), 6}}));
    CHECK(spectrum_csv(undeformed).rfind("eigenvalue,multiplicity,labels\n-5/2,6,r_5\n", 0) == 0);

    auto same = partner_equivalence(repcat::validate_partner(Rational(1, 2), repcat::fq_matrix(Rational(1, 2))));
    auto p2 = deform_profile(p, same);
    CHECK(p2.group == "A_o(F)");
    CHECK(table_counts(spectrum_table(p2)) == table_counts(undeformed));
    CHECK(passes(check_deformation(p, p2, same)));

    auto pn = podles_profile(Rational(-1, 3), Rational(1), Rational(0), 5);
    auto e3 = partner_equivalence(f3_partner());
    auto p3 = deform_profile(pn, e3);
    CHECK(table_counts(spectrum_table(p3)) ==
          signed_counts({{Rational(1, 2), 3}, {Rational(3, 2), 21}, {Rational(5, 2), 144}}));
    CHECK(passes(check_deformation(pn, p3, e3)));
    CHECK(passes(check_profile(p3)));
    CHECK(p3.total_dim() == 2 * (3 + 21 + 144));

    CHECK(passes(check_r_twisted_volume(pn, [&](int k) { return e3.source_F(k); })));
    auto rv = check_r_twisted_volume(p3, e3.target_F);
    CHECK(passes(rv));
    CHECK(rv.find("block_form")->detail == "2 blocks q-dimension only");

    auto swapped = pn;
    std::swap(swapped.blocks[0].woronowicz, swapped.blocks[1].woronowicz);
    CHECK_FALSE(check_r_twisted_volume(swapped, [&](int k) { return e3.source_F(k); }).pass());

    auto outside = p3;
    CHECK_THROWS_AS(deform_profile(outside, e3), std::invalid_argument);
}

TEST_CASE("round trips") {
    auto e3 = partner_equivalence(f3_partner());
    CHECK(passes(round_trip(podles_profile(Rational(-1, 3), Rational(1), Rational(0), 5), e3)));
    auto eq = partner_equivalence(repcat::validate_partner(Rational(1, 2), repcat::fq_matrix(Rational(1, 2))));
    CHECK(passes(round_trip(podles_profile(Rational(1, 2), Rational(2), Rational(1, 3), 7), eq)));

    std::mt19937_64 rng(20240601);
    const auto start = std::chrono::steady_clock::now();
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_profile(rng, Rational(-1, 3));
        REQUIRE(passes(check_profile(p)));
        auto there = deform_profile(p, e3);
        if (round_trip(p, e3).pass() && check_deformation(p, there, e3).pass()) ++ok;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(ok == 100);
    CHECK(secs < 1.0);

    auto p = random_profile(rng, Rational(-1, 3));
    auto back = profile_from_json(to_json(p));
    CHECK(back == p);
}

TEST_CASE("non-scalar Dirac blocks use the float path") {
    IsotypicProfile p;
    p.group = "SU_q(2)";
    p.q = Rational(1, 2);
    ProfileBlock b;
    b.label = 2;
    b.irrep_dim = 3;
    b.multiplicity = 3;
    b.dirac = ExactMatrix(3, 3);
    b.dirac(0, 1) = b.dirac(1, 0) = 1;
    b.dirac(1, 2) = b.dirac(2, 1) = 1;
    b.twist = ExactMatrix::identity(3);
    b.qdim = repcat::dim_quantum({repcat::Family::SUq2, 2}, p.q);
    p.blocks.push_back(b);
    auto t = spectrum_table(p);
    REQUIRE(t.size() == 3);
    CHECK_FALSE(t[0].eigenvalue.exact);
    CHECK(t[0].eigenvalue.value == doctest::Approx(-std::sqrt(2.0)));
    CHECK(t[1].eigenvalue.value == doctest::Approx(0).epsilon(1e-12));
    CHECK(t[2].multiplicity == 3);
}

TEST_CASE("truncated Podles triple as a spectral triple") {
    suq2::PeterWeylBasis pw(suq2::Ring(Rational(1, 2)), 7);
    auto t = suq2::truncated_podles_triple(pw, Rational(1, 2), Rational(1), Rational(0), 5);
    auto st = check_spectral_triple({t.A.cast<std::complex<double>>(), t.B.cast<std::complex<double>>()},
                                    t.D.cast<std::complex<double>>());
    CHECK(passes(st.checks));
    REQUIRE(st.growth.size() == 3);
    CHECK(st.growth[2].first == doctest::Approx(2.5));
    CHECK(st.growth[2].second == 12);
    CHECK(st.commutator_norms[0] > 0);

    Eigen::MatrixXcd bad = t.D.cast<std::complex<double>>();
    bad(0, 12) = std::complex<double>(0.5, 1.0);
    CHECK_FALSE(check_spectral_triple({}, bad).checks.pass());
    CHECK(check_spectral_triple({}, Eigen::MatrixXcd::Zero(0, 0)).checks.pass());

    auto labels = spinor_labels(t);
    CHECK(passes(check_equivariance(t.D, labels, {t.A, t.B, t.Bstar}, 2)));
    CHECK_FALSE(check_equivariance(t.D, labels, {t.A}, 0).pass());
    Eigen::MatrixXd perturbed = t.D;
    perturbed(0, 12) += 0.25;  // one row of the r_1 block only
    perturbed(12, 0) += 0.25;
    CHECK_FALSE(check_equivariance(perturbed, labels, {}, 2).pass());

    const Rational q(1, 2);
    FOracle F = [q](int k) { return std::optional<ExactMatrix>(suq2_woronowicz(q, k)); };
    auto R = podles_twist(t, F);
    CHECK(passes(check_r_twisted_volume(t, R, F)));
    Eigen::MatrixXd wrong = R;
    wrong.block(0, 0, 2, 2) = R.block(0, 0, 2, 2).reverse();
    CHECK_FALSE(check_r_twisted_volume(t, wrong, F).pass());
}

TEST_CASE("QISO bookkeeping") {
    suq2::Ring r(Rational(1, 2));
    suq2::PeterWeylBasis pw(r, 4);
    auto gens = suq2::corrected_podles_generators(r, Rational(1, 2));
    auto support = algebra_support(pw, gens, 2);
    CHECK(support == std::set<int>{0, 2, 4});
    auto labels = podles_qiso(support, 20);
    CHECK(labels.support.bound == 20);
    CHECK(repcat::check_fusion_closed(labels.ring, labels.support).closed);

    auto e3 = f3_partner();
    auto d = qiso_deform(labels, e3);
    CHECK(passes(d.checks));
    CHECK(d.line() == "QISO: SO_q(3) -> I(F)");
    CHECK(d.labels.support.labels == labels.support.labels);
    CHECK(d.labels.ambient == "A_o(F)");
    CHECK(to_json(d)["line"] == "QISO: SO_q(3) -> I(F)");

    QisoLabels bad = labels;
    bad.support.labels = {0, 1};
    bad.support.bound = 1;
    bad.support.truncated = false;
    CHECK_THROWS_AS(qiso_deform(bad, e3), std::invalid_argument);
    CHECK_THROWS_AS(podles_qiso({0, 1, 2}), std::invalid_argument);

    QisoLabels trivial{"SU_q(2)", repcat::FusionRing::suq2(), {{0}, 0, false, "trivial"}, "trivial"};
    auto dt = qiso_deform(trivial, e3);
    CHECK(dt.labels.support.labels == std::vector<int>{0});
}

TEST_CASE("finite cocycle deformation agrees with the literal construction") {
    auto g = hopf::abelian_group({2, 2});
    auto t = hopf::group_toy_triple(g);
    auto sigma = hopf::bicharacter(g, {{0, 0}, {1, 0}});
    auto p = profile_from_finite(t);
    CHECK(passes(check_profile(p)));
    auto e = finite_cocycle_equivalence(t);
    auto deformed = deform_profile(p, e);
    CHECK(passes(check_deformation(p, deformed, e)));
    auto literal = hopf::deform_triple_finite(t, sigma);
    CHECK(same_spectrum(spectrum_table(deformed), literal.spectrum));
    CHECK(same_spectrum(spectrum_table(p), literal.original_spectrum));
    CHECK(passes(round_trip(p, e)));
}
