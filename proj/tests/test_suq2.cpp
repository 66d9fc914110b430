#include <doctest.h>

#include <random>

#include "qdeform/suq2/podles.hpp"
#include "qdeform/suq2/io.hpp"

using namespace qd;
using namespace qd::suq2;

namespace {

Ring half_ring() { return Ring(Rational(1, 2)); }

bool passes(const Report& r) {
    if (!r.pass())
        for (const auto& c : r.checks)
            if (!c.pass) MESSAGE(r.title << ": " << c.name << " " << c.detail);
    return r.pass();
}

Element<Rational> scaled(Element<Rational> x, const Rational& c) {
    for (auto& [m, v] : x) v *= c;
    return x;
}

Element<Rational> random_element(const Ring& r, std::mt19937& rng, int max_degree) {
    static const std::string letters = "aAgG";
    Element<Rational> out;
    std::uniform_int_distribution<int> len(0, max_degree), letter(0, 3), coef(-5, 5);
    for (int t = 0; t < 3; ++t) {
        std::string w;
        for (int i = len(rng); i > 0; --i) w += letters[letter(rng)];
        out = combine(out, Rational(1), r.word(w), Rational(coef(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("normal form rewriting") {
    auto r = half_ring();
    CHECK(r.word("ga") == scaled(r.word("ag"), 2));
    CHECK(r.word("Aa") == combine(r.word(""), Rational(1), r.word("Gg"), Rational(-1)));
    auto row = combine(r.word("aA"), Rational(1), r.word("gG"), Rational(1, 4));
    CHECK(row == r.word(""));
    CHECK(r.word("gG") == r.word("Gg"));
    CHECK(r.adjoint(r.word("ag")) == r.word("GA"));
    CHECK(r.word("GA") == scaled(r.word("AG"), Rational(1, 2)));
}

TEST_CASE("ring axioms on random elements") {
    auto r = half_ring();
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto x = random_element(r, rng, 4), y = random_element(r, rng, 3), z = random_element(r, rng, 3);
        CHECK(r.adjoint(r.adjoint(x)) == x);
        if (t < 30) {
            CHECK(r.mul(r.mul(x, y), z) == r.mul(x, r.mul(y, z)));
            CHECK(r.adjoint(r.mul(x, y)) == r.mul(r.adjoint(y), r.adjoint(x)));
        }
        CHECK(r.mul(r.word(""), x) == x);
    }
}

TEST_CASE("rewriting is confluent on degree-6 words") {
    auto r = half_ring();
    std::mt19937 rng(3);
    static const std::string letters = "aAgG";
    for (int t = 0; t < 40; ++t) {
        std::string w;
        for (int i = 0; i < 6; ++i) w += letters[rng() % 4];
        const auto whole = r.word(w);
        for (std::size_t cut = 1; cut < w.size(); ++cut)
            CHECK(r.mul(r.word(w.substr(0, cut)), r.word(w.substr(cut))) == whole);
    }
}

TEST_CASE("coproduct is coassociative and multiplicative") {
    auto r = half_ring();
    auto check = [&](const std::string& x, const std::string& y) {
        auto lhs = r.delta(r.mul(r.word(x), r.word(y)));
        Tensor<Rational> rhs;
        for (const auto& [p, a] : r.delta(r.word(x)))
            for (const auto& [s, b] : r.delta(r.word(y)))
                for (const auto& [m1, c1] : r.product(p.first, s.first))
                    for (const auto& [m2, c2] : r.product(p.second, s.second)) rhs[{m1, m2}] += a * b * c1 * c2;
        std::erase_if(rhs, [](const auto& e) { return sgn(e.second) == 0; });
        return lhs == rhs;
    };
    CHECK(check("a", "A"));
    CHECK(check("Ag", "Ga"));
    CHECK(check("gg", "aA"));
}

TEST_CASE("Haar state") {
    auto r = half_ring();
    CHECK(haar(r, r.word("")) == 1);
    CHECK(haar(r, r.word("a")) == 0);
    CHECK(haar(r, r.word("Gg")) == Rational(4, 5));
    auto table = solve_haar(r, 4);
    for (const auto& m : monomials_up_to(4)) {
        CAPTURE(m.str());
        auto it = table.values.find(m);
        CHECK((it == table.values.end() ? Rational(0) : it->second) == haar_monomial(r.q(), m));
    }
    CHECK(table.values.at(make_monomial(false, 0, 1, 1)) == Rational(4, 5));
    CHECK(haar_monomial(Rational(-1, 3), make_monomial(false, 0, 1, 1)) == Rational(9, 10));
    CHECK(haar_monomial(Rational(1), make_monomial(false, 0, 2, 2)) == Rational(1, 3));
}

TEST_CASE("Peter-Weyl basis") {
    PeterWeylBasis pw(half_ring(), 4);
    CHECK(passes(check_peter_weyl(pw, 3, 4)));
    CHECK(passes(check_printed_matrices(pw)));
    CHECK(pw.d({1, -1, -1}) == pw.ring().word("a"));
    CHECK(pw.norm2({0, 0, 0}) == 1);
}

TEST_CASE("Podles generators") {
    auto r = half_ring();
    auto printed = check_podles_relations(r, printed_podles_generators(r, Rational(1, 2)));
    CHECK(printed.find("A_selfadjoint")->pass);
    CHECK_FALSE(printed.find("AB_q_commute")->pass);
    CHECK_FALSE(printed.find("BstarB")->pass);
    CHECK_FALSE(printed.find("BBstar")->pass);

    auto data = corrected_podles_generators(r, Rational(1, 2));
    CHECK(data.c == Rational(3, 2));
    CHECK(data.rho2 == Rational(8, 75));
    CHECK(passes(check_podles_relations(r, data)));
    PeterWeylBasis pw(r, 2);
    CHECK(passes(check_spherical_generator(pw, data)));
    CHECK_THROWS_AS(corrected_podles_generators(r, Rational(1)), std::invalid_argument);
}

TEST_CASE("Truncated spinor triple") {
    PeterWeylBasis pw(half_ring(), 9);
    auto small = truncated_podles_triple(pw, Rational(1, 2), Rational(1), Rational(0), 5);
    CHECK(small.dim() == 24);
    CHECK(passes(small.checks));
    std::map<Rational, int> expected{{Rational(-5, 2), 6}, {Rational(-3, 2), 4}, {Rational(-1, 2), 2},
                                     {Rational(1, 2), 2},  {Rational(3, 2), 4},  {Rational(5, 2), 6}};
    CHECK(dirac_spectrum(small) == expected);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(small.D);
    CHECK(eig.eigenvalues()(0) == doctest::Approx(-2.5));
    CHECK(eig.eigenvalues()(23) == doctest::Approx(2.5));

    auto p = truncated_podles_triple(pw, Rational(1, 2), Rational(1), Rational(0), 7);
    CHECK(p.dim() == 40);
    CHECK(passes(p.checks));
    auto res = relation_residuals(p, 5);
    CAPTURE(res.commutation);
    CAPTURE(res.bstar_b);
    CAPTURE(res.b_bstar);
    CHECK(res.max() < 1e-9);
    CHECK(p.A.isApprox(p.A.transpose(), 1e-12));
    MESSAGE("literal compression residual " << p.literal_residual);

    auto stab = commutator_stability(pw, Rational(1, 2), Rational(1), Rational(0), 5);
    CAPTURE(stab.a_at_n);
    CAPTURE(stab.b_at_n);
    CHECK(stab.stable());
    CHECK(stab.a_at_n > 0);
    // boundary columns still move with N
    CHECK(commutator_norm(small.D, small.A) != doctest::Approx(commutator_norm(p.D, p.A)).epsilon(1e-6));
    CHECK_THROWS_AS(truncated_podles_triple(pw, Rational(1, 2), Rational(1), Rational(0), 9), std::invalid_argument);
}

TEST_CASE("Spinor bundle JSON") {
    PeterWeylBasis pw(half_ring(), 5);
    auto p = truncated_podles_triple(pw, Rational(1, 2), Rational(2), Rational(1, 3), 3);
    auto j = to_json(p);
    CHECK(j["N"] == "3/2");
    CHECK(j["basis"].size() == 12);
    CHECK(j["A"].size() == 12);
    CHECK(j["isotypic"][0]["eigenvalue"] == "4/3");
    CHECK(j["isotypic"][1]["eigenvalue"] == "-4/3");
    CHECK(j["isotypic"][2]["dim"] == 4);
    CHECK(canonical_dump(j) == canonical_dump(to_json(truncated_podles_triple(pw, Rational(1, 2), Rational(2),
                                                                              Rational(1, 3), 3))));
    CHECK(to_json(pw)["elements"].size() == pw.indices().size());
}
