#include <doctest.h>

#include <cmath>

#include "qdeform/scalar/cyclo.hpp"
#include "qdeform/scalar/format.hpp"
#include "qdeform/scalar/linalg.hpp"
#include "qdeform/scalar/surd.hpp"

using namespace qd;

namespace {

Cyclo zeta(int k, int n) { return Cyclo::root_of_unity(k, n); }

}  // namespace

TEST_CASE("rational parsing and powers") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(pow(Rational(1, 2), -3) == 8);
    CHECK(half_to_string(7) == "7/2");
    CHECK(half_to_string(4) == "2");
    CHECK(parse_half("5/2") == 5);
    CHECK_THROWS(parse_rational("1/0"));
    Rational root;
    CHECK(rational_sqrt(Rational(9, 4), root));
    CHECK(root == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2), root));
}

TEST_CASE("roots of unity close in Q(i, sqrt3)") {
    for (int n : {1, 2, 3, 4, 6, 12}) {
        Cyclo z = zeta(1, n), p = 1;
        for (int k = 0; k < n; ++k) p *= z;
        CHECK(p == Cyclo(1));
        CHECK(std::abs(z.value() - std::polar(1.0, 2 * M_PI / n)) < 1e-14);
    }
    Cyclo w = zeta(1, 3);
    CHECK(w * w + w + Cyclo(1) == Cyclo(0));
    CHECK(w.conj() * w == Cyclo(1));
    CHECK((Cyclo(3) + Cyclo::i()) / (Cyclo(3) + Cyclo::i()) == Cyclo(1));
}

TEST_CASE("q3 sign is exact near zero") {
    // 7/4 - sqrt3 > 0, 26/15 - sqrt3 > 0, 17/10 - sqrt3 < 0
    CHECK(Q3(Rational(7, 4), -1).sign() == 1);
    CHECK(Q3(Rational(26, 15), -1).sign() == 1);
    CHECK(Q3(Rational(17, 10), -1).sign() == -1);
    CHECK(parse_q3("-1/2+1/2*sqrt3") == Q3(Rational(-1, 2), Rational(1, 2)));
    CHECK(parse_q3("sqrt3/2") == Q3(0, Rational(1, 2)));
}

TEST_CASE("surd arithmetic") {
    Surd x = parse_surd("7/6-1/6*sqrt(13)");
    CHECK(x + x.inverse() == Surd(Rational(7, 3)));
    CHECK(Surd::sqrt(Rational(8)) * Surd::sqrt(Rational(8)) == Surd(8));
    CHECK(Surd::sqrt(Rational(9, 4)).is_rational());
    CHECK(Surd(Rational(-7, 2), 1, 13).sign() == 1);
    CHECK_THROWS(Surd::sqrt(2) + Surd::sqrt(3));
}

TEST_CASE("exact kernel and positivity") {
    std::vector<SparseVec<Rational>> rows{to_sparse<Rational>({1, 1, 0}), to_sparse<Rational>({0, 1, 1})};
    auto ker = kernel_of(rows, 3);
    REQUIRE(ker.size() == 1);
    auto v = to_dense(ker[0], 3);
    CHECK(v[0] - v[1] + v[2] == 3 * v[2]);
    CHECK(is_positive_definite<Rational>({{2, 1}, {1, 2}}));
    CHECK_FALSE(is_positive_definite<Rational>({{1, 2}, {2, 1}}));
    auto x = solve_square<Rational>({{2, 1}, {1, 3}}, {3, 4});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
}

TEST_CASE("canonical json is byte-stable") {
    Json j{{"b", 0.1}, {"a", {1, 2}}, {"c", -0.0}};
    std::string s = canonical_dump(j);
    CHECK(s == canonical_dump(Json::parse(s)));
    CHECK(s.find("\"a\"") < s.find("\"b\""));
    CHECK(s.find("0.10000000000000001") != std::string::npos);
    CHECK(format_double(-0.0) == "0");
}
