#include <doctest.h>

#include "qdeform/hopf/io.hpp"
#include "qdeform/hopf/iso.hpp"
#include "qdeform/hopf/supergroup.hpp"
#include "qdeform/hopf/triple.hpp"

using namespace qd;
using namespace qd::hopf;

namespace {

struct Instance {
    FiniteGroup group;
    HopfAlgebra h;
    DualCocycle sigma;
};

Instance z2z2() {
    auto g = abelian_group({2, 2});
    return {g, group_algebra(g), bicharacter(g, {{0, 0}, {1, 0}})};
}

Instance z3z3() {
    auto g = abelian_group({3, 3});
    return {g, group_algebra(g), bicharacter(g, {{0, 0}, {1, 0}})};
}

Instance z4() {
    auto g = abelian_group({4});
    return {g, group_algebra(g), bicharacter(g, {{1}})};
}

Instance s3() {
    auto g = symmetric3();
    return {g, function_algebra(g), s3_rotation_twist(g)};
}

ComoduleAlgebra regular(const HopfAlgebra& h) {
    Coaction c(h.dim());
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& t : h.coproduct[i]) c[i].push_back({t.left, t.right, t.coef});
    return {h.alg, Side::Right, c};
}

bool passes(const Report& r) {
    if (!r.pass())
        for (const auto& c : r.checks)
            if (!c.pass) MESSAGE(r.title << ": " << c.name << " " << c.detail);
    return r.pass();
}

int center_dim(const Algebra& a) {
    std::vector<Sparse> eqs;
    const int n = a.dim;
    for (int j = 0; j < n; ++j) {
        // [x, e_j] = 0 as n equations in the coordinates of x
        std::vector<Sparse> rows(n);
        std::vector<std::map<int, Scalar>> acc(n);
        for (int i = 0; i < n; ++i) {
            Vec c = sub(a.mul(basis_vec(n, i), basis_vec(n, j)), a.mul(basis_vec(n, j), basis_vec(n, i)));
            for (int k = 0; k < n; ++k)
                if (!c[k].is_zero()) acc[k][i] += c[k];
        }
        for (int k = 0; k < n; ++k) {
            Sparse r;
            for (auto& [i, v] : acc[k]) r.emplace_back(i, v);
            eqs.push_back(r);
        }
    }
    return static_cast<int>(kernel_basis(eqs, n).size());
}

}  // namespace

TEST_CASE("group and function algebras are Hopf *-algebras") {
    for (auto inst : {z2z2(), z3z3(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(check_hopf_axioms(inst.h)));
        CHECK(passes(check_star_algebra(inst.h.alg)));
    }
    auto g = symmetric3();
    CHECK(g.mul(3, 1) == 5);  // s r = r^2 s
    for (int x = 0; x < 6; ++x) CHECK(g.mul(x, g.inverse[x]) == 0);
}

TEST_CASE("Haar functionals") {
    auto z = z2z2();
    Vec h = haar_functional(z.h);
    CHECK(h == Vec{1, 0, 0, 0});
    auto s = s3();
    Vec hs = haar_functional(s.h);
    for (const auto& v : hs) CHECK(v == Scalar(Rational(1, 6)));
}

TEST_CASE("dual cocycles") {
    auto z = z2z2();
    CHECK(passes(check_dual_cocycle(z.h, DualCocycle::trivial(z.h))));
    for (auto inst : {z2z2(), z3z3(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(check_dual_cocycle(inst.h, inst.sigma)));
    }
    // (-1)^{a2 b1}
    CHECK(z.sigma(1, 2) == Scalar(-1));
    CHECK(z.sigma(2, 1) == Scalar(1));

    DualCocycle bad = z.sigma;
    bad.table[1 * 4 + 3] += 1;
    Report r = check_dual_cocycle(z.h, bad);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.find("cocycle_identity")->pass);
    CHECK(r.find("cocycle_identity")->detail.find("(") != std::string::npos);
}

TEST_CASE("convolution inverse") {
    auto z = z3z3();
    DualCocycle inv = convolution_inverse(z.h, z.sigma);
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) CHECK(inv(a, b) == z.sigma(a, b).inverse());
    auto t = DualCocycle::trivial(z.h);
    CHECK(convolution_inverse(z.h, t).table == t.table);
    DualCocycle zero{9, zero_vec(81)};
    CHECK_THROWS_AS(convolution_inverse(z.h, zero), std::domain_error);
}

TEST_CASE("U and V functionals") {
    auto z = z2z2();
    auto uv = uv_functionals(z.h, z.sigma);
    CHECK(passes(uv.checks));
    CHECK(uv.U[3] == Scalar(-1));
    for (int g = 0; g < 4; ++g) CHECK(uv.U[g] == z.sigma(g, z.group.inverse[g]));
    auto triv = uv_functionals(z.h, DualCocycle::trivial(z.h));
    CHECK(triv.U == z.h.counit);
    CHECK(triv.V == z.h.counit);
    auto s = s3();
    CHECK(passes(uv_functionals(s.h, s.sigma).checks));
}

TEST_CASE("twisted Hopf algebras") {
    auto z = z2z2();
    CHECK(same_structure(twist_hopf(z.h, DualCocycle::trivial(z.h)), z.h));
    // cocommutative: the product of group-likes is unchanged
    HopfAlgebra zs = twist_hopf(z.h, z.sigma);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(zs.alg.mul(basis_vec(4, a), basis_vec(4, b)) == basis_vec(4, z.group.mul(a, b)));
    auto s = s3();
    HopfAlgebra ss = twist_hopf(s.h, s.sigma);
    CHECK(passes(check_hopf_axioms(ss)));
    CHECK(passes(check_star_algebra(ss.alg)));
    // the rotation twist is invariant under conjugation by s, so it commutes
    // with the coproduct of every group element
    CHECK(same_structure(ss, s.h));
}

TEST_CASE("twisted comodule algebras") {
    for (auto inst : {z2z2(), z3z3(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        auto tw = twist_comodule_algebra(regular(inst.h), inst.h, inst.sigma);
        CHECK(passes(tw.checks));
    }
    auto z = z2z2();
    auto tw = twist_comodule_algebra(regular(z.h), z.h, z.sigma);
    CHECK(center_dim(tw.algebra.alg) == 1);
    auto triv = twist_comodule_algebra(regular(z.h), z.h, DualCocycle::trivial(z.h));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(triv.algebra.alg.mul(basis_vec(4, a), basis_vec(4, b)) == z.h.alg.mul(basis_vec(4, a), basis_vec(4, b)));
}

TEST_CASE("smash products") {
    for (auto inst : {z2z2(), z3z3(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(smash_left(inst.h, inst.sigma).checks));
        CHECK(passes(smash_right(inst.h, inst.sigma).checks));
    }
    auto z = z2z2();
    auto b = smash_left(z.h, z.sigma);
    CHECK(b.object.state == Vec{1, 0, 0, 0});
    auto c = smash_right(z.h, z.sigma);
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h)
            CHECK(c.object.alg.mul(basis_vec(4, g), basis_vec(4, h)) == scale(basis_vec(4, z.group.mul(g, h)), z.sigma(g, h)));
}

namespace {

std::vector<std::pair<Rational, int>> spectrum_of(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<std::pair<Rational, int>> out;
    for (auto [v, m] : xs) out.emplace_back(Rational(v), m);
    return out;
}

FiniteEquivariantTriple toy(const Instance& inst) {
    return inst.group.name == "S3" ? s3_toy_triple() : group_toy_triple(inst.group);
}

}  // namespace

TEST_CASE("cotensor with the regular Galois object recovers the twisted algebra") {
    for (auto inst : {z2z2(), z3z3(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(check_bhalg(regular(inst.h), inst.h, inst.sigma)));
    }
}

TEST_CASE("GNS space of the Galois object is ergodic") {
    auto inst = z2z2();
    auto b = smash_left(inst.h, inst.sigma);
    auto l2 = gns(b.object);
    CHECK(l2.dim == 4);
    CHECK(l2.fixed_dim == 1);
    CHECK(passes(l2.checks));
}

TEST_CASE("spectral subspaces of the regular comodule") {
    auto inst = z2z2();
    auto dec = spectral_subspaces(regular_coaction(inst.h, Side::Right), 4, inst.h, group_algebra_irreps(inst.group));
    CHECK(passes(dec.checks));
    REQUIRE(dec.subspaces.size() == 4);
    for (const auto& s : dec.subspaces) CHECK(s.size() == 1);
}

TEST_CASE("Omega blocks round trip to sigma") {
    for (auto inst : {z2z2(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        auto irreps = inst.group.name == "S3" ? s3_function_irreps(inst.group) : group_algebra_irreps(inst.group);
        auto omega = omega_from_sigma(inst.sigma, irreps);
        CHECK(passes(check_omega(omega, inst.h)));
        CHECK(sigma_from_omega(omega, inst.h.dim()).table == inst.sigma.table);
    }
}

TEST_CASE("toy triples are equivariant") {
    for (auto inst : {z2z2(), z3z3(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(check_triple(toy(inst))));
    }
}

TEST_CASE("pi_sigma needs the corrected star") {
    auto inst = z2z2();
    auto t = toy(inst);
    CHECK(passes(pi_sigma(t, inst.sigma).checks));
    CHECK_FALSE(pi_sigma(t, inst.sigma, StarConvention::Plain).checks.pass());
}

TEST_CASE("deformed triples are isospectral") {
    auto inst = z2z2();
    auto d = deform_triple_finite(toy(inst), inst.sigma);
    CHECK(passes(d.checks));
    CHECK(d.spectrum.resolved);
    CHECK(d.spectrum.eigen == spectrum_of({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(d.spectrum.eigen == d.original_spectrum.eigen);

    auto s = s3();
    auto ds = deform_triple_finite(toy(s), s.sigma);
    CHECK(passes(ds.checks));
    CHECK(ds.spectrum.eigen == spectrum_of({{-3, 1}, {0, 4}, {3, 1}}));
}

TEST_CASE("cocycle equivalence is exact") {
    for (auto inst : {z2z2(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        auto e = verify_cocycle_equivalence(toy(inst), inst.sigma);
        CHECK(passes(e.checks));
        CHECK(e.dirac_residual == 0.0);
        CHECK(e.module_residual <= 1e-12);
    }
}

TEST_CASE("twisting twice returns the original triple") {
    for (auto inst : {z2z2(), z3z3(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(round_trip(toy(inst), inst.sigma)));
    }
}

TEST_CASE("isotypic profile of the Z2 x Z2 toy triple") {
    auto prof = isotypic_profile(toy(z2z2()));
    int total = 0;
    for (const auto& b : prof) total += b.irrep_dim * b.multiplicity;
    CHECK(total == 4);
    CHECK(prof.size() == 4);
}

TEST_CASE("H is recovered from B box B~") {
    for (auto inst : {z2z2(), z4(), s3()}) {
        CAPTURE(inst.group.name);
        CHECK(passes(reconstruct_hopf(inst.h, inst.sigma)));
    }
}

TEST_CASE("cotensor chain for a Hopf surjection") {
    auto g4 = abelian_group({4});
    auto g2 = abelian_group({2});
    auto h4 = group_algebra(g4);
    auto h2 = group_algebra(g2);
    HopfMap pi;
    for (int k = 0; k < 4; ++k) pi.images.push_back(basis_vec(2, k % 2));
    CHECK(passes(check_hopf_surjection(h4, h2, pi)));
    DualCocycle sigma = bicharacter(g2, {{1}});
    CHECK(passes(cotensor_chain_supergroup(h4, h2, pi, sigma)));

    auto kk = z2z2();
    HopfMap first;
    for (int k = 0; k < 4; ++k) first.images.push_back(basis_vec(2, k / 2));
    CHECK(passes(cotensor_chain_supergroup(kk.h, h2, first, sigma)));

    HopfMap bad = pi;
    bad.images[1] = basis_vec(2, 0);
    CHECK_FALSE(check_hopf_surjection(h4, h2, bad).pass());
}

TEST_CASE("Galois object of a Hopf subalgebra") {
    auto inst = z2z2();
    // C[Z2 x 0] spanned by (0,0) and (1,0)
    CHECK(passes(check_subobject(inst.h, inst.sigma, {0, 2})));
    CHECK(passes(check_subobject(inst.h, inst.sigma, {0, 1})));
}

TEST_CASE("Artin-Wedderburn invariants") {
    auto inst = z2z2();
    auto tw = twist_comodule_algebra(regular(inst.h), inst.h, inst.sigma);
    auto m2 = algebra_invariants(tw.algebra.alg);
    CHECK(m2.resolved);
    CHECK(m2.center_dim == 1);
    CHECK(m2.blocks == std::vector<int>{2});

    auto plain = algebra_invariants(inst.h.alg);
    CHECK(plain.blocks == std::vector<int>{1, 1, 1, 1});

    auto cs3 = algebra_invariants(group_algebra(symmetric3()).alg, 7);
    CHECK(cs3.resolved);
    CHECK(cs3.center_dim == 3);
    CHECK(cs3.blocks == std::vector<int>{1, 1, 2});
    CHECK(algebra_invariants(group_algebra(symmetric3()).alg, 99) == cs3);
}

TEST_CASE("JSON round trips") {
    CHECK(scalar_from_json(Json::array({0.8660254037844386, -0.5})) == Cyclo(Q3{0, Rational(1, 2)}, Q3{Rational(-1, 2)}));
    CHECK(scalar_from_json(Json("-1/2+1/2*sqrt3")) == Cyclo(Q3{Rational(-1, 2), Rational(1, 2)}));
    CHECK_THROWS_AS(scalar_from_json(Json(0.1234567891234)), std::invalid_argument);

    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto inst = builtin_instance(name);
        auto h = hopf_from_json(Json::parse(canonical_dump(to_json(inst.hopf))));
        CHECK(same_structure(h, inst.hopf));
        auto sigma = cocycle_from_json(Json::parse(canonical_dump(to_json(inst.sigma))), h.dim());
        CHECK(sigma.table == inst.sigma.table);
        Json lossy = to_json(inst.sigma);
        lossy.erase("exact");
        CHECK(cocycle_from_json(lossy, h.dim()).table == inst.sigma.table);
        REQUIRE(inst.triple);
        auto t = triple_from_json(to_json(*inst.triple));
        CHECK(t.dirac == inst.triple->dirac);
        CHECK(passes(check_triple(t)));
    }
    CHECK_THROWS_AS(builtin_instance("z5"), std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_json(Json{{"sigma", Json::array()}}, 2), std::invalid_argument);
}
