#include <chrono>
#include <sstream>

#include "qdeform/hopf/builders.hpp"
#include "qdeform/hopf/supergroup.hpp"
#include "qdeform/triple/finite.hpp"
#include "suites.hpp"

namespace qd::cli {

namespace {

hopf::ComoduleAlgebra regular(const hopf::HopfAlgebra& h) {
    return {h.alg, hopf::Side::Right, hopf::regular_coaction(h, hopf::Side::Right)};
}

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.pass) return (r.title.empty() ? "" : r.title + ": ") + c.name + (c.detail.empty() ? "" : " " + c.detail);
    return {};
}

repcat::EquivalenceDescriptor f3_partner() {
    auto f3 = repcat::matrix_spec_from_json(Json::parse(R"J({"n": 3,
        "entries": [0, "sqrt(7/6-1/6*sqrt(13))", 0, "sqrt(7/6+1/6*sqrt(13))", 0, 0, 0, 0, 1],
        "lambda": ["sqrt(7/6-1/6*sqrt(13))"]})J"));
    return repcat::validate_partner(Rational(-1, 3), f3);
}

std::map<Rational, long> exact_counts(const triple::SpectrumTable& t) {
    std::map<Rational, long> out;
    for (const auto& r : t)
        if (r.eigenvalue.exact && r.eigenvalue.exact->is_rational())
            out[r.eigenvalue.exact->rational_part()] = r.multiplicity.get_si();
        else
            out[Rational(1000000)] = -1;
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

std::string counts_str(const std::map<Rational, long>& m) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, k] : m) {
        out << (first ? "" : ", ") << to_string(v) << " x" << k;
        first = false;
    }
    return out.str();
}

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

Report twist_suite(const hopf::Instance& inst) {
    Report rep;
    rep.title = "twist suite " + inst.name;
    rep.merge(hopf::check_hopf_axioms(inst.hopf), "hopf");
    auto cocycle = hopf::check_dual_cocycle(inst.hopf, inst.sigma);
    rep.merge(cocycle, "cocycle");
    if (!rep.pass()) return rep;

    auto tw = hopf::twist_hopf(inst.hopf, inst.sigma);
    rep.merge(hopf::check_hopf_axioms(tw), "twisted_hopf");
    rep.merge(hopf::check_star_algebra(tw.alg), "twisted_hopf");
    rep.merge(hopf::twist_comodule_algebra(regular(inst.hopf), inst.hopf, inst.sigma).checks, "twisted_comodule");
    rep.merge(hopf::smash_left(inst.hopf, inst.sigma).checks, "smash_left");
    rep.merge(hopf::smash_right(inst.hopf, inst.sigma).checks, "smash_right");
    rep.merge(hopf::check_bhalg(regular(inst.hopf), inst.hopf, inst.sigma), "bhalg");
    rep.merge(hopf::reconstruct_hopf(inst.hopf, inst.sigma), "reconstruct");
    if (!inst.triple) return rep;

    const auto& t = *inst.triple;
    rep.merge(hopf::check_triple(t), "triple");
    rep.merge(hopf::pi_sigma(t, inst.sigma).checks, "pi_sigma");
    auto deformed = hopf::deform_triple_finite(t, inst.sigma);
    rep.merge(deformed.checks, "deformed");
    rep.add("isospectral", deformed.spectrum.resolved && deformed.spectrum.eigen == deformed.original_spectrum.eigen);
    auto eq = hopf::verify_cocycle_equivalence(t, inst.sigma);
    rep.merge(eq.checks, "equivalence");
    rep.add("equivalence.dirac_residual_zero", eq.dirac_residual == 0, format_double(eq.dirac_residual));
    rep.add("equivalence.module_residual", eq.module_residual <= 1e-12, format_double(eq.module_residual));
    rep.merge(hopf::round_trip(t, inst.sigma), "round_trip");
    auto profile = triple::profile_from_finite(t);
    auto e = triple::finite_cocycle_equivalence(t);
    auto dp = triple::deform_profile(profile, e);
    rep.add("profile_matches_literal", triple::same_spectrum(triple::spectrum_table(dp), deformed.spectrum));
    return rep;
}

suq2::TruncatedPodles build_podles(const PodlesParams& p) {
    suq2::PeterWeylBasis pw(suq2::Ring(p.q), p.max_n2 + 2);
    return suq2::truncated_podles_triple(pw, p.t, p.c1, p.c2, p.max_n2);
}

Report podles_verify(const PodlesParams& p, Json& details) {
    Report rep;
    rep.title = "Podles verify";
    suq2::Ring ring(p.q);
    suq2::PeterWeylBasis pw(ring, p.max_n2 + 4);
    auto gens = suq2::corrected_podles_generators(ring, p.t);
    rep.merge(suq2::check_podles_relations(ring, gens), "relations");
    rep.merge(suq2::check_spherical_generator(pw, gens), "spherical");
    auto printed = suq2::check_podles_relations(ring, suq2::printed_podles_generators(ring, p.t));
    details["printed_generators"] = printed.to_json();

    auto t = suq2::truncated_podles_triple(pw, p.t, p.c1, p.c2, p.max_n2);
    rep.merge(t.checks, "truncated");
    auto res = suq2::relation_residuals(t, p.max_n2 - 2);
    rep.add("truncated.interior_relations", res.max() < 1e-9, format_double(res.max()));
    details["interior_residuals"] = suq2::to_json(res);
    details["literal_compression_residual"] = t.literal_residual;

    auto st = triple::check_spectral_triple({t.A.cast<std::complex<double>>(), t.B.cast<std::complex<double>>()},
                                            t.D.cast<std::complex<double>>());
    rep.merge(st.checks, "spectral_triple");
    details["commutator_norms"] = st.commutator_norms;
    auto stab = suq2::commutator_stability(pw, p.t, p.c1, p.c2, p.max_n2);
    rep.add("spectral_triple.commutator_stability", stab.stable(),
            format_double(stab.a_at_n) + " vs " + format_double(stab.a_at_next));
    rep.merge(triple::check_equivariance(t.D, triple::spinor_labels(t), {t.A, t.B, t.Bstar}, 2, 1e-12), "equivariance");
    triple::FOracle F = [q = p.q](int k) { return std::optional<triple::ExactMatrix>(triple::suq2_woronowicz(q, k)); };
    rep.merge(triple::check_r_twisted_volume(t, triple::podles_twist(t, F), F), "volume");
    auto w = triple::woronowicz_F(pw, 1, triple::closed_form_haar(ring));
    rep.merge(w.checks, "woronowicz");
    details["woronowicz_fundamental"] = triple::to_json(w.F);
    return rep;
}

Criterion run_criterion(int id, std::uint64_t seed) {
    Criterion c;
    c.id = id;
    const auto t0 = Clock::now();
    switch (id) {
        case 1: {
            c.name = "cocycle twisting exact on Z2^2, Z3^2, Z4";
            std::string bad;
            for (const char* name : {"z2z2", "z3z3", "z4"}) {
                auto inst = hopf::builtin_instance(name);
                Report r;
                r.merge(hopf::check_dual_cocycle(inst.hopf, inst.sigma));
                auto tw = hopf::twist_hopf(inst.hopf, inst.sigma);
                r.merge(hopf::check_hopf_axioms(tw));
                r.merge(hopf::check_star_algebra(tw.alg));
                r.merge(hopf::twist_comodule_algebra(regular(inst.hopf), inst.hopf, inst.sigma).checks);
                r.merge(hopf::pi_sigma(*inst.triple, inst.sigma).checks);
                if (!r.pass() && bad.empty()) bad = std::string(name) + ": " + first_failure(r);
            }
            c.seconds = since(t0);
            c.pass = bad.empty() && c.seconds < 10;
            c.detail = bad.empty() ? "all checks exact" : bad;
            break;
        }
        case 2: {
            c.name = "BHalg isomorphism";
            int ok = 0;
            std::string bad;
            for (const auto& name : {"z2z2", "z3z3", "z4", "s3"}) {
                auto inst = hopf::builtin_instance(name);
                auto r = hopf::check_bhalg(regular(inst.hopf), inst.hopf, inst.sigma);
                if (r.pass()) ++ok;
                else if (bad.empty()) bad = std::string(name) + ": " + first_failure(r);
            }
            c.pass = ok >= 3 && bad.empty();
            c.detail = std::to_string(ok) + "/4 instances" + (bad.empty() ? "" : ", " + bad);
            break;
        }
        case 3: {
            c.name = "literal and profile deformation agree on the Z2^2 toy triple";
            auto inst = hopf::builtin_instance("z2z2");
            const auto& t = *inst.triple;
            auto lit = hopf::deform_triple_finite(t, inst.sigma);
            auto dp = triple::deform_profile(triple::profile_from_finite(t), triple::finite_cocycle_equivalence(t));
            auto eq = hopf::verify_cocycle_equivalence(t, inst.sigma);
            const bool iso = lit.spectrum.resolved && lit.spectrum.eigen == lit.original_spectrum.eigen;
            const bool prof = triple::same_spectrum(triple::spectrum_table(dp), lit.spectrum);
            c.pass = lit.checks.pass() && iso && prof && eq.checks.pass() && eq.dirac_residual == 0 &&
                     eq.module_residual <= 1e-12;
            c.detail = std::string("isospectral ") + (iso ? "yes" : "no") + ", profile " + (prof ? "matches" : "differs") +
                       ", ||phi D - D~ phi|| = " + format_double(eq.dirac_residual) +
                       ", module residual " + format_double(eq.module_residual);
            break;
        }
        case 4: {
            c.name = "round trip on random profiles and the Podles profile";
            auto e3 = triple::partner_equivalence(f3_partner());
            std::mt19937_64 rng(seed);
            int ok = 0;
            for (int i = 0; i < 100; ++i)
                if (triple::round_trip(triple::random_profile(rng, Rational(-1, 3)), e3).pass()) ++ok;
            const bool podles =
                triple::round_trip(triple::podles_profile(Rational(-1, 3), Rational(1), Rational(0), 5), e3).pass();
            c.seconds = since(t0);
            c.pass = ok == 100 && podles && c.seconds < 1;
            c.detail = std::to_string(ok) + "/100 random, Podles " + (podles ? "exact" : "differs");
            break;
        }
        case 5: {
            c.name = "Haar state and Peter-Weyl basis at q = 1/2";
            suq2::Ring r(Rational(1, 2));
            const auto gg = r.word("Gg");
            const Rational closed = suq2::haar(r, gg);
            const Rational solved = triple::table_haar(suq2::solve_haar(r, 2))(gg);
            suq2::PeterWeylBasis pw(r, 7);
            auto printed = suq2::check_printed_matrices(pw);
            auto pwc = suq2::check_peter_weyl(pw, 3, 7);
            c.seconds = since(t0);
            c.pass = closed == Rational(4, 5) && solved == closed && printed.pass() && pwc.pass() && c.seconds < 60;
            c.detail = "h(g*g) = " + to_string(closed) + " (solve " + to_string(solved) + "), " +
                       (printed.pass() ? "printed matrices match" : first_failure(printed)) + ", " +
                       (pwc.pass() ? pwc.find("orthogonal")->detail : first_failure(pwc));
            break;
        }
        case 6: {
            c.name = "Podles relations on the interior block, q = t = 1/2, N = 7/2";
            auto t = build_podles({Rational(1, 2), Rational(1, 2), Rational(1), Rational(0), 7});
            auto res = suq2::relation_residuals(t, 5);
            c.pass = t.checks.pass() && res.max() < 1e-9;
            c.detail = "max residual on n <= 5/2: " + format_double(res.max());
            break;
        }
        case 7: {
            c.name = "undeformed Podles spectrum, N = 5/2";
            auto t = build_podles({Rational(1, 2), Rational(1, 2), Rational(1), Rational(0), 5});
            auto want = signed_counts({{Rational(1, 2), 2}, {Rational(3, 2), 4}, {Rational(5, 2), 6}});
            auto table = exact_counts(triple::spectrum_table(triple::podles_profile(Rational(1, 2), 1, 0, 5)));
            std::map<Rational, long> from_bundle;
            for (const auto& [v, m] : suq2::dirac_spectrum(t)) from_bundle[v] = m;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t.D);
            std::map<Rational, long> numeric;
            for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
                ++numeric[hopf::rationalize(eig.eigenvalues()(i), 64)];
            c.pass = table == want && from_bundle == want && numeric == want;
            c.detail = counts_str(table);
            break;
        }
        case 8: {
            c.name = "q = -1/3, dim F = 3 deformation";
            auto p = triple::podles_profile(Rational(-1, 3), 1, 0, 5);
            auto e3 = triple::partner_equivalence(f3_partner());
            auto d = triple::deform_profile(p, e3);
            auto counts = exact_counts(triple::spectrum_table(d));
            auto want = signed_counts({{Rational(1, 2), 3}, {Rational(3, 2), 21}, {Rational(5, 2), 144}});
            auto inv = triple::check_deformation(p, d, e3);
            c.pass = counts == want && inv.pass();
            c.detail = counts_str(counts) + (inv.pass() ? "; eigenvalue set and q-dimensions invariant" : "; " + first_failure(inv));
            break;
        }
        case 9: {
            c.name = "Woronowicz F, R-twisted volume and trace constraint";
            suq2::Ring r(Rational(1, 2));
            suq2::PeterWeylBasis pw(r, 7);
            auto w = triple::woronowicz_F(pw, 1, triple::table_haar(suq2::solve_haar(r, 2)));
            const bool fund = w.checks.pass() && w.F == triple::suq2_woronowicz(r.q(), 1) &&
                              w.trace == Surd(Rational(5, 2)) && w.inverse_trace == Surd(Rational(5, 2));
            auto eq = repcat::validate_partner(Rational(1, 2), repcat::fq_matrix(Rational(1, 2)));
            auto e3 = f3_partner();
            bool traces = true;
            for (const auto* e : {&eq, &e3}) {
                auto g = triple::partner_woronowicz(*e);
                traces = traces && e->accepted && g && g->trace() == Surd(abs(e->q + 1 / e->q));
            }
            auto le = triple::partner_equivalence(e3);
            auto d = triple::deform_profile(triple::podles_profile(Rational(-1, 3), 1, 0, 5), le);
            auto vol = triple::check_r_twisted_volume(d, le.target_F);
            auto t = suq2::truncated_podles_triple(pw, Rational(1, 2), 1, 0, 5);
            triple::FOracle F = [](int k) { return std::optional<triple::ExactMatrix>(triple::suq2_woronowicz(Rational(1, 2), k)); };
            auto tv = triple::check_r_twisted_volume(t, triple::podles_twist(t, F), F);
            c.pass = fund && traces && vol.pass() && tv.pass();
            c.detail = "F = " + w.F.str() + ", Tr F = " + w.trace.str() + ", Tr F^-1 = " + w.inverse_trace.str() +
                       "; Tr(F*F) = |q + 1/q| for both partners: " + (traces ? "yes" : "no") +
                       "; volume " + (vol.pass() && tv.pass() ? "passes" : first_failure(vol.pass() ? tv : vol));
            break;
        }
        case 10: {
            c.name = "QISO bookkeeping";
            suq2::Ring r(Rational(1, 2));
            suq2::PeterWeylBasis pw(r, 4);
            auto support = triple::algebra_support(pw, suq2::corrected_podles_generators(r, Rational(1, 2)), 2);
            auto labels = triple::podles_qiso(support, 20);
            auto closed = repcat::check_fusion_closed(labels.ring, labels.support);
            auto d = triple::qiso_deform(labels, f3_partner());
            c.pass = closed.closed && labels.support.bound >= 20 && d.checks.pass() && d.line() == "QISO: SO_q(3) -> I(F)";
            c.detail = d.line() + ", support closed to r_" + std::to_string(labels.support.bound);
            break;
        }
        default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
    if (c.seconds == 0) c.seconds = since(t0);
    return c;
}

std::vector<Criterion> acceptance_criteria(std::uint64_t seed) {
    std::vector<Criterion> out;
    for (int id = 1; id <= 10; ++id) {
        try {
            out.push_back(run_criterion(id, seed));
        } catch (const std::exception& e) {
            out.push_back({id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), 0});
        }
    }
    return out;
}

Json to_json(const Criterion& c) {
    return {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}};
}

}  // namespace qd::cli
