#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace qd::cli {

namespace {

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void emit(const Json& j, const Output& o) {
    const std::string text = canonical_dump(j) + "\n";
    if (o.out.empty()) std::cout << text;
    else write_text(o.out, text);
}

// Malformed input files surface as invalid_argument/out_of_range/json errors.
template <class F>
auto loading(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(what + ": " + e.what());
    }
}

}  // namespace

Rational parse_rational_arg(const std::string& name, const std::string& text) {
    try {
        Rational r = parse_rational(text);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw UsageError("--" + name + ": not a rational number: " + text);
    }
}

int parse_half_integer(const std::string& text) {
    Rational r = parse_rational_arg("N", text);
    Rational twice = 2 * r;
    twice.canonicalize();
    if (twice.get_den() != 1 || twice.get_num() % 2 == 0 || sgn(r) <= 0)
        throw UsageError("--N must be a positive half-integer such as 5/2");
    return static_cast<int>(twice.get_num().get_si());
}

int cmd_fusion(const FusionArgs& a, const Output& o) {
    if (a.m < 2) throw UsageError("--m must be at least 2");
    if (a.max_k < 0) throw UsageError("--max-k must be non-negative");
    const Rational q = parse_rational_arg("q", a.q);
    if (sgn(q) == 0) throw UsageError("--q must be nonzero");
    const auto ring = a.m == 2 ? repcat::FusionRing::suq2() : repcat::FusionRing::aof(a.m);
    const auto rows = repcat::dimension_table(ring, a.max_k, q);
    if (!a.json) {
        if (o.out.empty()) std::cout << repcat::dimension_csv(rows);
        else write_text(o.out, repcat::dimension_csv(rows));
        return Ok;
    }
    Json fusion = Json::array();
    for (int x = 0; x <= a.max_k; ++x)
        for (int y = x; y <= a.max_k - x; ++y) {
            Json parts = Json::array();
            for (const auto& z : repcat::fuse(ring, {ring.family, x}, {ring.family, y})) parts.push_back(z.index);
            fusion.push_back({x, y, parts});
        }
    emit({{"family", repcat::family_name(ring.family)}, {"m", a.m}, {"q", to_string(q)},
          {"dimensions", repcat::to_json(rows)}, {"fusion", fusion}},
         o);
    return Ok;
}

int cmd_twist(const TwistArgs& a, const Output& o) {
    hopf::Instance inst;
    if (!a.builtin.empty()) {
        if (!a.hopf.empty()) throw UsageError("--builtin and --hopf are exclusive");
        inst = loading("--builtin", [&] { return hopf::builtin_instance(a.builtin); });
    } else {
        if (a.hopf.empty() || a.cocycle.empty()) throw UsageError("twist needs --hopf and --cocycle, or --builtin");
        inst.name = std::filesystem::path(a.hopf).stem().string();
        inst.hopf = loading(a.hopf, [&] { return hopf::hopf_from_json(read_json(a.hopf)); });
    }
    if (!a.cocycle.empty())
        inst.sigma = loading(a.cocycle, [&] { return hopf::cocycle_from_json(read_json(a.cocycle), inst.hopf.dim()); });
    if (!a.triple.empty()) inst.triple = loading(a.triple, [&] { return hopf::triple_from_json(read_json(a.triple)); });

    if (!a.write_inputs.empty()) {
        std::filesystem::create_directories(a.write_inputs);
        const std::filesystem::path dir(a.write_inputs);
        write_text((dir / "hopf.json").string(), canonical_dump(hopf::to_json(inst.hopf)) + "\n");
        write_text((dir / "cocycle.json").string(), canonical_dump(hopf::to_json(inst.sigma)) + "\n");
        if (inst.triple) write_text((dir / "triple.json").string(), canonical_dump(hopf::to_json(*inst.triple)) + "\n");
    }

    Report rep;
    try {
        rep = twist_suite(inst);
    } catch (const std::exception& e) {
        rep.title = "twist suite " + inst.name;
        rep.add("construction", false, e.what());
    }
    emit({{"instance", inst.name}, {"report", rep.to_json()}}, o);
    return rep.pass() ? Ok : CheckFailed;
}

int cmd_podles(const PodlesArgs& a, const Output& o) {
    PodlesParams p;
    p.q = parse_rational_arg("q", a.q);
    p.t = parse_rational_arg("t", a.t);
    p.c1 = parse_rational_arg("c1", a.c1);
    p.c2 = parse_rational_arg("c2", a.c2);
    p.max_n2 = parse_half_integer(a.N);
    if (sgn(p.c1) == 0) throw UsageError("--c1 must be nonzero");

    if (a.action == "deform") {
        if (a.F.empty()) throw UsageError("podles deform needs --F");
        if (sgn(p.q) == 0 || abs(p.q) > 1) {
            std::cerr << "q must lie in [-1, 1] without 0\n";
            return Constraint;
        }
        auto spec = loading(a.F, [&] { return repcat::matrix_spec_from_json(read_json(a.F)); });
        repcat::EquivalenceDescriptor e;
        try {
            e = repcat::validate_partner(p.q, spec);
        } catch (const std::invalid_argument& err) {
            e.reason = err.what();
        }
        if (!e.accepted) {
            Json j = {{"error", "partner matrix rejected"}, {"descriptor", repcat::to_json(e)}};
            emit(j, o);
            std::cerr << "constraint violated: " << e.reason << "\n";
            return Constraint;
        }
        auto profile = triple::podles_profile(p.q, p.c1, p.c2, p.max_n2);
        auto le = triple::partner_equivalence(e);
        auto deformed = triple::deform_profile(profile, le);
        auto table = triple::spectrum_table(deformed);

        Report checks;
        checks.title = "Podles deform";
        checks.merge(triple::check_deformation(profile, deformed, le), "deformation");
        checks.merge(triple::check_profile(deformed), "profile");
        checks.merge(triple::check_r_twisted_volume(deformed, le.target_F), "volume");
        checks.merge(triple::round_trip(profile, le), "round_trip");

        triple::QisoLabels labels;
        Json support_note;
        if (sgn(p.q) > 0 && p.q < 1 && p.t > 0 && p.t < 1) {
            suq2::Ring ring(p.q);
            suq2::PeterWeylBasis pw(ring, 4);
            auto observed = triple::algebra_support(pw, suq2::corrected_podles_generators(ring, p.t), 2);
            labels = triple::podles_qiso(observed, 20);
            support_note = std::vector<int>(observed.begin(), observed.end());
        } else {
            labels = triple::podles_qiso({0, 2}, 20);
            support_note = "even labels (generator words need 0 < q < 1)";
        }
        auto qiso = triple::qiso_deform(labels, e);
        checks.merge(qiso.checks, "qiso");

        Json doc = {{"descriptor", repcat::to_json(e)},
                    {"profile", triple::to_json(profile)},
                    {"deformed", triple::to_json(deformed)},
                    {"spectrum", triple::to_json(table)},
                    {"observed_support", support_note},
                    {"qiso", triple::to_json(qiso)},
                    {"checks", checks.to_json()}};
        if (a.json) {
            emit(doc, o);
        } else {
            if (!o.out.empty()) emit(doc, o);
            std::cout << triple::spectrum_csv(table) << qiso.line() << "\n";
        }
        return checks.pass() ? Ok : CheckFailed;
    }

    if (sgn(p.q) <= 0 || p.q >= 1 || sgn(p.t) <= 0 || p.t >= 1) {
        std::cerr << "podles " << a.action << " needs 0 < q < 1 and 0 < t < 1\n";
        return Constraint;
    }
    if (a.action == "build") {
        emit(suq2::to_json(build_podles(p)), o);
        return Ok;
    }
    if (a.action == "verify") {
        Json details = Json::object();
        auto rep = podles_verify(p, details);
        emit({{"report", rep.to_json()}, {"details", details}}, o);
        return rep.pass() ? Ok : CheckFailed;
    }
    throw UsageError("podles action must be build, verify or deform");
}

int cmd_report(std::uint64_t seed, const Output& o) {
    Json list = Json::array();
    bool all = true;
    for (const auto& c : acceptance_criteria(seed)) {
        list.push_back(to_json(c));
        all = all && c.pass;
    }
    emit({{"seed", seed}, {"criteria", list}, {"pass", all}}, o);
    return all ? Ok : CheckFailed;
}

}  // namespace qd::cli
