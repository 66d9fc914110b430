#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace qd::cli;

int main(int argc, char** argv) {
    CLI::App app{"Deformation workbench for equivariant spectral triples"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--out", out.out, "Write the JSON document to this file");

    FusionArgs fusion;
    auto* f = app.add_subcommand("fusion", "Dimension and fusion tables of SU_q(2) or A_o(F)");
    f->add_option("--m", fusion.m, "dim F (2 = SU_q(2))")->required();
    f->add_option("--max-k", fusion.max_k, "Largest label r_k");
    f->add_option("--q", fusion.q, "Deformation parameter for quantum dimensions");
    f->add_flag("--json", fusion.json, "JSON instead of CSV");

    TwistArgs twist;
    auto* t = app.add_subcommand("twist", "Verify a 2-cocycle twist of a finite Hopf algebra");
    t->add_option("--builtin", twist.builtin, "z2, z2z2, z3z3, z4 or s3");
    t->add_option("--hopf", twist.hopf, "Hopf algebra JSON");
    t->add_option("--cocycle", twist.cocycle, "Cocycle JSON");
    t->add_option("--triple", twist.triple, "Equivariant triple JSON");
    t->add_option("--write-inputs", twist.write_inputs, "Also write the instance as JSON files into this directory");

    PodlesArgs podles;
    auto* p = app.add_subcommand("podles", "Truncated Podles triple: build, verify or deform");
    p->add_option("action", podles.action, "build | verify | deform")->required()->check(CLI::IsMember({"build", "verify", "deform"}));
    p->add_option("--q", podles.q, "q");
    p->add_option("--t", podles.t, "t, with c = 1/t - t");
    p->add_option("--c1", podles.c1, "Dirac slope");
    p->add_option("--c2", podles.c2, "Dirac offset");
    p->add_option("--N", podles.N, "Truncation spin, e.g. 5/2");
    p->add_option("--F", podles.F, "Partner matrix JSON (deform)");
    p->add_flag("--json", podles.json, "deform: JSON on stdout instead of CSV and the QISO line");

    std::uint64_t seed = 20240601;
    auto* r = app.add_subcommand("report", "Run the acceptance criteria");
    r->add_option("--seed", seed, "Seed for the randomized profiles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    try {
        if (f->parsed()) return cmd_fusion(fusion, out);
        if (t->parsed()) return cmd_twist(twist, out);
        if (p->parsed()) return cmd_podles(podles, out);
        if (r->parsed()) return cmd_report(seed, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "constraint violated: " << e.what() << "\n";
        return Constraint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}
