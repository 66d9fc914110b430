#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdeform/hopf/io.hpp"
#include "qdeform/suq2/io.hpp"
#include "qdeform/triple/io.hpp"

namespace qd::cli {

// Cocycle, twist, smash products, BHalg and, with a triple, pi_sigma, the
// literal deformation, the cocycle equivalence and the profile comparison.
// Stops after a failing cocycle check.
Report twist_suite(const hopf::Instance& inst);

struct PodlesParams {
    Rational q{1, 2}, t{1, 2}, c1{1}, c2{0};
    int max_n2 = 5;
};

suq2::TruncatedPodles build_podles(const PodlesParams& p);
Report podles_verify(const PodlesParams& p, Json& details);

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<Criterion> acceptance_criteria(std::uint64_t seed);
Criterion run_criterion(int id, std::uint64_t seed);
Json to_json(const Criterion& c);

}  // namespace qd::cli
