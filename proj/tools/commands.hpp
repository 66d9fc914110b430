#pragma once

#include <optional>
#include <string>

#include "suites.hpp"

namespace qd::cli {

enum Exit { Ok = 0, Usage = 1, CheckFailed = 2, Constraint = 3 };

// Bad flags or malformed files.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FusionArgs {
    int m = 2, max_k = 6;
    std::string q = "1";
    bool json = false;
};

struct TwistArgs {
    std::string builtin, hopf, cocycle, triple, write_inputs;
};

struct PodlesArgs {
    std::string action;  // build, verify or deform
    std::string q = "1/2", t = "1/2", c1 = "1", c2 = "0", N = "5/2";
    std::string F;
    bool json = false;
};

struct Output {
    std::string out;  // file for the JSON document; empty = stdout
};

int cmd_fusion(const FusionArgs& a, const Output& o);
int cmd_twist(const TwistArgs& a, const Output& o);
int cmd_podles(const PodlesArgs& a, const Output& o);
int cmd_report(std::uint64_t seed, const Output& o);

Rational parse_rational_arg(const std::string& name, const std::string& text);
int parse_half_integer(const std::string& text);  // doubled

}  // namespace qd::cli
