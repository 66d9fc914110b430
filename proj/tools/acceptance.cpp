#include <cstdio>

#include "suites.hpp"

int main() {
    int failed = 0;
    for (const auto& c : qd::cli::acceptance_criteria(20240601)) {
        std::printf("[%s] %2d %s: %s (%.3f s)\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str(), c.seconds);
        if (!c.pass) ++failed;
    }
    return failed ? 2 : 0;
}
