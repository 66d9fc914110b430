#pragma once

#include <string>
#include <vector>

#include "qdeform/scalar/format.hpp"

namespace qd {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample or a measured value
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    bool pass() const;
    void add(std::string name, bool ok, std::string detail = {});
    void merge(const Report& other, const std::string& prefix = {});
    const Check* find(const std::string& name) const;
    Json to_json() const;
};

}  // namespace qd
