#include "qdeform/common/report.hpp"

#include <algorithm>

namespace qd {

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.pass, c.detail});
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Json Report::to_json() const {
    Json j;
    if (!title.empty()) j["title"] = title;
    j["pass"] = pass();
    Json list = Json::array();
    for (const auto& c : checks) {
        Json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        list.push_back(e);
    }
    j["checks"] = list;
    return j;
}

}  // namespace qd
