#include "qdeform/scalar/format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qd {

std::string format_double(double x) {
    if (x == 0.0) return "0";
    if (!std::isfinite(x)) return std::isnan(x) ? "NaN" : (x > 0 ? "Infinity" : "-Infinity");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write(std::ostringstream& out, const Json& j, int depth) {
    auto pad = [&](int d) { out << std::string(static_cast<std::size_t>(2 * d), ' '); };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) { out << "{}"; return; }
            out << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out << ",\n";
                first = false;
                pad(depth + 1);
                out << Json(it.key()).dump() << ": ";
                write(out, it.value(), depth + 1);
            }
            out << "\n";
            pad(depth);
            out << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) { out << "[]"; return; }
            bool flat = true;
            for (const auto& e : j)
                if (e.is_structured()) { flat = false; break; }
            if (flat) {
                out << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out << ", ";
                    write(out, j[i], depth + 1);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ",\n";
                pad(depth + 1);
                write(out, j[i], depth + 1);
            }
            out << "\n";
            pad(depth);
            out << "]";
            return;
        }
        case Json::value_t::number_float:
            out << format_double(j.get<double>());
            return;
        default:
            out << j.dump();
    }
}

}  // namespace

std::string canonical_dump(const Json& j) {
    std::ostringstream out;
    write(out, j, 0);
    out << "\n";
    return out.str();
}

}  // namespace qd
