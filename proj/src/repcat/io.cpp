#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdeform/repcat/repcat.hpp"

namespace qd::repcat {

namespace {

RealEntry entry_from_json(const Json& j) {
    if (j.is_number()) {
        RealEntry e;
        e.value = j.get<double>();
        if (e.value == std::floor(e.value) && std::abs(e.value) < 1e15) {
            Rational r(static_cast<long>(e.value));
            e.exact = r;
            e.square = Surd(Rational(r * r));
        }
        return e;
    }
    if (j.is_string()) return parse_real_entry(j.get<std::string>());
    throw std::invalid_argument("matrix entry must be a number or a string");
}

Json entry_to_json(const RealEntry& e) {
    if (e.exact) return to_string(*e.exact);
    return e.value;
}

const char* shape_name(CanonicalShape s) {
    switch (s) {
        case CanonicalShape::Symmetric: return "symmetric";
        case CanonicalShape::Antisymmetric: return "antisymmetric";
        default: return "none";
    }
}

}  // namespace

RealEntry parse_real_entry(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    RealEntry e;
    auto at = s.find("sqrt(");
    if (at == std::string::npos) {
        Rational r = parse_rational(s);
        e.value = r.get_d();
        e.exact = r;
        e.square = Surd(Rational(r * r));
        return e;
    }
    if (s.back() != ')') throw std::invalid_argument("bad entry: " + text);
    Surd inner = parse_surd(s.substr(at + 5, s.size() - at - 6));
    if (inner.sign() < 0) throw std::invalid_argument("negative radicand in entry: " + text);
    std::string coef = s.substr(0, at);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Rational k = 1;
    if (coef == "-") k = -1;
    else if (!coef.empty() && coef != "+") k = parse_rational(coef);
    e.square = Surd(Rational(k * k)) * inner;
    e.value = k.get_d() * std::sqrt(inner.value());
    Rational root;
    if (inner.is_rational() && rational_sqrt(inner.rational_part(), root)) e.exact = k * root;
    return e;
}

OrthogonalMatrixSpec matrix_spec_from_json(const Json& j) {
    OrthogonalMatrixSpec s;
    const int n = j.at("n").get<int>();
    if (n <= 0) throw std::invalid_argument("F: n must be positive");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n * n)
        throw std::invalid_argument("F: expected n*n entries");
    s.n = n;
    s.F = ComplexMatrix::Zero(n, n);
    for (int idx = 0; idx < n * n; ++idx) {
        const auto& ent = entries[idx];
        RealEntry re;
        double im = 0;
        if (ent.is_array()) {
            if (ent.size() != 2) throw std::invalid_argument("F: entries are [re, im] pairs");
            re = entry_from_json(ent[0]);
            im = entry_from_json(ent[1]).value;
        } else {
            re = entry_from_json(ent);
        }
        s.F(idx / n, idx % n) = {re.value, im};
        s.entries.push_back(re);
    }
    if (j.contains("lambda"))
        for (const auto& l : j.at("lambda")) s.lambda.push_back(entry_from_json(l));
    return s;
}

Json to_json(const OrthogonalMatrixSpec& s) {
    Json j;
    j["n"] = s.n;
    Json entries = Json::array();
    for (int i = 0; i < s.F.rows(); ++i)
        for (int k = 0; k < s.F.cols(); ++k) entries.push_back({s.F(i, k).real(), s.F(i, k).imag()});
    j["entries"] = entries;
    Json lam = Json::array();
    for (const auto& l : s.lambda) lam.push_back(entry_to_json(l));
    j["lambda"] = lam;
    j["shape"] = shape_name(s.shape);
    j["k"] = s.k;
    return j;
}

Json to_json(const EquivalenceDescriptor& e) {
    Json j;
    j["q"] = to_string(e.q);
    j["source"] = e.source_name;
    j["target"] = e.target_name;
    j["F"] = to_json(e.target);
    j["accepted"] = e.accepted;
    j["exact"] = e.exact;
    j["dimension_preserving"] = e.dimension_preserving;
    j["trace_FstarF"] = e.trace_FstarF;
    if (e.trace_FstarF_exact) j["trace_FstarF_exact"] = e.trace_FstarF_exact->str();
    j["residual"] = e.residual;
    if (e.residual_exact) j["residual_exact"] = e.residual_exact->str();
    if (!e.reason.empty()) j["reason"] = e.reason;
    j["labels"] = e.labels.empty() ? Json("all") : Json(e.labels);
    j["labels_truncated"] = e.labels_truncated;
    return j;
}

Json to_json(const ClosureReport& r) {
    Json j;
    j["closed"] = r.closed;
    if (!r.closed) j["witness"] = {r.a, r.b, r.witness};
    return j;
}

Json to_json(const std::vector<DimensionRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back({{"label", label_name(r.label)}, {"classical_dim", r.classical.get_str()}, {"quantum_dim", to_string(r.quantum)}});
    return out;
}

}  // namespace qd::repcat
