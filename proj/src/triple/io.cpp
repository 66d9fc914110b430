#include <stdexcept>

#include "qdeform/triple/io.hpp"

namespace qd::triple {

Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix exact_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j[0].size()) : 0;
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix");
        for (int k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            if (e.is_string()) m(i, k) = parse_surd(e.get<std::string>());
            else if (e.is_number_integer()) m(i, k) = Surd(e.get<int>());
            else throw std::invalid_argument("matrix entries must be exact strings or integers");
        }
    }
    return m;
}

Json to_json(const IsotypicProfile& p) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks) {
        Json x = {{"label", b.label},
                  {"irrep_dim", b.irrep_dim.get_str()},
                  {"multiplicity", b.multiplicity},
                  {"dirac", to_json(b.dirac)},
                  {"twist", to_json(b.twist)},
                  {"qdim", to_string(b.qdim)}};
        x["woronowicz"] = b.woronowicz ? to_json(*b.woronowicz) : Json("q-dimension only");
        blocks.push_back(std::move(x));
    }
    return {{"group", p.group}, {"q", to_string(p.q)}, {"total_dim", p.total_dim().get_str()}, {"blocks", blocks}};
}

IsotypicProfile profile_from_json(const Json& j) {
    IsotypicProfile p;
    p.group = j.at("group").get<std::string>();
    p.q = parse_rational(j.at("q").get<std::string>());
    for (const auto& x : j.at("blocks")) {
        ProfileBlock b;
        b.label = x.at("label").get<int>();
        b.irrep_dim = mpz_class(x.at("irrep_dim").get<std::string>());
        b.multiplicity = x.at("multiplicity").get<int>();
        b.dirac = exact_matrix_from_json(x.at("dirac"));
        b.twist = exact_matrix_from_json(x.at("twist"));
        if (x.at("woronowicz").is_array()) b.woronowicz = exact_matrix_from_json(x.at("woronowicz"));
        b.qdim = parse_rational(x.at("qdim").get<std::string>());
        p.blocks.push_back(std::move(b));
    }
    p.canonicalize();
    return p;
}

Json to_json(const SpectrumTable& t) {
    Json rows = Json::array();
    for (const auto& r : t) {
        Json labels = Json::array();
        for (int k : r.labels) labels.push_back("r_" + std::to_string(k));
        rows.push_back({{"eigenvalue", r.eigenvalue.str()},
                        {"value", r.eigenvalue.value},
                        {"multiplicity", r.multiplicity.get_str()},
                        {"labels", labels}});
    }
    return rows;
}

Json to_json(const QisoLabels& l) {
    return {{"ambient", l.ambient},
            {"family", repcat::family_name(l.ring.family)},
            {"support", l.support.labels},
            {"support_bound", l.support.bound},
            {"support_continues", l.support.truncated},
            {"derived", l.derived}};
}

Json to_json(const QisoDeformation& d) {
    return {{"labels", to_json(d.labels)},
            {"restricted", repcat::to_json(d.restricted)},
            {"line", d.line()},
            {"checks", d.checks.to_json()}};
}

}  // namespace qd::triple
