#include "qdeform/suq2/io.hpp"

namespace qd::suq2 {

namespace {

Json matrix_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j) == 0 ? 0.0 : m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json to_json(const PeterWeylBasis& pw) {
    Json elems = Json::array();
    for (const auto& x : pw.indices())
        elems.push_back({{"n", half_to_string(x.n2)},
                         {"k", half_to_string(x.k2)},
                         {"l", half_to_string(x.l2)},
                         {"d", element_str(pw.d(x))},
                         {"norm2", to_string(pw.norm2(x))},
                         {"gauge", to_string(pw.gauge(x))}});
    return {{"q", to_string(pw.ring().q())}, {"N", half_to_string(pw.max_n2())}, {"elements", elems}};
}

Json to_json(const RelationResiduals& r) {
    return {{"selfadjoint", r.selfadjoint},
            {"commutation", r.commutation},
            {"bstar_b", r.bstar_b},
            {"b_bstar", r.b_bstar},
            {"max", r.max()}};
}

Json to_json(const TruncatedPodles& p) {
    Json basis = Json::array();
    for (const auto& x : p.basis)
        basis.push_back({{"k", x.bundle > 0 ? "1/2" : "-1/2"}, {"n", half_to_string(x.n2)}, {"l", half_to_string(x.l2)}});
    Json pairs = Json::array();
    const int half = p.dim() / 2;
    for (int i = 0; i < half; ++i) pairs.push_back({i, i + half, p.D(i, i + half)});
    Json isotypic = Json::array();
    for (const auto& e : p.isotypic)
        isotypic.push_back({{"n", half_to_string(e.n2)}, {"eigenvalue", to_string(e.eigenvalue)}, {"dim", e.dim}});
    Json reduced = Json::object();
    for (int b = 0; b < 2; ++b) {
        Json list = Json::array();
        for (const auto& [key, v] : p.reduced[b]) list.push_back({half_to_string(key.first), half_to_string(key.second), v});
        reduced[b == 0 ? "1/2" : "-1/2"] = list;
    }
    return {{"q", to_string(p.q)},
            {"t", to_string(p.t)},
            {"c", to_string(p.c)},
            {"c1", to_string(p.c1)},
            {"c2", to_string(p.c2)},
            {"N", half_to_string(p.max_n2)},
            {"basis", basis},
            {"A", matrix_json(p.A)},
            {"B", matrix_json(p.B)},
            {"Bstar", matrix_json(p.Bstar)},
            {"D", {{"rule", "D e(n,+-1/2,l) = (c1 n + c2) e(n,-+1/2,l)"}, {"pairs", pairs}}},
            {"isotypic", isotypic},
            {"reduced", reduced},
            {"literal_residual", p.literal_residual},
            {"checks", p.checks.to_json()}};
}

}  // namespace qd::suq2
