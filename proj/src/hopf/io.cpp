#include <cmath>
#include <map>
#include <stdexcept>

#include "qdeform/hopf/io.hpp"

namespace qd::hopf {

namespace {

// a + b sqrt3 with denominators dividing 12
std::optional<Q3> snap_real(double x) {
    const double s3 = std::sqrt(3.0);
    for (int d = 1; d <= 12; ++d) {
        if (12 % d != 0) continue;
        for (int k = -4 * d; k <= 4 * d; ++k) {
            double a = x - s3 * k / d;
            Rational r = rationalize(a, 12);
            if (std::abs(r.get_d() - a) < 1e-12 * std::max(1.0, std::abs(x))) {
                Rational b(k, d);
                b.canonicalize();
                return Q3(r, b);
            }
        }
    }
    return std::nullopt;
}

Q3 part_from_json(const Json& j) {
    if (j.is_string()) return parse_q3(j.get<std::string>());
    if (!j.is_number()) throw std::invalid_argument("scalar: expected a number or a string");
    auto q = snap_real(j.get<double>());
    if (!q) throw std::invalid_argument("scalar " + format_double(j.get<double>()) + " is not in Q(sqrt3)");
    return *q;
}

Json sparse_rows(const std::vector<Sparse>& rows) {
    Json out = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, c] : rows[i]) out.push_back({i, k, scalar_to_json(c)});
    return out;
}

std::vector<Sparse> read_rows(const Json& j, std::size_t n) {
    std::vector<std::map<std::size_t, Scalar>> acc(n);
    for (const auto& e : j) {
        auto i = e.at(0).get<std::size_t>();
        auto k = e.at(1).get<std::size_t>();
        if (i >= n) throw std::invalid_argument("row index out of range");
        acc[i][k] += scalar_from_json(e.at(2));
    }
    std::vector<Sparse> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [k, c] : acc[i])
            if (!c.is_zero()) out[i].emplace_back(k, c);
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(scalar_to_json(c));
        out.push_back(r);
    }
    return out;
}

Matrix matrix_from_json(const Json& j) {
    Matrix m;
    for (const auto& row : j) {
        Vec r;
        for (const auto& c : row) r.push_back(scalar_from_json(c));
        m.push_back(std::move(r));
    }
    return m;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(scalar_to_json(c));
    return out;
}

Vec vec_from_json(const Json& j) {
    Vec v;
    for (const auto& c : j) v.push_back(scalar_from_json(c));
    return v;
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["dim"] = a.dim;
    j["product"] = Json::array();
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k)
            for (const auto& [x, c] : a.product[i * a.dim + k]) j["product"].push_back({i, k, x, scalar_to_json(c)});
    j["star"] = sparse_rows(a.star);
    j["unit"] = vec_to_json(a.unit);
    j["names"] = a.names;
    return j;
}

Algebra algebra_from_json(const Json& j) {
    Algebra a;
    a.dim = j.at("dim").get<int>();
    if (a.dim <= 0) throw std::invalid_argument("dim must be positive");
    const int n = a.dim;
    std::vector<std::map<int, Scalar>> acc(n * n);
    for (const auto& e : j.at("product")) {
        int i = e.at(0).get<int>(), k = e.at(1).get<int>(), x = e.at(2).get<int>();
        if (i < 0 || k < 0 || x < 0 || i >= n || k >= n || x >= n) throw std::invalid_argument("product index out of range");
        acc[i * n + k][x] += scalar_from_json(e.at(3));
    }
    a.product.resize(n * n);
    for (int p = 0; p < n * n; ++p)
        for (auto& [x, c] : acc[p])
            if (!c.is_zero()) a.product[p].emplace_back(x, c);
    a.star = read_rows(j.at("star"), n);
    const Json& u = j.at("unit");
    a.unit = u.is_number_integer() ? basis_vec(n, u.get<int>()) : vec_from_json(u);
    if (static_cast<int>(a.unit.size()) != n) throw std::invalid_argument("unit has the wrong length");
    if (j.contains("names")) a.names = j.at("names").get<std::vector<std::string>>();
    return a;
}

Json coaction_to_json(const Coaction& c) {
    Json out = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& t : c[i]) out.push_back({i, t.elem, t.hopf, scalar_to_json(t.coef)});
    return out;
}

Coaction coaction_from_json(const Json& j, int n) {
    Coaction c(n);
    for (const auto& e : j) {
        int i = e.at(0).get<int>();
        if (i < 0 || i >= n) throw std::invalid_argument("coaction index out of range");
        c[i].push_back({e.at(1).get<int>(), e.at(2).get<int>(), scalar_from_json(e.at(3))});
    }
    return c;
}

}  // namespace

Json scalar_to_json(const Scalar& c) {
    auto v = c.value();
    return Json::array({v.real(), v.imag()});
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw std::invalid_argument("scalar: expected [re, im]");
        return Cyclo(part_from_json(j[0]), part_from_json(j[1]));
    }
    return Cyclo(part_from_json(j));
}

Json to_json(const HopfAlgebra& h) {
    Json j = algebra_to_json(h.alg);
    j["coproduct"] = Json::array();
    for (int i = 0; i < h.dim(); ++i)
        for (const auto& t : h.coproduct[i]) j["coproduct"].push_back({i, t.left, t.right, scalar_to_json(t.coef)});
    j["counit"] = vec_to_json(h.counit);
    j["antipode"] = sparse_rows(h.antipode);
    return j;
}

HopfAlgebra hopf_from_json(const Json& j) {
    if (j.contains("builtin")) return builtin_instance(j.at("builtin").get<std::string>()).hopf;
    HopfAlgebra h;
    h.alg = algebra_from_json(j);
    const int n = h.dim();
    h.coproduct.resize(n);
    for (const auto& e : j.at("coproduct")) {
        int i = e.at(0).get<int>(), l = e.at(1).get<int>(), r = e.at(2).get<int>();
        if (i < 0 || l < 0 || r < 0 || i >= n || l >= n || r >= n) throw std::invalid_argument("coproduct index out of range");
        h.coproduct[i].push_back({l, r, scalar_from_json(e.at(3))});
    }
    h.counit = vec_from_json(j.at("counit"));
    if (static_cast<int>(h.counit.size()) != n) throw std::invalid_argument("counit has the wrong length");
    h.antipode = read_rows(j.at("antipode"), n);
    return h;
}

Json to_json(const DualCocycle& sigma) {
    Json j;
    j["sigma"] = Json::array();
    j["exact"] = Json::array();
    for (const auto& c : sigma.table) {
        j["sigma"].push_back(scalar_to_json(c));
        j["exact"].push_back({c.re().str(), c.im().str()});
    }
    return j;
}

DualCocycle cocycle_from_json(const Json& j, int dim) {
    const Json& t = j.contains("exact") ? j.at("exact") : j.at("sigma");
    if (static_cast<int>(t.size()) != dim * dim)
        throw std::invalid_argument("sigma has " + std::to_string(t.size()) + " entries, expected " + std::to_string(dim * dim));
    return {dim, vec_from_json(t)};
}

Json to_json(const FiniteEquivariantTriple& t) {
    Json j;
    j["name"] = t.name;
    j["hopf"] = to_json(t.hopf);
    j["algebra"] = algebra_to_json(t.algebra.alg);
    j["algebra"]["coaction"] = coaction_to_json(t.algebra.coaction);
    j["hilbert_dim"] = t.hilbert_dim;
    j["rep"] = Json::array();
    for (const auto& m : t.rep) j["rep"].push_back(matrix_to_json(m));
    j["corep"] = coaction_to_json(t.corep);
    j["dirac"] = matrix_to_json(t.dirac);
    j["twist"] = matrix_to_json(t.twist);
    j["irreps"] = Json::array();
    for (const auto& x : t.irreps) {
        Json coeffs = Json::array();
        for (const auto& c : x.coeffs) coeffs.push_back(vec_to_json(c));
        j["irreps"].push_back({{"name", x.name}, {"dim", x.dim}, {"coeffs", coeffs}});
    }
    return j;
}

FiniteEquivariantTriple triple_from_json(const Json& j) {
    if (j.contains("builtin")) {
        auto inst = builtin_instance(j.at("builtin").get<std::string>());
        if (!inst.triple) throw std::invalid_argument("builtin instance has no triple");
        return *inst.triple;
    }
    FiniteEquivariantTriple t;
    t.name = j.value("name", std::string("triple"));
    t.hopf = hopf_from_json(j.at("hopf"));
    const Json& a = j.at("algebra");
    t.algebra.alg = algebra_from_json(a);
    t.algebra.side = Side::Right;
    t.algebra.coaction = coaction_from_json(a.at("coaction"), t.algebra.alg.dim);
    t.hilbert_dim = j.at("hilbert_dim").get<int>();
    for (const auto& m : j.at("rep")) t.rep.push_back(matrix_from_json(m));
    if (static_cast<int>(t.rep.size()) != t.algebra.alg.dim) throw std::invalid_argument("rep needs one matrix per basis element");
    t.corep = coaction_from_json(j.at("corep"), t.hilbert_dim);
    t.dirac = matrix_from_json(j.at("dirac"));
    t.twist = j.contains("twist") ? matrix_from_json(j.at("twist")) : identity_matrix(t.hilbert_dim);
    if (j.contains("irreps"))
        for (const auto& x : j.at("irreps")) {
            Irrep r{x.at("name").get<std::string>(), x.at("dim").get<int>(), {}};
            for (const auto& c : x.at("coeffs")) r.coeffs.push_back(vec_from_json(c));
            t.irreps.push_back(std::move(r));
        }
    return t;
}

std::vector<std::string> builtin_names() { return {"z2", "z2z2", "z3z3", "z4", "s3"}; }

Instance builtin_instance(const std::string& name) {
    if (name == "s3") {
        auto g = symmetric3();
        return {name, function_algebra(g), s3_rotation_twist(g), s3_toy_triple()};
    }
    std::vector<int> factors;
    std::vector<std::vector<int>> form;
    if (name == "z2") {
        factors = {2};
        form = {{1}};
    } else if (name == "z2z2") {
        factors = {2, 2};
        form = {{0, 0}, {1, 0}};
    } else if (name == "z3z3") {
        factors = {3, 3};
        form = {{0, 0}, {1, 0}};
    } else if (name == "z4") {
        factors = {4};
        form = {{1}};
    } else {
        throw std::invalid_argument("unknown builtin instance '" + name + "'");
    }
    auto g = abelian_group(factors);
    return {name, group_algebra(g), bicharacter(g, form), group_toy_triple(g)};
}

}  // namespace qd::hopf
