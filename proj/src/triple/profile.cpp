#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdeform/triple/profile.hpp"

namespace qd::triple {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Surd>& d) {
    const int n = static_cast<int>(d.size());
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

bool ExactMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return rows_ == cols_;
}

bool ExactMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

Surd ExactMatrix::trace() const {
    Surd t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Eigen::MatrixXd ExactMatrix::to_eigen() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).value();
    return m;
}

std::string ExactMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).str();
        out << "]";
    }
    out << "]";
    return out.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
    ExactMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
    ExactMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool is_zero(const ExactMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

bool operator==(const ProfileBlock& a, const ProfileBlock& b) {
    return a.label == b.label && a.irrep_dim == b.irrep_dim && a.multiplicity == b.multiplicity &&
           a.dirac == b.dirac && a.twist == b.twist && a.woronowicz == b.woronowicz && a.qdim == b.qdim;
}

bool operator==(const IsotypicProfile& a, const IsotypicProfile& b) {
    return a.group == b.group && a.q == b.q && a.blocks == b.blocks;
}

mpz_class IsotypicProfile::total_dim() const {
    mpz_class n = 0;
    for (const auto& b : blocks) n += b.irrep_dim * b.multiplicity;
    return n;
}

void IsotypicProfile::canonicalize() {
    auto lowest = [](const ProfileBlock& b) {
        auto ev = block_eigenvalues(b.dirac);
        return ev.empty() ? 0.0 : ev.front().value;
    };
    std::vector<std::pair<double, std::size_t>> keys;
    for (std::size_t i = 0; i < blocks.size(); ++i) keys.emplace_back(lowest(blocks[i]), i);
    std::stable_sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
        const auto& a = blocks[x.second];
        const auto& b = blocks[y.second];
        if (x.first != y.first) return x.first < y.first;
        if (a.label != b.label) return a.label < b.label;
        return a.multiplicity < b.multiplicity;
    });
    std::vector<ProfileBlock> sorted;
    for (const auto& [key, i] : keys) sorted.push_back(blocks[i]);
    blocks = std::move(sorted);
}

namespace {

bool woronowicz_normalized(const ExactMatrix& f) {
    if (f.is_diagonal()) {
        Surd t, ti;
        for (int i = 0; i < f.rows(); ++i) {
            if (f(i, i).sign() <= 0) return false;
            t += f(i, i);
            ti += f(i, i).inverse();
        }
        return t == ti;
    }
    Eigen::MatrixXd m = f.to_eigen();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.eigenvalues().minCoeff() <= 0) return false;
    return std::abs(m.trace() - m.inverse().trace()) <= 1e-12 * m.trace();
}

bool positive(const ExactMatrix& r) {
    if (!r.is_symmetric()) return false;
    if (r.is_diagonal()) {
        for (int i = 0; i < r.rows(); ++i)
            if (r(i, i).sign() <= 0) return false;
        return true;
    }
    Eigen::LLT<Eigen::MatrixXd> llt(r.to_eigen());
    return llt.info() == Eigen::Success;
}

}  // namespace

Report check_profile(const IsotypicProfile& p) {
    Report rep;
    rep.title = "isotypic profile " + p.group;
    std::string shapes, dirac, commute, twist, wor;
    for (const auto& b : p.blocks) {
        const std::string at = "r_" + std::to_string(b.label);
        const int w = b.multiplicity;
        if (shapes.empty() && (w < 1 || b.dirac.rows() != w || b.dirac.cols() != w || b.twist.rows() != w ||
                               b.twist.cols() != w || b.irrep_dim < 1))
            shapes = at;
        if (!shapes.empty()) continue;
        if (dirac.empty() && !b.dirac.is_symmetric()) dirac = at;
        if (commute.empty() && !is_zero(b.dirac * b.twist - b.twist * b.dirac)) commute = at;
        if (twist.empty() && !positive(b.twist)) twist = at;
        if (wor.empty() && b.woronowicz &&
            (b.woronowicz->rows() != b.irrep_dim || !woronowicz_normalized(*b.woronowicz)))
            wor = at;
    }
    rep.add("block_shapes", shapes.empty(), shapes);
    rep.add("dirac_selfadjoint", dirac.empty(), dirac);
    rep.add("dirac_commutes_with_twist", commute.empty(), commute);
    rep.add("twist_positive", twist.empty(), twist);
    rep.add("woronowicz_normalized", wor.empty(), wor);
    return rep;
}

LabelEquivalence LabelEquivalence::inverse() const {
    LabelEquivalence inv;
    inv.source = target;
    inv.target = source;
    auto m = map;
    auto dom = in_domain;
    auto u = unmap;
    inv.in_domain = [dom, m, u](int y) { return y >= 0 && dom(u(y)) && m(u(y)) == y; };
    inv.map = unmap;
    inv.unmap = map;
    inv.source_dim = target_dim;
    inv.target_dim = source_dim;
    inv.source_F = target_F;
    inv.target_F = source_F;
    return inv;
}

ExactMatrix suq2_woronowicz(const Rational& q, int k) {
    if (k < 0) throw std::invalid_argument("negative label");
    const Rational a = abs(q);
    std::vector<Surd> d;
    for (int j = 0; j <= k; ++j) d.emplace_back(pow(a, 2 * j - k));
    return ExactMatrix::diagonal(d);
}

std::optional<ExactMatrix> partner_woronowicz(const repcat::EquivalenceDescriptor& e) {
    if (!e.accepted) return std::nullopt;
    const auto& lam = e.target.lambda;
    const int n = e.target.n;
    std::vector<Surd> lo, hi;
    for (const auto& l : lam) {
        if (!l.square) return std::nullopt;
        lo.push_back(l.square->inverse());
        hi.push_back(*l.square);
    }
    std::vector<Surd> d = lo;
    d.insert(d.end(), hi.begin(), hi.end());
    while (static_cast<int>(d.size()) < n) d.emplace_back(1);
    return ExactMatrix::diagonal(d);
}

LabelEquivalence partner_equivalence(const repcat::EquivalenceDescriptor& e) {
    if (!e.accepted) throw std::invalid_argument("partner matrix not accepted: " + e.reason);
    LabelEquivalence out;
    out.source = e.source_name;
    out.target = e.target_name;
    const auto labels = e.labels;
    const bool truncated = e.labels_truncated;
    out.in_domain = [labels, truncated](int k) {
        if (k < 0) return false;
        if (labels.empty()) return true;
        repcat::Subcategory s{labels, labels.back(), truncated, {}};
        return s.contains(k);
    };
    out.map = [](int k) { return k; };
    out.unmap = [](int k) { return k; };
    const auto src = e.source_ring();
    const auto tgt = e.target_ring();
    out.source_dim = [src](int k) { return repcat::dim_classical(src, {src.family, k}); };
    out.target_dim = [tgt](int k) { return repcat::dim_classical(tgt, {tgt.family, k}); };
    const Rational q = e.q;
    out.source_F = [q](int k) { return std::optional<ExactMatrix>(suq2_woronowicz(q, k)); };
    const auto fund = partner_woronowicz(e);
    out.target_F = [fund](int k) -> std::optional<ExactMatrix> {
        if (k == 0) return ExactMatrix::identity(1);
        if (k == 1) return fund;
        return std::nullopt;
    };
    return out;
}

LabelEquivalence cocycle_equivalence(std::string source, std::string target, std::vector<int> dims) {
    LabelEquivalence out;
    out.source = std::move(source);
    out.target = std::move(target);
    const int n = static_cast<int>(dims.size());
    out.in_domain = [n](int k) { return k >= 0 && k < n; };
    out.map = [](int k) { return k; };
    out.unmap = [](int k) { return k; };
    out.source_dim = [dims](int k) { return mpz_class(dims.at(static_cast<std::size_t>(k))); };
    out.target_dim = out.source_dim;
    out.source_F = [dims](int k) { return std::optional<ExactMatrix>(ExactMatrix::identity(dims.at(k))); };
    out.target_F = out.source_F;
    return out;
}

IsotypicProfile deform_profile(const IsotypicProfile& p, const LabelEquivalence& e) {
    if (p.group != e.source)
        throw std::invalid_argument("profile over " + p.group + " cannot be deformed by an equivalence from " + e.source);
    IsotypicProfile out;
    out.group = e.target;
    out.q = p.q;
    for (const auto& b : p.blocks) {
        if (!e.in_domain(b.label)) throw std::invalid_argument("label r_" + std::to_string(b.label) + " outside " + e.source);
        ProfileBlock nb = b;
        nb.label = e.map(b.label);
        nb.irrep_dim = e.target_dim(nb.label);
        nb.woronowicz = e.target_F(nb.label);
        out.blocks.push_back(std::move(nb));
    }
    out.canonicalize();
    return out;
}

std::string Eigenvalue::str() const { return exact ? exact->str() : format_double(value); }

bool same_eigenvalue(const Eigenvalue& a, const Eigenvalue& b) {
    if (a.exact && b.exact) {
        try {
            return *a.exact == *b.exact;
        } catch (const std::invalid_argument&) {
            // different radicands
        }
    }
    return std::abs(a.value - b.value) <= 1e-12 * std::max({1.0, std::abs(a.value), std::abs(b.value)});
}

std::vector<Eigenvalue> block_eigenvalues(const ExactMatrix& d) {
    std::vector<Eigenvalue> out;
    if (d.is_diagonal()) {
        for (int i = 0; i < d.rows(); ++i) out.push_back({d(i, i), d(i, i).value()});
    } else if (d.rows() == 2 && d(0, 0).is_rational() && d(0, 1).is_rational() && d(1, 1).is_rational()) {
        const Rational a = d(0, 0).rational_part(), b = d(0, 1).rational_part(), c = d(1, 1).rational_part();
        const Rational mean = (a + c) / 2, half = (a - c) / 2;
        const Rational disc = half * half + b * b;
        for (int s : {-1, 1}) {
            Surd v(mean, Rational(s), disc);
            out.push_back({v, v.value()});
        }
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(d.to_eigen());
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) out.push_back({std::nullopt, eig.eigenvalues()(i)});
    }
    std::sort(out.begin(), out.end(), [](const Eigenvalue& x, const Eigenvalue& y) { return x.value < y.value; });
    return out;
}

SpectrumTable spectrum_table(const IsotypicProfile& p) {
    SpectrumTable t;
    for (const auto& b : p.blocks)
        for (const auto& ev : block_eigenvalues(b.dirac)) {
            auto it = std::find_if(t.begin(), t.end(), [&](const SpectrumRow& r) { return same_eigenvalue(r.eigenvalue, ev); });
            if (it == t.end()) {
                t.push_back({ev, 0, {}});
                it = std::prev(t.end());
            }
            it->multiplicity += b.irrep_dim;
            if (std::find(it->labels.begin(), it->labels.end(), b.label) == it->labels.end()) it->labels.push_back(b.label);
        }
    std::sort(t.begin(), t.end(), [](const SpectrumRow& x, const SpectrumRow& y) { return x.eigenvalue.value < y.eigenvalue.value; });
    for (auto& r : t) std::sort(r.labels.begin(), r.labels.end());
    return t;
}

std::string spectrum_csv(const SpectrumTable& t) {
    std::ostringstream out;
    out << "eigenvalue,multiplicity,labels\n";
    for (const auto& r : t) {
        out << r.eigenvalue.str() << "," << r.multiplicity.get_str() << ",";
        for (std::size_t i = 0; i < r.labels.size(); ++i) out << (i ? " " : "") << "r_" << r.labels[i];
        out << "\n";
    }
    return out.str();
}

Report round_trip(const IsotypicProfile& p, const LabelEquivalence& e) {
    Report rep;
    rep.title = "round trip " + e.source + " -> " + e.target + " -> " + e.source;
    IsotypicProfile start = p;
    start.canonicalize();
    auto there = deform_profile(start, e);
    auto back = deform_profile(there, e.inverse());
    std::string first;
    for (std::size_t i = 0; i < std::min(start.blocks.size(), back.blocks.size()) && first.empty(); ++i)
        if (!(start.blocks[i] == back.blocks[i])) first = "block " + std::to_string(i) + " (r_" + std::to_string(start.blocks[i].label) + ")";
    if (first.empty() && start.blocks.size() != back.blocks.size()) first = "block count";
    if (first.empty() && !(start == back)) first = "group or q";
    rep.add("exact", first.empty(), first);
    return rep;
}

Report check_deformation(const IsotypicProfile& before, const IsotypicProfile& after, const LabelEquivalence& e) {
    Report rep;
    rep.title = "deformation " + e.source + " -> " + e.target;
    bool blocks_ok = before.blocks.size() == after.blocks.size();
    bool mult_ok = blocks_ok, qdim_ok = blocks_ok;
    mpz_class expected = 0;
    for (const auto& b : before.blocks) expected += e.target_dim(e.map(b.label)) * b.multiplicity;
    if (blocks_ok) {
        auto src = before;
        src.canonicalize();
        for (std::size_t i = 0; i < src.blocks.size(); ++i) {
            const auto& x = src.blocks[i];
            const auto& y = after.blocks[i];
            mult_ok = mult_ok && x.multiplicity == y.multiplicity && y.label == e.map(x.label) && x.dirac == y.dirac &&
                      x.twist == y.twist;
            qdim_ok = qdim_ok && x.qdim == y.qdim;
        }
    }
    rep.add("multiplicity_spaces_invariant", mult_ok);
    rep.add("quantum_dimensions_invariant", qdim_ok);
    rep.add("total_dimension", after.total_dim() == expected,
            before.total_dim().get_str() + " -> " + after.total_dim().get_str());
    auto s0 = spectrum_table(before);
    auto s1 = spectrum_table(after);
    bool same = s0.size() == s1.size();
    for (std::size_t i = 0; same && i < s0.size(); ++i) same = same_eigenvalue(s0[i].eigenvalue, s1[i].eigenvalue);
    rep.add("eigenvalue_set_invariant", same, std::to_string(s0.size()) + " distinct eigenvalues");
    return rep;
}

IsotypicProfile podles_profile(const Rational& q, const Rational& c1, const Rational& c2, int max_n2) {
    if (max_n2 < 1 || max_n2 % 2 == 0) throw std::invalid_argument("truncation N must be a half-integer >= 1/2");
    if (sgn(c1) == 0) throw std::invalid_argument("c1 must be nonzero");
    IsotypicProfile p;
    p.group = "SU_q(2)";
    p.q = q;
    for (int n2 = 1; n2 <= max_n2; n2 += 2) {
        ProfileBlock b;
        b.label = n2;
        b.irrep_dim = n2 + 1;
        b.multiplicity = 2;
        Rational lambda = c1 * Rational(n2, 2) + c2;
        lambda.canonicalize();
        b.dirac = ExactMatrix(2, 2);
        b.dirac(0, 1) = b.dirac(1, 0) = lambda;
        b.twist = ExactMatrix::identity(2);
        b.woronowicz = suq2_woronowicz(q, n2);
        b.qdim = repcat::dim_quantum({repcat::Family::SUq2, n2}, q);
        p.blocks.push_back(std::move(b));
    }
    p.canonicalize();
    return p;
}

IsotypicProfile random_profile(std::mt19937_64& rng, const Rational& q, int max_label, int max_blocks) {
    std::uniform_int_distribution<int> label(0, max_label), blocks(1, max_blocks), mult(1, 3), num(-9, 9), den(1, 4);
    auto entry = [&] {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        return Surd(r);
    };
    IsotypicProfile p;
    p.group = "SU_q(2)";
    p.q = q;
    const int nb = blocks(rng);
    for (int i = 0; i < nb; ++i) {
        ProfileBlock b;
        b.label = label(rng);
        b.irrep_dim = b.label + 1;
        b.multiplicity = mult(rng);
        const int w = b.multiplicity;
        b.dirac = ExactMatrix(w, w);
        for (int r = 0; r < w; ++r)
            for (int c = r; c < w; ++c) b.dirac(r, c) = b.dirac(c, r) = entry();
        // 1 + D^2 is positive and commutes with D
        b.twist = ExactMatrix::identity(w);
        auto d2 = b.dirac * b.dirac;
        for (int r = 0; r < w; ++r)
            for (int c = 0; c < w; ++c) b.twist(r, c) += d2(r, c);
        b.woronowicz = suq2_woronowicz(q, b.label);
        b.qdim = repcat::dim_quantum({repcat::Family::SUq2, b.label}, q);
        p.blocks.push_back(std::move(b));
    }
    p.canonicalize();
    return p;
}

}  // namespace qd::triple
