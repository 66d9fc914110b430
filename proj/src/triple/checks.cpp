#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdeform/triple/checks.hpp"

namespace qd::triple {

namespace {

double op_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

}  // namespace

SpectralTripleCheck check_spectral_triple(const std::vector<Eigen::MatrixXcd>& generators, const Eigen::MatrixXcd& D,
                                          double tol) {
    if (D.rows() != D.cols()) throw std::invalid_argument("D must be square");
    for (const auto& a : generators)
        if (a.rows() != D.rows() || a.cols() != D.cols()) throw std::invalid_argument("generator shape differs from D");
    SpectralTripleCheck out;
    out.checks.title = "spectral triple";
    const double scale = std::max(1.0, op_norm(D));
    const double asym = op_norm(D - D.adjoint());
    out.checks.add("dirac_selfadjoint", asym <= tol * scale, format_double(asym));
    bool finite = true;
    for (const auto& a : generators) {
        double n = op_norm(D * a - a * D);
        finite = finite && std::isfinite(n);
        out.commutator_norms.push_back(n);
    }
    out.checks.add("commutators_bounded", finite);

    std::vector<double> mags;
    if (D.size()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig((D + D.adjoint()) / 2.0);
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) mags.push_back(std::abs(eig.eigenvalues()(i)));
    }
    std::sort(mags.begin(), mags.end());
    for (double m : mags) {
        if (!out.growth.empty() && std::abs(out.growth.back().first - m) <= 1e-9 * std::max(1.0, m))
            ++out.growth.back().second;
        else
            out.growth.emplace_back(m, 1);
    }
    std::ostringstream g;
    for (std::size_t i = 0; i < out.growth.size(); ++i)
        g << (i ? ", " : "") << format_double(out.growth[i].first) << " x" << out.growth[i].second;
    // finitely many eigenvalues below every bound: the truncated witness of compact resolvent
    out.checks.add("eigenvalue_growth", true, g.str());
    return out;
}

std::vector<BasisLabel> spinor_labels(const suq2::TruncatedPodles& t) {
    std::vector<BasisLabel> out;
    for (const auto& x : t.basis) out.push_back({x.n2, x.bundle > 0 ? 0 : 1, (x.l2 + x.n2) / 2});
    return out;
}

Report check_equivariance(const Eigen::MatrixXd& D, const std::vector<BasisLabel>& basis,
                          const std::vector<Eigen::MatrixXd>& generators, int max_shift, double tol) {
    const auto n = static_cast<Eigen::Index>(basis.size());
    if (D.rows() != n || D.cols() != n) throw std::invalid_argument("D does not match the basis");
    Report rep;
    rep.title = "equivariance";
    std::map<std::tuple<int, int, int>, double> block;  // (label, copy_i, copy_j) -> entry
    std::string bad;
    for (Eigen::Index i = 0; i < n && bad.empty(); ++i)
        for (Eigen::Index j = 0; j < n && bad.empty(); ++j) {
            const auto& a = basis[i];
            const auto& b = basis[j];
            const double v = D(i, j);
            if (a.label != b.label || a.row != b.row) {
                if (std::abs(v) > tol) bad = "D(" + std::to_string(i) + ", " + std::to_string(j) + ") mixes isotypic rows";
                continue;
            }
            auto [it, fresh] = block.try_emplace({a.label, a.copy, b.copy}, v);
            if (!fresh && std::abs(it->second - v) > tol)
                bad = "D not scalar on the irrep factor of r_" + std::to_string(a.label);
        }
    rep.add("dirac_block_scalar", bad.empty(), bad);
    bad.clear();
    for (std::size_t g = 0; g < generators.size() && bad.empty(); ++g) {
        const auto& x = generators[g];
        if (x.rows() != n || x.cols() != n) throw std::invalid_argument("generator does not match the basis");
        for (Eigen::Index i = 0; i < n && bad.empty(); ++i)
            for (Eigen::Index j = 0; j < n && bad.empty(); ++j)
                if (std::abs(x(i, j)) > tol && std::abs(basis[i].label - basis[j].label) > max_shift)
                    bad = "generator " + std::to_string(g) + " connects r_" + std::to_string(basis[j].label) + " to r_" +
                          std::to_string(basis[i].label);
    }
    rep.add("generator_label_shift", bad.empty(), bad);
    return rep;
}

HaarOracle closed_form_haar(const suq2::Ring& r) {
    return [r](const suq2::Element<Rational>& x) { return suq2::haar(r, x); };
}

HaarOracle table_haar(suq2::HaarTable table) {
    return [table = std::move(table)](const suq2::Element<Rational>& x) {
        Rational out = 0;
        for (const auto& [m, v] : x) {
            if (m.degree() > table.degree) throw std::out_of_range("monomial beyond the Haar table: " + m.str());
            auto it = table.values.find(m);
            if (it != table.values.end()) out += v * it->second;
        }
        return out;
    };
}

WoronowiczSolve woronowicz_F(const suq2::PeterWeylBasis& pw, int n2, const HaarOracle& h) {
    const auto& r = pw.ring();
    const int d = n2 + 1;
    auto u = [&](int i, int j) { return pw.u({n2, 2 * i - n2, 2 * j - n2}); };
    WoronowiczSolve out;
    out.checks.title = "Woronowicz F for spin " + half_to_string(n2);

    // M_ij = h(u_ij u_ij*), N_ij = h(u_ij* u_ij); all cross terms vanish
    std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d)), N = M;
    std::string cross;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int s = 0; s < d; ++s)
                for (int t = 0; t < d; ++t) {
                    Rational v = h(r.mul(u(i, j), r.adjoint(u(s, t))));
                    if (i == s && j == t) M[i][j] = v;
                    else if (sgn(v) != 0 && cross.empty()) cross = "h(u_" + std::to_string(i) + std::to_string(j) + " u_" + std::to_string(s) + std::to_string(t) + "*)";
                    if (i == s && j == t) N[i][j] = h(r.mul(r.adjoint(u(i, j)), u(i, j)));
                }
    out.checks.add("off_diagonal_vanish", cross.empty(), cross);

    // u = L U L^-1 with U unitary forces M_ij = l_i^2 G_j / l_j^2
    bool rank_one = true;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rank_one = rank_one && M[i][j] * M[0][0] == M[i][0] * M[0][j];
    out.checks.add("diagonal_unitarization", rank_one);

    std::vector<Rational> lam2(d), g(d);
    for (int i = 0; i < d; ++i) {
        lam2[i] = M[i][0] / M[0][0];
        g[i] = M[0][i] * lam2[i];
    }
    Rational tr = 0, tri = 0;
    for (const auto& x : g) {
        tr += x;
        tri += 1 / x;
    }
    Rational s;
    if (!rational_sqrt(Rational(tri / tr), s)) throw std::runtime_error("Woronowicz normalization is not rational");
    std::vector<Surd> f;
    for (const auto& x : g) f.emplace_back(Rational(s * x));
    out.F = ExactMatrix::diagonal(f);
    out.trace = out.F.trace();
    for (const auto& x : f) out.inverse_trace += x.inverse();
    bool positive = std::all_of(f.begin(), f.end(), [](const Surd& x) { return x.sign() > 0; });
    out.checks.add("positive", positive);
    out.checks.add("normalized", out.trace == out.inverse_trace, out.trace.str() + " = " + out.inverse_trace.str());

    // second orthogonality relation: h(U_ij* U_ij) = (F^-1)_ii / Tr F
    bool second = true;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Surd lhs(Rational(N[i][j] * lam2[j] / lam2[i]));
            second = second && lhs == f[i].inverse() / out.trace;
        }
    out.checks.add("second_orthogonality", second);
    return out;
}

Report check_r_twisted_volume(const IsotypicProfile& p, const FOracle& reference) {
    Report rep;
    rep.title = "R-twisted volume " + p.group;
    std::string commute, positive, normalized, matches, traces;
    int qdim_only = 0;
    for (const auto& b : p.blocks) {
        const std::string at = "r_" + std::to_string(b.label);
        if (commute.empty() && !is_zero(b.twist * b.dirac - b.dirac * b.twist)) commute = at;
        if (positive.empty()) {
            Eigen::LLT<Eigen::MatrixXd> llt(b.twist.to_eigen());
            if (!b.twist.is_symmetric() || llt.info() != Eigen::Success) positive = at;
        }
        if (!b.woronowicz) {
            ++qdim_only;
            continue;
        }
        const auto& f = *b.woronowicz;
        if (normalized.empty()) {
            bool ok = f.is_diagonal();
            Surd inv;
            for (int i = 0; ok && i < f.rows(); ++i) {
                ok = f(i, i).sign() > 0;
                if (ok) inv += f(i, i).inverse();
            }
            if (!ok || !(inv == f.trace())) normalized = at;
        }
        if (traces.empty() && !(f.trace() == Surd(abs(b.qdim)))) traces = at + ": Tr F = " + f.trace().str();
        if (matches.empty() && reference) {
            auto want = reference(b.label);
            if (want && !(*want == f)) matches = at;
        }
    }
    rep.add("twist_commutes_with_dirac", commute.empty(), commute);
    rep.add("twist_positive", positive.empty(), positive);
    rep.add("woronowicz_normalized", normalized.empty(), normalized);
    rep.add("trace_is_quantum_dimension", traces.empty(), traces);
    rep.add("block_form", matches.empty(),
            matches.empty() && qdim_only ? std::to_string(qdim_only) + " blocks q-dimension only" : matches);
    return rep;
}

Eigen::MatrixXd podles_twist(const suq2::TruncatedPodles& t, const FOracle& F) {
    const int n = t.dim();
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& x = t.basis[i];
        auto f = F(x.n2);
        if (!f) throw std::invalid_argument("no F matrix for r_" + std::to_string(x.n2));
        for (int j = 0; j < n; ++j) {
            const auto& y = t.basis[j];
            if (y.bundle == x.bundle && y.n2 == x.n2) R(i, j) = (*f)((x.l2 + x.n2) / 2, (y.l2 + y.n2) / 2).value();
        }
    }
    return R;
}

Report check_r_twisted_volume(const suq2::TruncatedPodles& t, const Eigen::MatrixXd& R, const FOracle& F, double tol) {
    Report rep;
    rep.title = "R-twisted volume, truncated Podles triple";
    const double scale = std::max(1.0, R.cwiseAbs().maxCoeff());
    const double block = (R - podles_twist(t, F)).cwiseAbs().maxCoeff();
    rep.add("block_form", block <= tol * scale, format_double(block));
    const double comm = (R * t.D - t.D * R).cwiseAbs().maxCoeff();
    rep.add("twist_commutes_with_dirac", comm <= tol * scale * std::max(1.0, t.D.cwiseAbs().maxCoeff()),
            format_double(comm));
    Eigen::LLT<Eigen::MatrixXd> llt(R);
    rep.add("twist_positive", R.isApprox(R.transpose()) && llt.info() == Eigen::Success);
    return rep;
}

}  // namespace qd::triple
