#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdeform/repcat/repcat.hpp"

namespace qd::repcat {

namespace {

bool near(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

// [[0, D], [-D^-1, 0]], 0 < lambda <= 1
bool match_antisymmetric(const ComplexMatrix& F, double tol, std::vector<double>& lambda) {
    const int n = static_cast<int>(F.rows());
    if (n % 2) return false;
    const int h = n / 2;
    std::vector<double> lam(h);
    for (int i = 0; i < h; ++i) {
        auto v = F(i, h + i);
        if (std::abs(v.imag()) > tol || v.real() <= 0 || v.real() > 1 + tol) return false;
        lam[i] = v.real();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> want = 0;
            if (i < h && j == h + i) want = lam[i];
            if (i >= h && j == i - h) want = -1.0 / lam[j];
            if (!near(F(i, j), want, tol)) return false;
        }
    lambda = lam;
    return true;
}

// [[0, D, 0], [D^-1, 0, 0], [0, 0, 1]], 0 < lambda_1 <= ... <= lambda_k < 1
bool match_symmetric(const ComplexMatrix& F, int k, double tol, std::vector<double>& lambda) {
    const int n = static_cast<int>(F.rows());
    if (2 * k > n) return false;
    std::vector<double> lam(k);
    for (int i = 0; i < k; ++i) {
        auto v = F(i, k + i);
        if (std::abs(v.imag()) > tol || v.real() <= 0 || v.real() >= 1) return false;
        if (i > 0 && v.real() < lam[i - 1] - tol) return false;
        lam[i] = v.real();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> want = 0;
            if (i < k && j == k + i) want = lam[i];
            else if (i >= k && i < 2 * k && j == i - k) want = 1.0 / lam[j];
            else if (i >= 2 * k && i == j) want = 1.0;
            if (!near(F(i, j), want, tol)) return false;
        }
    lambda = lam;
    return true;
}

}  // namespace

AdmissibilityReport check_orthogonal_matrix(const ComplexMatrix& F, double tol) {
    if (F.rows() != F.cols() || F.rows() == 0) throw std::invalid_argument("F must be square and nonempty");
    const int n = static_cast<int>(F.rows());
    Eigen::FullPivLU<ComplexMatrix> lu(F);
    if (!lu.isInvertible()) throw std::invalid_argument("F is singular");

    AdmissibilityReport rep;
    ComplexMatrix P = F * F.conjugate();
    std::complex<double> c = P.trace() / static_cast<double>(n);
    rep.scalar_residual = (P - c * ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, P.cwiseAbs().maxCoeff());
    if (rep.scalar_residual > tol * scale || std::abs(c.imag()) > tol * scale) {
        rep.admissible = false;
        rep.reason = "inadmissible: F conj(F) is not a real scalar matrix";
        return rep;
    }
    rep.admissible = true;
    rep.c = c.real();
    std::vector<double> lam;
    if (match_antisymmetric(F, tol, lam)) {
        rep.shape = CanonicalShape::Antisymmetric;
        rep.k = n / 2;
        rep.lambda = lam;
    } else {
        for (int k = n / 2; k >= 0; --k)
            if (match_symmetric(F, k, tol, lam)) {
                rep.shape = CanonicalShape::Symmetric;
                rep.k = k;
                rep.lambda = lam;
                break;
            }
    }
    return rep;
}

OrthogonalMatrixSpec fq_matrix(const Rational& q) {
    if (sgn(q) == 0) throw std::invalid_argument("q = 0");
    Rational aq = abs(q);
    OrthogonalMatrixSpec s;
    s.n = 2;
    s.k = 1;
    s.F = ComplexMatrix::Zero(2, 2);
    double l = std::sqrt(aq.get_d());
    s.F(0, 1) = l;
    s.F(1, 0) = (sgn(q) > 0 ? -1.0 : 1.0) / l;
    RealEntry e;
    e.value = l;
    e.square = Surd(aq);
    Rational root;
    if (rational_sqrt(aq, root)) e.exact = root;
    s.lambda = {e};
    s.shape = sgn(q) > 0 ? CanonicalShape::Antisymmetric : CanonicalShape::Symmetric;
    return s;
}

EquivalenceDescriptor validate_partner(const Rational& q, const OrthogonalMatrixSpec& spec, double tol) {
    if (sgn(q) == 0 || abs(q) > 1) throw std::invalid_argument("validate_partner: q must lie in [-1,1] without 0");
    EquivalenceDescriptor e;
    e.q = q;
    e.target = spec;
    const int n = static_cast<int>(spec.F.rows());
    e.target.n = n;
    e.dimension_preserving = n == 2;
    e.trace_FstarF = (spec.F.adjoint() * spec.F).trace().real();

    auto adm = check_orthogonal_matrix(spec.F, tol);
    if (!adm.admissible) {
        e.reason = adm.reason;
        return e;
    }
    const bool want_antisym = sgn(q) > 0;
    const auto want = want_antisym ? CanonicalShape::Antisymmetric : CanonicalShape::Symmetric;
    if (adm.shape != want) {
        e.reason = want_antisym ? "q > 0 needs the block form [[0, D], [-D^-1, 0]] with n even"
                                : "q < 0 needs the block form [[0, D, 0], [D^-1, 0, 0], [0, 0, 1]]";
        return e;
    }
    e.target.shape = adm.shape;
    e.target.k = adm.k;

    std::vector<RealEntry> lam = spec.lambda;
    if (lam.empty()) {
        const bool have_entries = static_cast<int>(spec.entries.size()) == n * n;
        for (int i = 0; i < adm.k; ++i) {
            if (have_entries) lam.push_back(spec.entries[i * n + adm.k + i]);
            else lam.push_back({adm.lambda[i], std::nullopt, std::nullopt});
        }
    } else {
        if (static_cast<int>(lam.size()) != adm.k) {
            e.reason = "lambda list does not match the block form of F";
            return e;
        }
        for (int i = 0; i < adm.k; ++i)
            if (std::abs(lam[i].value - adm.lambda[i]) > 1e-9) {
                e.reason = "lambda list disagrees with the entries of F";
                return e;
            }
    }
    e.target.lambda = lam;

    const int extra = want_antisym ? 0 : n - 2 * adm.k;
    const Rational target_exact = abs(q + Rational(1) / q);
    bool exact = std::all_of(lam.begin(), lam.end(), [](const RealEntry& r) { return r.square.has_value(); });
    if (exact) {
        try {
            Surd t(extra);
            for (const auto& r : lam) t += *r.square + r.square->inverse();
            e.trace_FstarF_exact = t;
            e.residual_exact = abs(t - Surd(target_exact));
        } catch (const std::invalid_argument&) {
            exact = false;  // radicands from different fields
        }
    }
    if (exact) {
        e.exact = true;
        e.residual = e.residual_exact->value();
        e.accepted = e.residual_exact->is_zero();
    } else {
        double t = extra;
        for (const auto& r : lam) t += r.value * r.value + 1.0 / (r.value * r.value);
        e.residual = std::abs(t - target_exact.get_d());
        e.accepted = e.residual <= tol * std::max(1.0, target_exact.get_d());
    }
    if (!e.accepted) {
        std::ostringstream msg;
        msg << "trace constraint violated: residual " << (e.residual_exact ? e.residual_exact->str() : format_double(e.residual));
        e.reason = msg.str();
    }
    return e;
}

}  // namespace qd::repcat
