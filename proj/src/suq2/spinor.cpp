#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/NonLinearOptimization>

#include "qdeform/scalar/format.hpp"
#include "qdeform/suq2/spinor.hpp"

namespace qd::suq2 {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using PairKey = std::pair<int, int>;

// Column factors T_j^{(n'n)}[l', l] for one bundle, j = -1, 0, 1 at index j + 1.
using Factors = std::array<std::map<PairKey, MatrixXd>, 3>;

struct Layout {
    std::vector<int> levels;   // doubled half-integers 1, 3, ..., max_n2
    std::map<int, int> offset;
    int dim = 0;
    std::vector<int> interior;  // columns with n2 <= max_n2 - 2
};

Layout make_layout(int max_n2) {
    Layout out;
    for (int n2 = 1; n2 <= max_n2; n2 += 2) {
        out.levels.push_back(n2);
        out.offset[n2] = out.dim;
        out.dim += n2 + 1;
    }
    for (int n2 : out.levels)
        if (n2 <= max_n2 - 2)
            for (int i = 0; i <= n2; ++i) out.interior.push_back(out.offset[n2] + i);
    return out;
}

// coefficients of x e^n_{k,l} on e^{n'}_{k',l'}
template <class K>
std::map<PWIndex, double> act_on_e(const PeterWeylBasis& pw, const Element<K>& x, const PWIndex& in) {
    const double s_in = pw.e_scale(in);
    Element<K> d = convert<K>(pw.d(in));
    std::map<PWIndex, double> out;
    for (const auto& [idx, v] : pw.decompose(pw.ring().mul(x, d))) {
        double value;
        if constexpr (std::is_same_v<K, Rational>) value = to_double(v);
        else value = v.value();
        out[idx] += value * s_in / pw.e_scale(idx);
    }
    return out;
}

Factors column_factors(const PeterWeylBasis& pw, const Layout& lay, int bundle) {
    const Ring& r = pw.ring();
    const Rational kappa = 1 / (1 + r.q() * r.q());
    std::array<Element<Rational>, 3> x{r.word("ag"), combine(r.word("Gg"), Rational(1), r.word(""), Rational(-kappa)),
                                       r.word("GA")};
    const int max_n2 = lay.levels.back();
    Factors f;
    for (int n2 : lay.levels)
        for (int l2 = -n2; l2 <= n2; l2 += 2)
            for (int j = 0; j < 3; ++j)
                for (const auto& [out, v] : act_on_e(pw, x[j], {n2, bundle, l2})) {
                    if (std::abs(v) < 1e-14) continue;
                    if (out.k2 != bundle) throw std::logic_error("c = 0 generators leave the spinor rows");
                    if (std::abs(out.n2 - n2) > 2) throw std::logic_error("spin-1 product leaves neighbouring levels");
                    if (out.n2 > max_n2) continue;
                    auto& m = f[j][{out.n2, n2}];
                    if (m.size() == 0) m = MatrixXd::Zero(out.n2 + 1, n2 + 1);
                    m((out.l2 + out.n2) / 2, (l2 + n2) / 2) += v;
                }
    return f;
}

struct Relations {
    const Layout& lay;
    const Factors& f;
    std::vector<PairKey> pairs;
    double q, kappa, c = 0;

    std::array<MatrixXd, 3> operators(const VectorXd& r) const {
        std::array<MatrixXd, 3> x;
        for (int j = 0; j < 3; ++j) {
            x[j] = MatrixXd::Zero(lay.dim, lay.dim);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                auto it = f[j].find(pairs[p]);
                if (it == f[j].end()) continue;
                const auto [out, in] = pairs[p];
                x[j].block(lay.offset.at(out), lay.offset.at(in), out + 1, in + 1) += r[p] * it->second;
            }
        }
        return x;
    }

    int values() const {
        return static_cast<int>(3 * lay.dim * lay.interior.size() + 2 * lay.dim * lay.dim);
    }

    // relation defects and their derivative in direction (dA, dB, dBs)
    void fill(const MatrixXd& A, const MatrixXd& B, const MatrixXd& Bs, const MatrixXd* dA, const MatrixXd* dB,
              const MatrixXd* dBs, Eigen::Ref<VectorXd> out) const {
        const double q2 = q * q;
        const MatrixXd I = MatrixXd::Identity(lay.dim, lay.dim);
        std::array<MatrixXd, 3> rel;
        MatrixXd sa, bb;
        if (!dA) {
            rel[0] = A * B - B * A / q2;
            rel[1] = Bs * B - (A - A * A + c * I);
            rel[2] = B * Bs - (q2 * A - q2 * q2 * A * A + c * I);
            sa = A - A.transpose();
            bb = Bs - B.transpose();
        } else {
            rel[0] = *dA * B + A * *dB - (*dB * A + B * *dA) / q2;
            rel[1] = *dBs * B + Bs * *dB - (*dA - *dA * A - A * *dA);
            rel[2] = *dB * Bs + B * *dBs - (q2 * *dA - q2 * q2 * (*dA * A + A * *dA));
            sa = *dA - dA->transpose();
            bb = *dBs - dB->transpose();
        }
        Eigen::Index k = 0;
        for (const auto& m : rel)
            for (int col : lay.interior)
                for (int row = 0; row < lay.dim; ++row) out[k++] = m(row, col);
        for (const auto* m : {&sa, &bb})
            for (int col = 0; col < lay.dim; ++col)
                for (int row = 0; row < lay.dim; ++row) out[k++] = (*m)(row, col);
    }
};

struct Functor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = VectorXd;
    using ValueType = VectorXd;
    using JacobianType = MatrixXd;

    const Relations& rel;
    int inputs() const { return static_cast<int>(rel.pairs.size()); }
    int values() const { return rel.values(); }

    int operator()(const VectorXd& r, VectorXd& out) const {
        auto x = rel.operators(r);
        out.resize(values());
        rel.fill(x[1] + rel.kappa * MatrixXd::Identity(rel.lay.dim, rel.lay.dim), x[0], x[2], nullptr, nullptr, nullptr,
                 out);
        return 0;
    }

    int df(const VectorXd& r, MatrixXd& jac) const {
        auto x = rel.operators(r);
        const MatrixXd A = x[1] + rel.kappa * MatrixXd::Identity(rel.lay.dim, rel.lay.dim);
        jac.resize(values(), inputs());
        for (int p = 0; p < inputs(); ++p) {
            VectorXd e = VectorXd::Zero(inputs());
            e[p] = 1;
            auto d = rel.operators(e);
            rel.fill(A, x[0], x[2], &d[1], &d[0], &d[2], jac.col(p));
        }
        return 0;
    }
};

double max_abs(const VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

MatrixXd interior_block(const MatrixXd& m, const std::vector<int>& cols) {
    MatrixXd out(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = m.col(cols[i]);
    return out;
}

double op_norm(const MatrixXd& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<MatrixXd> svd(m);
    return svd.singularValues()(0);
}

}  // namespace

int TruncatedPodles::position(const SpinorIndex& x) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].bundle == x.bundle && basis[i].n2 == x.n2 && basis[i].l2 == x.l2) return static_cast<int>(i);
    throw std::out_of_range("spinor index outside the truncation");
}

double RelationResiduals::max() const { return std::max({selfadjoint, commutation, bstar_b, b_bstar}); }

RelationResiduals relation_residuals(const MatrixXd& A, const MatrixXd& B, const MatrixXd& Bstar, double q, double c,
                                     const std::vector<int>& interior) {
    const double q2 = q * q;
    const MatrixXd I = MatrixXd::Identity(A.rows(), A.cols());
    RelationResiduals out;
    out.selfadjoint = op_norm(A - A.transpose());
    out.commutation = op_norm(interior_block(A * B - B * A / q2, interior));
    out.bstar_b = op_norm(interior_block(Bstar * B - (A - A * A + c * I), interior));
    out.b_bstar = op_norm(interior_block(B * Bstar - (q2 * A - q2 * q2 * A * A + c * I), interior));
    return out;
}

RelationResiduals relation_residuals(const TruncatedPodles& p, int interior_n2) {
    std::vector<int> cols;
    for (int i = 0; i < p.dim(); ++i)
        if (p.basis[i].n2 <= interior_n2) cols.push_back(i);
    return relation_residuals(p.A, p.B, p.Bstar, to_double(p.q), to_double(p.c), cols);
}

double commutator_norm(const MatrixXd& D, const MatrixXd& X) { return op_norm(D * X - X * D); }

double commutator_norm(const TruncatedPodles& p, const MatrixXd& X, int interior_n2) {
    std::vector<int> cols;
    for (int i = 0; i < p.dim(); ++i)
        if (p.basis[i].n2 <= interior_n2) cols.push_back(i);
    return op_norm(interior_block(p.D * X - X * p.D, cols));
}

bool CommutatorStability::stable(double tol) const {
    return std::abs(a_at_n - a_at_next) <= tol && std::abs(b_at_n - b_at_next) <= tol;
}

CommutatorStability commutator_stability(const PeterWeylBasis& pw, const Rational& t, const Rational& c1,
                                         const Rational& c2, int max_n2) {
    auto here = truncated_podles_triple(pw, t, c1, c2, max_n2);
    auto next = truncated_podles_triple(pw, t, c1, c2, max_n2 + 2);
    const int interior = max_n2 - 2;
    return {commutator_norm(here, here.A, interior), commutator_norm(next, next.A, interior),
            commutator_norm(here, here.B, interior), commutator_norm(next, next.B, interior)};
}

std::map<Rational, int> dirac_spectrum(const TruncatedPodles& p) {
    std::map<Rational, int> out;
    for (const auto& e : p.isotypic) out[e.eigenvalue] += e.dim;
    return out;
}

TruncatedPodles truncated_podles_triple(const PeterWeylBasis& pw, const Rational& t, const Rational& c1,
                                        const Rational& c2, int max_n2, const SpinorOptions& opts) {
    if (max_n2 < 1 || max_n2 % 2 == 0) throw std::invalid_argument("truncation N must be a half-integer >= 1/2");
    if (sgn(c1) == 0) throw std::invalid_argument("c1 must be nonzero");
    if (pw.max_n2() < max_n2 + 2) throw std::invalid_argument("Peter-Weyl basis must reach N + 1");
    const Ring& ring = pw.ring();
    const PodlesData gens = corrected_podles_generators(ring, t);

    TruncatedPodles out;
    out.q = ring.q();
    out.t = t;
    out.c = gens.c;
    out.c1 = c1;
    out.c2 = c2;
    out.max_n2 = max_n2;
    const Layout lay = make_layout(max_n2);
    for (int bundle : {1, -1})
        for (int n2 : lay.levels)
            for (int l2 = -n2; l2 <= n2; l2 += 2) out.basis.push_back({bundle, n2, l2});
    const int n = out.dim();
    const int half = lay.dim;

    out.A = MatrixXd::Zero(n, n);
    out.B = MatrixXd::Zero(n, n);
    out.Bstar = MatrixXd::Zero(n, n);
    const double q = to_double(out.q);
    const double kappa = 1 / (1 + q * q);
    const double c_target = to_double(out.c);
    bool converged = true;
    double worst = 0;
    for (int b = 0; b < 2; ++b) {
        const int bundle = b == 0 ? 1 : -1;
        const Factors f = column_factors(pw, lay, bundle);
        Relations rel{lay, f, {}, q, kappa};
        for (int j = 0; j < 3; ++j)
            for (const auto& [key, m] : f[j])
                if (std::find(rel.pairs.begin(), rel.pairs.end(), key) == rel.pairs.end()) rel.pairs.push_back(key);
        std::sort(rel.pairs.begin(), rel.pairs.end());
        VectorXd r = VectorXd::Ones(static_cast<Eigen::Index>(rel.pairs.size()));
        Functor fun{rel};
        VectorXd fvec(fun.values());
        for (int step = 1; step <= opts.continuation_steps; ++step) {
            rel.c = c_target * step / opts.continuation_steps;
            Eigen::LevenbergMarquardt<Functor> lm(fun);
            lm.parameters.xtol = 1e-15;
            lm.parameters.ftol = 1e-15;
            lm.parameters.maxfev = 2000;
            lm.minimize(r);
        }
        fun(r, fvec);
        worst = std::max(worst, max_abs(fvec));
        converged = converged && max_abs(fvec) < opts.tolerance;
        auto x = rel.operators(r);
        const int at = b * half;
        out.A.block(at, at, half, half) = x[1] + kappa * MatrixXd::Identity(half, half);
        out.B.block(at, at, half, half) = x[0];
        out.Bstar.block(at, at, half, half) = x[2];
        for (std::size_t p = 0; p < rel.pairs.size(); ++p) out.reduced[b][rel.pairs[p]] = r[static_cast<Eigen::Index>(p)];
    }
    out.checks.title = "truncated Podles triple";
    out.checks.add("continuation_converged", converged, format_double(worst));

    // D e^n_{+-,l} = (c1 n + c2) e^n_{-+,l}
    out.D = MatrixXd::Zero(n, n);
    for (int i = 0; i < half; ++i) {
        const auto& x = out.basis[i];
        Rational value = c1 * Rational(x.n2, 2) + c2;
        value.canonicalize();
        out.D(i, i + half) = out.D(i + half, i) = to_double(value);
    }
    for (int n2 : lay.levels)
        for (int sign : {1, -1}) {
            Rational value = sign * (c1 * Rational(n2, 2) + c2);
            value.canonicalize();
            out.isotypic.push_back({n2, value, n2 + 1});
        }
    out.checks.add("dirac_selfadjoint", (out.D - out.D.transpose()).norm() == 0);
    bool block_scalar = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out.D(i, j) != 0 && (out.basis[i].n2 != out.basis[j].n2 || out.basis[i].l2 != out.basis[j].l2))
                block_scalar = false;
    out.checks.add("dirac_commutes_with_corepresentation", block_scalar);

    // literal compression of the corrected generators onto the +-1/2 rows
    MatrixXd LA = MatrixXd::Zero(n, n), LB = MatrixXd::Zero(n, n), LBs = MatrixXd::Zero(n, n);
    const Element<Surd> bstar = ring.adjoint(gens.B);
    for (int col = 0; col < n; ++col) {
        const auto& in = out.basis[col];
        const PWIndex idx{in.n2, in.bundle, in.l2};
        for (auto [target, elem] : {std::pair{&LA, &gens.A}, std::pair{&LB, &gens.B}, std::pair{&LBs, &bstar}})
            for (const auto& [o, v] : act_on_e(pw, *elem, idx)) {
                if ((o.k2 != 1 && o.k2 != -1) || o.n2 > max_n2) continue;
                (*target)(out.position({o.k2, o.n2, o.l2}), col) += v;
            }
    }
    std::vector<int> interior;
    for (int i = 0; i < n; ++i)
        if (out.basis[i].n2 <= max_n2 - 2) interior.push_back(i);
    out.literal_residual = relation_residuals(LA, LB, LBs, q, c_target, interior).max();
    return out;
}

}  // namespace qd::suq2
