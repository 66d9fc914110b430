#include <stdexcept>

#include "qdeform/suq2/podles.hpp"

namespace qd::suq2 {

namespace {

void check_parameters(const Ring& r, const Rational& t) {
    if (sgn(r.q()) <= 0 || r.q() >= 1) throw std::invalid_argument("Podles sphere needs q in (0, 1)");
    if (sgn(t) <= 0 || t >= 1) throw std::invalid_argument("Podles sphere needs t in (0, 1)");
}

Element<Surd> lift(const Element<Rational>& x, const Surd& c) {
    Element<Surd> out;
    for (const auto& [m, v] : x) add_term(out, m, Surd(v) * c);
    return out;
}

Element<Surd> sum(std::initializer_list<Element<Surd>> parts) {
    Element<Surd> out;
    for (const auto& p : parts)
        for (const auto& [m, v] : p) add_term(out, m, v);
    return out;
}

Rational canonical(Rational x) {
    x.canonicalize();
    return x;
}

std::string residual_detail(const Element<Surd>& x) {
    if (x.empty()) return "exact";
    return std::to_string(x.size()) + " terms, e.g. " + x.begin()->second.str() + " " + x.begin()->first.str();
}

}  // namespace

PodlesData printed_podles_generators(const Ring& r, const Rational& t) {
    check_parameters(r, t);
    const Rational q = r.q(), p = q * q + 1;
    PodlesData out;
    out.variant = PodlesVariant::Printed;
    out.q = q;
    out.t = t;
    out.c = canonical(1 / t - t);
    out.rho2 = canonical(q * q * t * t / (p * p * (1 - t)));
    const Surd rho = Surd::sqrt(out.rho2);
    const Surd inv_t = Surd(canonical(1 / t));
    const Surd inv_p = Surd(canonical(1 / p));
    // (1 + t^-1 q gamma* alpha - t^-1 rho (1 - (1+q^2) gamma* gamma) + t^-1 gamma alpha*) / (1+q^2)
    out.A = sum({lift(r.word(""), inv_p), lift(r.word("Ga"), Surd(q) * inv_t * inv_p),
                 lift(r.word(""), -(inv_t * rho * inv_p)), lift(r.word("Gg"), inv_t * rho),
                 lift(r.word("gA"), inv_t * inv_p)});
    const Surd pre = Surd(canonical(1 / (t * p)));
    out.B = sum({lift(r.word("aa"), Surd(q) * pre), lift(r.word("ag"), rho * Surd(p) * pre),
                 lift(r.word("gg"), Surd(-q * q) * pre)});
    return out;
}

PodlesData corrected_podles_generators(const Ring& r, const Rational& t) {
    check_parameters(r, t);
    const Rational q = r.q(), p = q * q + 1;
    PodlesData out;
    out.variant = PodlesVariant::Corrected;
    out.q = q;
    out.t = t;
    out.c = canonical(1 / t - t);
    out.rho2 = canonical(q * q * t / (p * p * (1 - t * t)));
    const Surd rho = Surd::sqrt(out.rho2);
    const Surd pre = (rho * Surd(p)).inverse();
    out.A = sum({lift(r.word("Gg"), Surd(1)), lift(r.word("Ga"), Surd(q) * pre), lift(r.word("gA"), pre)});
    out.B = sum({lift(r.word("aa"), Surd(q) * pre), lift(r.word("ag"), Surd(1)), lift(r.word("gg"), Surd(-q * q) * pre)});
    return out;
}

Report check_podles_relations(const Ring& r, const PodlesData& p) {
    Report rep;
    rep.title = p.variant == PodlesVariant::Printed ? "Podles relations (printed generators)"
                                                    : "Podles relations (corrected generators)";
    const Rational q2 = p.q * p.q;
    const Element<Surd> one = lift(r.word(""), Surd(1));
    const Element<Surd> As = r.adjoint(p.A);
    const Element<Surd> Bs = r.adjoint(p.B);
    const Element<Surd> AA = r.mul(p.A, p.A);
    auto minus = [](const Element<Surd>& x, const Element<Surd>& y) {
        Element<Surd> out = x;
        for (const auto& [m, v] : y) add_term(out, m, -v);
        return out;
    };
    auto scaled = [](const Element<Surd>& x, const Rational& c) {
        Element<Surd> out;
        for (const auto& [m, v] : x) add_term(out, m, v * Surd(c));
        return out;
    };
    Element<Surd> r1 = minus(As, p.A);
    Element<Surd> r2 = minus(r.mul(p.A, p.B), scaled(r.mul(p.B, p.A), canonical(1 / q2)));
    Element<Surd> r3 = minus(r.mul(Bs, p.B), sum({p.A, scaled(AA, -1), scaled(one, p.c)}));
    Element<Surd> r4 = minus(r.mul(p.B, Bs), sum({scaled(p.A, q2), scaled(AA, -q2 * q2), scaled(one, p.c)}));
    rep.add("A_selfadjoint", r1.empty(), residual_detail(r1));
    rep.add("AB_q_commute", r2.empty(), residual_detail(r2));
    rep.add("BstarB", r3.empty(), residual_detail(r3));
    rep.add("BBstar", r4.empty(), residual_detail(r4));
    return rep;
}

Report check_spherical_generator(const PeterWeylBasis& pw, const PodlesData& p) {
    Report rep;
    rep.title = "spherical generator x0";
    const Ring& r = pw.ring();
    Element<Surd> x0;
    add_term(x0, unit_monomial, Surd(p.t));
    for (const auto& [m, v] : p.A) add_term(x0, m, v * Surd(-p.t * (1 + p.q * p.q)));
    rep.add("haar_mean_zero", haar(r, x0).is_zero());
    bool spin_one_column_zero = true;
    for (const auto& [idx, v] : pw.decompose(x0))
        if (idx.n2 != 2 || idx.l2 != 0) spin_one_column_zero = false;
    rep.add("in_span_d1_k0", spin_one_column_zero);
    return rep;
}

}  // namespace qd::suq2
