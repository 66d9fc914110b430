#include "qdeform/scalar/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qd {

Q3& Q3::operator*=(const Q3& o) {
    if (sgn(b) == 0 && sgn(o.b) == 0) {
        a *= o.a;
        return *this;
    }
    Rational na = a * o.a + 3 * b * o.b;
    Rational nb = a * o.b + b * o.a;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

Q3 Q3::inverse() const {
    Rational norm = a * a - 3 * b * b;
    if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(sqrt3)");
    return {a / norm, -b / norm};
}

int Q3::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 3 b^2
    int c = cmp(Rational(a * a), Rational(3 * b * b));
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

double Q3::value() const { return a.get_d() + b.get_d() * std::sqrt(3.0); }

std::string Q3::str() const {
    if (sgn(b) == 0) return to_string(a);
    std::string rad = to_string(b) + "*sqrt3";
    if (sgn(a) == 0) return rad;
    return to_string(a) + (sgn(b) > 0 ? "+" : "") + rad;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        if (!im_.is_zero()) im_ *= o.re_;
        return *this;
    }
    if (im_.is_zero()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    Q3 r = re_ * o.re_ - im_ * o.im_;
    Q3 m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

Cyclo Cyclo::inverse() const {
    Q3 n = re_ * re_ + im_ * im_;
    if (n.is_zero()) throw std::domain_error("division by zero in Q(i,sqrt3)");
    Q3 ni = n.inverse();
    return Cyclo(re_ * ni, -(im_ * ni));
}

Cyclo Cyclo::root_of_unity(int k, int n) {
    if (n <= 0 || 12 % n != 0) throw std::invalid_argument("root of unity order must divide 12");
    int m = ((k * (12 / n)) % 12 + 12) % 12;  // exp(2 pi i m / 12)
    static const Rational h(1, 2);
    // cos and sin of m*30 degrees
    static const Q3 cosv[12] = {Q3(1), Q3(0, h), Q3(h), Q3(0), Q3(-h), Q3(0, -h),
                                Q3(-1), Q3(0, -h), Q3(-h), Q3(0), Q3(h), Q3(0, h)};
    static const Q3 sinv[12] = {Q3(0), Q3(h), Q3(0, h), Q3(1), Q3(0, h), Q3(h),
                                Q3(0), Q3(-h), Q3(0, -h), Q3(-1), Q3(0, -h), Q3(-h)};
    return Cyclo(cosv[m], sinv[m]);
}

std::string Cyclo::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = "(" + im_.str() + ")*i";
    if (re_.is_zero()) return imag;
    return re_.str() + "+" + imag;
}

Q3 parse_q3(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    Q3 total;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        bool negative = false;
        if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        Q3 value;
        if (auto at = term.find("sqrt3"); at != std::string::npos) {
            std::string before = term.substr(0, at), after = term.substr(at + 5);
            Rational coef = 1;
            if (!before.empty()) {
                if (before.back() != '*') throw std::invalid_argument("bad scalar term: " + term);
                before.pop_back();
                coef = parse_rational(before);
            }
            if (!after.empty()) {
                if (after[0] != '/') throw std::invalid_argument("bad scalar term: " + term);
                coef /= parse_rational(after.substr(1));
            }
            value = Q3(0, coef);
        } else {
            value = Q3(parse_rational(term));
        }
        total += negative ? -value : value;
    }
    return total;
}

}  // namespace qd
