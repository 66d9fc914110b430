#include "qdeform/scalar/surd.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace qd {

Surd::Surd(Rational a, Rational b, Rational radicand) : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
    if (sgn(r_) < 0) throw std::domain_error("negative radicand");
    normalize();
}

Surd Surd::sqrt(const Rational& radicand) { return Surd(0, 1, radicand); }

void Surd::normalize() {
    if (sgn(b_) == 0) {
        r_ = 0;
        return;
    }
    Rational root;
    if (rational_sqrt(r_, root)) {
        a_ += b_ * root;
        b_ = 0;
        r_ = 0;
    }
}

const Rational& Surd::common_radicand(const Surd& o) const {
    if (is_rational()) return o.r_;
    if (o.is_rational() || r_ == o.r_) return r_;
    throw std::invalid_argument("incompatible radicands " + to_string(r_) + " and " + to_string(o.r_));
}

Surd& Surd::operator+=(const Surd& o) {
    Rational r = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    r_ = r;
    normalize();
    return *this;
}

Surd& Surd::operator*=(const Surd& o) {
    Rational r = common_radicand(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * r;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    r_ = r;
    normalize();
    return *this;
}

Surd Surd::inverse() const {
    Rational norm = a_ * a_ - b_ * b_ * r_;
    if (sgn(norm) == 0) throw std::domain_error("division by zero surd");
    return Surd(a_ / norm, -b_ / norm, r_);
}

int Surd::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * r_));
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

double Surd::value() const { return a_.get_d() + b_.get_d() * std::sqrt(r_.get_d()); }

std::string Surd::str() const {
    if (is_rational()) return to_string(a_);
    std::string rad = to_string(b_) + "*sqrt(" + to_string(r_) + ")";
    if (sgn(a_) == 0) return rad;
    return to_string(a_) + (sgn(b_) > 0 ? "+" : "") + rad;
}

Surd parse_surd(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty surd");
    Surd total;
    std::size_t start = 0;
    int depth = 0;
    auto add_term = [&](std::string_view term) {
        if (term.empty() || term == "+" || term == "-") throw std::invalid_argument("bad surd: " + s);
        auto at = term.find("sqrt(");
        if (at == std::string_view::npos) {
            total += Surd(parse_rational(term));
            return;
        }
        if (term.back() != ')') throw std::invalid_argument("bad surd: " + s);
        Rational radicand = parse_rational(term.substr(at + 5, term.size() - at - 6));
        std::string_view coef = term.substr(0, at);
        if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
        Rational k = 1;
        if (coef == "-") k = -1;
        else if (!coef.empty() && coef != "+") k = parse_rational(coef);
        total += Surd(0, k, radicand);
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i > start && (s[i] == '+' || s[i] == '-') && s[i - 1] != '*' && s[i - 1] != '/') {
            add_term(std::string_view(s).substr(start, i - start));
            start = i;
        }
    }
    add_term(std::string_view(s).substr(start));
    return total;
}

}  // namespace qd
