#include "qdeform/scalar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qd {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad rational: " + s);
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        value = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw std::invalid_argument("bad decimal: " + s);
        mpz_class n(std::string(ip) + std::string(fp), 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
        value = Rational(n, d);
    } else {
        if (!all_digits(body)) throw std::invalid_argument("bad rational: " + s);
        value = Rational(mpz_class(std::string(body), 10));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (is_zero(base)) throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result = 1, b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

double to_double(const Rational& r) { return r.get_d(); }

bool rational_sqrt(const Rational& r, Rational& root) {
    if (sgn(r) < 0) return false;
    mpz_class n = r.get_num(), d = r.get_den(), sn, sd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    root.canonicalize();
    return true;
}

std::string half_to_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

int parse_half(std::string_view text) {
    Rational r = parse_rational(text) * 2;
    if (r.get_den() != 1) throw std::invalid_argument("not a half-integer: " + std::string(text));
    return static_cast<int>(r.get_num().get_si());
}

}  // namespace qd
