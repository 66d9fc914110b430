#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qd {

using Rational = mpq_class;

// Accepts "p", "p/r", "-p/r" and plain decimals such as "0.25" (read exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Rational pow(const Rational& base, int exponent);
double to_double(const Rational& r);

// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational conj(const Rational& r) { return r; }
inline bool is_positive(const Rational& r) { return sgn(r) > 0; }

// Half-integers are carried as doubled integers throughout (n2 = 2n).
std::string half_to_string(int doubled);
int parse_half(std::string_view text);

}  // namespace qd
