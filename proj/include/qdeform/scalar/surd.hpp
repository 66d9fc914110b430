#pragma once

#include <string>
#include <string_view>

#include "qdeform/scalar/rational.hpp"

namespace qd {

// a + b*sqrt(r) for a fixed positive rational r; r = 0 marks a plain rational.
// Values with different radicands only combine when one side is rational.
class Surd {
  public:
    Surd() = default;
    Surd(int v) : a_(v) {}
    Surd(Rational v) : a_(std::move(v)) {}
    Surd(Rational a, Rational b, Rational radicand);

    static Surd sqrt(const Rational& radicand);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Rational& radicand() const { return r_; }

    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o) { return *this += -o; }
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }
    Surd operator-() const { Surd s = *this; s.a_ = -s.a_; s.b_ = -s.b_; return s; }

    Surd inverse() const;
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;
    double value() const;
    std::string str() const;

    friend Surd operator+(Surd x, const Surd& y) { return x += y; }
    friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
    friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
    friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
    friend bool operator==(const Surd& x, const Surd& y) { return (x - y).is_zero(); }

  private:
    void normalize();
    const Rational& common_radicand(const Surd& o) const;

    Rational a_, b_, r_;
};

inline bool is_zero(const Surd& s) { return s.is_zero(); }
inline Surd conj(const Surd& s) { return s; }
inline bool is_positive(const Surd& s) { return s.sign() > 0; }
inline Surd abs(const Surd& s) { return s.sign() < 0 ? -s : s; }

// Sums of terms "p/r" and "p/r*sqrt(m)", e.g. "7/6-1/6*sqrt(13)".
Surd parse_surd(std::string_view text);

}  // namespace qd
