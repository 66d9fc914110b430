#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "qdeform/scalar/rational.hpp"

namespace qd {

// Real quadratic field Q(sqrt3): a + b*sqrt3.
struct Q3 {
    Rational a, b;

    Q3() = default;
    Q3(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    Q3(int a_) : a(a_), b(0) {}

    Q3& operator+=(const Q3& o) { a += o.a; b += o.b; return *this; }
    Q3& operator-=(const Q3& o) { a -= o.a; b -= o.b; return *this; }
    Q3& operator*=(const Q3& o);
    Q3 operator-() const { return {-a, -b}; }

    Q3 inverse() const;
    int sign() const;  // exact sign of a + b*sqrt3
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    double value() const;
    std::string str() const;

    friend Q3 operator+(Q3 x, const Q3& y) { return x += y; }
    friend Q3 operator-(Q3 x, const Q3& y) { return x -= y; }
    friend Q3 operator*(Q3 x, const Q3& y) { return x *= y; }
    friend bool operator==(const Q3& x, const Q3& y) { return x.a == y.a && x.b == y.b; }
};

// Exact complex scalars in Q(i, sqrt3) = Q(zeta_12): every root of unity of
// order dividing 12 is representable.
class Cyclo {
  public:
    Cyclo() = default;
    Cyclo(int v) : re_(v) {}
    Cyclo(Rational v) : re_(std::move(v)) {}
    Cyclo(Q3 re, Q3 im = {}) : re_(std::move(re)), im_(std::move(im)) {}

    static Cyclo i() { return Cyclo(Q3{}, Q3{1}); }
    static Cyclo sqrt3() { return Cyclo(Q3{0, 1}); }
    // exp(2 pi i k / n) for n dividing 12.
    static Cyclo root_of_unity(int k, int n);

    const Q3& re() const { return re_; }
    const Q3& im() const { return im_; }

    Cyclo& operator+=(const Cyclo& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Cyclo& operator-=(const Cyclo& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
    Cyclo operator-() const { return Cyclo(-re_, -im_); }

    Cyclo inverse() const;
    Cyclo conj() const { return Cyclo(re_, -im_); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    std::string str() const;

    friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
    friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
    friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
    friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
    friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  private:
    Q3 re_, im_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }
inline Cyclo conj(const Cyclo& c) { return c.conj(); }
// Positive real in the field ordering (used by exact LDL*).
inline bool is_positive(const Cyclo& c) { return c.is_real() && c.re().sign() > 0; }

// Parses "p/r", "p/r*sqrt3", "sqrt3/2", "-1/2+1/2*sqrt3" and plain decimals.
Q3 parse_q3(std::string_view text);

}  // namespace qd
