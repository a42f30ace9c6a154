#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "heunred/error.hpp"

namespace heunred {

/// Exact rational with arbitrary-precision numerator/denominator,
/// kept in lowest terms with positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);
bool is_integer(const Rational& r);
/// Exact rational cube root if one exists.
bool rational_cbrt(const Rational& r, Rational& out);

/// An element a + b*sqrt(-m) of the imaginary quadratic field Q(sqrt(-m)),
/// m in {1, 2, 3, 15}.  Pure rationals carry b = 0 and the neutral tag m = 1.
///
/// Arithmetic between two surds is defined when either operand is rational
/// or both share the same radicand; anything else throws
/// errc::incompatible_radicand.  The classification never needs a biquadratic
/// field, so a tower of extensions is deliberately not supported.
class Surd {
public:
    Surd() : a_(0), b_(0), m_(1) {}
    Surd(long v) : a_(v, 1), b_(0), m_(1) {}
    Surd(const Rational& a) : a_(a), b_(0), m_(1) {}
    Surd(const Rational& a, const Rational& b, int m);

    /// sqrt(-m) itself.
    static Surd root(int m) { return Surd(Rational(0), Rational(1), m); }
    static bool valid_radicand(int m) { return m == 1 || m == 2 || m == 3 || m == 15; }

    const Rational& re_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    int radicand() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }
    /// True for rational values n with n <= bound and n integral.
    bool is_nonpositive_integer() const;
    bool is_positive_integer() const;

    Surd conj() const { return Surd(a_, -b_, m_); }
    /// a^2 + m b^2, the field norm (always rational, zero iff *this is).
    Rational norm() const { return a_ * a_ + m_ * b_ * b_; }
    Surd inverse() const;

    Surd operator-() const { return Surd(-a_, -b_, m_); }
    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);

    friend Surd operator+(Surd x, const Surd& y) { return x += y; }
    friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
    friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
    friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

    friend struct SurdLexOrder;

    std::complex<double> to_complex() const;

    /// Grammar: "<rat>" or "<rat>+<rat>*sqrt(-<m>)" (also "-" for negative
    /// surd parts), rationals as "num" or "num/den".
    std::string str() const;
    static Surd parse(const std::string& text);

private:
    // Shared-field check; returns the merged radicand.
    static int merge_radicand(const Surd& x, const Surd& y);
    void normalize_tag() {
        if (b_ == 0) m_ = 1;
    }

    Rational a_, b_;
    int m_;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

/// Total order for deterministic sorting: lexicographic on (a, b, m).
/// Not the complex modulus order.
struct SurdLexOrder {
    bool operator()(const Surd& x, const Surd& y) const;
};
bool lex_less(const Surd& x, const Surd& y);

inline Surd operator+(const Surd& x, long y) { return x + Surd(y); }
inline Surd operator-(const Surd& x, long y) { return x - Surd(y); }
inline Surd operator*(const Surd& x, long y) { return x * Surd(y); }
inline Surd operator/(const Surd& x, long y) { return x / Surd(y); }
inline Surd operator+(long x, const Surd& y) { return Surd(x) + y; }
inline Surd operator-(long x, const Surd& y) { return Surd(x) - y; }
inline Surd operator*(long x, const Surd& y) { return Surd(x) * y; }

} // namespace heunred
