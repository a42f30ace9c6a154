#pragma once

#include "heunred/mobius.hpp"
#include "heunred/point.hpp"
#include "heunred/poly.hpp"

namespace heunred {

/// Quotient of two exact polynomials, stored with common factors removed and
/// a monic denominator, so equal maps have equal representations.
class RationalMap {
public:
    RationalMap() : num_(Poly::zero()), den_(Poly::one()) {}
    RationalMap(Poly num, Poly den);
    RationalMap(const Poly& p) : num_(p), den_(Poly::one()) {}
    RationalMap(const Surd& s) : num_(Poly(s)), den_(Poly::one()) {}
    RationalMap(long v) : num_(Poly(v)), den_(Poly::one()) {}
    static RationalMap from_mobius(const Mobius& m) {
        return RationalMap(Poly{m.q(), m.p()}, Poly{m.s(), m.r()});
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }
    /// Degree as a map CP1 -> CP1.
    int map_degree() const { return std::max(num_.degree(), den_.degree()); }

    Point operator()(const Point& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    RationalMap derivative() const;
    /// this(inner(t)) as an exact rational map.
    RationalMap compose_mobius(const Mobius& inner) const;
    RationalMap compose(const RationalMap& inner) const;

    RationalMap operator-() const { return RationalMap(-num_, den_); }
    RationalMap& operator+=(const RationalMap& o);
    RationalMap& operator-=(const RationalMap& o);
    RationalMap& operator*=(const RationalMap& o);
    RationalMap& operator/=(const RationalMap& o);

    friend RationalMap operator+(RationalMap x, const RationalMap& y) { return x += y; }
    friend RationalMap operator-(RationalMap x, const RationalMap& y) { return x -= y; }
    friend RationalMap operator*(RationalMap x, const RationalMap& y) { return x *= y; }
    friend RationalMap operator/(RationalMap x, const RationalMap& y) { return x /= y; }

    friend bool operator==(const RationalMap& x, const RationalMap& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RationalMap& x, const RationalMap& y) { return !(x == y); }

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    Poly num_, den_;
};

/// Cross-multiplied exact identity check: f.num * g.den == g.num * f.den.
bool rational_identity_equal(const RationalMap& f, const RationalMap& g);

} // namespace heunred
