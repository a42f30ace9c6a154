#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "heunred/surd.hpp"

namespace heunred {

/// Dense univariate polynomial with exact Surd coefficients, stored in
/// ascending degree with a nonzero leading coefficient (the zero polynomial
/// is the empty coefficient list, degree -1).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Surd> ascending) : c_(ascending) { trim(); }
    explicit Poly(std::vector<Surd> ascending) : c_(std::move(ascending)) { trim(); }
    Poly(const Surd& constant) : c_{constant} { trim(); }
    Poly(long constant) : c_{Surd(constant)} { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    /// The monomial t.
    static Poly t() { return Poly{Surd(0), Surd(1)}; }
    /// t - r.
    static Poly linear_root(const Surd& r) { return Poly{-r, Surd(1)}; }
    static Poly from_roots(const std::vector<Surd>& roots);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Surd>& coefficients() const { return c_; }
    Surd coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Surd(0); }
    const Surd& leading() const;

    Surd operator()(const Surd& x) const;             // exact evaluation
    std::complex<double> operator()(std::complex<double> x) const;

    Poly derivative() const;
    /// this(inner(t)) expanded exactly.
    Poly compose(const Poly& inner) const;
    Poly pow(int n) const;
    /// Multiplicity of x as a root (0 when p(x) != 0), by derivative valuation.
    int root_multiplicity(const Surd& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Surd& s);

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(Poly x, const Poly& y) { return x *= y; }
    friend Poly operator*(Poly x, const Surd& s) { return x *= s; }
    friend Poly operator*(const Surd& s, Poly x) { return x *= s; }

    friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    /// Euclidean division: *this = q * div + r with deg r < deg div.
    void divmod(const Poly& div, Poly& q, Poly& r) const;
    /// Exact quotient; throws errc::internal when the division leaves a remainder.
    Poly exact_div(const Poly& div) const;
    Poly monic() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Surd> c_;
};

/// Monic gcd via the Euclidean algorithm over the surd field.
Poly poly_gcd(Poly a, Poly b);
bool is_squarefree(const Poly& p);

} // namespace heunred
