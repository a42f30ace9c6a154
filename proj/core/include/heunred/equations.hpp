#pragma once

#include <vector>

#include "heunred/mobius.hpp"
#include "heunred/point.hpp"
#include "heunred/surd.hpp"

namespace heunred {

/// Unordered pair of characteristic exponents at a singular (or ordinary) point.
struct ExponentPair {
    Surd e1, e2;

    friend bool operator==(const ExponentPair& x, const ExponentPair& y) {
        return (x.e1 == y.e1 && x.e2 == y.e2) || (x.e1 == y.e2 && x.e2 == y.e1);
    }
    friend bool operator!=(const ExponentPair& x, const ExponentPair& y) { return !(x == y); }

    ExponentPair scaled(const Surd& factor) const { return {e1 * factor, e2 * factor}; }
    bool contains(const Surd& v) const { return e1 == v || e2 == v; }
    /// The partner of a contained value; both entries equal v is fine.
    Surd other(const Surd& v) const;
};

/// The Heun equation
///   u'' + (gamma/t + delta/(t-1) + epsilon/(t-d)) u'
///      + (alpha beta t - q) / (t (t-1) (t-d)) u = 0,
/// with singular points 0, 1, d, infinity.  epsilon is never stored
/// independently: it is derived from the Fuchs relation
/// alpha + beta + 1 = gamma + delta + epsilon at construction, which makes
/// violations unrepresentable.
class HeunEquation {
public:
    HeunEquation(const Surd& d, const Surd& q, const Surd& alpha, const Surd& beta,
                 const Surd& gamma, const Surd& delta);

    const Surd& d() const { return d_; }
    const Surd& q() const { return q_; }
    const Surd& alpha() const { return alpha_; }
    const Surd& beta() const { return beta_; }
    const Surd& gamma() const { return gamma_; }
    const Surd& delta() const { return delta_; }
    const Surd& epsilon() const { return epsilon_; }

    Surd alpha_beta() const { return alpha_ * beta_; }
    /// Normalized accessory parameter p = q / (alpha beta); defined only when
    /// alpha beta != 0.
    Surd p() const;

    friend bool operator==(const HeunEquation& x, const HeunEquation& y) {
        return x.d_ == y.d_ && x.q_ == y.q_ && x.alpha_ == y.alpha_ && x.beta_ == y.beta_ &&
               x.gamma_ == y.gamma_ && x.delta_ == y.delta_;
    }

private:
    Surd d_, q_, alpha_, beta_, gamma_, delta_, epsilon_;
};

/// The Gauss hypergeometric equation
///   y'' + (c/z + (a+b-c+1)/(z-1)) y' + a b / (z (z-1)) y = 0.
struct GaussEquation {
    Surd a, b, c;

    friend bool operator==(const GaussEquation& x, const GaussEquation& y) {
        return x.c == y.c && ((x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a));
    }
    friend bool operator!=(const GaussEquation& x, const GaussEquation& y) { return !(x == y); }
};

/// P-symbol column at a point; ordinary points have exponents (0, 1).
ExponentPair exponents_at(const HeunEquation& eq, const Point& pt);
ExponentPair exponents_at(const GaussEquation& eq, const Point& pt);

/// alpha beta = 0 and q = 0: solvable by quadratures, excluded from the
/// nontrivial classification.
bool is_trivial(const HeunEquation& eq);

/// Singular points that cease to be singular for special parameter values;
/// empty means the equation genuinely has four singular points.
std::vector<Point> degenerate_singularities(const HeunEquation& eq);

/// Hl(d, q; a, b, g, dl; t) = Hl(1/d, q/d; a, b, g, a+b-g-dl+1; t/d).
/// The identity's subject functions need gamma not a nonpositive integer;
/// the parameter map below is returned regardless, with hl_defined flagging it.
struct InvertedD {
    HeunEquation equation;
    Mobius scaling;  // t -> t/d
    bool hl_defined;
};
InvertedD identity_invert_d(const HeunEquation& eq);

/// Second local solution at t = 0: t^(1-gamma) Hl(d, q~; a-g+1, b-g+1, 2-g, dl; t)
/// with q~ = q + (1-gamma)(epsilon + d delta).  Defined for gamma not in {1, 2, 3, ...};
/// the prefactor uses the principal branch of t^(1-gamma).
struct TildeHeun {
    HeunEquation equation;
    Surd prefactor_exponent;  // 1 - gamma
};
TildeHeun tilde_parameters(const HeunEquation& eq);

/// Euler's transformation (a, b; c) -> (c-a, c-b; c), prefactor (1-z)^(c-a-b).
struct EulerFlip {
    GaussEquation equation;
    Surd prefactor_exponent;  // c - a - b
};
EulerFlip euler_flip(const GaussEquation& g);

/// Second local solution parameters for 2F1: z^(1-c) 2F1(a-c+1, b-c+1; 2-c; z).
struct TildeGauss {
    GaussEquation equation;
    Surd prefactor_exponent;  // 1 - c
};
TildeGauss tilde_gauss_parameters(const GaussEquation& g);

} // namespace heunred
