#include "heunred/equations.hpp"

namespace heunred {

Surd ExponentPair::other(const Surd& v) const {
    if (e1 == v) return e2;
    if (e2 == v) return e1;
    raise(errc::internal, "exponent pair does not contain the requested value");
}

HeunEquation::HeunEquation(const Surd& d, const Surd& q, const Surd& alpha, const Surd& beta,
                           const Surd& gamma, const Surd& delta)
    : d_(d), q_(q), alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
    if (d_ == Surd(0) || d_ == Surd(1))
        raise(errc::excluded_value, "Heun singular point d must avoid 0 and 1");
    epsilon_ = alpha_ + beta_ - gamma_ - delta_ + 1;
}

Surd HeunEquation::p() const {
    Surd ab = alpha_beta();
    if (ab.is_zero()) raise(errc::division_by_zero, "q/(alpha beta) with alpha beta = 0");
    return q_ / ab;
}

ExponentPair exponents_at(const HeunEquation& eq, const Point& pt) {
    if (pt.is_infinity()) return {eq.alpha(), eq.beta()};
    const Surd& v = pt.value();
    if (v == Surd(0)) return {Surd(0), Surd(1) - eq.gamma()};
    if (v == Surd(1)) return {Surd(0), Surd(1) - eq.delta()};
    if (v == eq.d()) return {Surd(0), Surd(1) - eq.epsilon()};
    return {Surd(0), Surd(1)};
}

ExponentPair exponents_at(const GaussEquation& eq, const Point& pt) {
    if (pt.is_infinity()) return {eq.a, eq.b};
    const Surd& v = pt.value();
    if (v == Surd(0)) return {Surd(0), Surd(1) - eq.c};
    if (v == Surd(1)) return {Surd(0), eq.c - eq.a - eq.b};
    return {Surd(0), Surd(1)};
}

bool is_trivial(const HeunEquation& eq) {
    return eq.alpha_beta().is_zero() && eq.q().is_zero();
}

std::vector<Point> degenerate_singularities(const HeunEquation& eq) {
    std::vector<Point> lost;
    Surd ab = eq.alpha_beta();
    if (eq.epsilon().is_zero() && eq.q() == ab * eq.d()) lost.emplace_back(eq.d());
    if (eq.delta().is_zero() && eq.q() == ab) lost.emplace_back(Surd(1));
    if (eq.gamma().is_zero() && eq.q().is_zero()) lost.emplace_back(Surd(0));
    return lost;
}

InvertedD identity_invert_d(const HeunEquation& eq) {
    Surd inv_d = Surd(1) / eq.d();
    HeunEquation out(inv_d, eq.q() / eq.d(), eq.alpha(), eq.beta(), eq.gamma(),
                     eq.alpha() + eq.beta() - eq.gamma() - eq.delta() + 1);
    bool defined = !eq.gamma().is_nonpositive_integer();
    return {out, Mobius::affine(inv_d, Surd(0)), defined};
}

TildeHeun tilde_parameters(const HeunEquation& eq) {
    if (eq.gamma().is_positive_integer())
        raise(errc::undefined_second_solution,
              "tilde-Hl undefined for gamma = 1, 2, 3, ... (gamma = " + eq.gamma().str() + ")");
    Surd one_minus_gamma = Surd(1) - eq.gamma();
    Surd q_tilde = eq.q() + one_minus_gamma * (eq.epsilon() + eq.d() * eq.delta());
    HeunEquation out(eq.d(), q_tilde, eq.alpha() - eq.gamma() + 1, eq.beta() - eq.gamma() + 1,
                     Surd(2) - eq.gamma(), eq.delta());
    return {out, one_minus_gamma};
}

EulerFlip euler_flip(const GaussEquation& g) {
    return {{g.c - g.a, g.c - g.b, g.c}, g.c - g.a - g.b};
}

TildeGauss tilde_gauss_parameters(const GaussEquation& g) {
    if (g.c.is_positive_integer())
        raise(errc::undefined_second_solution,
              "tilde-2F1 undefined for c = 1, 2, 3, ... (c = " + g.c.str() + ")");
    return {{g.a - g.c + 1, g.b - g.c + 1, Surd(2) - g.c}, Surd(1) - g.c};
}

} // namespace heunred
