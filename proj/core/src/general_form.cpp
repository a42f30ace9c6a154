#include "heunred/general_form.hpp"

#include "heunred/verifier.hpp"

namespace heunred {

NaturalGeneralHeun::NaturalGeneralHeun(const Surd& d1_, const Surd& d2_, const Surd& d3_,
                                       const Surd& qprime_, const Surd& alpha_, const Surd& beta_,
                                       const Surd& gamma_, const Surd& delta_)
    : d1(d1_), d2(d2_), d3(d3_), alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_),
      qprime(qprime_) {
    if (d1 == d2 || d1 == d3 || d2 == d3)
        raise(errc::coincident_points, "singular points must be pairwise distinct");
}

GeneralHeun::GeneralHeun(const Surd& d1_, const Surd& d2_, const Surd& d3_, const Point& d4_,
                         const Surd& qdoubleprime_, const Surd& alpha_, const Surd& beta_,
                         const Surd& gamma_, const Surd& delta_)
    : d1(d1_), d2(d2_), d3(d3_), d4(d4_), alpha(alpha_), beta(beta_), gamma(gamma_),
      delta(delta_), qdoubleprime(qdoubleprime_) {
    if (d1 == d2 || d1 == d3 || d2 == d3)
        raise(errc::coincident_points, "singular points must be pairwise distinct");
    if (d4.is_finite() && (d4.value() == d1 || d4.value() == d2 || d4.value() == d3))
        raise(errc::coincident_points, "singular points must be pairwise distinct");
}

namespace {

// Pull an ODE u'' + P(s) u' + Q(s) u = 0 through t = M(s): with s = W(t),
// the new coefficients are P~ = W' P(W) - W''/W' and Q~ = W'^2 Q(W).
struct PulledBack {
    RationalMap P, Q;
};

PulledBack pullback_ode(const RationalMap& P, const RationalMap& Q, const Mobius& M) {
    Mobius Winv = M.inverse();
    RationalMap W = RationalMap::from_mobius(Winv);
    RationalMap Wd = W.derivative();
    RationalMap Pt = Wd * P.compose(W) - W.derivative().derivative() / Wd;
    RationalMap Qt = Wd * Wd * Q.compose(W);
    return {Pt, Qt};
}

// Read the canonical accessory parameter off the pulled-back u-coefficient
// (alpha beta t - q)/(t(t-1)(t-d)), verifying both coefficients on the way.
HeunEquation canonical_from_pullback(const PulledBack& pb, const Surd& d, const Surd& alpha,
                                     const Surd& beta, const Surd& gamma, const Surd& delta,
                                     const Surd& epsilon) {
    RationalMap t(Poly::t());
    RationalMap one(1);
    RationalMap cubic = t * (t - one) * (t - RationalMap(d));

    RationalMap numerator = pb.Q * cubic;
    if (!numerator.is_polynomial() || numerator.num().degree() > 1)
        raise(errc::internal, "pulled-back u-coefficient is not of Heun shape");
    Surd ab_check = numerator.num().coeff(1);
    if (ab_check != alpha * beta)
        raise(errc::internal, "pulled-back leading accessory coefficient mismatch");
    Surd q = -numerator.num().coeff(0);

    HeunEquation eq(d, q, alpha, beta, gamma, delta);
    if (eq.epsilon() != epsilon)
        raise(errc::internal, "exponent bookkeeping failed under normalization");

    RationalMap w_expected = RationalMap(gamma) / t + RationalMap(delta) / (t - one) +
                             RationalMap(epsilon) / (t - RationalMap(d));
    if (!rational_identity_equal(pb.P, w_expected))
        raise(errc::internal, "pulled-back u'-coefficient is not of Heun shape");
    return eq;
}

} // namespace

Normalized normalize_natural(const NaturalGeneralHeun& gh) {
    Surd h = gh.d2 - gh.d1;
    Mobius M = Mobius::affine(h.inverse(), -gh.d1 / h);  // t = (s - d1)/(d2 - d1)
    Surd d = M(Point(gh.d3)).value();

    RationalMap s(Poly::t());
    RationalMap P = RationalMap(gh.gamma) / (s - RationalMap(gh.d1)) +
                    RationalMap(gh.delta) / (s - RationalMap(gh.d2)) +
                    RationalMap(gh.epsilon()) / (s - RationalMap(gh.d3));
    RationalMap Q = RationalMap(Poly{-gh.qprime, gh.alpha * gh.beta}) /
                    ((s - RationalMap(gh.d1)) * (s - RationalMap(gh.d2)) *
                     (s - RationalMap(gh.d3)));

    HeunEquation eq = canonical_from_pullback(pullback_ode(P, Q, M), d, gh.alpha, gh.beta,
                                              gh.gamma, gh.delta, gh.epsilon());
    return {eq, M};
}

Normalized normalize_general(const GeneralHeun& gh) {
    if (gh.d4.is_infinity()) {
        NaturalGeneralHeun nat(gh.d1, gh.d2, gh.d3, gh.qdoubleprime, gh.alpha, gh.beta, gh.gamma,
                               gh.delta);
        return normalize_natural(nat);
    }
    const Surd& d4 = gh.d4.value();
    // t = (s - d1)(d2 - d4) / ((d2 - d1)(s - d4))
    Surd u = gh.d2 - d4, v = gh.d2 - gh.d1;
    Mobius M(u, -gh.d1 * u, v, -d4 * v);
    Surd d = M(Point(gh.d3)).value();

    RationalMap s(Poly::t());
    RationalMap P = RationalMap(gh.gamma) / (s - RationalMap(gh.d1)) +
                    RationalMap(gh.delta) / (s - RationalMap(gh.d2)) +
                    RationalMap(gh.epsilon()) / (s - RationalMap(gh.d3)) +
                    RationalMap(Surd(1) - gh.alpha - gh.beta) / (s - RationalMap(d4));
    Surd prod = (d4 - gh.d1) * (d4 - gh.d2) * (d4 - gh.d3);
    RationalMap quartic = (s - RationalMap(gh.d1)) * (s - RationalMap(gh.d2)) *
                          (s - RationalMap(gh.d3)) * (s - RationalMap(d4));
    RationalMap Q = (RationalMap(gh.alpha * gh.beta * prod) / (s - RationalMap(d4)) -
                     RationalMap(gh.qdoubleprime)) /
                    quartic;

    HeunEquation eq = canonical_from_pullback(pullback_ode(P, Q, M), d, gh.alpha, gh.beta,
                                              gh.gamma, gh.delta, gh.epsilon());
    return {eq, M};
}

namespace {

GeneralClassifyResult classify_normalized(const Normalized& norm) {
    GeneralClassifyResult out;
    ClassifyResult canon = classify(norm.equation);
    out.reason = canon.reason;
    for (Reduction& red : canon.reductions) {
        RationalMap original = RationalMap(red.R).compose_mobius(norm.map);
        out.reductions.push_back({std::move(red), norm.map, std::move(original)});
    }
    return out;
}

} // namespace

GeneralClassifyResult classify_general(const NaturalGeneralHeun& gh) {
    return classify_normalized(normalize_natural(gh));
}

GeneralClassifyResult classify_general(const GeneralHeun& gh) {
    return classify_normalized(normalize_general(gh));
}

LameResult lame_reduce(const LameAlgebraic& lame) {
    if (!lame.g2.is_zero())
        raise(errc::not_equianharmonic, "lame_reduce handles only g2 = 0");
    if (lame.g3.is_zero())
        raise(errc::excluded_value, "g3 must be nonzero (modular discriminant nonzero)");
    if (!lame.g3.is_rational())
        raise(errc::unsupported_invariants, "g3 must be rational");
    Rational r;
    if (!rational_cbrt(lame.g3.re_part() / 4, r))
        raise(errc::unsupported_invariants,
              "g3/4 must have a rational cube root so the critical values stay in the field");

    // Cube roots of g3/4: r, r w, r w^2 with w = (-1 + sqrt(-3))/2; order the
    // conjugate pair around the real root.
    Surd w3 = Surd::root(3);
    Surd omega = (Surd(-1) + w3) / Surd(2);
    Surd e1 = Surd(r) * omega;
    Surd e2 = Surd(r);
    Surd e3 = Surd(r) * omega * omega;

    LameResult res;
    res.critical_values = {e1, e2, e3};

    Surd half = Surd(make_rational(1, 2));
    Surd alpha = -lame.ell * half;
    Surd beta = (lame.ell + 1) * half;
    Surd qprime = lame.B / Surd(4);

    if ((alpha * beta).is_zero() && qprime.is_zero())
        raise(errc::trivial_equation,
              "ell(ell+1) = 0 with B = 0 is trivial; use the trivial-reduction enumeration");

    NaturalGeneralHeun bridged(e1, e2, e3, qprime, alpha, beta, half, half);
    res.bridged = bridged;

    GeneralClassifyResult cls = classify_general(bridged);
    if (!cls.reducible()) {
        res.reason = cls.reason;
        return res;
    }

    res.reducible = true;
    for (const GeneralReduction& gr : cls.reductions) {
        // The classifier normalizes t = 0 (i.e. s = e1) to z = 0, which is
        // the z = 1 - 4 s^3/g3 branch; emit it first, then its flip.
        res.reductions.push_back({gr.original_map, gr.canonical.gauss});
        GaussEquation flipped{gr.canonical.gauss.a, gr.canonical.gauss.b,
                              gr.canonical.gauss.a + gr.canonical.gauss.b -
                                  gr.canonical.gauss.c + 1};
        res.reductions.push_back({RationalMap(1) - gr.original_map, flipped});
    }
    return res;
}

} // namespace heunred
