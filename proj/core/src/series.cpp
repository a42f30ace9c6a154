#include "heunred/series.hpp"

#include <cmath>

#include "heunred/rational_map.hpp"

namespace heunred {

namespace {

template <typename C>
struct CoeffOps;

template <>
struct CoeffOps<std::complex<double>> {
    static std::complex<double> from_surd(const Surd& s) { return s.to_complex(); }
    static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
};

template <>
struct CoeffOps<Surd> {
    static Surd from_surd(const Surd& s) { return s; }
    static Surd from_int(long v) { return Surd(v); }
};

template <typename C>
PowerSeries<C> heun_series_impl(const HeunEquation& eq, int N) {
    if (eq.gamma().is_nonpositive_integer())
        raise(errc::undefined_hl, "Hl undefined: gamma is a nonpositive integer");
    if (N < 0) raise(errc::malformed_input, "negative series order");

    using Ops = CoeffOps<C>;
    C d = Ops::from_surd(eq.d());
    C q = Ops::from_surd(eq.q());
    C alpha = Ops::from_surd(eq.alpha());
    C beta = Ops::from_surd(eq.beta());
    C gamma = Ops::from_surd(eq.gamma());
    C delta = Ops::from_surd(eq.delta());
    C epsilon = Ops::from_surd(eq.epsilon());
    C one = Ops::from_int(1);

    PowerSeries<C> s;
    s.coeffs.resize(static_cast<std::size_t>(N) + 1, C{});
    s.coeffs[0] = one;
    C prev{};  // c_{-1}
    for (int n = 0; n < N; ++n) {
        C cn = s.coeffs[static_cast<std::size_t>(n)];
        C nn = Ops::from_int(n);
        C mid = (nn * ((nn - one + gamma) * (one + d) + d * delta + epsilon) + q) * cn;
        C low = (nn - one + alpha) * (nn - one + beta) * prev;
        C den = d * Ops::from_int(n + 1) * (nn + gamma);
        s.coeffs[static_cast<std::size_t>(n) + 1] = (mid - low) / den;
        prev = cn;
    }
    return s;
}

template <typename C>
PowerSeries<C> gauss_series_impl(const GaussEquation& g, int N) {
    if (g.c.is_nonpositive_integer())
        raise(errc::undefined_hl, "2F1 undefined: c is a nonpositive integer");
    if (N < 0) raise(errc::malformed_input, "negative series order");

    using Ops = CoeffOps<C>;
    C a = Ops::from_surd(g.a);
    C b = Ops::from_surd(g.b);
    C c = Ops::from_surd(g.c);

    PowerSeries<C> s;
    s.coeffs.resize(static_cast<std::size_t>(N) + 1, C{});
    s.coeffs[0] = Ops::from_int(1);
    for (int n = 0; n < N; ++n) {
        C nn = Ops::from_int(n);
        s.coeffs[static_cast<std::size_t>(n) + 1] =
            s.coeffs[static_cast<std::size_t>(n)] * (a + nn) * (b + nn) /
            ((c + nn) * Ops::from_int(n + 1));
    }
    return s;
}

template <typename C>
PowerSeries<C> compose_impl(const PowerSeries<C>& outer, const Poly& inner, int N) {
    if (!inner.is_zero() && !inner.coeff(0).is_zero())
        raise(errc::nonzero_constant_term, "series composition needs inner(0) = 0");
    using Ops = CoeffOps<C>;
    if (inner.is_zero()) {
        PowerSeries<C> out;
        out.coeffs.assign(static_cast<std::size_t>(N) + 1, C{});
        if (!outer.coeffs.empty()) out.coeffs[0] = outer.coeffs[0];
        return out;
    }
    std::vector<C> in(static_cast<std::size_t>(inner.degree()) + 1);
    for (int k = 0; k <= inner.degree(); ++k)
        in[static_cast<std::size_t>(k)] = Ops::from_surd(inner.coeff(k));

    auto mul_trunc = [&](const std::vector<C>& x, const std::vector<C>& y) {
        std::vector<C> r(std::min<std::size_t>(x.size() + y.size() - 1,
                                               static_cast<std::size_t>(N) + 1),
                         C{});
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i >= r.size()) break;
            for (std::size_t j = 0; j < y.size() && i + j < r.size(); ++j)
                r[i + j] = r[i + j] + x[i] * y[j];
        }
        return r;
    };

    // Horner: acc = acc * inner + outer_k, truncated at N.
    std::vector<C> acc{C{}};
    for (auto it = outer.coeffs.rbegin(); it != outer.coeffs.rend(); ++it) {
        acc = mul_trunc(acc, in);
        acc[0] = acc[0] + *it;
    }
    acc.resize(static_cast<std::size_t>(N) + 1, C{});
    PowerSeries<C> out;
    out.coeffs = std::move(acc);
    return out;
}

} // namespace

ComplexSeries heun_series(const HeunEquation& eq, int N) {
    return heun_series_impl<std::complex<double>>(eq, N);
}
ExactSeries heun_series_exact(const HeunEquation& eq, int N) {
    return heun_series_impl<Surd>(eq, N);
}
ComplexSeries gauss_series(const GaussEquation& g, int N) {
    return gauss_series_impl<std::complex<double>>(g, N);
}
ExactSeries gauss_series_exact(const GaussEquation& g, int N) {
    return gauss_series_impl<Surd>(g, N);
}
ComplexSeries compose_into_series(const ComplexSeries& outer, const Poly& inner, int N) {
    return compose_impl<std::complex<double>>(outer, inner, N);
}
ExactSeries compose_into_series_exact(const ExactSeries& outer, const Poly& inner, int N) {
    return compose_impl<Surd>(outer, inner, N);
}

SeriesMismatchReport verify_reduction_series(const HeunEquation& eq, const Reduction& red, int N,
                                             double tol) {
    if (eq.gamma().is_nonpositive_integer() || red.gauss.c.is_nonpositive_integer())
        raise(errc::undefined_side, "one side of the identity is undefined");

    // Coefficients come from the exact engine when the data sits in one
    // field (it always does for catalogue reductions): monomial expansion of
    // R^k in doubles cancels catastrophically by order 40, far above the
    // comparison tolerance.
    ComplexSeries lhs, rhs;
    ComplexSeries f = gauss_series(red.gauss, N);
    bool exact_ok = true;
    try {
        ExactSeries lhs_e = heun_series_exact(eq, N);
        ExactSeries rhs_e =
            compose_into_series_exact(gauss_series_exact(red.gauss, N), red.R, N);
        lhs.coeffs.reserve(lhs_e.coeffs.size());
        rhs.coeffs.reserve(rhs_e.coeffs.size());
        for (const Surd& s : lhs_e.coeffs) lhs.coeffs.push_back(s.to_complex());
        for (const Surd& s : rhs_e.coeffs) rhs.coeffs.push_back(s.to_complex());
    } catch (const error&) {
        exact_ok = false;
    }
    if (!exact_ok) {
        lhs = heun_series(eq, N);
        rhs = compose_into_series(f, red.R, N);
    }

    SeriesMismatchReport rep;
    rep.tolerance = tol;
    for (int n = 0; n <= N; ++n) {
        double denom = std::max(1.0, std::abs(lhs.coeffs[static_cast<std::size_t>(n)]));
        double diff = std::abs(lhs.coeffs[static_cast<std::size_t>(n)] -
                               rhs.coeffs[static_cast<std::size_t>(n)]) /
                      denom;
        if (diff > rep.max_coeff_mismatch) {
            rep.max_coeff_mismatch = diff;
            rep.worst_index = n;
        }
    }
    for (int j = 0; j < 10; ++j) {
        double angle = 2.0 * M_PI * j / 10.0 + 0.05;
        std::complex<double> t = std::polar(0.1, angle);
        std::complex<double> left = lhs.eval(t);
        // Two-route evaluation where the 2F1 series converges at w = R(t);
        // composite catalogue maps push |R| toward or past 1 on this circle, where
        // the truncated composition is the only convergent route.
        std::complex<double> w = RationalMap(red.R).eval(t);
        std::complex<double> right = std::abs(w) <= 0.5 ? f.eval(w) : rhs.eval(t);
        rep.max_point_mismatch = std::max(rep.max_point_mismatch, std::abs(left - right));
    }
    rep.pass = rep.max_coeff_mismatch <= tol && rep.max_point_mismatch <= tol;
    return rep;
}

TildeSeriesResult tilde_series(const HeunEquation& eq, int N) {
    TildeHeun th = tilde_parameters(eq);
    return {heun_series(th.equation, N), th.prefactor_exponent};
}

TildeSeriesResult tilde_series(const GaussEquation& g, int N) {
    TildeGauss tg = tilde_gauss_parameters(g);
    return {gauss_series(tg.equation, N), tg.prefactor_exponent};
}

std::complex<double> principal_pow(std::complex<double> base, std::complex<double> expo) {
    if (expo == std::complex<double>(0.0, 0.0)) return {1.0, 0.0};
    return std::exp(expo * std::log(base));
}

} // namespace heunred
