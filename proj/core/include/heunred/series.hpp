#pragma once

#include <complex>
#include <vector>

#include "heunred/classifier.hpp"
#include "heunred/equations.hpp"
#include "heunred/poly.hpp"

namespace heunred {

/// Truncated power series around 0: coefficients c[0..N].
template <typename C>
struct PowerSeries {
    std::vector<C> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    C eval(const C& t) const {
        C acc{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
        return acc;
    }
};

using ComplexSeries = PowerSeries<std::complex<double>>;
using ExactSeries = PowerSeries<Surd>;

/// Local Heun function coefficients from the three-term recurrence obtained
/// by resubstituting sum c_n t^n into the equation:
///   d (n+1)(n+gamma) c_{n+1}
///     = { n [ (n-1+gamma)(1+d) + d delta + epsilon ] + q } c_n
///       - (n-1+alpha)(n-1+beta) c_{n-1},          c_0 = 1, c_{-1} = 0.
/// The recurrence itself is certified by the resubstitution oracle in the
/// test suite before any identity test relies on it.
ComplexSeries heun_series(const HeunEquation& eq, int N);
ExactSeries heun_series_exact(const HeunEquation& eq, int N);

/// Gauss series c_{n+1}/c_n = (a+n)(b+n) / ((c+n)(1+n)).
ComplexSeries gauss_series(const GaussEquation& g, int N);
ExactSeries gauss_series_exact(const GaussEquation& g, int N);

/// outer(inner(t)) truncated at order N; inner must vanish at 0.
ComplexSeries compose_into_series(const ComplexSeries& outer, const Poly& inner, int N);
ExactSeries compose_into_series_exact(const ExactSeries& outer, const Poly& inner, int N);

/// Coefficientwise and pointwise comparison of Hl against 2F1 composed with
/// the reduction's map.
struct SeriesMismatchReport {
    double max_coeff_mismatch = 0.0;  // relative to max(1, |c_n|)
    int worst_index = -1;
    double max_point_mismatch = 0.0;  // |Hl(t) - 2F1(R(t))| at |t| = 1/10
    double tolerance = 0.0;
    bool pass = false;
};

SeriesMismatchReport verify_reduction_series(const HeunEquation& eq, const Reduction& red, int N,
                                             double tol);

/// Analytic factor of the second local solution plus its branch-prefactor
/// exponent (1-gamma resp. 1-c); evaluation multiplies by the principal
/// branch of t^exponent.
struct TildeSeriesResult {
    ComplexSeries series;
    Surd prefactor_exponent;
};
TildeSeriesResult tilde_series(const HeunEquation& eq, int N);
TildeSeriesResult tilde_series(const GaussEquation& g, int N);

/// base^expo with the principal branch of the logarithm.
std::complex<double> principal_pow(std::complex<double> base, std::complex<double> expo);

} // namespace heunred
