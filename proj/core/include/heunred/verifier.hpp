#pragma once

#include <optional>
#include <string>

#include "heunred/classifier.hpp"
#include "heunred/equations.hpp"
#include "heunred/rational_map.hpp"
#include "heunred/subcases.hpp"

namespace heunred {

/// Complete branching data of a rational map over the targets z = 0, 1, inf:
/// finite preimages per target plus the location of infinity's image.
struct MapStructure {
    SideStructure to0, to1, to_inf;  // finite preimages only
    int infinity_target = 2;         // 0, 1, 2 (= infinity), 3 (= ordinary value)
    int infinity_multiplicity = 0;
};

/// Structure of a catalogue reduction: R is a polynomial, so infinity maps to
/// infinity with full degree.
MapStructure structure_of_reduction(const Reduction& red);

/// Exact certification that the claimed structure is the complete branching
/// data of R: deflation of numerator, numerator-minus-denominator and
/// denominator against the claimed roots, plus the Riemann-Hurwitz count
/// that rules out critical points over other values.
bool validate_structure(const RationalMap& R, const MapStructure& ms);

/// Exponent condition at every point: exponents of t0, divided by the
/// multiplicity of t0 -> R(t0), equal the exponents of R(t0).  With hints the
/// check is exact; without, roots are found numerically (Aberth iteration)
/// and certified by cluster separation, throwing errc::uncertified_root when
/// separation fails.
bool maps_exponents(const RationalMap& R, const HeunEquation& heun, const GaussEquation& gauss,
                    const MapStructure* hints = nullptr);

/// Exact identity for the u'-coefficient of the pullback:
///   -R''/R' + R' (c/R + (a+b-c+1)/(R-1)) == gamma/t + delta/(t-1) + epsilon/(t-d).
bool verify_w(const RationalMap& R, const HeunEquation& heun, const GaussEquation& gauss);

struct UCheck {
    bool ok;      // ab R'^2 / (R(R-1)) == (alpha beta t - q) / (t(t-1)(t-d)) exactly
    int sign;     // sign s with U = s (alpha beta t - q)/(ab t(t-1)(t-d)); +1 when ok
};

/// Exact identity for the u-coefficient, via U = (R'/R)(S'/S), S = 1 - R.
UCheck verify_u(const RationalMap& R, const HeunEquation& heun, const GaussEquation& gauss);

/// Orders of the zeroes of R and S = 1 - R at the labeled points, extraction
/// of the remaining (all-double) zero sets, and the placement rules of the
/// nontrivial case.
struct ZeroStructureReport {
    int case_tag = 0;                   // 1: p singular, 2: p ordinary, 0: no p (alpha beta = 0)
    std::optional<Surd> p;
    int r_order_0 = 0, r_order_1 = 0, r_order_d = 0, r_order_p = 0;
    int s_order_0 = 0, s_order_1 = 0, s_order_d = 0, s_order_p = 0;
    Poly r_extra_double_factor;         // monic; roots are the extra double zeroes of R
    Poly s_extra_double_factor;
    bool extra_zeroes_all_double = false;
    bool placement_ok = false;          // double/triple placement per the case rules
    bool valid() const { return extra_zeroes_all_double && placement_ok; }
};

ZeroStructureReport zero_structure(const Poly& R, const HeunEquation& heun);

/// Everything above bundled; pass() iff all three identity checks hold.
struct PullbackReport {
    bool exponents_ok = false;
    bool w_coefficient_ok = false;
    bool u_identity_ok = false;
    int u_sign = 0;
    ZeroStructureReport structure;
    std::string sign_convention_note;

    bool pass() const { return exponents_ok && w_coefficient_ok && u_identity_ok; }
};

PullbackReport verify_pullback(const RationalMap& R, const HeunEquation& heun,
                               const GaussEquation& gauss, const MapStructure* hints = nullptr);
PullbackReport verify_pullback(const Reduction& red, const HeunEquation& heun);

} // namespace heunred
