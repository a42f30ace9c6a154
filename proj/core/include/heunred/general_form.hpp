#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heunred/classifier.hpp"
#include "heunred/rational_map.hpp"

namespace heunred {

/// Natural general-form Heun equation: finite singular points d1, d2, d3
/// with zero as an exponent, plus infinity.  epsilon derives from the Fuchs
/// relation exactly as in canonical position.
struct NaturalGeneralHeun {
    Surd d1, d2, d3;
    Surd alpha, beta, gamma, delta;
    Surd qprime;

    NaturalGeneralHeun(const Surd& d1_, const Surd& d2_, const Surd& d3_, const Surd& qprime_,
                       const Surd& alpha_, const Surd& beta_, const Surd& gamma_,
                       const Surd& delta_);
    Surd epsilon() const { return alpha + beta - gamma - delta + 1; }
};

/// General-form Heun equation: four arbitrary distinct singular points, the
/// fourth possibly at infinity (in which case this degenerates to the
/// natural general form).
struct GeneralHeun {
    Surd d1, d2, d3;
    Point d4;
    Surd alpha, beta, gamma, delta;
    Surd qdoubleprime;

    GeneralHeun(const Surd& d1_, const Surd& d2_, const Surd& d3_, const Point& d4_,
                const Surd& qdoubleprime_, const Surd& alpha_, const Surd& beta_,
                const Surd& gamma_, const Surd& delta_);
    Surd epsilon() const { return alpha + beta - gamma - delta + 1; }
};

/// Equianharmonic algebraic-form Lame equation: g2 = 0 enforced by the
/// reduction operation, accessory parameter B, degree parameter ell.
struct LameAlgebraic {
    Surd g2, g3, ell, B;
};

struct Normalized {
    HeunEquation equation;
    Mobius map;  // s -> t, carrying (d1, d2, d3[, d4]) to (0, 1, d[, inf])
};

/// Affine repositioning t = (s - d1)/(d2 - d1); the accessory parameter is
/// transported by symbolic pullback of the equation's coefficients, and the
/// pulled-back u'-coefficient is verified against the canonical form.
Normalized normalize_natural(const NaturalGeneralHeun& gh);

/// Mobius repositioning t = (s - d1)(d2 - d4) / ((d2 - d1)(s - d4)).
Normalized normalize_general(const GeneralHeun& gh);

/// A reduction carried back to the original coordinates, z = R(M(s)).
struct GeneralReduction {
    Reduction canonical;
    Mobius normalization;
    RationalMap original_map;
};

struct GeneralClassifyResult {
    std::vector<GeneralReduction> reductions;
    std::optional<NotReducibleReason> reason;
    bool reducible() const { return !reductions.empty(); }
};

GeneralClassifyResult classify_general(const NaturalGeneralHeun& gh);
GeneralClassifyResult classify_general(const GeneralHeun& gh);

struct LameReduction {
    RationalMap map;      // z as a cubic polynomial in s
    GaussEquation gauss;
};

struct LameResult {
    bool reducible = false;
    std::vector<LameReduction> reductions;  // the (5.5) branch z = 1 - 4 s^3/g3 first
    std::optional<NotReducibleReason> reason;
    std::vector<Surd> critical_values;      // e1, e2, e3
    std::optional<NaturalGeneralHeun> bridged;
};

/// Equianharmonic case: reducible iff B = 0 (given ell(ell+1) != 0), with
/// exactly the cubic maps z = 4 s^3/g3 and z = 1 - 4 s^3/g3.  Requires
/// g2 = 0 and a rational cube root of g3/4 so the critical values stay in
/// the coefficient field.
LameResult lame_reduce(const LameAlgebraic& lame);

} // namespace heunred
