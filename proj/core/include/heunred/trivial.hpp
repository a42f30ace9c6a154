#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "heunred/verifier.hpp"

namespace heunred {

/// Fiber-cardinality signature of a subcase over {0, 1, inf} restricted to
/// the special points {0, 1, d, inf}: subcases 1a, 1b, 2b, 2c have signature
/// 2;1;1 and the rest 3;1;0.
enum class Signature { S211, S310 };
Signature subcase_signature(SubcaseId id);

/// A rational substitution z = M2(R1(M1(t))) applicable to trivial Heun
/// equations, with its exact branching data.
struct TrivialSubstitution {
    SubcaseId subcase;
    Surd d;
    Mobius M1;  // {0, 1, d, inf} onto {0, 1, D, inf}
    Mobius M2;  // {0, 1, inf} onto {0, 1, inf}
    RationalMap composed;
    MapStructure structure;
    Signature signature;

    bool fixes_zero() const;  // composed(0) == 0
};

/// All distinct substitutions for the given subcase and d on its orbit,
/// deduplicated by the composed map.  Distinct counts per d are
/// 12, 6, 6; 9, 6, 6, 9 across the subcases.
std::vector<TrivialSubstitution> enumerate_trivial(SubcaseId id, const Surd& d);

int count_zero_fixing(const std::vector<TrivialSubstitution>& subs);

/// Exponent-mapping test of Prop-3.2 type (an iff for trivial equations),
/// with the induced Gauss parameters on success; ab = 0 always holds there.
struct TrivialApplicability {
    bool applicable = false;
    GaussEquation gauss{Surd(0), Surd(0), Surd(1)};
};
TrivialApplicability trivial_applicable(const HeunEquation& eq, const TrivialSubstitution& sub);

/// The degree-4 reduction not of M2 . R1 . M1 form:
///   Q(t) = 1 - ((t-1-i)/(t-1+i))^4 = 8i t(t-1)(t-2) / (t-1+i)^4,
/// applicable to the trivial equation with d = 2 and all exponents (0, 1/2).
struct CuriousQuartic {
    RationalMap map;
    RationalMap moebius_power_form;  // the 1 - M^4 expression, equal as a map
    MapStructure structure;
    GaussEquation gauss;    // (0, 1/4; 1/2)
    HeunEquation equation;  // (d, q; alpha, beta, gamma, delta) = (2, 0; 0, 1/2, 1/2, 1/2)
};
CuriousQuartic curious_quartic();

/// One multiplicative piece base(t)^exponent of a reduction's prefactor,
/// taken on the principal branch.
struct PowerFactor {
    RationalMap base;
    Surd exponent;
};

/// Pointwise numerical check of
///   lhs(t) = normalization * prod base_j(t)^e_j * rhs(Q(t))
/// where each side is Hl / tilde-Hl resp. 2F1 / tilde-2F1.  When no
/// normalization is supplied it is computed from the leading behavior of the
/// two sides as t -> 0.
struct TildeReductionSpec {
    HeunEquation heun;
    bool lhs_tilde = true;
    GaussEquation gauss;
    bool rhs_tilde = true;
    RationalMap map;
    std::vector<PowerFactor> rhs_prefactors;
    std::optional<std::complex<double>> normalization;
};

struct TildeCheckReport {
    std::complex<double> normalization{1.0, 0.0};
    double max_mismatch = 0.0;
    bool pass = false;
};

TildeCheckReport verify_tilde_reduction(const TildeReductionSpec& spec, int N, double tol);

} // namespace heunred
