#pragma once

#include <optional>
#include <vector>

#include "heunred/equations.hpp"
#include "heunred/param_form.hpp"
#include "heunred/subcases.hpp"

namespace heunred {

/// A classified reduction of a concrete Heun equation: the substitution
/// z = R(t) = A2(R1(A1(t))) with R(0) = 0, its preimage structure, and the
/// induced Gauss parameters.
struct Reduction {
    SubcaseId subcase;
    Surd d;
    Surd p;            // q / (alpha beta)
    Mobius A1;         // affine, carries {0,1,d} onto {0,1,D}
    bool a2_flip;      // A2(z) = 1 - z when true, A2(z) = z otherwise
    Poly R;            // composed map, R(0) = 0
    GaussEquation gauss;
    SideStructure side0;  // R^{-1}(0) as an exact multiset
    SideStructure side1;  // R^{-1}(1)
    std::optional<Surd> d0;  // case 1: the distinguished singular point (= p)
};

enum class NotReducibleReason { AlphaBetaZero, DOffOrbit, AccessoryMismatch, ExponentMismatch };
const char* reason_name(NotReducibleReason r);

struct ClassifyResult {
    std::vector<Reduction> reductions;
    std::optional<NotReducibleReason> reason;  // set iff reductions is empty

    bool reducible() const { return !reductions.empty(); }
};

/// The decision procedure for nontrivial four-singular-point Heun equations.
/// Trivial or degenerate input is an error directing the caller elsewhere;
/// inputs that merely fail the criterion come back as NotReducible with the
/// first failed condition.
ClassifyResult classify(const HeunEquation& eq);

/// Gauss parameters by exponent transport: exponents at each preimage divided
/// by its multiplicity, consistency asserted across preimages of the same
/// z-point (a failure signals a classifier bug, not bad input).
GaussEquation gauss_parameters(const Reduction& red, const HeunEquation& eq);

/// One row of the 23-pair table: every (d, p) admitting a reduction.
struct CulminationRow {
    Family family;
    Surd d, p;
    std::vector<int> degrees;
};

/// Generated by transporting (D, p0) along each orbit, never hard-coded.
std::vector<CulminationRow> culmination_table();

/// A catalogue reduction with symbolic exponent parameters: alpha is always
/// free, beta and gamma may be free or pinned, everything else is a linear
/// form in the free symbols.
struct ReductionTemplate {
    SubcaseId subcase;
    Surd d, p;
    Mobius A1;
    bool a2_flip;
    Poly R;
    SideStructure side0, side1;

    ParamForm alpha, beta, gamma, delta;  // Heun parameters (epsilon via Fuchs)
    ParamForm gauss_a, gauss_b, gauss_c;
    bool beta_free, gamma_free;

    /// Index of the d <-> 1/d partner in the enumeration; -1 for the two
    /// self-paired (d, p) = (-1, 0) reductions.
    int partner = -1;

    HeunEquation instantiate_heun(const Surd& av, const Surd& bv, const Surd& gv) const;
    GaussEquation instantiate_gauss(const Surd& av, const Surd& bv, const Surd& gv) const;
    Reduction instantiate(const Surd& av, const Surd& bv, const Surd& gv) const;
};

/// All 28 Hl -> 2F1 reductions, sorted by (subcase, d, A2) and linked into
/// d <-> 1/d pairs.
const std::vector<ReductionTemplate>& enumerate_all_reductions();

/// Distinct substitutions A2(R1(A1(t))) before fixing R(0) = 0; the full
/// count is 56, of which the 28 above survive the filter.
int count_raw_substitutions();

} // namespace heunred
