#pragma once

#include <vector>

#include "heunred/cross_ratio.hpp"
#include "heunred/poly.hpp"
#include "heunred/surd.hpp"

namespace heunred {

/// The seven subcases of the polynomial reduction theorem.  Degrees:
/// 1a -> 2, 1b -> 3, 1c -> 4, 2a -> 3, 2b -> 4, 2c -> 5, 2d -> 6.
enum class SubcaseId { S1a, S1b, S1c, S2a, S2b, S2c, S2d };

const char* subcase_name(SubcaseId id);
SubcaseId subcase_from_name(const std::string& name);
int subcase_degree(SubcaseId id);
/// Case 1 subcases put the accessory point at a singular point d0; case 2
/// subcases put it at an ordinary triple zero.
bool subcase_is_case1(SubcaseId id);
/// l = number of additional double zeroes: deg - 2 in case 1, deg - 3 in case 2.
int subcase_extra_doubles(SubcaseId id);

/// A set of points outside the base field, described exactly as the root set
/// of a monic squarefree polynomial factor; every root carries the same
/// multiplicity in the map.
struct PreimageBlock {
    Poly factor;
    int multiplicity;
};

/// Preimage multiset of one of z = 0, 1 under a polynomial map, split into
/// in-field points and irrational blocks.
struct SideStructure {
    std::vector<std::pair<Surd, int>> points;
    std::vector<PreimageBlock> blocks;

    int total_multiplicity() const;
};

/// Canonical data of a subcase at d = D: the target D, the mandatory
/// normalized accessory value p0 = q/(alpha beta), the canonical polynomial
/// R1, and the exact preimage structures of z = 0 and z = 1 under R1.
struct SubcaseData {
    SubcaseId id;
    Family family;
    int degree;
    Surd D;
    Surd p0;
    Poly R1;
    SideStructure side0;  // R1^{-1}(0)
    SideStructure side1;  // R1^{-1}(1)
};

const SubcaseData& canonical_subcase_data(SubcaseId id);

/// Subcases sharing a family's orbit: {1a, 1c}, {1b}, {2a, 2d}, {2b}, {2c}.
std::vector<SubcaseId> family_subcases(Family f);
const std::vector<SubcaseId>& all_subcases();

} // namespace heunred
