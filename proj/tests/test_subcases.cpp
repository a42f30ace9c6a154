#include <doctest.h>

#include "heunred/subcases.hpp"
#include "heunred/verifier.hpp"

using namespace heunred;

namespace {
Surd rat(long n, long d = 1) { return Surd(make_rational(n, d)); }
}

TEST_CASE("degree map and extra-double counts") {
    CHECK(subcase_degree(SubcaseId::S1a) == 2);
    CHECK(subcase_degree(SubcaseId::S1b) == 3);
    CHECK(subcase_degree(SubcaseId::S1c) == 4);
    CHECK(subcase_degree(SubcaseId::S2a) == 3);
    CHECK(subcase_degree(SubcaseId::S2b) == 4);
    CHECK(subcase_degree(SubcaseId::S2c) == 5);
    CHECK(subcase_degree(SubcaseId::S2d) == 6);
    CHECK(subcase_extra_doubles(SubcaseId::S1a) == 0);
    CHECK(subcase_extra_doubles(SubcaseId::S1c) == 2);
    CHECK(subcase_extra_doubles(SubcaseId::S2a) == 0);
    CHECK(subcase_extra_doubles(SubcaseId::S2d) == 3);
}

TEST_CASE("canonical structures are the complete branching data") {
    for (SubcaseId id : all_subcases()) {
        const SubcaseData& data = canonical_subcase_data(id);
        CAPTURE(subcase_name(id));
        CHECK(data.R1.degree() == data.degree);
        CHECK(data.side0.total_multiplicity() == data.degree);
        CHECK(data.side1.total_multiplicity() == data.degree);

        MapStructure ms;
        ms.to0 = data.side0;
        ms.to1 = data.side1;
        ms.infinity_target = 2;
        ms.infinity_multiplicity = data.degree;
        CHECK(validate_structure(RationalMap(data.R1), ms));
    }
}

TEST_CASE("subcase 1b: S = t (t-3)^2 / 4") {
    const SubcaseData& d = canonical_subcase_data(SubcaseId::S1b);
    Poly S = Poly(1) - d.R1;
    CHECK(S == rat(1, 4) * Poly::t() * Poly::linear_root(Surd(3)).pow(2));
}

TEST_CASE("subcase 2b: 1 - R equals (64/27) t (t-1) (t-a1)^2") {
    const SubcaseData& d = canonical_subcase_data(SubcaseId::S2b);
    Surd a1 = rat(1, 2) + Surd::root(2);
    Poly expected = rat(64, 27) * Poly::t() * Poly::linear_root(Surd(1)) *
                    Poly::linear_root(a1).pow(2);
    CHECK(Poly(1) - d.R1 == expected);
}

TEST_CASE("subcase 2c: S has a simple zero at D and double zeroes on the critical quadratic") {
    const SubcaseData& d = canonical_subcase_data(SubcaseId::S2c);
    Poly S = Poly(1) - d.R1;
    CHECK(S(d.D).is_zero());
    CHECK(S.root_multiplicity(d.D) == 1);
    Poly crit = d.side1.blocks.at(0).factor;
    Poly deflated = S.exact_div(Poly::linear_root(d.D)).exact_div(crit).exact_div(crit);
    CHECK(deflated.degree() == 0);
    // a1 + a2 = 1 + (1/45) sqrt(-15), per the critical quadratic of the proof
    CHECK(-crit.coeff(1) == Surd(1) + rat(1, 45) * Surd::root(15));
}

TEST_CASE("subcase 2d: fibers of the sextic") {
    const SubcaseData& d = canonical_subcase_data(SubcaseId::S2d);
    Poly S = Poly(1) - d.R1;
    CHECK(S(Surd(0)).is_zero());
    CHECK(S(Surd(1)).is_zero());
    CHECK(S(d.D).is_zero());
    CHECK(S.root_multiplicity(d.p0) == 3);
    CHECK(d.R1(Surd(0)) == Surd(1));
}

TEST_CASE("family groupings") {
    CHECK(family_subcases(Family::F1a) == std::vector<SubcaseId>{SubcaseId::S1a, SubcaseId::S1c});
    CHECK(family_subcases(Family::F2a) == std::vector<SubcaseId>{SubcaseId::S2a, SubcaseId::S2d});
    CHECK(family_subcases(Family::F2c) == std::vector<SubcaseId>{SubcaseId::S2c});
}
