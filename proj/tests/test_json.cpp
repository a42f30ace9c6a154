#include <doctest.h>

#include "heunred/json_io.hpp"
#include "oracles.hpp"

using namespace heunred;

TEST_CASE("surd values round-trip through their JSON form") {
    testing::Rng rng(314);
    for (int m : {1, 2, 3, 15}) {
        for (int i = 0; i < 40; ++i) {
            Surd x = rng.surd(m, 50, 21);
            CHECK(surd_from_json(surd_to_json(x)) == x);
        }
    }
}

TEST_CASE("heun equation JSON: exact strings and decimal snapping") {
    Json j{{"d", "2"},       {"q", "2"},     {"alpha", "1"},
           {"beta", "2"},    {"gamma", "1/2"}, {"delta", "3"}};
    ParsedHeun ph = heun_from_json(j, 1e-9);
    CHECK_FALSE(ph.snap.has_value());
    CHECK(ph.equation.d() == Surd(2));
    CHECK(surd_from_json(heun_to_json(ph.equation).at("gamma")) == ph.equation.gamma());

    // decimal d snaps onto the equianharmonic orbit and records the distance
    Json jd{{"d", Json{{"re", 0.5}, {"im", 0.86602540378}}},
            {"q", "0"},
            {"alpha", "1"},
            {"beta", "2"},
            {"gamma", "1/2"},
            {"delta", "3"}};
    ParsedHeun snapped = heun_from_json(jd, 1e-6);
    REQUIRE(snapped.snap.has_value());
    CHECK(snapped.snap->family == Family::F2a);
    CHECK(snapped.snap->distance < 1e-6);
    CHECK(snapped.equation.d() ==
          Surd(make_rational(1, 2)) + Surd(make_rational(1, 2)) * Surd::root(3));

    Json joff{{"d", 3.000001}, {"q", "0"}, {"alpha", "1"}, {"beta", "1"}, {"gamma", "1"},
              {"delta", "1"}};
    CHECK_THROWS_AS(heun_from_json(joff, 1e-9), error);
}

TEST_CASE("reduction and template serialization are deterministic") {
    HeunEquation eq(Surd(2), Surd(2), Surd(1), Surd(2), Surd(make_rational(1, 2)), Surd(3));
    ClassifyResult res = classify(eq);
    REQUIRE(res.reducible());
    Json a = reduction_to_json(res.reductions[0]);
    Json b = reduction_to_json(classify(eq).reductions[0]);
    CHECK(a.dump() == b.dump());
    CHECK(a.at("subcase") == "1a");
    CHECK(a.at("A2") == "z");

    const auto& all = enumerate_all_reductions();
    Json t0 = template_to_json(all[0], 0);
    CHECK(t0.contains("gauss"));
    CHECK(t0.contains("partner"));

    // polynomial coefficient lists parse back
    Poly R = poly_from_json(a.at("R"));
    CHECK(R == res.reductions[0].R);
}

TEST_CASE("rational map JSON round trip") {
    RationalMap m(Poly{Surd(0), Surd(4)}, Poly::linear_root(Surd(-1)).pow(2));
    Json j = rational_map_to_json(m);
    CHECK(rational_map_from_json(j) == m);
    // bare array means a polynomial
    Json arr = Json::array({"0", "2", "-1"});
    CHECK(rational_map_from_json(arr) == RationalMap(Poly{Surd(0), Surd(2), Surd(-1)}));
}
