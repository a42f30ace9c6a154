#include <doctest.h>

#include "heunred/equations.hpp"
#include "oracles.hpp"

using namespace heunred;

namespace {
Surd rat(long n, long d = 1) { return Surd(make_rational(n, d)); }
}

TEST_CASE("construction enforces the Fuchs relation and d restrictions") {
    HeunEquation eq(Surd(2), Surd(0), Surd(1), rat(1, 2), rat(1, 3), rat(1, 5));
    CHECK(eq.epsilon() == Surd(1) + rat(1, 2) - rat(1, 3) - rat(1, 5) + 1);
    CHECK(eq.alpha() + eq.beta() + 1 == eq.gamma() + eq.delta() + eq.epsilon());
    CHECK_THROWS_AS(HeunEquation(Surd(1), Surd(0), Surd(1), Surd(1), Surd(1), Surd(1)), error);
    CHECK_THROWS_AS(HeunEquation(Surd(0), Surd(0), Surd(1), Surd(1), Surd(1), Surd(1)), error);
}

TEST_CASE("exponents at singular and ordinary points") {
    HeunEquation eq(Surd(2), Surd(1), Surd(1), Surd(2), rat(1, 2), Surd(3));
    CHECK(exponents_at(eq, Point(Surd(0))) == ExponentPair{Surd(0), rat(1, 2)});
    CHECK(exponents_at(eq, Point(Surd(1))) == ExponentPair{Surd(0), Surd(-2)});
    CHECK(exponents_at(eq, Point(eq.d())) == ExponentPair{Surd(0), Surd(1) - eq.epsilon()});
    CHECK(exponents_at(eq, Point::infinity()) == ExponentPair{Surd(1), Surd(2)});
    CHECK(exponents_at(eq, Point(Surd(17))) == ExponentPair{Surd(0), Surd(1)});

    GaussEquation g{rat(1, 2), Surd(1), rat(3, 4)};
    CHECK(exponents_at(g, Point::infinity()) == ExponentPair{rat(1, 2), Surd(1)});
    CHECK(exponents_at(g, Point(Surd(0))) == ExponentPair{Surd(0), rat(1, 4)});
    CHECK(exponents_at(g, Point(Surd(17))) == ExponentPair{Surd(0), Surd(1)});
}

TEST_CASE("exponent sums satisfy the n-2 Fuchs total") {
    testing::Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        Surd d = Surd(rng.nonzero_rational());
        if (d == Surd(1)) continue;
        HeunEquation eq(d, Surd(rng.rational()), Surd(rng.rational()), Surd(rng.rational()),
                        Surd(rng.rational()), Surd(rng.rational()));
        Surd total(0);
        for (const Point& pt :
             {Point(Surd(0)), Point(Surd(1)), Point(eq.d()), Point::infinity()}) {
            ExponentPair e = exponents_at(eq, pt);
            total += e.e1 + e.e2;
        }
        CHECK(total == Surd(2));
    }
}

TEST_CASE("triviality and degeneracy predicates") {
    CHECK(is_trivial(HeunEquation(Surd(2), Surd(0), Surd(0), Surd(5), Surd(1), Surd(1))));
    CHECK_FALSE(is_trivial(HeunEquation(Surd(2), Surd(3), Surd(0), Surd(5), Surd(1), Surd(1))));
    CHECK_FALSE(is_trivial(HeunEquation(Surd(2), Surd(0), Surd(1), Surd(1), Surd(1), Surd(1))));

    // epsilon = 0 with q = ab d loses the singular point at d:
    // epsilon = a+b-g-dl+1 = 0 via dl = a+b-g+1.
    Surd a(1), b(2), g(rat(1, 2));
    HeunEquation lost_d(Surd(2), a * b * Surd(2), a, b, g, a + b - g + 1);
    auto lost = degenerate_singularities(lost_d);
    REQUIRE(lost.size() == 1);
    CHECK(lost[0] == Point(Surd(2)));

    HeunEquation lost_0(Surd(2), Surd(0), a, b, Surd(0), rat(1, 3));
    auto lost2 = degenerate_singularities(lost_0);
    REQUIRE(lost2.size() == 1);
    CHECK(lost2[0] == Point(Surd(0)));

    HeunEquation generic(Surd(2), Surd(1), a, b, g, rat(1, 3));
    CHECK(degenerate_singularities(generic).empty());
}

TEST_CASE("d inversion identity is an involution") {
    HeunEquation eq(Surd(2), Surd(2), Surd(1), Surd(2), rat(1, 2), Surd(3));
    InvertedD inv = identity_invert_d(eq);
    CHECK(inv.equation.d() == rat(1, 2));
    CHECK(inv.equation.q() == Surd(1));
    CHECK(inv.equation.delta() == eq.alpha() + eq.beta() - eq.gamma() - eq.delta() + 1);
    CHECK(inv.hl_defined);
    CHECK(inv.scaling(Point(Surd(2))) == Point(Surd(1)));

    InvertedD twice = identity_invert_d(inv.equation);
    CHECK(twice.equation == eq);

    HeunEquation bad_gamma(Surd(2), Surd(1), Surd(1), Surd(1), Surd(0) - Surd(1), Surd(1));
    CHECK_FALSE(identity_invert_d(bad_gamma).hl_defined);
}

TEST_CASE("tilde parameters reproduce the worked second-solution example") {
    // (d=2, q=0, a=0, b=1/2, g=1/2, dl=1/2) -> q~ = 3/4, params (2, 3/4; 1/2, 1, 3/2, 1/2)
    HeunEquation eq(Surd(2), Surd(0), Surd(0), rat(1, 2), rat(1, 2), rat(1, 2));
    TildeHeun th = tilde_parameters(eq);
    CHECK(th.equation.q() == rat(3, 4));
    CHECK(th.equation.alpha() == rat(1, 2));
    CHECK(th.equation.beta() == Surd(1));
    CHECK(th.equation.gamma() == rat(3, 2));
    CHECK(th.equation.delta() == rat(1, 2));
    CHECK(th.prefactor_exponent == rat(1, 2));

    CHECK_THROWS_AS(tilde_parameters(HeunEquation(Surd(2), Surd(1), Surd(1), Surd(1), Surd(1),
                                                  rat(1, 3))),
                    error);

    // duality: applying tilde twice returns the original parameters
    HeunEquation eq2(Surd(2), Surd(1), Surd(1), rat(3, 2), rat(1, 3), rat(1, 5));
    TildeHeun once = tilde_parameters(eq2);
    TildeHeun twice = tilde_parameters(once.equation);
    CHECK(twice.equation == eq2);
}

TEST_CASE("Euler flip") {
    GaussEquation g{rat(1, 2), Surd(1), rat(1, 2)};
    EulerFlip f = euler_flip(g);
    CHECK(f.equation == GaussEquation{Surd(0), rat(-1, 2), rat(1, 2)});
    CHECK(f.prefactor_exponent == g.c - g.a - g.b);
    CHECK(euler_flip(f.equation).equation == g);

    GaussEquation sum_zero{rat(1, 3), rat(2, 3), Surd(1)};
    CHECK(euler_flip(sum_zero).prefactor_exponent == Surd(0));
}
