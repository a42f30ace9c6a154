// Independent transcriptions of the eleven displayed Hl -> 2F1 reduction
// formulas plus the d = -1 quadratic, kept separate from the enumeration
// path so the tests compare two routes to the same data.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heunred/equations.hpp"
#include "heunred/poly.hpp"

namespace heunred::testing {

struct ReferenceFormula {
    std::string name;
    Surd d, p;
    Poly R;
    int free_count;  // how many of (alpha, beta, gamma) vary freely
    std::function<HeunEquation(const Surd&, const Surd&, const Surd&)> heun;
    std::function<GaussEquation(const Surd&, const Surd&, const Surd&)> gauss;
};

inline std::vector<ReferenceFormula> reference_formulas() {
    using F = ReferenceFormula;
    std::vector<F> out;
    auto rat = [](long n, long d = 1) { return Surd(make_rational(n, d)); };
    Poly t = Poly::t();
    Poly one(1);

    // Hl(2, ab; a, b, g, a+b-2g+1) = 2F1(a/2, b/2; g; t(2-t))
    out.push_back(F{
        "harmonic-quadratic",
        Surd(2), Surd(1), Poly{Surd(0), Surd(2), Surd(-1)}, 3,
        [](const Surd& a, const Surd& b, const Surd& g) {
            return HeunEquation(Surd(2), a * b, a, b, g, a + b - Surd(2) * g + 1);
        },
        [](const Surd& a, const Surd& b, const Surd& g) {
            return GaussEquation{a / 2, b / 2, g};
        }});

    // Hl(-1, 0; a, b, g, (a+b-g+1)/2) = 2F1(a/2, b/2; (g+1)/2; t^2)
    out.push_back(F{
        "harmonic-quadratic-alt",
        Surd(-1), Surd(0), Poly{Surd(0), Surd(0), Surd(1)}, 3,
        [](const Surd& a, const Surd& b, const Surd& g) {
            return HeunEquation(Surd(-1), Surd(0), a, b, g, (a + b - g + 1) / 2);
        },
        [](const Surd& a, const Surd& b, const Surd& g) {
            return GaussEquation{a / 2, b / 2, (g + 1) / 2};
        }});

    // Hl(4, ab; a, b, 1/2, 2(a+b)/3) = 2F1(a/3, b/3; 1/2; 1-(t-1)^2(1-t/4))
    out.push_back(F{
        "degree-3-real",
        Surd(4), Surd(1),
        one - Poly::linear_root(Surd(1)).pow(2) * Poly{Surd(1), rat(-1, 4)}, 2,
        [rat](const Surd& a, const Surd& b, const Surd&) {
            return HeunEquation(Surd(4), a * b, a, b, rat(1, 2), rat(2, 3) * (a + b));
        },
        [rat](const Surd& a, const Surd& b, const Surd&) {
            return GaussEquation{a / 3, b / 3, rat(1, 2)};
        }});

    // Hl(2, ab; a, b, (a+b+2)/4, (a+b)/2) = 2F1(a/4, b/4; (a+b+2)/4; 1-4[t(2-t)-1/2]^2)
    out.push_back(F{
        "special-harmonic-quartic",
        Surd(2), Surd(1),
        one - Surd(4) * Poly{rat(-1, 2), Surd(2), Surd(-1)}.pow(2), 2,
        [](const Surd& a, const Surd& b, const Surd&) {
            return HeunEquation(Surd(2), a * b, a, b, (a + b + 2) / 4, (a + b) / 2);
        },
        [](const Surd& a, const Surd& b, const Surd&) {
            return GaussEquation{a / 4, b / 4, (a + b + 2) / 4};
        }});

    // Hl(1/2 +/- i sqrt3/2, ab p; a, b, (a+b+1)/3, (a+b+1)/3)
    //   = 2F1(a/3, b/3; (a+b+1)/3; 1 - [1 - t/p]^3)
    for (int sign : {+1, -1}) {
        Surd w3 = rat(sign, 1) * Surd::root(3);
        Surd d = rat(1, 2) + rat(1, 2) * w3;
        Surd p = rat(1, 2) + rat(1, 6) * w3;
        out.push_back(F{
            sign > 0 ? "equianharmonic-cubic+" : "equianharmonic-cubic-",
            d, p, one - Poly{Surd(1), -p.inverse()}.pow(3), 2,
            [d, p](const Surd& a, const Surd& b, const Surd&) {
                return HeunEquation(d, a * b * p, a, b, (a + b + 1) / 3, (a + b + 1) / 3);
            },
            [](const Surd& a, const Surd& b, const Surd&) {
                return GaussEquation{a / 3, b / 3, (a + b + 1) / 3};
            }});
    }

    // Hl(1/2 +/- i 5 sqrt2/4, a(2/3-a) p; a, 2/3-a, 1/2, 1/2)
    //   = 2F1(a/4, 1/6-a/4; 1/2; 1 - [1-t/d][1-t/p]^3)
    for (int sign : {+1, -1}) {
        Surd w2 = rat(sign, 1) * Surd::root(2);
        Surd d = rat(1, 2) + rat(5, 4) * w2;
        Surd p = rat(1, 2) + rat(1, 4) * w2;
        out.push_back(F{
            sign > 0 ? "degree-4-nonreal+" : "degree-4-nonreal-",
            d, p,
            one - Poly{Surd(1), -d.inverse()} * Poly{Surd(1), -p.inverse()}.pow(3), 1,
            [d, p, rat](const Surd& a, const Surd&, const Surd&) {
                Surd b = rat(2, 3) - a;
                return HeunEquation(d, a * b * p, a, b, rat(1, 2), rat(1, 2));
            },
            [rat](const Surd& a, const Surd&, const Surd&) {
                return GaussEquation{a / 4, rat(1, 6) - a / 4, rat(1, 2)};
            }});
    }

    // Hl(1/2 +/- i 11 sqrt15/90, a(5/6-a) p; a, 5/6-a, 2/3, 2/3)
    //   = 2F1(a/5, 1/6-a/5; 2/3; (-/+ i 2025 sqrt15/64) t(t-1)(t-p)^3)
    for (int sign : {+1, -1}) {
        Surd w15 = rat(sign, 1) * Surd::root(15);
        Surd d = rat(1, 2) + rat(11, 90) * w15;
        Surd p = rat(1, 2) + rat(1, 18) * w15;
        Surd A = rat(-2025, 64) * w15;
        out.push_back(F{
            sign > 0 ? "degree-5-nonreal+" : "degree-5-nonreal-",
            d, p, A * t * Poly::linear_root(Surd(1)) * Poly::linear_root(p).pow(3), 1,
            [d, p, rat](const Surd& a, const Surd&, const Surd&) {
                Surd b = rat(5, 6) - a;
                return HeunEquation(d, a * b * p, a, b, rat(2, 3), rat(2, 3));
            },
            [rat](const Surd& a, const Surd&, const Surd&) {
                return GaussEquation{a / 5, rat(1, 6) - a / 5, rat(2, 3)};
            }});
    }

    // Hl(1/2 +/- i sqrt3/2, a(1-a) p; a, 1-a, 2/3, 2/3)
    //   = 2F1(a/6, 1/6-a/6; 2/3; 1 - 4{[1-t/p]^3 - 1/2}^2)
    for (int sign : {+1, -1}) {
        Surd w3 = rat(sign, 1) * Surd::root(3);
        Surd d = rat(1, 2) + rat(1, 2) * w3;
        Surd p = rat(1, 2) + rat(1, 6) * w3;
        Poly inner = Poly{Surd(1), -p.inverse()}.pow(3) - Poly(rat(1, 2));
        out.push_back(F{
            sign > 0 ? "special-equianharmonic-sextic+" : "special-equianharmonic-sextic-",
            d, p, one - Surd(4) * inner.pow(2), 1,
            [d, p](const Surd& a, const Surd&, const Surd&) {
                Surd b = Surd(1) - a;
                return HeunEquation(d, a * b * p, a, b, Surd(2) / Surd(3), Surd(2) / Surd(3));
            },
            [rat](const Surd& a, const Surd&, const Surd&) {
                return GaussEquation{a / 6, rat(1, 6) - a / 6, rat(2, 3)};
            }});
    }

    return out;
}

// Draw (alpha, beta, gamma) making both sides of a formula defined and the
// equation nontrivial with four genuine singular points.
inline bool admissible_draw(const ReferenceFormula& f, const Surd& a, const Surd& b,
                            const Surd& g) {
    HeunEquation eq = f.heun(a, b, g);
    GaussEquation gs = f.gauss(a, b, g);
    if (eq.alpha_beta().is_zero()) return false;
    if (eq.gamma().is_nonpositive_integer() || gs.c.is_nonpositive_integer()) return false;
    return degenerate_singularities(eq).empty();
}

} // namespace heunred::testing
