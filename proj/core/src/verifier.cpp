#include "heunred/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace heunred {

namespace {

// Peel the claimed roots off poly; false when a root or multiplicity claim
// fails, or when anything beyond the claims remains.
bool deflate_exactly(const Poly& poly, const SideStructure& side) {
    if (poly.is_zero()) return false;
    Poly rem = poly;
    for (const auto& [pt, k] : side.points) {
        Poly lin = Poly::linear_root(pt);
        for (int i = 0; i < k; ++i) {
            Poly q, r;
            rem.divmod(lin, q, r);
            if (!r.is_zero()) return false;
            rem = q;
        }
        if (rem(pt).is_zero()) return false;  // true multiplicity exceeds the claim
    }
    for (const auto& blk : side.blocks) {
        if (blk.factor.degree() < 1 || !is_squarefree(blk.factor)) return false;
        for (int i = 0; i < blk.multiplicity; ++i) {
            Poly q, r;
            rem.divmod(blk.factor, q, r);
            if (!r.is_zero()) return false;
            rem = q;
        }
        if (poly_gcd(rem, blk.factor).degree() > 0) return false;
    }
    return rem.degree() == 0;
}

int side_branching(const SideStructure& side) {
    int b = 0;
    for (const auto& [pt, k] : side.points) b += k - 1;
    for (const auto& blk : side.blocks) b += (blk.multiplicity - 1) * blk.factor.degree();
    return b;
}

ExponentPair gauss_exponents_of_target(const GaussEquation& g, int target) {
    switch (target) {
        case 0: return exponents_at(g, Point(Surd(0)));
        case 1: return exponents_at(g, Point(Surd(1)));
        case 2: return exponents_at(g, Point::infinity());
        default: return {Surd(0), Surd(1)};  // ordinary image
    }
}

bool check_side_exponents(const SideStructure& side, int target, const HeunEquation& heun,
                          const GaussEquation& gauss) {
    ExponentPair want = gauss_exponents_of_target(gauss, target);
    for (const auto& [pt, k] : side.points) {
        ExponentPair have = exponents_at(heun, Point(pt)).scaled(Surd(make_rational(1, k)));
        if (have != want) return false;
    }
    for (const auto& blk : side.blocks) {
        // Block roots must be ordinary points of the Heun equation.
        for (const Surd& s : {Surd(0), Surd(1), heun.d()})
            if (blk.factor(s).is_zero()) return false;
        ExponentPair have{Surd(0), Surd(make_rational(1, blk.multiplicity))};
        if (have != want) return false;
    }
    return true;
}

bool covers(const SideStructure& side, const Surd& pt) {
    for (const auto& [q, k] : side.points)
        if (q == pt) return true;
    return false;
}

} // namespace

MapStructure structure_of_reduction(const Reduction& red) {
    MapStructure ms;
    ms.to0 = red.side0;
    ms.to1 = red.side1;
    ms.infinity_target = 2;
    ms.infinity_multiplicity = red.R.degree();
    return ms;
}

bool validate_structure(const RationalMap& R, const MapStructure& ms) {
    int n = R.map_degree();
    if (n < 1) return false;

    const Poly& N = R.num();
    const Poly& D = R.den();
    Poly NmD = N - D;

    if (!deflate_exactly(N, ms.to0)) return false;
    if (!deflate_exactly(NmD, ms.to1)) return false;
    if (D.degree() >= 1) {
        if (!deflate_exactly(D, ms.to_inf)) return false;
    } else if (!ms.to_inf.points.empty() || !ms.to_inf.blocks.empty()) {
        return false;
    }

    // Where infinity goes, with what multiplicity.
    int mult_expected = 0;
    switch (ms.infinity_target) {
        case 0: mult_expected = D.degree() - N.degree(); break;
        case 1: mult_expected = D.degree() - NmD.degree(); break;
        case 2: mult_expected = N.degree() - D.degree(); break;
        default: {
            // Ordinary image c = lim R; requires equal degrees, c != 0, 1.
            if (N.degree() != D.degree()) return false;
            Surd c = N.leading() / D.leading();
            if (c == Surd(0) || c == Surd(1)) return false;
            Poly NcD = N - Poly(c) * D;
            mult_expected = D.degree() - NcD.degree();
            break;
        }
    }
    if (mult_expected < 1 || mult_expected != ms.infinity_multiplicity) return false;

    // Each fiber over 0, 1, inf carries exactly n points with multiplicity.
    int m0 = ms.to0.total_multiplicity() + (ms.infinity_target == 0 ? ms.infinity_multiplicity : 0);
    int m1 = ms.to1.total_multiplicity() + (ms.infinity_target == 1 ? ms.infinity_multiplicity : 0);
    int mi = ms.to_inf.total_multiplicity() +
             (ms.infinity_target == 2 ? ms.infinity_multiplicity : 0);
    if (m0 != n || m1 != n || mi != n) return false;

    // Riemann-Hurwitz: total branching is 2n - 2; if the fibers over 0, 1,
    // inf (plus infinity's own ramification) exhaust it, no critical point
    // maps anywhere else.
    int branching = side_branching(ms.to0) + side_branching(ms.to1) + side_branching(ms.to_inf) +
                    (ms.infinity_multiplicity - 1);
    return branching == 2 * n - 2;
}

namespace {
bool maps_exponents_numeric(const RationalMap& R, const HeunEquation& heun,
                            const GaussEquation& gauss);
}

bool maps_exponents(const RationalMap& R, const HeunEquation& heun, const GaussEquation& gauss,
                    const MapStructure* hints) {
    if (R.map_degree() < 1) raise(errc::malformed_input, "constant substitution");
    if (hints == nullptr) return maps_exponents_numeric(R, heun, gauss);
    if (!validate_structure(R, *hints)) return false;

    if (!check_side_exponents(hints->to0, 0, heun, gauss)) return false;
    if (!check_side_exponents(hints->to1, 1, heun, gauss)) return false;
    if (!check_side_exponents(hints->to_inf, 2, heun, gauss)) return false;

    {
        ExponentPair want = gauss_exponents_of_target(gauss, hints->infinity_target);
        ExponentPair have = exponents_at(heun, Point::infinity())
                                .scaled(Surd(make_rational(1, hints->infinity_multiplicity)));
        if (have != want) return false;
    }

    // Singular points not listed anywhere map (simply) to ordinary points,
    // so their exponents must already be (0, 1).
    for (const Surd& s : {Surd(0), Surd(1), heun.d()}) {
        if (covers(hints->to0, s) || covers(hints->to1, s) || covers(hints->to_inf, s)) continue;
        if (exponents_at(heun, Point(s)) != ExponentPair{Surd(0), Surd(1)}) return false;
    }
    return true;
}

bool verify_w(const RationalMap& R, const HeunEquation& heun, const GaussEquation& gauss) {
    RationalMap Rd = R.derivative();
    if (Rd.is_zero()) raise(errc::malformed_input, "constant substitution");
    RationalMap Rdd = Rd.derivative();
    RationalMap one(1);

    RationalMap w_pullback =
        -(Rdd / Rd) + Rd * (RationalMap(gauss.c) / R +
                            RationalMap(gauss.a + gauss.b - gauss.c + 1) / (R - one));
    RationalMap t(Poly::t());
    RationalMap w_heun = RationalMap(heun.gamma()) / t +
                         RationalMap(heun.delta()) / (t - one) +
                         RationalMap(heun.epsilon()) / (t - RationalMap(heun.d()));
    return rational_identity_equal(w_pullback, w_heun);
}

UCheck verify_u(const RationalMap& R, const HeunEquation& heun, const GaussEquation& gauss) {
    Surd ab = gauss.a * gauss.b;
    RationalMap one(1);
    RationalMap S = one - R;
    RationalMap U = (R.derivative() / R) * (S.derivative() / S);

    RationalMap t(Poly::t());
    RationalMap rhs = RationalMap(Poly{-heun.q(), heun.alpha_beta()}) /
                      (t * (t - one) * (t - RationalMap(heun.d())));

    RationalMap lhs = RationalMap(ab) * U;
    bool plus = rational_identity_equal(lhs, rhs);
    bool minus = rational_identity_equal(lhs, -rhs);
    return {plus, plus ? +1 : (minus ? -1 : 0)};
}

namespace {

// Orders at the labeled points, then the leftover factor, which must be a
// perfect square of a squarefree polynomial.
struct SideZeroes {
    int o0 = 0, o1 = 0, od = 0, op = 0;
    Poly double_factor = Poly::one();
    bool all_double = false;
};

SideZeroes analyze_zeroes(const Poly& F, const HeunEquation& heun, const std::optional<Surd>& p) {
    SideZeroes z;
    Poly rem = F;
    auto peel = [&rem](const Surd& pt) {
        int k = 0;
        while (!rem.is_zero() && rem(pt).is_zero()) {
            rem = rem.exact_div(Poly::linear_root(pt));
            ++k;
        }
        return k;
    };
    z.o0 = peel(Surd(0));
    z.o1 = peel(Surd(1));
    z.od = peel(heun.d());
    if (p && *p != Surd(0) && *p != Surd(1) && *p != heun.d()) z.op = peel(*p);

    if (rem.degree() == 0) {
        z.all_double = true;
        return z;
    }
    Poly H = poly_gcd(rem, rem.derivative());
    if (2 * H.degree() == rem.degree() && is_squarefree(H) && rem == rem.leading() * H * H) {
        z.all_double = true;
        z.double_factor = H;
    }
    return z;
}

} // namespace

ZeroStructureReport zero_structure(const Poly& R, const HeunEquation& heun) {
    ZeroStructureReport rep;
    std::optional<Surd> p;
    if (!heun.alpha_beta().is_zero()) {
        p = heun.p();
        rep.p = p;
        bool singular = (*p == Surd(0) || *p == Surd(1) || *p == heun.d());
        rep.case_tag = singular ? 1 : 2;
    }

    Poly S = Poly(1) - R;
    SideZeroes zr = analyze_zeroes(R, heun, p);
    SideZeroes zs = analyze_zeroes(S, heun, p);
    rep.r_order_0 = zr.o0;
    rep.r_order_1 = zr.o1;
    rep.r_order_d = zr.od;
    rep.s_order_0 = zs.o0;
    rep.s_order_1 = zs.o1;
    rep.s_order_d = zs.od;
    rep.r_extra_double_factor = zr.double_factor;
    rep.s_extra_double_factor = zs.double_factor;
    rep.extra_zeroes_all_double = zr.all_double && zs.all_double;

    if (rep.case_tag != 0) {
        if (*p == Surd(0)) {
            rep.r_order_p = zr.o0;
            rep.s_order_p = zs.o0;
        } else if (*p == Surd(1)) {
            rep.r_order_p = zr.o1;
            rep.s_order_p = zs.o1;
        } else if (*p == heun.d()) {
            rep.r_order_p = zr.od;
            rep.s_order_p = zs.od;
        } else {
            rep.r_order_p = zr.op;
            rep.s_order_p = zs.op;
        }
    }

    bool ok = true;
    auto exactly_one_simple = [](int a, int b) { return (a == 1 && b == 0) || (a == 0 && b == 1); };
    if (rep.case_tag == 1) {
        // d0 = p is a double zero of R or S; the other two singular points
        // are simple zeroes of R or S.
        ok = ok && ((rep.r_order_p == 2 && rep.s_order_p == 0) ||
                    (rep.r_order_p == 0 && rep.s_order_p == 2));
        for (const Surd& s : {Surd(0), Surd(1), heun.d()}) {
            if (s == *p) continue;
            int ro = s == Surd(0) ? zr.o0 : (s == Surd(1) ? zr.o1 : zr.od);
            int so = s == Surd(0) ? zs.o0 : (s == Surd(1) ? zs.o1 : zs.od);
            ok = ok && exactly_one_simple(ro, so);
        }
    } else if (rep.case_tag == 2) {
        ok = ok && exactly_one_simple(zr.o0, zs.o0) && exactly_one_simple(zr.o1, zs.o1) &&
             exactly_one_simple(zr.od, zs.od);
        ok = ok && ((rep.r_order_p == 3 && rep.s_order_p == 0) ||
                    (rep.r_order_p == 0 && rep.s_order_p == 3));
    }
    // Additional double zeroes must all sit on the side away from p's image.
    if (rep.case_tag != 0 && ok) {
        bool p_in_r = rep.r_order_p > 0;
        const Poly& same_side = p_in_r ? zr.double_factor : zs.double_factor;
        ok = same_side.degree() == 0;
    }
    rep.placement_ok = ok;
    return rep;
}

PullbackReport verify_pullback(const RationalMap& R, const HeunEquation& heun,
                               const GaussEquation& gauss, const MapStructure* hints) {
    PullbackReport rep;
    rep.exponents_ok = maps_exponents(R, heun, gauss, hints);
    rep.w_coefficient_ok = verify_w(R, heun, gauss);
    UCheck u = verify_u(R, heun, gauss);
    rep.u_identity_ok = u.ok;
    rep.u_sign = u.sign;
    if (R.is_polynomial()) rep.structure = zero_structure(R.num(), heun);
    rep.sign_convention_note =
        "derived identity: U = (R'/R)(S'/S) = +(alpha*beta*t - q)/(a*b*t(t-1)(t-d)); the "
        "printed form of this identity carries a minus sign, which direct computation "
        "of subcases 1a and 2a contradicts";
    return rep;
}

PullbackReport verify_pullback(const Reduction& red, const HeunEquation& heun) {
    MapStructure ms = structure_of_reduction(red);
    return verify_pullback(RationalMap(red.R), heun, red.gauss, &ms);
}

// ---------------------------------------------------------------------------
// Numeric fallback for user-supplied maps without structure hints
// ---------------------------------------------------------------------------

namespace {

constexpr double kSnapRadius = 1e-9;
constexpr double kClusterRadius = 5e-3;
constexpr double kSeparationGap = 5e-2;

std::vector<std::complex<double>> aberth_roots(const Poly& p) {
    int n = p.degree();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(k).to_complex();

    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int k = n; k >= 0; --k) v = v * x + c[static_cast<std::size_t>(k)];
        return v;
    };
    auto deriv = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int k = n; k >= 1; --k) v = v * x + c[static_cast<std::size_t>(k)] * double(k);
        return v;
    };

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(0.5 + 0.3 * k, 2.0 * M_PI * k / n + 0.4);
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> zi = z[static_cast<std::size_t>(i)];
            std::complex<double> dv = deriv(zi);
            std::complex<double> pv = eval(zi);
            if (std::abs(dv) < 1e-300) {
                z[static_cast<std::size_t>(i)] += 1e-6;
                continue;
            }
            std::complex<double> ratio = pv / dv;
            std::complex<double> sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
            std::complex<double> step = ratio / (1.0 - ratio * sum);
            z[static_cast<std::size_t>(i)] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

struct NumericCluster {
    std::complex<double> center;
    int multiplicity;
};

std::vector<NumericCluster> cluster_roots(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<std::complex<double>> roots = aberth_roots(p);
    std::vector<NumericCluster> clusters;
    std::vector<bool> taken(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (taken[i]) continue;
        std::complex<double> sum = roots[i];
        int count = 1;
        taken[i] = true;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (taken[j]) continue;
            if (std::abs(roots[j] - roots[i]) < kClusterRadius) {
                sum += roots[j];
                ++count;
                taken[j] = true;
            }
        }
        clusters.push_back({sum / double(count), count});
    }
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (std::size_t j = i + 1; j < clusters.size(); ++j)
            if (std::abs(clusters[i].center - clusters[j].center) < kSeparationGap)
                raise(errc::uncertified_root, "root clusters too close to certify multiplicities");
    return clusters;
}

bool maps_exponents_numeric(const RationalMap& R, const HeunEquation& heun,
                            const GaussEquation& gauss) {
    const Poly& N = R.num();
    const Poly& D = R.den();
    Poly NmD = N - D;
    int n = R.map_degree();

    int branching = 0;
    // Labeled points are detected exactly; only the multiplicity pattern of
    // the remaining (ordinary) roots needs numerics.
    auto handle_fiber = [&](Poly poly, int target) -> bool {
        ExponentPair want = gauss_exponents_of_target(gauss, target);
        if (poly.degree() < 1) return true;
        for (const Surd& s : {Surd(0), Surd(1), heun.d()}) {
            int k = poly.root_multiplicity(s);
            if (k == 0) continue;
            branching += k - 1;
            if (exponents_at(heun, Point(s)).scaled(Surd(make_rational(1, k))) != want)
                return false;
            for (int i = 0; i < k; ++i) poly = poly.exact_div(Poly::linear_root(s));
        }
        for (const NumericCluster& cl : cluster_roots(poly)) {
            branching += cl.multiplicity - 1;
            ExponentPair have{Surd(0), Surd(make_rational(1, cl.multiplicity))};
            if (have != want) return false;
        }
        return true;
    };

    if (!handle_fiber(N, 0)) return false;
    if (!handle_fiber(NmD, 1)) return false;
    if (!handle_fiber(D, 2)) return false;

    // Infinity's own image and multiplicity.
    int target;
    int mult;
    if (N.degree() > D.degree()) {
        target = 2;
        mult = N.degree() - D.degree();
    } else if (N.degree() < D.degree()) {
        target = 0;
        mult = D.degree() - N.degree();
    } else {
        Surd c = N.leading() / D.leading();
        if (c == Surd(1)) {
            target = 1;
            mult = D.degree() - NmD.degree();
        } else {
            target = 3;
            Poly NcD = N - Poly(c) * D;
            mult = D.degree() - NcD.degree();
        }
    }
    branching += mult - 1;
    {
        ExponentPair want = gauss_exponents_of_target(gauss, target);
        ExponentPair have =
            exponents_at(heun, Point::infinity()).scaled(Surd(make_rational(1, mult)));
        if (have != want) return false;
    }

    // Any critical point beyond the three fibers maps to an ordinary value,
    // where multiplicity > 1 is impossible; the Riemann-Hurwitz total is the
    // sharp test for that.
    if (branching != 2 * n - 2) return false;

    // Singular points off all three fibers map simply to ordinary values.
    for (const Surd& s : {Surd(0), Surd(1), heun.d()}) {
        if ((!N.is_zero() && N(s).is_zero()) || NmD(s).is_zero() ||
            (D.degree() >= 1 && D(s).is_zero()))
            continue;
        if (exponents_at(heun, Point(s)) != ExponentPair{Surd(0), Surd(1)}) return false;
    }
    return true;
}

} // namespace

} // namespace heunred
