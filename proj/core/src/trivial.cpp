#include "heunred/trivial.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "heunred/series.hpp"

namespace heunred {

Signature subcase_signature(SubcaseId id) {
    switch (id) {
        case SubcaseId::S1a:
        case SubcaseId::S1b:
        case SubcaseId::S2b:
        case SubcaseId::S2c: return Signature::S211;
        default: return Signature::S310;
    }
}

bool TrivialSubstitution::fixes_zero() const {
    return composed(Point(Surd(0))) == Point(Surd(0));
}

namespace {

RationalMap postcompose_mobius(const Mobius& m, const RationalMap& f) {
    return (RationalMap(m.p()) * f + RationalMap(m.q())) /
           (RationalMap(m.r()) * f + RationalMap(m.s()));
}

// All Mobius maps carrying the source quadruple onto the target quadruple
// (as sets): realized bijections are those preserving the cross-ratio.
std::vector<Mobius> mobius_set_maps(const std::array<Point, 4>& src,
                                    const std::array<Point, 4>& dst) {
    std::vector<Mobius> out;
    std::array<int, 4> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        Mobius m = Mobius::through(src[0], src[1], src[2], dst[static_cast<std::size_t>(perm[0])],
                                   dst[static_cast<std::size_t>(perm[1])],
                                   dst[static_cast<std::size_t>(perm[2])]);
        if (m(src[3]) != dst[static_cast<std::size_t>(perm[3])]) continue;
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Transport one canonical fiber of R1 through M1^{-1} and deposit it at the
// composed map's target w; infinity may enter or leave the fiber.
void transport_fiber(const SideStructure& fiber, bool fiber_is_infinity, int inf_multiplicity,
                     const Mobius& M1, int w, MapStructure& ms, int degree) {
    SideStructure* dest = (w == 0) ? &ms.to0 : (w == 1) ? &ms.to1 : &ms.to_inf;
    Mobius inv = M1.inverse();

    if (fiber_is_infinity) {
        Point pre = inv(Point::infinity());
        if (pre.is_infinity()) {
            ms.infinity_target = w;
            ms.infinity_multiplicity = degree;
        } else {
            dest->points.emplace_back(pre.value(), inf_multiplicity);
        }
        return;
    }
    for (const auto& [pt, k] : fiber.points) {
        Point pre = inv(Point(pt));
        if (pre.is_infinity()) {
            ms.infinity_target = w;
            ms.infinity_multiplicity = k;
        } else {
            dest->points.emplace_back(pre.value(), k);
        }
    }
    for (const auto& blk : fiber.blocks) {
        RationalMap moved = RationalMap(blk.factor).compose_mobius(M1);
        Poly factor = moved.num().monic();
        if (factor.degree() != blk.factor.degree())
            raise(errc::internal, "block degree changed under Mobius transport");
        dest->blocks.push_back({factor, blk.multiplicity});
    }
}

const std::array<Point, 3> kGaussPoints = {Point(Surd(0)), Point(Surd(1)), Point::infinity()};

int gauss_point_index(const Point& p) {
    if (p == kGaussPoints[0]) return 0;
    if (p == kGaussPoints[1]) return 1;
    if (p.is_infinity()) return 2;
    raise(errc::internal, "M2 moved a Gauss singular point off {0,1,inf}");
}

} // namespace

std::vector<TrivialSubstitution> enumerate_trivial(SubcaseId id, const Surd& d) {
    const SubcaseData& data = canonical_subcase_data(id);
    if (!orbit_of(data.D).contains(d))
        raise(errc::not_on_orbit, "d = " + d.str() + " is not on the orbit of subcase " +
                                      subcase_name(id));

    std::array<Point, 4> src = {Point(Surd(0)), Point(Surd(1)), Point(d), Point::infinity()};
    std::array<Point, 4> dst = {Point(Surd(0)), Point(Surd(1)), Point(data.D), Point::infinity()};
    std::vector<Mobius> m1s = mobius_set_maps(src, dst);

    std::vector<Mobius> m2s;
    {
        std::array<int, 3> perm = {0, 1, 2};
        do {
            Mobius m = Mobius::through(kGaussPoints[0], kGaussPoints[1], kGaussPoints[2],
                                       kGaussPoints[static_cast<std::size_t>(perm[0])],
                                       kGaussPoints[static_cast<std::size_t>(perm[1])],
                                       kGaussPoints[static_cast<std::size_t>(perm[2])]);
            m2s.push_back(m);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    RationalMap r1(data.R1);
    std::vector<TrivialSubstitution> out;
    for (const Mobius& M1 : m1s) {
        RationalMap inner = r1.compose_mobius(M1);
        for (const Mobius& M2 : m2s) {
            TrivialSubstitution sub;
            sub.subcase = id;
            sub.d = d;
            sub.M1 = M1;
            sub.M2 = M2;
            sub.composed = postcompose_mobius(M2, inner);
            sub.signature = subcase_signature(id);

            bool dup = false;
            for (const TrivialSubstitution& t : out)
                if (t.composed == sub.composed) dup = true;
            if (dup) continue;

            // Branching data: the fiber of R1 over v lands at w = M2(v).
            for (int v = 0; v < 3; ++v) {
                int w = gauss_point_index(M2(kGaussPoints[static_cast<std::size_t>(v)]));
                if (v == 0)
                    transport_fiber(data.side0, false, 0, M1, w, sub.structure, data.degree);
                else if (v == 1)
                    transport_fiber(data.side1, false, 0, M1, w, sub.structure, data.degree);
                else
                    transport_fiber({}, true, data.degree, M1, w, sub.structure, data.degree);
            }
            if (!validate_structure(sub.composed, sub.structure))
                raise(errc::internal, "constructive branching data failed validation");
            out.push_back(std::move(sub));
        }
    }
    std::sort(out.begin(), out.end(), [](const TrivialSubstitution& x, const TrivialSubstitution& y) {
        const auto& xc = x.composed;
        const auto& yc = y.composed;
        if (xc.num().degree() != yc.num().degree()) return xc.num().degree() < yc.num().degree();
        if (xc.den().degree() != yc.den().degree()) return xc.den().degree() < yc.den().degree();
        for (int k = 0; k <= xc.num().degree(); ++k)
            if (xc.num().coeff(k) != yc.num().coeff(k))
                return lex_less(xc.num().coeff(k), yc.num().coeff(k));
        for (int k = 0; k <= xc.den().degree(); ++k)
            if (xc.den().coeff(k) != yc.den().coeff(k))
                return lex_less(xc.den().coeff(k), yc.den().coeff(k));
        return false;
    });
    return out;
}

int count_zero_fixing(const std::vector<TrivialSubstitution>& subs) {
    int n = 0;
    for (const TrivialSubstitution& s : subs)
        if (s.fixes_zero()) ++n;
    return n;
}

namespace {

std::optional<ExponentPair> fiber_exponents(const MapStructure& ms, int w,
                                            const HeunEquation& eq) {
    const SideStructure& side = (w == 0) ? ms.to0 : (w == 1) ? ms.to1 : ms.to_inf;
    std::optional<ExponentPair> common;
    auto feed = [&](const ExponentPair& e) {
        if (!common)
            common = e;
        else if (*common != e)
            common = std::nullopt;
        return common.has_value();
    };
    for (const auto& [pt, k] : side.points)
        if (!feed(exponents_at(eq, Point(pt)).scaled(Surd(make_rational(1, k))))) return std::nullopt;
    for (const auto& blk : side.blocks)
        if (!feed({Surd(0), Surd(make_rational(1, blk.multiplicity))})) return std::nullopt;
    if (ms.infinity_target == w)
        if (!feed(exponents_at(eq, Point::infinity())
                      .scaled(Surd(make_rational(1, ms.infinity_multiplicity)))))
            return std::nullopt;
    return common;
}

} // namespace

TrivialApplicability trivial_applicable(const HeunEquation& eq, const TrivialSubstitution& sub) {
    if (!is_trivial(eq))
        raise(errc::nontrivial_equation, "trivial_applicable needs alpha beta = 0 and q = 0");
    if (eq.d() != sub.d)
        raise(errc::not_on_orbit, "equation's d does not match the substitution");

    TrivialApplicability res;
    std::optional<ExponentPair> e0 = fiber_exponents(sub.structure, 0, eq);
    std::optional<ExponentPair> e1 = fiber_exponents(sub.structure, 1, eq);
    std::optional<ExponentPair> einf = fiber_exponents(sub.structure, 2, eq);
    if (!e0 || !e1 || !einf) return res;
    if (!e0->contains(Surd(0))) return res;

    GaussEquation g;
    g.c = Surd(1) - e0->other(Surd(0));
    if (einf->contains(Surd(0))) {
        g.a = Surd(0);
        g.b = einf->other(Surd(0));
    } else {
        g.a = einf->e1;
        g.b = einf->e2;
    }
    if (*e1 != exponents_at(g, Point(Surd(1)))) return res;
    // Cross-check through the verifier's exponent test.
    if (!maps_exponents(sub.composed, eq, g, &sub.structure)) return res;
    res.applicable = true;
    res.gauss = g;
    return res;
}

CuriousQuartic curious_quartic() {
    Surd i = Surd::root(1);
    Surd half = Surd(make_rational(1, 2));

    // 8i t (t-1) (t-2) / (t - 1 + i)^4
    Poly num = (Surd(8) * i) * Poly::t() * Poly::linear_root(Surd(1)) * Poly::linear_root(Surd(2));
    Poly den = Poly::linear_root(Surd(1) - i).pow(4);

    // 1 - ((t-1-i)/(t-1+i))^4
    RationalMap m(Poly::linear_root(Surd(1) + i), Poly::linear_root(Surd(1) - i));

    MapStructure structure;
    structure.to0.points = {{Surd(0), 1}, {Surd(1), 1}, {Surd(2), 1}};
    structure.infinity_target = 0;
    structure.infinity_multiplicity = 1;
    structure.to1.points = {{Surd(1) + i, 4}};
    structure.to_inf.points = {{Surd(1) - i, 4}};

    return CuriousQuartic{RationalMap(num, den),
                          RationalMap(1) - m * m * m * m,
                          structure,
                          GaussEquation{Surd(0), Surd(make_rational(1, 4)), half},
                          HeunEquation(Surd(2), Surd(0), Surd(0), half, half, half)};
}

// ---------------------------------------------------------------------------
// Pointwise tilde-level verification
// ---------------------------------------------------------------------------

namespace {

bool fractional(const Surd& e) { return !(e.is_rational() && is_integer(e.re_part())); }

// A sample point is branch-safe when no principal-power base it feeds lands
// on the negative real axis.
bool off_cut(std::complex<double> v) {
    return !(v.real() < 0.0 && std::abs(v.imag()) < 1e-9 * (1.0 + std::abs(v.real())));
}

} // namespace

TildeCheckReport verify_tilde_reduction(const TildeReductionSpec& spec, int N, double tol) {
    TildeCheckReport rep;

    // Leading behavior of the map at t = 0: Q(t) ~ lambda t^mu.
    const Poly& num = spec.map.num();
    if (num.is_zero() || !num.coeff(0).is_zero())
        raise(errc::undefined_side, "the substitution must map t = 0 to z = 0");
    int mu = num.root_multiplicity(Surd(0));
    Poly shifted = num;
    for (int k = 0; k < mu; ++k) shifted = shifted.exact_div(Poly::t());
    Surd lambda = shifted(Surd(0)) / spec.map.den()(Surd(0));

    Surd e_l = spec.lhs_tilde ? Surd(1) - spec.heun.gamma() : Surd(0);
    Surd e_r = spec.rhs_tilde ? Surd(1) - spec.gauss.c : Surd(0);

    // Exponent matching of the two leading powers.
    if (e_l != Surd(mu) * e_r)
        raise(errc::undefined_side, "leading exponents do not match: 1-gamma != mu (1-c)");

    std::complex<double> normalization;
    if (spec.normalization) {
        normalization = *spec.normalization;
    } else {
        normalization = principal_pow(lambda.to_complex(), -e_r.to_complex());
        for (const PowerFactor& pf : spec.rhs_prefactors) {
            Point base0 = pf.base(Point(Surd(0)));
            if (base0.is_infinity() || base0.value().is_zero())
                raise(errc::undefined_side, "prefactor base vanishes or blows up at t = 0");
            normalization *= principal_pow(base0.value().to_complex(), -pf.exponent.to_complex());
        }
    }
    rep.normalization = normalization;

    ComplexSeries lhs_series =
        spec.lhs_tilde ? tilde_series(spec.heun, N).series : heun_series(spec.heun, N);
    ComplexSeries rhs_series =
        spec.rhs_tilde ? tilde_series(spec.gauss, N).series : gauss_series(spec.gauss, N);

    const double radius = 1.0 / 20.0;
    const std::array<double, 5> angles = {0.37, 1.1, -0.53, 2.2, -1.7};
    std::complex<double> lam = lambda.to_complex();

    for (double theta : angles) {
        // Branch safety along the whole sample segment.
        if (fractional(e_r) && std::abs(std::arg(lam) + mu * theta) > M_PI - 0.2) continue;
        bool safe = true;
        std::vector<std::complex<double>> pts;
        for (int j = 1; j <= 10; ++j) {
            std::complex<double> t = std::polar(radius * j / 10.0, theta);
            if (fractional(e_r) && !off_cut(spec.map.eval(t))) safe = false;
            for (const PowerFactor& pf : spec.rhs_prefactors)
                if (fractional(pf.exponent) && !off_cut(pf.base.eval(t))) safe = false;
            pts.push_back(t);
        }
        if (!safe) continue;

        rep.max_mismatch = 0.0;
        for (std::complex<double> t : pts) {
            std::complex<double> left =
                principal_pow(t, e_l.to_complex()) * lhs_series.eval(t);
            std::complex<double> w = spec.map.eval(t);
            std::complex<double> right =
                normalization * principal_pow(w, e_r.to_complex()) * rhs_series.eval(w);
            for (const PowerFactor& pf : spec.rhs_prefactors)
                right *= principal_pow(pf.base.eval(t), pf.exponent.to_complex());
            rep.max_mismatch = std::max(rep.max_mismatch, std::abs(left - right));
        }
        rep.pass = rep.max_mismatch <= tol;
        return rep;
    }
    raise(errc::branch_ambiguity, "no sample ray avoids the branch cuts");
}

} // namespace heunred
