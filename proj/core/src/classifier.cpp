#include "heunred/classifier.hpp"

#include <algorithm>
#include <array>

#include "heunred/cross_ratio.hpp"

namespace heunred {

const char* reason_name(NotReducibleReason r) {
    switch (r) {
        case NotReducibleReason::AlphaBetaZero: return "alpha-beta-zero";
        case NotReducibleReason::DOffOrbit: return "d-off-orbit";
        case NotReducibleReason::AccessoryMismatch: return "accessory-mismatch";
        case NotReducibleReason::ExponentMismatch: return "exponent-mismatch";
    }
    return "?";
}

namespace {

Point apply_inverse(const Mobius& m, const Surd& v) { return m.inverse()(Point(v)); }

SideStructure transport_side(const SideStructure& side, const Mobius& A1) {
    SideStructure out;
    Mobius inv = A1.inverse();
    for (const auto& [pt, k] : side.points) {
        Point img = inv(Point(pt));
        if (img.is_infinity()) raise(errc::internal, "affine transport produced infinity");
        out.points.emplace_back(img.value(), k);
    }
    for (const auto& blk : side.blocks) {
        Poly moved = blk.factor.compose(A1.as_poly()).monic();
        if (moved.degree() != blk.factor.degree())
            raise(errc::internal, "affine transport changed block degree");
        out.blocks.push_back({moved, blk.multiplicity});
    }
    return out;
}

// The nonzero Gauss exponent this side forces at its z-target: every entry
// must contribute the same value (exponents of the preimage divided by the
// multiplicity).  nullopt when the entries disagree, i.e. the subcase's
// exponent condition fails.
std::optional<Surd> side_exponent_value(const SideStructure& side, const HeunEquation& eq) {
    std::optional<Surd> common;
    auto feed = [&](const Surd& v) {
        if (!common)
            common = v;
        else if (*common != v)
            common = std::nullopt;
        return common.has_value();
    };
    for (const auto& [pt, k] : side.points) {
        Surd inv_k = Surd(make_rational(1, k));
        Surd value;
        if (pt == Surd(0))
            value = (Surd(1) - eq.gamma()) * inv_k;
        else if (pt == Surd(1))
            value = (Surd(1) - eq.delta()) * inv_k;
        else if (pt == eq.d())
            value = (Surd(1) - eq.epsilon()) * inv_k;
        else
            value = inv_k;  // ordinary point
        if (!feed(value)) return std::nullopt;
    }
    for (const auto& blk : side.blocks) {
        // Block roots must all be ordinary; the factor cannot vanish at a
        // singular point by construction, asserted cheaply here.
        for (const Surd& s : {Surd(0), Surd(1), eq.d()})
            if (blk.factor(s).is_zero()) raise(errc::internal, "block contains a singular point");
        if (!feed(Surd(make_rational(1, blk.multiplicity)))) return std::nullopt;
    }
    return common;
}

struct ComposedMap {
    Poly R;        // final map with R(0) = 0
    bool a2_flip;  // whether A2(z) = 1 - z was applied
};

ComposedMap compose_map(const SubcaseData& data, const Mobius& A1) {
    Poly R0 = data.R1.compose(A1.as_poly());
    Surd at0 = R0(Surd(0));
    if (at0 == Surd(0)) return {R0, false};
    if (at0 == Surd(1)) return {Poly(1) - R0, true};
    raise(errc::internal, "composed map sends 0 outside {0,1}");
}

} // namespace

GaussEquation gauss_parameters(const Reduction& red, const HeunEquation& eq) {
    int n = red.R.degree();
    Surd inv_n = Surd(make_rational(1, n));
    std::optional<Surd> x0 = side_exponent_value(red.side0, eq);
    std::optional<Surd> x1 = side_exponent_value(red.side1, eq);
    if (!x0 || !x1)
        raise(errc::inconsistent_exponents, "preimages of one z-point force different exponents");
    GaussEquation g{eq.alpha() * inv_n, eq.beta() * inv_n, Surd(1) - *x0};
    if (*x1 != g.c - g.a - g.b)
        raise(errc::inconsistent_exponents, "z = 1 exponent inconsistent with (a, b; c)");
    return g;
}

namespace {

bool reduction_less(const Reduction& x, const Reduction& y) {
    if (x.subcase != y.subcase) return x.subcase < y.subcase;
    if (x.d != y.d) return lex_less(x.d, y.d);
    return x.a2_flip < y.a2_flip;
}

std::optional<Reduction> try_subcase(const HeunEquation& eq, const SubcaseData& data,
                                     const Mobius& A1, bool check_accessory_only,
                                     bool& accessory_ok) {
    Point preq = apply_inverse(A1, data.p0);
    accessory_ok = preq.is_finite() && eq.p() == preq.value();
    if (!accessory_ok || check_accessory_only) return std::nullopt;

    Reduction red;
    red.subcase = data.id;
    red.d = eq.d();
    red.p = eq.p();
    red.A1 = A1;
    ComposedMap cm = compose_map(data, A1);
    red.a2_flip = cm.a2_flip;
    red.R = cm.R;
    SideStructure s0 = transport_side(data.side0, A1);
    SideStructure s1 = transport_side(data.side1, A1);
    red.side0 = cm.a2_flip ? s1 : s0;
    red.side1 = cm.a2_flip ? s0 : s1;
    if (subcase_is_case1(data.id)) red.d0 = red.p;

    if (!side_exponent_value(red.side0, eq) || !side_exponent_value(red.side1, eq))
        return std::nullopt;  // exponent condition fails
    red.gauss = gauss_parameters(red, eq);
    return red;
}

} // namespace

ClassifyResult classify(const HeunEquation& eq) {
    if (!degenerate_singularities(eq).empty())
        raise(errc::degenerate_equation,
              "equation has fewer than four singular points; classify does not apply");
    if (is_trivial(eq))
        raise(errc::trivial_equation,
              "trivial equation (alpha beta = 0, q = 0); use the trivial-reduction enumeration");

    ClassifyResult result;
    if (eq.alpha_beta().is_zero()) {
        result.reason = NotReducibleReason::AlphaBetaZero;
        return result;
    }
    std::optional<CanonicalTarget> target = canonical_target(eq.d());
    if (!target) {
        result.reason = NotReducibleReason::DOffOrbit;
        return result;
    }

    bool any_accessory_ok = false;
    for (SubcaseId id : family_subcases(target->family)) {
        const SubcaseData& data = canonical_subcase_data(id);
        for (const Mobius& A1 : affine_maps_to(eq.d(), data.D)) {
            bool accessory_ok = false;
            std::optional<Reduction> red = try_subcase(eq, data, A1, false, accessory_ok);
            any_accessory_ok = any_accessory_ok || accessory_ok;
            if (!red) continue;
            bool dup = false;
            for (const Reduction& r : result.reductions)
                if (r.subcase == red->subcase && r.R == red->R) dup = true;
            if (!dup) result.reductions.push_back(std::move(*red));
        }
    }
    if (result.reductions.empty())
        result.reason = any_accessory_ok ? NotReducibleReason::ExponentMismatch
                                         : NotReducibleReason::AccessoryMismatch;
    std::sort(result.reductions.begin(), result.reductions.end(), reduction_less);
    return result;
}

std::vector<CulminationRow> culmination_table() {
    static const std::array<std::pair<Family, std::vector<int>>, 5> rows = {{
        {Family::F1a, {2, 4}},
        {Family::F1b, {3}},
        {Family::F2a, {3, 6}},
        {Family::F2b, {4}},
        {Family::F2c, {5}},
    }};
    std::vector<CulminationRow> table;
    for (const auto& [family, degrees] : rows) {
        const SubcaseData& data = canonical_subcase_data(family_subcases(family).front());
        for (const Surd& d : orbit_of(data.D).values) {
            std::optional<Surd> p;
            for (const Mobius& A1 : affine_maps_to(d, data.D)) {
                Point preq = apply_inverse(A1, data.p0);
                if (preq.is_infinity()) raise(errc::internal, "accessory transport hit infinity");
                if (p && *p != preq.value())
                    raise(errc::internal, "ambiguous accessory transport along degenerate orbit");
                p = preq.value();
            }
            table.push_back({family, d, *p, degrees});
        }
    }
    std::sort(table.begin(), table.end(), [](const CulminationRow& x, const CulminationRow& y) {
        if (x.family != y.family) return x.family < y.family;
        return lex_less(x.d, y.d);
    });
    return table;
}

// ---------------------------------------------------------------------------
// Symbolic enumeration
// ---------------------------------------------------------------------------

namespace {

// Affine expression lin . (beta, gamma, delta, epsilon) + cst, where the
// constant part may involve the free symbol alpha.
struct AffineExpr {
    std::array<Surd, 4> lin{Surd(0), Surd(0), Surd(0), Surd(0)};
    ParamForm cst;
};

AffineExpr side_entry_expr(const Surd& pt, int k, const Surd& d) {
    AffineExpr e;
    Surd inv_k = Surd(make_rational(1, k));
    e.cst = ParamForm(inv_k);
    int idx = -1;
    if (pt == Surd(0))
        idx = 1;  // gamma
    else if (pt == Surd(1))
        idx = 2;  // delta
    else if (pt == d)
        idx = 3;  // epsilon
    if (idx >= 0) e.lin[static_cast<std::size_t>(idx)] = -inv_k;
    return e;
}

struct SolvedParams {
    ParamForm beta, gamma, delta, epsilon;
    bool beta_free, gamma_free;
};

// Solve the subcase's exponent conditions plus the Fuchs relation for
// (beta, gamma, delta, epsilon) as linear forms in the free symbols.
SolvedParams solve_exponent_forms(const SideStructure& s0, const SideStructure& s1,
                                  const Surd& d) {
    struct Row {
        std::array<Surd, 4> a;  // coefficients of (beta, gamma, delta, epsilon)
        ParamForm rhs;
    };
    std::vector<Row> rows;

    auto add_side = [&](const SideStructure& side) {
        std::vector<AffineExpr> exprs;
        for (const auto& [pt, k] : side.points) exprs.push_back(side_entry_expr(pt, k, d));
        for (const auto& blk : side.blocks) {
            AffineExpr e;
            e.cst = ParamForm(Surd(make_rational(1, blk.multiplicity)));
            exprs.push_back(e);
        }
        for (std::size_t i = 1; i < exprs.size(); ++i) {
            Row r;
            for (int j = 0; j < 4; ++j)
                r.a[static_cast<std::size_t>(j)] =
                    exprs[0].lin[static_cast<std::size_t>(j)] - exprs[i].lin[static_cast<std::size_t>(j)];
            r.rhs = exprs[i].cst - exprs[0].cst;
            rows.push_back(std::move(r));
        }
    };
    add_side(s0);
    add_side(s1);

    // Fuchs: -beta + gamma + delta + epsilon = alpha + 1.
    rows.push_back({{Surd(-1), Surd(1), Surd(1), Surd(1)}, ParamForm::alpha() + ParamForm(Surd(1))});

    // Reduced row echelon, pivoting epsilon, delta, gamma, beta in that order
    // so the free symbols land on beta and gamma.
    const int order[4] = {3, 2, 1, 0};
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    std::vector<bool> used(rows.size(), false);
    for (int col : order) {
        int found = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            if (!rows[r].a[static_cast<std::size_t>(col)].is_zero()) {
                found = static_cast<int>(r);
                break;
            }
        }
        if (found < 0) continue;
        used[static_cast<std::size_t>(found)] = true;
        pivot_row[static_cast<std::size_t>(col)] = found;
        Row& pr = rows[static_cast<std::size_t>(found)];
        Surd inv = pr.a[static_cast<std::size_t>(col)].inverse();
        for (auto& c : pr.a) c *= inv;
        pr.rhs *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == found) continue;
            Surd f = rows[r].a[static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < 4; ++j)
                rows[r].a[static_cast<std::size_t>(j)] -= f * pr.a[static_cast<std::size_t>(j)];
            rows[r].rhs -= f * pr.rhs;
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        bool all_zero = true;
        for (const auto& c : rows[r].a) all_zero = all_zero && c.is_zero();
        if (all_zero && rows[r].rhs != ParamForm())
            raise(errc::internal, "inconsistent exponent conditions in catalogue data");
        if (!all_zero) raise(errc::internal, "unprocessed exponent condition row");
    }

    // Free columns get their own symbols.
    std::array<ParamForm, 4> sol;
    if (pivot_row[0] < 0) sol[0] = ParamForm::beta();
    if (pivot_row[1] < 0) sol[1] = ParamForm::gamma();
    if (pivot_row[2] < 0 || pivot_row[3] < 0)
        raise(errc::internal, "delta/epsilon unexpectedly free");
    for (int col = 0; col < 4; ++col) {
        int pr = pivot_row[static_cast<std::size_t>(col)];
        if (pr < 0) continue;
        ParamForm f = rows[static_cast<std::size_t>(pr)].rhs;
        for (int other = 0; other < 4; ++other) {
            if (other == col) continue;
            const Surd& c = rows[static_cast<std::size_t>(pr)].a[static_cast<std::size_t>(other)];
            if (c.is_zero()) continue;
            if (pivot_row[static_cast<std::size_t>(other)] >= 0)
                raise(errc::internal, "echelon form references a pivot column");
            f -= c * sol[static_cast<std::size_t>(other)];
        }
        sol[static_cast<std::size_t>(col)] = f;
    }

    return {sol[0], sol[1], sol[2], sol[3], pivot_row[0] < 0, pivot_row[1] < 0};
}

ParamForm side_exponent_form(const SideStructure& side, const Surd& d, const SolvedParams& sp) {
    std::optional<ParamForm> common;
    auto feed = [&](const ParamForm& f) {
        if (!common)
            common = f;
        else if (*common != f)
            raise(errc::internal, "solved forms disagree within one side");
    };
    auto param_form = [&](int idx) -> const ParamForm& {
        switch (idx) {
            case 1: return sp.gamma;
            case 2: return sp.delta;
            default: return sp.epsilon;
        }
    };
    for (const auto& [pt, k] : side.points) {
        Surd inv_k = Surd(make_rational(1, k));
        if (pt == Surd(0) || pt == Surd(1) || pt == d) {
            int idx = pt == Surd(0) ? 1 : (pt == Surd(1) ? 2 : 3);
            feed((ParamForm(Surd(1)) - param_form(idx)) * inv_k);
        } else {
            feed(ParamForm(inv_k));
        }
    }
    for (const auto& blk : side.blocks)
        feed(ParamForm(Surd(make_rational(1, blk.multiplicity))));
    return *common;
}

std::vector<ReductionTemplate> build_templates() {
    std::vector<ReductionTemplate> out;
    for (SubcaseId id : all_subcases()) {
        const SubcaseData& data = canonical_subcase_data(id);
        for (const Surd& d : orbit_of(data.D).values) {
            std::vector<ReductionTemplate> here;
            for (const Mobius& A1 : affine_maps_to(d, data.D)) {
                ReductionTemplate t;
                t.subcase = id;
                t.d = d;
                t.A1 = A1;
                Point preq = apply_inverse(A1, data.p0);
                t.p = preq.value();
                ComposedMap cm = compose_map(data, A1);
                t.a2_flip = cm.a2_flip;
                t.R = cm.R;
                SideStructure s0 = transport_side(data.side0, A1);
                SideStructure s1 = transport_side(data.side1, A1);
                t.side0 = cm.a2_flip ? s1 : s0;
                t.side1 = cm.a2_flip ? s0 : s1;

                SolvedParams sp = solve_exponent_forms(s0, s1, d);
                t.alpha = ParamForm::alpha();
                t.beta = sp.beta;
                t.gamma = sp.gamma;
                t.delta = sp.delta;
                t.beta_free = sp.beta_free;
                t.gamma_free = sp.gamma_free;

                int n = t.R.degree();
                Surd inv_n = Surd(make_rational(1, n));
                t.gauss_a = ParamForm::alpha() * inv_n;
                t.gauss_b = sp.beta * inv_n;
                t.gauss_c = ParamForm(Surd(1)) - side_exponent_form(t.side0, d, sp);

                bool dup = false;
                for (const ReductionTemplate& u : here)
                    if (u.R == t.R) {
                        dup = true;
                        if (u.p != t.p || u.delta != t.delta || u.gauss_c != t.gauss_c)
                            raise(errc::internal, "degenerate-orbit duplicates disagree");
                    }
                if (!dup) here.push_back(std::move(t));
            }
            if (here.size() != 1)
                raise(errc::internal, "expected exactly one reduction per (subcase, d)");
            out.push_back(std::move(here.front()));
        }
    }

    std::sort(out.begin(), out.end(), [](const ReductionTemplate& x, const ReductionTemplate& y) {
        if (x.subcase != y.subcase) return x.subcase < y.subcase;
        if (x.d != y.d) return lex_less(x.d, y.d);
        return x.a2_flip < y.a2_flip;
    });

    // Link d <-> 1/d partners within each subcase.
    for (std::size_t i = 0; i < out.size(); ++i) {
        Surd inv_d = Surd(1) / out[i].d;
        if (inv_d == out[i].d) {
            out[i].partner = -1;  // the (d, p) = (-1, 0) self-paired reductions
            continue;
        }
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (out[j].subcase == out[i].subcase && out[j].d == inv_d) {
                out[i].partner = static_cast<int>(j);
                if (out[j].p != out[i].p / out[i].d)
                    raise(errc::internal, "partner accessory mismatch");
            }
        }
        if (out[i].partner < 0) raise(errc::internal, "missing d <-> 1/d partner");
    }
    return out;
}

} // namespace

HeunEquation ReductionTemplate::instantiate_heun(const Surd& av, const Surd& bv,
                                                 const Surd& gv) const {
    Surd a = alpha(av, bv, gv), b = beta(av, bv, gv);
    return HeunEquation(d, a * b * p, a, b, gamma(av, bv, gv), delta(av, bv, gv));
}

GaussEquation ReductionTemplate::instantiate_gauss(const Surd& av, const Surd& bv,
                                                   const Surd& gv) const {
    return {gauss_a(av, bv, gv), gauss_b(av, bv, gv), gauss_c(av, bv, gv)};
}

Reduction ReductionTemplate::instantiate(const Surd& av, const Surd& bv, const Surd& gv) const {
    Reduction red;
    red.subcase = subcase;
    red.d = d;
    red.p = p;
    red.A1 = A1;
    red.a2_flip = a2_flip;
    red.R = R;
    red.side0 = side0;
    red.side1 = side1;
    red.gauss = instantiate_gauss(av, bv, gv);
    if (subcase_is_case1(subcase)) red.d0 = p;
    return red;
}

const std::vector<ReductionTemplate>& enumerate_all_reductions() {
    static const std::vector<ReductionTemplate> table = build_templates();
    return table;
}

int count_raw_substitutions() {
    int count = 0;
    for (SubcaseId id : all_subcases()) {
        const SubcaseData& data = canonical_subcase_data(id);
        for (const Surd& d : orbit_of(data.D).values) {
            std::vector<Poly> seen;
            for (const Mobius& A1 : affine_maps_to(d, data.D)) {
                Poly R0 = data.R1.compose(A1.as_poly());
                for (const Poly& R : {R0, Poly(1) - R0}) {
                    if (std::find(seen.begin(), seen.end(), R) == seen.end()) seen.push_back(R);
                }
            }
            count += static_cast<int>(seen.size());
        }
    }
    return count;
}

} // namespace heunred
