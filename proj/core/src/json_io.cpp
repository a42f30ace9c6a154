#include "heunred/json_io.hpp"

namespace heunred {

Json surd_to_json(const Surd& s) { return s.str(); }

Surd surd_from_json(const Json& j) {
    if (j.is_string()) return Surd::parse(j.get<std::string>());
    if (j.is_number_integer()) return Surd(j.get<long>());
    raise(errc::malformed_input, "expected an exact value string, got " + j.dump());
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const Surd& c : p.coefficients()) arr.push_back(surd_to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) raise(errc::malformed_input, "polynomial must be a coefficient array");
    std::vector<Surd> c;
    for (const auto& e : j) c.push_back(surd_from_json(e));
    return Poly(std::move(c));
}

Json rational_map_to_json(const RationalMap& m) {
    return Json{{"numerator", poly_to_json(m.num())}, {"denominator", poly_to_json(m.den())}};
}

RationalMap rational_map_from_json(const Json& j) {
    if (j.is_array()) return RationalMap(poly_from_json(j));  // bare polynomial
    Poly num = poly_from_json(j.at("numerator"));
    Poly den = j.contains("denominator") ? poly_from_json(j.at("denominator")) : Poly::one();
    return RationalMap(std::move(num), std::move(den));
}

Json mobius_to_json(const Mobius& m) {
    return Json{{"p", surd_to_json(m.p())},
                {"q", surd_to_json(m.q())},
                {"r", surd_to_json(m.r())},
                {"s", surd_to_json(m.s())},
                {"formula", m.str()}};
}

Json heun_to_json(const HeunEquation& eq) {
    return Json{{"d", surd_to_json(eq.d())},         {"q", surd_to_json(eq.q())},
                {"alpha", surd_to_json(eq.alpha())}, {"beta", surd_to_json(eq.beta())},
                {"gamma", surd_to_json(eq.gamma())}, {"delta", surd_to_json(eq.delta())}};
}

Json gauss_to_json(const GaussEquation& g) {
    return Json{{"a", surd_to_json(g.a)}, {"b", surd_to_json(g.b)}, {"c", surd_to_json(g.c)}};
}

GaussEquation gauss_from_json(const Json& j) {
    return {surd_from_json(j.at("a")), surd_from_json(j.at("b")), surd_from_json(j.at("c"))};
}

ParsedHeun heun_from_json(const Json& j, double tol) {
    std::optional<OrbitSnap> snap;
    Surd d;
    const Json& dj = j.at("d");
    if (dj.is_number_float() || dj.is_object()) {
        std::complex<double> z;
        if (dj.is_object())
            z = {dj.value("re", 0.0), dj.value("im", 0.0)};
        else
            z = {dj.get<double>(), 0.0};
        snap = nearest_orbit(z, tol);
        if (!snap)
            raise(errc::not_on_orbit,
                  "decimal d is not within tolerance of any catalogue value");
        d = snap->value;
    } else {
        d = surd_from_json(dj);
    }
    HeunEquation eq(d, surd_from_json(j.at("q")), surd_from_json(j.at("alpha")),
                    surd_from_json(j.at("beta")), surd_from_json(j.at("gamma")),
                    surd_from_json(j.at("delta")));
    return {eq, snap};
}

Json side_structure_to_json(const SideStructure& s) {
    Json points = Json::array();
    for (const auto& [pt, k] : s.points)
        points.push_back(Json{{"point", surd_to_json(pt)}, {"multiplicity", k}});
    Json blocks = Json::array();
    for (const auto& blk : s.blocks)
        blocks.push_back(
            Json{{"factor", poly_to_json(blk.factor)}, {"multiplicity", blk.multiplicity}});
    Json out{{"points", points}};
    if (!blocks.empty()) out["irrational_blocks"] = blocks;
    return out;
}

Json reduction_to_json(const Reduction& red) {
    Json out{{"subcase", subcase_name(red.subcase)},
             {"d", surd_to_json(red.d)},
             {"p", surd_to_json(red.p)},
             {"A1", mobius_to_json(red.A1)},
             {"A2", red.a2_flip ? "1-z" : "z"},
             {"R", poly_to_json(red.R)},
             {"R_formula", red.R.str()},
             {"gauss", gauss_to_json(red.gauss)},
             {"preimages_of_0", side_structure_to_json(red.side0)},
             {"preimages_of_1", side_structure_to_json(red.side1)}};
    if (red.d0) out["d0"] = surd_to_json(*red.d0);
    return out;
}

Json template_to_json(const ReductionTemplate& t, int index) {
    Json heun{{"d", surd_to_json(t.d)},
              {"q", "alpha*beta*(" + t.p.str() + ")"},
              {"alpha", t.alpha.str()},
              {"beta", t.beta.str()},
              {"gamma", t.gamma.str()},
              {"delta", t.delta.str()}};
    Json gauss{{"a", t.gauss_a.str()}, {"b", t.gauss_b.str()}, {"c", t.gauss_c.str()}};
    Json free = Json::array();
    free.push_back("alpha");
    if (t.beta_free) free.push_back("beta");
    if (t.gamma_free) free.push_back("gamma");
    return Json{{"index", index},
                {"subcase", subcase_name(t.subcase)},
                {"d", surd_to_json(t.d)},
                {"p", surd_to_json(t.p)},
                {"degree", t.R.degree()},
                {"A1", mobius_to_json(t.A1)},
                {"A2", t.a2_flip ? "1-z" : "z"},
                {"R", poly_to_json(t.R)},
                {"R_formula", t.R.str()},
                {"heun", heun},
                {"gauss", gauss},
                {"free_parameters", free},
                {"partner", t.partner}};
}

Json culmination_row_to_json(const CulminationRow& row) {
    return Json{{"family", family_name(row.family)},
                {"d", surd_to_json(row.d)},
                {"p", surd_to_json(row.p)},
                {"degrees", row.degrees}};
}

Json zero_structure_to_json(const ZeroStructureReport& rep) {
    Json out{{"case", rep.case_tag},
             {"orders_R", Json{{"0", rep.r_order_0},
                               {"1", rep.r_order_1},
                               {"d", rep.r_order_d},
                               {"p", rep.r_order_p}}},
             {"orders_S", Json{{"0", rep.s_order_0},
                               {"1", rep.s_order_1},
                               {"d", rep.s_order_d},
                               {"p", rep.s_order_p}}},
             {"extra_double_factor_R", poly_to_json(rep.r_extra_double_factor)},
             {"extra_double_factor_S", poly_to_json(rep.s_extra_double_factor)},
             {"extra_zeroes_all_double", rep.extra_zeroes_all_double},
             {"placement_ok", rep.placement_ok}};
    if (rep.p) out["p"] = surd_to_json(*rep.p);
    return out;
}

Json pullback_report_to_json(const PullbackReport& rep) {
    return Json{{"exponents_ok", rep.exponents_ok},
                {"w_coefficient_ok", rep.w_coefficient_ok},
                {"u_identity_ok", rep.u_identity_ok},
                {"u_sign", rep.u_sign},
                {"pass", rep.pass()},
                {"zero_structure", zero_structure_to_json(rep.structure)},
                {"sign_convention_note", rep.sign_convention_note}};
}

Json series_report_to_json(const SeriesMismatchReport& rep) {
    return Json{{"max_coeff_mismatch", rep.max_coeff_mismatch},
                {"worst_index", rep.worst_index},
                {"max_point_mismatch", rep.max_point_mismatch},
                {"tolerance", rep.tolerance},
                {"pass", rep.pass}};
}

Json trivial_substitution_to_json(const TrivialSubstitution& sub) {
    return Json{{"subcase", subcase_name(sub.subcase)},
                {"d", surd_to_json(sub.d)},
                {"M1", mobius_to_json(sub.M1)},
                {"M2", mobius_to_json(sub.M2)},
                {"map", rational_map_to_json(sub.composed)},
                {"map_formula", sub.composed.str()},
                {"signature", sub.signature == Signature::S211 ? "2;1;1" : "3;1;0"},
                {"fixes_zero", sub.fixes_zero()}};
}

Json lame_result_to_json(const LameResult& res) {
    Json out{{"reducible", res.reducible}};
    Json evs = Json::array();
    for (const Surd& e : res.critical_values) evs.push_back(surd_to_json(e));
    out["critical_values"] = evs;
    if (res.reducible) {
        Json reds = Json::array();
        for (const LameReduction& r : res.reductions)
            reds.push_back(Json{{"map", rational_map_to_json(r.map)},
                                {"map_formula", r.map.str("s")},
                                {"gauss", gauss_to_json(r.gauss)}});
        out["reductions"] = reds;
    } else if (res.reason) {
        out["reason"] = reason_name(*res.reason);
    }
    return out;
}

Json orbit_snap_to_json(const OrbitSnap& snap) {
    return Json{{"value", surd_to_json(snap.value)},
                {"family", family_name(snap.family)},
                {"distance", snap.distance}};
}

} // namespace heunred
