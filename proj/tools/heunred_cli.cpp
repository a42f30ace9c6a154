// Command-line front end: classification, reduction construction, exact and
// series verification, catalogue/table generation, trivial-case enumeration,
// and Lame handling, all with JSON input/output.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heunred/json_io.hpp"

using namespace heunred;

namespace {

struct Options {
    std::string params;      // inline JSON
    std::string input_path;  // file ("-" = stdin)
    std::string output_path;
    std::string output_format = "json";
    double tolerance = 1e-9;
    int series_order = 40;
    bool exact_mode = false;
};

Json read_params(const Options& opt) {
    std::string text = opt.params;
    if (text.empty() && !opt.input_path.empty()) {
        if (opt.input_path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(opt.input_path);
            if (!in) raise(errc::malformed_input, "cannot open " + opt.input_path);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
    }
    if (text.empty()) raise(errc::malformed_input, "no JSON parameters supplied");
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(errc::malformed_input, "parameters are not valid JSON");
    return j;
}

void emit(const Options& opt, const Json& doc) {
    std::string rendered;
    if (opt.output_format == "text")
        rendered = doc.dump(2);
    else
        rendered = doc.dump();
    if (!opt.output_path.empty()) {
        std::ofstream out(opt.output_path);
        if (!out) raise(errc::malformed_input, "cannot write " + opt.output_path);
        out << rendered << "\n";
    } else {
        std::cout << rendered << "\n";
    }
}

Json classify_document(const HeunEquation& eq, const std::optional<OrbitSnap>& snap,
                       const ClassifyResult& result) {
    Json doc{{"input", heun_to_json(eq)}};
    if (snap) doc["snapped_d"] = orbit_snap_to_json(*snap);
    doc["reducible"] = result.reducible();
    if (result.reducible()) {
        Json reds = Json::array();
        for (const Reduction& red : result.reductions) reds.push_back(reduction_to_json(red));
        doc["reductions"] = reds;
    } else {
        doc["reason"] = reason_name(*result.reason);
    }
    return doc;
}

Json exact_series_check(const HeunEquation& eq, const Reduction& red, int N) {
    ExactSeries lhs = heun_series_exact(eq, N);
    ExactSeries rhs = compose_into_series_exact(gauss_series_exact(red.gauss, N), red.R, N);
    int mismatches = 0;
    int first_bad = -1;
    for (int n = 0; n <= N; ++n) {
        if (lhs.coeffs[static_cast<std::size_t>(n)] != rhs.coeffs[static_cast<std::size_t>(n)]) {
            ++mismatches;
            if (first_bad < 0) first_bad = n;
        }
    }
    return Json{{"mode", "exact"},
                {"order", N},
                {"mismatched_coefficients", mismatches},
                {"first_mismatch_index", first_bad},
                {"pass", mismatches == 0}};
}

int cmd_classify(const Options& opt, bool with_verification) {
    ParsedHeun parsed = heun_from_json(read_params(opt), opt.tolerance);
    ClassifyResult result = classify(parsed.equation);
    Json doc = classify_document(parsed.equation, parsed.snap, result);
    if (with_verification && result.reducible()) {
        Json checks = Json::array();
        for (const Reduction& red : result.reductions) {
            PullbackReport rep = verify_pullback(red, parsed.equation);
            Json entry{{"subcase", subcase_name(red.subcase)},
                       {"pullback", pullback_report_to_json(rep)}};
            if (opt.exact_mode)
                entry["series"] = exact_series_check(parsed.equation, red, opt.series_order);
            else
                entry["series"] = series_report_to_json(verify_reduction_series(
                    parsed.equation, red, opt.series_order, opt.tolerance));
            checks.push_back(entry);
        }
        doc["verification"] = checks;
    }
    emit(opt, doc);
    return result.reducible() ? 0 : 2;
}

int cmd_verify(const Options& opt) {
    Json j = read_params(opt);
    ParsedHeun parsed = heun_from_json(j.at("heun"), opt.tolerance);
    const HeunEquation& eq = parsed.equation;

    Json doc{{"heun", heun_to_json(eq)}};
    if (j.contains("gauss") && j.contains("map")) {
        GaussEquation gauss = gauss_from_json(j.at("gauss"));
        RationalMap map = rational_map_from_json(j.at("map"));

        // Prefer exact structure hints when the map matches a classified
        // reduction; fall back to certified numeric roots.
        const MapStructure* hints = nullptr;
        MapStructure owned;
        if (map.is_polynomial()) {
            try {
                ClassifyResult cls = classify(eq);
                for (const Reduction& red : cls.reductions) {
                    if (RationalMap(red.R) == map && red.gauss == gauss) {
                        owned = structure_of_reduction(red);
                        hints = &owned;
                    }
                }
            } catch (const error&) {
                // trivial or degenerate input: no catalogue structure exists
            }
        }
        PullbackReport rep = verify_pullback(map, eq, gauss, hints);
        doc["gauss"] = gauss_to_json(gauss);
        doc["map"] = rational_map_to_json(map);
        doc["pullback"] = pullback_report_to_json(rep);
        if (map.is_polynomial() && map.num()(Surd(0)).is_zero()) {
            Reduction pseudo;
            pseudo.R = map.num();
            pseudo.gauss = gauss;
            doc["series"] = series_report_to_json(
                verify_reduction_series(eq, pseudo, opt.series_order, opt.tolerance));
        }
        emit(opt, doc);
        return 0;
    }

    // No explicit target: classify and verify every reduction found.
    ClassifyResult result = classify(eq);
    doc["reducible"] = result.reducible();
    if (!result.reducible()) {
        doc["reason"] = reason_name(*result.reason);
        emit(opt, doc);
        return 0;
    }
    Json checks = Json::array();
    for (const Reduction& red : result.reductions) {
        PullbackReport rep = verify_pullback(red, eq);
        Json entry{{"reduction", reduction_to_json(red)},
                   {"pullback", pullback_report_to_json(rep)}};
        if (opt.exact_mode)
            entry["series"] = exact_series_check(eq, red, opt.series_order);
        else
            entry["series"] = series_report_to_json(
                verify_reduction_series(eq, red, opt.series_order, opt.tolerance));
        checks.push_back(entry);
    }
    doc["verification"] = checks;
    emit(opt, doc);
    return 0;
}

int cmd_table(const Options& opt) {
    Json rows = Json::array();
    for (const CulminationRow& row : culmination_table())
        rows.push_back(culmination_row_to_json(row));
    emit(opt, Json{{"pairs", rows}, {"count", rows.size()}});
    return 0;
}

int cmd_enumerate(const Options& opt) {
    const auto& all = enumerate_all_reductions();
    Json rows = Json::array();
    int index = 0;
    for (const ReductionTemplate& t : all) rows.push_back(template_to_json(t, index++));
    int unpaired = 0;
    for (const ReductionTemplate& t : all)
        if (t.partner < 0) ++unpaired;
    emit(opt, Json{{"reductions", rows},
                   {"count", all.size()},
                   {"raw_substitution_count", count_raw_substitutions()},
                   {"linked_pairs", (static_cast<int>(all.size()) - unpaired) / 2},
                   {"unpaired", unpaired}});
    return 0;
}

int cmd_trivial(const Options& opt, const std::string& subcase, const std::string& d_text,
                bool count_only) {
    SubcaseId id = subcase_from_name(subcase);
    Surd d = Surd::parse(d_text);
    std::vector<TrivialSubstitution> subs = enumerate_trivial(id, d);
    Json doc{{"subcase", subcase},
             {"d", surd_to_json(d)},
             {"count", subs.size()},
             {"zero_fixing_count", count_zero_fixing(subs)}};
    if (!count_only) {
        Json rows = Json::array();
        for (const TrivialSubstitution& s : subs) rows.push_back(trivial_substitution_to_json(s));
        doc["substitutions"] = rows;
    }
    emit(opt, doc);
    return 0;
}

int cmd_lame(const Options& opt, const std::string& g3, const std::string& ell,
             const std::string& B, const std::string& g2) {
    LameAlgebraic lame{Surd::parse(g2), Surd::parse(g3), Surd::parse(ell), Surd::parse(B)};
    LameResult res = lame_reduce(lame);
    emit(opt, lame_result_to_json(res));
    return 0;
}

int cmd_general(const Options& opt) {
    Json j = read_params(opt);
    std::string kind = j.value("kind", j.contains("d4") ? "general" : "natural");

    GeneralClassifyResult result;
    Json normalized;
    if (kind == "natural") {
        NaturalGeneralHeun gh(surd_from_json(j.at("d1")), surd_from_json(j.at("d2")),
                              surd_from_json(j.at("d3")), surd_from_json(j.at("q")),
                              surd_from_json(j.at("alpha")), surd_from_json(j.at("beta")),
                              surd_from_json(j.at("gamma")), surd_from_json(j.at("delta")));
        Normalized norm = normalize_natural(gh);
        normalized = Json{{"equation", heun_to_json(norm.equation)},
                          {"map", mobius_to_json(norm.map)}};
        result = classify_general(gh);
    } else if (kind == "general") {
        Point d4 = Point::infinity();
        if (j.contains("d4") && !(j.at("d4").is_string() && j.at("d4") == "inf"))
            d4 = Point(surd_from_json(j.at("d4")));
        GeneralHeun gh(surd_from_json(j.at("d1")), surd_from_json(j.at("d2")),
                       surd_from_json(j.at("d3")), d4, surd_from_json(j.at("q")),
                       surd_from_json(j.at("alpha")), surd_from_json(j.at("beta")),
                       surd_from_json(j.at("gamma")), surd_from_json(j.at("delta")));
        Normalized norm = normalize_general(gh);
        normalized = Json{{"equation", heun_to_json(norm.equation)},
                          {"map", mobius_to_json(norm.map)}};
        result = classify_general(gh);
    } else {
        raise(errc::malformed_input, "kind must be 'natural' or 'general'");
    }

    Json doc{{"normalized", normalized}, {"reducible", result.reducible()}};
    if (result.reducible()) {
        Json rows = Json::array();
        for (const GeneralReduction& gr : result.reductions)
            rows.push_back(
                Json{{"canonical", reduction_to_json(gr.canonical)},
                     {"map_in_original_coordinates", rational_map_to_json(gr.original_map)},
                     {"map_formula", gr.original_map.str("s")}});
        doc["reductions"] = rows;
    } else {
        doc["reason"] = reason_name(*result.reason);
    }
    emit(opt, doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heun-to-hypergeometric reduction classifier and verifier"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tolerance", opt.tolerance, "snap/series tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--series-order", opt.series_order, "truncation order for series checks")
        ->check(CLI::Range(4, 100000));
    app.add_flag("--exact-mode", opt.exact_mode, "exact-rational series comparison");
    app.add_option("--output-path", opt.output_path, "write the JSON document here");
    app.add_option("--output", opt.output_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("params", opt.params, "inline JSON parameters");
        sub->add_option("--input", opt.input_path, "JSON parameter file ('-' = stdin)");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a Heun equation");
    add_params(classify_cmd);
    CLI::App* reduce_cmd =
        app.add_subcommand("reduce", "classify, then verify each constructed reduction");
    add_params(reduce_cmd);
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a reduction exactly and by series");
    add_params(verify_cmd);
    CLI::App* table_cmd = app.add_subcommand("table", "the 23 admissible (d, p) pairs");
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "all 28 Hl -> 2F1 reductions");

    CLI::App* trivial_cmd = app.add_subcommand("trivial", "trivial-case substitutions");
    std::string subcase, d_text = "-1";
    bool count_only = false;
    trivial_cmd->add_option("--subcase", subcase, "subcase id (1a..2d)")->required();
    trivial_cmd->add_option("--d", d_text, "singular point d (exact)")->required();
    trivial_cmd->add_flag("--count-only", count_only, "emit counts only");

    CLI::App* lame_cmd = app.add_subcommand("lame", "equianharmonic algebraic-form Lame equation");
    std::string g3 = "4", ell = "1", Bparam = "0", g2 = "0";
    lame_cmd->add_option("--g3", g3, "invariant g3 (exact)");
    lame_cmd->add_option("--ell", ell, "degree parameter ell (exact)");
    lame_cmd->add_option("--B", Bparam, "accessory parameter B (exact)");
    lame_cmd->add_option("--g2", g2, "invariant g2 (must be 0)");

    CLI::App* general_cmd =
        app.add_subcommand("general", "natural general-form / general-form Heun equations");
    add_params(general_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt, false);
        if (reduce_cmd->parsed()) return cmd_classify(opt, true);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (table_cmd->parsed()) return cmd_table(opt);
        if (enum_cmd->parsed()) return cmd_enumerate(opt);
        if (trivial_cmd->parsed()) return cmd_trivial(opt, subcase, d_text, count_only);
        if (lame_cmd->parsed()) return cmd_lame(opt, g3, ell, Bparam, g2);
        if (general_cmd->parsed()) return cmd_general(opt);
    } catch (const error& e) {
        Json diag{{"error", errc_name(e.code())}, {"message", e.what()}};
        std::cout << diag.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json diag{{"error", "internal"}, {"message", e.what()}};
        std::cout << diag.dump() << "\n";
        return 1;
    }
    return 1;
}
