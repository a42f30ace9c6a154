#pragma once

#include <optional>

#include <json.hpp>

#include "heunred/classifier.hpp"
#include "heunred/cross_ratio.hpp"
#include "heunred/general_form.hpp"
#include "heunred/series.hpp"
#include "heunred/trivial.hpp"
#include "heunred/verifier.hpp"

namespace heunred {

using Json = nlohmann::ordered_json;

// Values serialize as the exact string grammar "<rat>" or
// "<rat>+<rat>*sqrt(-<m>)"; parsing also accepts integers and, where a
// tolerance is supplied, decimals (snapped to exact catalogue values).
Json surd_to_json(const Surd& s);
Surd surd_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json rational_map_to_json(const RationalMap& m);
RationalMap rational_map_from_json(const Json& j);
Json mobius_to_json(const Mobius& m);

Json heun_to_json(const HeunEquation& eq);
Json gauss_to_json(const GaussEquation& g);
GaussEquation gauss_from_json(const Json& j);

struct ParsedHeun {
    HeunEquation equation;
    std::optional<OrbitSnap> snap;  // set when d arrived as a decimal
};
/// Accepts exact strings everywhere; d may also be a decimal number or
/// {"re":..., "im":...}, snapped to the nearest catalogue value within tol.
ParsedHeun heun_from_json(const Json& j, double tol);

Json side_structure_to_json(const SideStructure& s);
Json reduction_to_json(const Reduction& red);
Json template_to_json(const ReductionTemplate& t, int index);
Json culmination_row_to_json(const CulminationRow& row);
Json zero_structure_to_json(const ZeroStructureReport& rep);
Json pullback_report_to_json(const PullbackReport& rep);
Json series_report_to_json(const SeriesMismatchReport& rep);
Json trivial_substitution_to_json(const TrivialSubstitution& sub);
Json lame_result_to_json(const LameResult& res);
Json orbit_snap_to_json(const OrbitSnap& snap);

} // namespace heunred
