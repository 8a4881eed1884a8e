#ifndef SEGREREG_JSON_IO_HPP
#define SEGREREG_JSON_IO_HPP

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp> // vendored single header
#endif
#include <variant>

#include "segrereg/betti.hpp"
#include "segrereg/local_cohomology.hpp"
#include "segrereg/module_profile.hpp"
#include "segrereg/oracle.hpp"
#include "segrereg/segre_engine.hpp"
#include "segrereg/simplicial_complex.hpp"

namespace segrereg {

using json = nlohmann::json;

// Complexes: {"n": 3, "facets": [[1,2],[2,3]]}, 1-indexed; duplicate or
// contained faces are tolerated on input and canonicalized on output.
json complex_to_json(const SimplicialComplex& delta);
SimplicialComplex complex_from_json(const json& j);

// Profiles: either the full form {"dim","depth","sigma","ends","no_gaps",
// "unbounded_below"} with string keys and "-inf" for vanishing cohomology,
// or the shorthand {"cm": {"dim","reg","sigma"}}.
json profile_to_json(const ModuleProfile& p);
ModuleProfile profile_from_json(const json& j);

json betti_to_json(const BettiTable& table);

json summary_to_json(const CohomologySummary& summary, const AssumptionReport& assumption,
                     long long dims_window = 6);

json assumption_to_json(const AssumptionReport& report);

json segre_report_to_json(const SegreReport& report);

json crosscheck_to_json(const CrosscheckReport& report);

json diagnostics_to_json(const std::vector<CoarseDiagnostic>& rows);

/// An input file is either a complex or a profile, told apart by its keys.
std::variant<SimplicialComplex, ModuleProfile> input_from_json(const json& j);

} // namespace segrereg

#endif
