#pragma once

#include <string>

#include <json.hpp>

#include "gal/classification.hpp"
#include "gal/errors.hpp"
#include "gal/intertwiner.hpp"
#include "gal/laws.hpp"
#include "gal/structure_solver.hpp"
#include "gal/virasoro.hpp"
#include "gal/weight_module.hpp"

namespace gal::io {

using Json = nlohmann::ordered_json;

/// Message of a ParseError without its "at offset N: " prefix.
std::string bare_message(const ParseError& e);

/// Rationals travel as canonical "p/q" strings; integers are also accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);

/// {"kind":"symbolic","expr":...,"params":{name: "p/q" | null}} or
/// {"kind":"table","window":N,"entries":[{"n":left,"m":right,"value":"p/q"}, ...]}.
/// A null parameter stays formal.
Json to_json(const GradedStructure& s);
GradedStructure structure_from_json(const Json& j);

/// Violations list their named indices followed by "clause" and "residual".
Json to_json(const Violation& v);
/// `max_violations` truncates the list; "violation_count" holds the total.
Json to_json(const LawReport& r, std::size_t max_violations = static_cast<std::size_t>(-1));

/// {"kind":"valpha","alpha":..} | {"kind":"vbeta","beta":..} |
/// {"kind":"valphabeta","alpha":..,"beta":..} |
/// {"kind":"family","family":"valpha"|"vbeta"|"valphabeta",...} |
/// {"kind":"from-structure","structure":<structure json>} |
/// {"kind":"expr","expr":"...","params":{...},"radius":N}.
/// `check` is the window used for the distinct-weight check of structure modules.
WeightModule module_from_json(const Json& j, const Window& check);
Json to_json(const WeightModule& M);

Json to_json(const FitResult& f);
Json to_json(const Diagnostics& d);
Json to_json(const IndecomposabilityResult& r);
Json to_json(const IntertwinerResult& r);
Json to_json(const AnsatzOutcome& o);
Json to_json(const TableOutcome& o);
Json to_json(const InfeasibilityCertificate& c);
Json to_json(const CentralOutcome& o);

}  // namespace gal::io
