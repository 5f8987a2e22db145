#pragma once

#include <string>

#include <json.hpp>

#include "ncwick/calculus.hpp"
#include "ncwick/linsys.hpp"
#include "ncwick/series.hpp"

namespace ncwick {

// JSON formats (round-trip exact: numbers are emitted with shortest
// representations that parse back to the identical double):
//
//   series:  {"trunc": {"max_len": L, "max_letter": M, "drop_tol": t},
//             "terms": [{"word": [i1,...], "re": x, "im": y}, ...]}
//            max_letter is omitted when unbounded, drop_tol when zero;
//            terms are sorted graded-lexicographically on output.
//   matrix:  {"rows": R, "cols": C, "trunc": {...},
//             "entries": [[<terms>, ...], ...]}     (row-major)
//   system:  {"A": <matrix>, "B": <matrix>, "C": <matrix>, "D": <matrix>}
//   power series: {"coeffs": [{"re": x, "im": y}, ...], "radius": R}
//            radius omitted or null means unbounded.
//   matrix sequence: {"sequence": [<matrix>, ...]}
//
// Parsers throw schema_error for structural problems and
// truncation_violation for terms outside the declared policy.

nlohmann::json series_to_json(const NcSeries& s);
NcSeries series_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const AlgebraMatrix& m);
AlgebraMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const SystemDef& sys);
SystemDef system_from_json(const nlohmann::json& j);

nlohmann::json power_series_to_json(const PowerSeriesSpec& phi);
PowerSeriesSpec power_series_from_json(const nlohmann::json& j);

nlohmann::json matrix_sequence_to_json(const std::vector<AlgebraMatrix>& seq);
std::vector<AlgebraMatrix> matrix_sequence_from_json(const nlohmann::json& j);

// File helpers used by the CLI: load parses with full validation, store
// writes with a trailing newline and 2-space indentation.
nlohmann::json load_json_file(const std::string& path);
void store_json_file(const std::string& path, const nlohmann::json& j);

} // namespace ncwick
