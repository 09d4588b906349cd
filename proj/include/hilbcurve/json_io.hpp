/*
   Copyright 2026 The hilbcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HILBCURVE_JSON_IO_HPP
#define HILBCURVE_JSON_IO_HPP

#include "hilbcurve/chart_mu.hpp"
#include "hilbcurve/chart_un.hpp"
#include "hilbcurve/components.hpp"
#include "hilbcurve/dimcheck.hpp"
#include "hilbcurve/multipoly.hpp"
#include "hilbcurve/partition.hpp"
#include "hilbcurve/strata.hpp"

#include <json.hpp>

#include <string>

namespace hilbcurve {

inline constexpr const char* kSchema = "hilbcurve/1";

using Json = nlohmann::ordered_json;

/// Coefficients are strings "p/q" so no value ever passes through a float.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Low-to-high coefficient list, padded with zeros to min_length.
Json coeffs_to_json(const UniPoly& p, std::size_t min_length = 0);
UniPoly coeffs_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"n": int, "a": [...], "b": [...]}, a with its leading 1, b padded to n.
Json ideal_to_json(const ChartIdealN& ideal);
ChartIdealN ideal_from_json(const Json& j);
/// "ideal(a = <poly in x>, b = <poly in x>)"
std::string ideal_to_text(const ChartIdealN& ideal);

/// {"mults": [..], "n": int, "beta": int, "dim": int, "case": ...}
Json label_to_json(const StratumLabel& label);

/// {"text": ..., "terms": [{"coeff": "p/q", "exponents": {var: k}}]}
Json multipoly_to_json(const MultiPoly& p);

Json component_to_json(const ComponentIndex& c);

Json report_to_json(const DimReport& report);

/// Indented "key: value" rendering of a JSON document.
std::string render_human(const Json& j);

} // namespace hilbcurve

#endif
