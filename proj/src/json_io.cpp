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

#include "hilbcurve/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcurve {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error("expected a rational as \"p/q\" string or integer");
}

Json coeffs_to_json(const UniPoly& p, std::size_t min_length) {
    Json out = Json::array();
    const std::size_t len = std::max(min_length, p.coeffs().size());
    for (std::size_t i = 0; i < len; ++i) out.push_back(rational_to_json(p.coeff(i)));
    return out;
}

UniPoly coeffs_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected a coefficient array");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return UniPoly(std::move(c));
}

Json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw Error("a partition is a JSON array of integers");
    std::vector<unsigned> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() <= 0) throw Error("partition parts must be positive integers");
        parts.push_back(v.get<unsigned>());
    }
    return Partition(std::move(parts));
}

Json ideal_to_json(const ChartIdealN& ideal) {
    Json out;
    out["n"] = ideal.n();
    out["a"] = coeffs_to_json(ideal.a());
    out["b"] = coeffs_to_json(ideal.b(), ideal.n());
    return out;
}

ChartIdealN ideal_from_json(const Json& j) {
    ChartIdealN ideal(coeffs_from_json(j.at("a")), coeffs_from_json(j.at("b")));
    if (j.contains("n") && j.at("n").get<unsigned>() != ideal.n()) throw Error("\"n\" disagrees with deg a");
    return ideal;
}

std::string ideal_to_text(const ChartIdealN& ideal) {
    return "ideal(a = " + ideal.a().to_string() + ", b = " + ideal.b().to_string() + ")";
}

Json label_to_json(const StratumLabel& label) {
    Json out;
    out["mults"] = partition_to_json(label.mults);
    out["n"] = label.n();
    out["beta"] = label.beta;
    out["dim"] = stratum_dimension(label);
    out["case"] = to_string(classify_case(label));
    return out;
}

Json multipoly_to_json(const MultiPoly& p) {
    Json out;
    out["text"] = p.to_string();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["coeff"] = rational_to_json(c);
        Json ex = Json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) ex[p.variables()->name(i)] = e[i];
        t["exponents"] = ex;
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

Json component_to_json(const ComponentIndex& c) {
    Json out = Json::array();
    for (const auto& p : c.per_branch) out.push_back(partition_to_json(p));
    return out;
}

Json report_to_json(const DimReport& report) {
    Json out;
    out["n"] = report.n;
    out["beta"] = report.beta;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["pass"] = report.pass();
    Json labels = Json::array();
    for (const auto& l : report.labels) {
        Json j = label_to_json(l.label);
        j["component"] = l.component;
        j["expected_dim"] = l.expected_dim;
        j["pass"] = l.pass;
        Json ranks = Json::array();
        Json tangents = Json::array();
        Json seeds = Json::array();
        unsigned retries = 0;
        for (const auto& t : l.trials) {
            ranks.push_back(t.param_rank);
            seeds.push_back(t.seed);
            if (t.tangent_dim) tangents.push_back(*t.tangent_dim);
            retries += t.retries;
        }
        j["param_ranks"] = ranks;
        j["retries"] = retries;
        if (l.component) {
            j["tangent_dims"] = tangents;
            j["tangent_equals_n"] = l.tangent_equals_n();
        }
        j["seeds"] = seeds;
        labels.push_back(j);
    }
    out["labels"] = labels;
    return out;
}

namespace {

void render(const Json& j, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            bool scalar = !v.is_structured() || v.empty() || (v.is_array() && v.dump().size() <= 72);
            if (scalar) {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            } else {
                out << pad << k << ":\n";
                render(v, indent + 1, out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                out << pad << "-\n";
                render(v, indent + 1, out);
            } else {
                out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

std::string render_human(const Json& j) {
    std::ostringstream out;
    render(j, 0, out);
    return out.str();
}

} // namespace hilbcurve
