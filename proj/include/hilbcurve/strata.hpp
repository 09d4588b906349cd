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

#ifndef HILBCURVE_STRATA_HPP
#define HILBCURVE_STRATA_HPP

#include "hilbcurve/chart_un.hpp"
#include "hilbcurve/partition.hpp"
#include "hilbcurve/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbcurve {

/// Stratum C_{m_1..m_s} of Z_beta in U_(n): ideals whose zero locus is s
/// distinct points of the line y = 0 with multiplicities m_i.
struct StratumLabel {
    Partition mults;
    unsigned beta = 1;

    unsigned n() const { return mults.size(); }
    unsigned s() const { return static_cast<unsigned>(mults.length()); }
    /// sum of ceil(m_i / beta).
    unsigned ceil_sum() const;
    /// Largest admissible degree of the cofactor alpha:
    /// n - 1 - ceil_sum(), negative in the special case.
    int alpha_degree_bound() const;
    /// All m_i <= beta: the stratum closure is a component.
    bool is_component() const;

    friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

/// Throws Error if beta == 0 or the multiplicities are empty.
StratumLabel make_label(const Partition& mults, unsigned beta);

enum class StratumCase { General, Special };

std::string to_string(StratumCase c);

/// Special iff sum ceil(m_i / beta) > n - 1, which forces b = 0.
StratumCase classify_case(const StratumLabel& label);

/// n + s - sum ceil(m_i / beta).
unsigned stratum_dimension(const StratumLabel& label);

/// A concrete point of a stratum: distinct roots x_i with multiplicities
/// m_i, and the cofactor alpha (absent in the special case).
struct StratumPoint {
    std::vector<Rational> points;
    std::vector<unsigned> mults;
    unsigned beta = 1;
    std::optional<UniPoly> alpha;

    StratumLabel label() const;
};

/// a = prod (x - x_i)^{m_i}; b = prod (x - x_i)^{ceil(m_i/beta)} * alpha in
/// the general case, b = 0 in the special case.  Throws Error on repeated
/// points, a missing or superfluous alpha, or deg alpha above the bound.
ChartIdealN build_stratum_ideal(const StratumPoint& pt);

/// The stratum containing the ideal, or nullopt when y^beta is not in it.
std::optional<StratumLabel> classify_ideal(const ChartIdealN& ideal, unsigned beta);

/// Deterministic sample: distinct integer roots from a bounded range and,
/// in the general case, alpha of degree exactly the bound with non-zero
/// leading coefficient.
StratumPoint sample_stratum(const StratumLabel& label, std::uint64_t seed);

/// All strata of Z_beta in U_(n), one per partition of n.
std::vector<StratumLabel> all_strata(unsigned n, unsigned beta);

} // namespace hilbcurve

#endif
