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

#include "hilbcurve/strata.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hilbcurve {

namespace {

unsigned ceil_div(unsigned m, unsigned beta) { return (m + beta - 1) / beta; }

} // namespace

unsigned StratumLabel::ceil_sum() const {
    unsigned total = 0;
    for (unsigned m : mults.parts()) total += ceil_div(m, beta);
    return total;
}

int StratumLabel::alpha_degree_bound() const {
    return static_cast<int>(n()) - 1 - static_cast<int>(ceil_sum());
}

bool StratumLabel::is_component() const { return mults.largest_part() <= beta; }

StratumLabel make_label(const Partition& mults, unsigned beta) {
    if (beta == 0) throw Error("beta must be positive");
    if (mults.empty()) throw Error("a stratum needs at least one point");
    return {mults, beta};
}

std::string to_string(StratumCase c) { return c == StratumCase::General ? "general" : "special"; }

StratumCase classify_case(const StratumLabel& label) {
    return label.alpha_degree_bound() < 0 ? StratumCase::Special : StratumCase::General;
}

unsigned stratum_dimension(const StratumLabel& label) { return label.n() + label.s() - label.ceil_sum(); }

StratumLabel StratumPoint::label() const { return make_label(Partition::from_multiset(mults), beta); }

ChartIdealN build_stratum_ideal(const StratumPoint& pt) {
    if (pt.points.size() != pt.mults.size()) throw Error("points and multiplicities differ in length");
    std::set<Rational> seen;
    for (const auto& p : pt.points)
        if (!seen.insert(p).second) throw Error("stratum points must be distinct, " + to_string(p) + " repeats");
    const StratumLabel label = pt.label();

    std::vector<Rational> a_roots;
    std::vector<Rational> b_roots;
    for (std::size_t i = 0; i < pt.points.size(); ++i) {
        a_roots.insert(a_roots.end(), pt.mults[i], pt.points[i]);
        b_roots.insert(b_roots.end(), ceil_div(pt.mults[i], pt.beta), pt.points[i]);
    }
    UniPoly a = UniPoly::from_roots(a_roots);

    if (classify_case(label) == StratumCase::Special) {
        if (pt.alpha && !pt.alpha->is_zero()) throw Error("the special case admits no cofactor alpha");
        return {a, UniPoly()};
    }
    if (!pt.alpha) throw Error("the general case needs a cofactor alpha");
    const int bound = label.alpha_degree_bound();
    if (pt.alpha->degree() && static_cast<int>(*pt.alpha->degree()) > bound)
        throw Error("alpha has degree " + std::to_string(*pt.alpha->degree()) + ", at most " + std::to_string(bound) +
                    " allowed");
    return {a, UniPoly::from_roots(b_roots) * *pt.alpha};
}

std::optional<StratumLabel> classify_ideal(const ChartIdealN& ideal, unsigned beta) {
    if (!contains_power_y(ideal, beta)) return std::nullopt;
    return make_label(hilbert_chow_profile(ideal), beta);
}

StratumPoint sample_stratum(const StratumLabel& label, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int range = 4 * static_cast<int>(label.n()) + 8;
    std::uniform_int_distribution<int> root_dist(-range, range);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    std::uniform_int_distribution<int> denom_dist(1, 4);

    StratumPoint pt;
    pt.beta = label.beta;
    pt.mults = label.mults.parts();
    std::set<int> used;
    while (pt.points.size() < label.s()) {
        int r = root_dist(rng);
        if (used.insert(r).second) pt.points.emplace_back(r);
    }
    if (classify_case(label) == StratumCase::General) {
        const auto t = static_cast<std::size_t>(label.alpha_degree_bound());
        std::vector<Rational> coeffs(t + 1);
        for (auto& c : coeffs) c = make_rational(coeff_dist(rng), denom_dist(rng));
        while (is_zero(coeffs[t])) coeffs[t] = make_rational(coeff_dist(rng), denom_dist(rng));
        pt.alpha = UniPoly(std::move(coeffs));
    }
    return pt;
}

std::vector<StratumLabel> all_strata(unsigned n, unsigned beta) {
    std::vector<StratumLabel> out;
    for (auto& p : partitions_bounded(n, n)) out.push_back(make_label(p, beta));
    return out;
}

} // namespace hilbcurve
