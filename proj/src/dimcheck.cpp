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

#include "hilbcurve/dimcheck.hpp"

#include <algorithm>
#include <utility>

namespace hilbcurve {

namespace {

constexpr unsigned kMaxRetries = 16;

template <typename T>
std::vector<T> poly_mul(const std::vector<T>& p, const std::vector<T>& q) {
    std::vector<T> out(p.size() + q.size() - 1, T{Rational(0)});
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

template <typename Map>
RationalMatrix dual_jacobian(const Map& f, const std::vector<Rational>& point, std::size_t outputs) {
    RationalMatrix j(outputs, point.size());
    std::vector<DualRational> lifted(point.begin(), point.end());
    for (std::size_t c = 0; c < point.size(); ++c) {
        lifted[c].infinitesimal = 1;
        auto values = f(lifted);
        for (std::size_t r = 0; r < outputs; ++r) j(r, c) = values[r].infinitesimal;
        lifted[c].infinitesimal = 0;
    }
    return j;
}

} // namespace

ConstraintMap::ConstraintMap(unsigned n, unsigned beta) : n_(n), beta_(beta) {
    if (n == 0 || beta == 0) throw Error("constraint map needs n >= 1 and beta >= 1");
}

RationalMatrix ConstraintMap::jacobian(const std::vector<Rational>& point) const {
    return dual_jacobian([this](const auto& p) { return evaluate(p); }, point, n_);
}

ParamMap::ParamMap(StratumLabel label) : label_(std::move(label)) {}

std::size_t ParamMap::input_size() const {
    return label_.s() + static_cast<std::size_t>(std::max(0, label_.alpha_degree_bound() + 1));
}

template <typename T>
std::vector<T> ParamMap::evaluate(const std::vector<T>& input) const {
    if (input.size() != input_size()) throw Error("parametrization input has the wrong length");
    const unsigned n = label_.n();
    const auto& mults = label_.mults.parts();
    std::vector<T> a{T{Rational(1)}};
    std::vector<T> b{T{Rational(1)}};
    for (std::size_t i = 0; i < mults.size(); ++i) {
        const std::vector<T> linear{-input[i], T{Rational(1)}};
        for (unsigned k = 0; k < mults[i]; ++k) a = poly_mul(a, linear);
        for (unsigned k = 0; k < (mults[i] + label_.beta - 1) / label_.beta; ++k) b = poly_mul(b, linear);
    }
    std::vector<T> out(2 * n, T{Rational(0)});
    for (unsigned i = 0; i < n; ++i) out[i] = -a[i];
    if (classify_case(label_) == StratumCase::General) {
        std::vector<T> alpha(input.begin() + static_cast<std::ptrdiff_t>(mults.size()), input.end());
        b = poly_mul(b, alpha);
        for (unsigned i = 0; i < n; ++i) out[n + i] = b[i];
    }
    return out;
}

template std::vector<Rational> ParamMap::evaluate(const std::vector<Rational>&) const;
template std::vector<DualRational> ParamMap::evaluate(const std::vector<DualRational>&) const;

RationalMatrix ParamMap::jacobian(const std::vector<Rational>& input) const {
    return dual_jacobian([this](const auto& p) { return evaluate(p); }, input, 2 * label_.n());
}

std::vector<Rational> ParamMap::input_of(const StratumPoint& pt) const {
    if (pt.label() != label_) throw Error("sample does not belong to this stratum");
    // Roots must follow the label's multiplicity order.
    std::vector<std::size_t> order(pt.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return pt.mults[l] > pt.mults[r]; });
    std::vector<Rational> input;
    for (auto i : order) input.push_back(pt.points[i]);
    if (pt.alpha) {
        const auto t = static_cast<std::size_t>(std::max(0, label_.alpha_degree_bound()));
        for (std::size_t k = 0; k <= t; ++k) input.push_back(pt.alpha->coeff(k));
    }
    return input;
}

unsigned tangent_dim_un(unsigned n, unsigned beta, const std::vector<Rational>& point) {
    ConstraintMap f(n, beta);
    auto values = f.evaluate(point);
    if (!std::all_of(values.begin(), values.end(), [](const Rational& q) { return is_zero(q); }))
        throw Error("point does not lie on Z_beta");
    return 2 * n - static_cast<unsigned>(rank(f.jacobian(point)));
}

unsigned param_rank(const StratumLabel& label, const StratumPoint& pt) {
    if (classify_case(label) == StratumCase::Special)
        throw Error("special-case strata are parametrized by their roots alone");
    ParamMap map(label);
    return static_cast<unsigned>(rank(map.jacobian(map.input_of(pt))));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

std::size_t LabelReport::tangent_equals_n() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [&](const DimTrial& t) {
        return t.tangent_dim && *t.tangent_dim == label.n();
    }));
}

bool DimReport::pass() const {
    return std::all_of(labels.begin(), labels.end(), [](const LabelReport& l) { return l.pass; });
}

DimReport verify_dims(unsigned n, unsigned beta, unsigned trials, std::uint64_t seed) {
    DimReport report{n, beta, trials, seed, {}};
    const auto strata = all_strata(n, beta);
    for (std::size_t li = 0; li < strata.size(); ++li) {
        const StratumLabel& label = strata[li];
        LabelReport lr;
        lr.label = label;
        lr.kase = classify_case(label);
        lr.expected_dim = stratum_dimension(label);
        lr.component = label.is_component();
        lr.pass = true;
        const ParamMap map(label);
        const ConstraintMap constraint(n, beta);

        for (unsigned t = 0; t < trials; ++t) {
            DimTrial trial;
            StratumPoint pt;
            std::vector<Rational> input;
            for (unsigned attempt = 0;; ++attempt) {
                trial.seed = mix_seed(seed, (li << 40U) ^ (std::uint64_t{t} << 8U) ^ attempt);
                pt = sample_stratum(label, trial.seed);
                input = map.input_of(pt);
                trial.param_rank = static_cast<unsigned>(rank(map.jacobian(input)));
                trial.retries = attempt;
                if (trial.param_rank == lr.expected_dim || attempt + 1 >= kMaxRetries) break;
            }
            const auto image = map.evaluate(input);
            const auto residual = constraint.evaluate(image);
            trial.on_zbeta = std::all_of(residual.begin(), residual.end(), [](const Rational& q) { return is_zero(q); });
            if (lr.component && trial.on_zbeta) trial.tangent_dim = tangent_dim_un(n, beta, image);

            const bool ok = trial.on_zbeta && trial.param_rank == lr.expected_dim &&
                            (!trial.tangent_dim || *trial.tangent_dim >= n);
            lr.pass = lr.pass && ok;
            lr.trials.push_back(trial);
        }
        report.labels.push_back(std::move(lr));
    }
    return report;
}

} // namespace hilbcurve
