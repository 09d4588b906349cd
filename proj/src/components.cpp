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

#include "hilbcurve/components.hpp"

#include <set>
#include <utility>

namespace hilbcurve {

CurveSpec::CurveSpec(std::vector<Branch> branches) : branches_(std::move(branches)) {
    std::set<std::string> labels;
    for (const auto& b : branches_) {
        if (b.beta == 0) throw Error("branch multiplicity must be positive");
        if (!labels.insert(b.label).second) throw Error("duplicate branch label '" + b.label + "'");
    }
}

CurveSpec CurveSpec::from_multiplicities(const std::vector<unsigned>& betas) {
    std::vector<Branch> branches;
    for (std::size_t j = 0; j < betas.size(); ++j) branches.push_back({"C" + std::to_string(j + 1), betas[j]});
    return CurveSpec(std::move(branches));
}

unsigned ComponentIndex::size() const {
    unsigned total = 0;
    for (const auto& p : per_branch) total += p.size();
    return total;
}

std::vector<Partition> components_local(unsigned n, unsigned beta) { return partitions_bounded(n, beta); }

namespace {

void distribute(unsigned remaining, std::size_t branch, const CurveSpec& spec, std::vector<Partition>& prefix,
                std::vector<ComponentIndex>& out) {
    const auto& branches = spec.branches();
    if (branch + 1 == branches.size()) {
        for (auto& p : partitions_bounded(remaining, branches[branch].beta)) {
            prefix.push_back(std::move(p));
            out.push_back({prefix});
            prefix.pop_back();
        }
        return;
    }
    // Larger shares on earlier branches come first.
    for (unsigned share = remaining + 1; share-- > 0;) {
        for (auto& p : partitions_bounded(share, branches[branch].beta)) {
            prefix.push_back(std::move(p));
            distribute(remaining - share, branch + 1, spec, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<ComponentIndex> components_curve(unsigned n, const CurveSpec& spec) {
    std::vector<ComponentIndex> out;
    if (spec.branches().empty()) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<Partition> prefix;
    distribute(n, 0, spec, prefix, out);
    return out;
}

Integer count_components(unsigned n, const CurveSpec& spec) {
    std::vector<Integer> series(n + 1, 0);
    series[0] = 1;
    for (const auto& b : spec.branches())
        for (unsigned k = 1; k <= b.beta; ++k)
            // Multiply by 1/(1 - q^k).
            for (unsigned i = k; i <= n; ++i) series[i] += series[i - k];
    return series[n];
}

} // namespace hilbcurve
