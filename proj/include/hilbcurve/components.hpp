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

#ifndef HILBCURVE_COMPONENTS_HPP
#define HILBCURVE_COMPONENTS_HPP

#include "hilbcurve/partition.hpp"
#include "hilbcurve/rational.hpp"

#include <string>
#include <vector>

namespace hilbcurve {

/// A branch is an opaque reduced irreducible curve C_j carried with
/// multiplicity beta_j.
struct Branch {
    std::string label;
    unsigned beta = 1;
};

/// f = prod f_j^{beta_j}.  Throws Error on beta_j == 0 or duplicate labels.
class CurveSpec {
  public:
    explicit CurveSpec(std::vector<Branch> branches);
    /// Branches labelled C1, C2, ... with the given multiplicities.
    static CurveSpec from_multiplicities(const std::vector<unsigned>& betas);

    const std::vector<Branch>& branches() const { return branches_; }

  private:
    std::vector<Branch> branches_;
};

/// One partition per branch (possibly empty), parts bounded by beta_j,
/// total size n.
struct ComponentIndex {
    std::vector<Partition> per_branch;

    unsigned size() const;
    friend bool operator==(const ComponentIndex&, const ComponentIndex&) = default;
};

/// Components of Hilb^n({y^beta = 0}), each of dimension n.
std::vector<Partition> components_local(unsigned n, unsigned beta);

/// Components of Hilb^n(C), each of dimension n, in branch order with
/// partitions on the first branch varying slowest.
std::vector<ComponentIndex> components_curve(unsigned n, const CurveSpec& spec);

/// Coefficient of q^n in prod_j prod_{k <= beta_j} 1/(1 - q^k).
Integer count_components(unsigned n, const CurveSpec& spec);

} // namespace hilbcurve

#endif
