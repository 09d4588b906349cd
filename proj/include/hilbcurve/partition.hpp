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

#ifndef HILBCURVE_PARTITION_HPP
#define HILBCURVE_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hilbcurve {

/// x^r y^s, drawn as the box in column r and row s of a French diagram.
struct Monomial {
    unsigned r = 0;
    unsigned s = 0;

    unsigned degree() const { return r + s; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

/// Weakly decreasing sequence of positive integers.  Row j of the French
/// Young diagram (counted from the bottom, starting at 0) holds parts()[j]
/// boxes.
class Partition {
  public:
    Partition() = default;
    /// Throws Error unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts);

    /// Sorts the given multiplicities into partition order.
    static Partition from_multiset(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const;
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    unsigned largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

    bool contains(const Monomial& m) const;
    Partition conjugate() const;
    bool is_rectangle() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<unsigned> parts_;
};

/// "(2,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);

/// Fixed total order shared by every monomial listing: total degree, then
/// descending x-exponent.
bool monomial_order(const Monomial& a, const Monomial& b);

/// B_mu: the boxes of the diagram.
std::vector<Monomial> basis_monomials(const Partition& mu);

/// Monomials outside mu whose left or lower neighbour is inside mu.
std::vector<Monomial> border_monomials(const Partition& mu);

/// Minimal monomials of the complement of mu (the outer corners).
std::vector<Monomial> corner_monomials(const Partition& mu);

/// All partitions of n with every part <= max_part, in reverse
/// lexicographic order.
std::vector<Partition> partitions_bounded(unsigned n, unsigned max_part);

/// True iff mu has at most beta parts (rows).
bool rows_at_most(const Partition& mu, unsigned beta);

} // namespace hilbcurve

#endif
