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

#include "hilbcurve/partition.hpp"

#include "hilbcurve/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hilbcurve {

std::string to_string(const Monomial& m) {
    if (m.r == 0 && m.s == 0) return "1";
    std::string out;
    if (m.r > 0) out += m.r == 1 ? "x" : "x^" + std::to_string(m.r);
    if (m.s > 0) {
        if (!out.empty()) out += "*";
        out += m.s == 1 ? "y" : "y^" + std::to_string(m.s);
    }
    return out;
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

Partition Partition::from_multiset(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }

bool Partition::contains(const Monomial& m) const { return m.s < parts_.size() && m.r < parts_[m.s]; }

Partition Partition::conjugate() const {
    std::vector<unsigned> out(largest_part(), 0);
    for (unsigned part : parts_)
        for (unsigned i = 0; i < part; ++i) ++out[i];
    return Partition(std::move(out));
}

bool Partition::is_rectangle() const {
    return !parts_.empty() && parts_.front() == parts_.back();
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + ")";
}

bool monomial_order(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.r > b.r;
}

std::vector<Monomial> basis_monomials(const Partition& mu) {
    std::vector<Monomial> out;
    for (unsigned s = 0; s < mu.length(); ++s)
        for (unsigned r = 0; r < mu.parts()[s]; ++r) out.push_back({r, s});
    std::sort(out.begin(), out.end(), monomial_order);
    return out;
}

std::vector<Monomial> border_monomials(const Partition& mu) {
    std::vector<Monomial> out;
    const unsigned width = mu.largest_part();
    const auto height = static_cast<unsigned>(mu.length());
    for (unsigned s = 0; s <= height; ++s)
        for (unsigned r = 0; r <= width; ++r) {
            Monomial m{r, s};
            if (mu.contains(m)) continue;
            bool left = r > 0 && mu.contains({r - 1, s});
            bool below = s > 0 && mu.contains({r, s - 1});
            if (left || below) out.push_back(m);
        }
    std::sort(out.begin(), out.end(), monomial_order);
    return out;
}

std::vector<Monomial> corner_monomials(const Partition& mu) {
    std::vector<Monomial> out;
    const unsigned width = mu.largest_part();
    const auto height = static_cast<unsigned>(mu.length());
    for (unsigned s = 0; s <= height; ++s)
        for (unsigned r = 0; r <= width; ++r) {
            Monomial m{r, s};
            if (mu.contains(m)) continue;
            bool left = r == 0 || mu.contains({r - 1, s});
            bool below = s == 0 || mu.contains({r, s - 1});
            if (left && below) out.push_back(m);
        }
    std::sort(out.begin(), out.end(), monomial_order);
    return out;
}

namespace {

void extend(unsigned remaining, unsigned cap, std::vector<unsigned>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_bounded(unsigned n, unsigned max_part) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    if (n > 0 && max_part == 0) return out;
    extend(n, max_part, prefix, out);
    return out;
}

bool rows_at_most(const Partition& mu, unsigned beta) { return mu.length() <= beta; }

} // namespace hilbcurve
