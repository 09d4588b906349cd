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

#include "hilbcurve/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hilbcurve {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!index_.emplace(names_[i], i).second) throw Error("duplicate variable name '" + names_[i] + "'");
}

std::optional<std::size_t> VariableSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VariableSetPtr make_variables(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

MultiPoly::MultiPoly(VariableSetPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw Error("polynomial without a variable set");
}

MultiPoly MultiPoly::constant(VariableSetPtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VariableSetPtr vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    auto idx = p.vars_->index(name);
    if (!idx) throw Error("unknown variable '" + name + "'");
    Exponents e(p.vars_->size(), 0);
    e[*idx] = 1;
    p.add_term(e, 1);
    return p;
}

std::optional<Rational> MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() > 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    for (auto k : e)
        if (k != 0) return std::nullopt;
    return c;
}

std::optional<std::uint32_t> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t best = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t d = 0;
        for (auto k : e) d += k;
        best = std::max(best, d);
    }
    return best;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    std::uint32_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
    return best;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_->size()) throw Error("exponent vector does not match the variable set");
    if (hilbcurve::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (hilbcurve::is_zero(it->second)) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& rhs) const {
    if (vars_ != rhs.vars_ && vars_->names() != rhs.vars_->names())
        throw Error("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (hilbcurve::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.vars_);
    Exponents e(a.vars_->size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result = MultiPoly::constant(base.variables(), 1);
    MultiPoly sq = base;
    while (exponent > 0) {
        if (exponent & 1U) result = result * sq;
        exponent >>= 1U;
        if (exponent > 0) sq = sq * sq;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const Assignment& values) const {
    std::vector<std::optional<MultiPoly>> repl(vars_->size());
    for (const auto& [name, value] : values) {
        auto idx = vars_->index(name);
        if (!idx) throw Error("substitution references unknown variable '" + name + "'");
        check_compatible(value);
        repl[*idx] = value;
    }
    // Cache powers of each replacement.
    std::vector<std::vector<MultiPoly>> powers(vars_->size());
    auto power_of = [&](std::size_t var, std::uint32_t k) -> const MultiPoly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(MultiPoly::constant(vars_, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * *repl[var]);
        return cache[k];
    };

    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents kept = e;
        MultiPoly factor = MultiPoly::constant(vars_, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!repl[i] || e[i] == 0) continue;
            kept[i] = 0;
            factor = factor * power_of(i, e[i]);
        }
        MultiPoly mono(vars_);
        mono.add_term(kept, 1);
        out += factor * mono;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const PointAssignment& values) const {
    Assignment lifted;
    for (const auto& [name, q] : values) lifted.emplace(name, MultiPoly::constant(vars_, q));
    return substitute(lifted);
}

Rational MultiPoly::evaluate(const PointAssignment& values) const {
    MultiPoly reduced = substitute(values);
    auto c = reduced.constant_value();
    if (!c) throw Error("evaluation left unassigned variables: " + reduced.to_string());
    return *c;
}

MultiPoly MultiPoly::partial_derivative(const std::string& var) const {
    auto idx = vars_->index(var);
    if (!idx) throw Error("unknown variable '" + var + "'");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[*idx] == 0) continue;
        Exponents d = e;
        d[*idx] -= 1;
        out.add_term(d, c * e[*idx]);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest total degree first, then reverse lexicographic exponent order.
    std::vector<std::pair<const Exponents*, const Rational*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
    auto deg = [](const Exponents& e) {
        std::uint32_t d = 0;
        for (auto k : e) d += k;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& l, const auto& r) {
        auto dl = deg(*l.first);
        auto dr = deg(*r.first);
        if (dl != dr) return dl > dr;
        return *l.first > *r.first;
    });
    for (const auto& [ep, cp] : order) {
        const Exponents& e = *ep;
        const Rational& c = *cp;
        Rational mag = abs(c);
        if (first)
            out << (sgn(c) < 0 ? "-" : "");
        else
            out << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool is_const = deg(e) == 0;
        bool need_star = false;
        if (is_const || mag != 1) {
            out << hilbcurve::to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_->name(i);
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

} // namespace hilbcurve
