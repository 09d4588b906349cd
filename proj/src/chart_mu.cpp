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

#include "hilbcurve/chart_mu.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hilbcurve {

PolyMatrix::PolyMatrix(VariableSetPtr vars, std::size_t n)
    : vars_(std::move(vars)), n_(n), data_(n * n, MultiPoly(vars_)) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    PolyMatrix out(vars_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const MultiPoly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
        }
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

std::vector<MultiPoly> PolyMatrix::operator*(const std::vector<MultiPoly>& v) const {
    std::vector<MultiPoly> out(n_, MultiPoly(vars_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

PolyMatrix PolyMatrix::substitute(const Assignment& values) const {
    PolyMatrix out = *this;
    for (auto& p : out.data_) p = p.substitute(values);
    return out;
}

RationalMatrix PolyMatrix::evaluate(const PointAssignment& values) const {
    RationalMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j).evaluate(values);
    return out;
}

std::string chart_variable(const Monomial& expanded, const Monomial& box) {
    return "C[" + std::to_string(expanded.r) + "," + std::to_string(expanded.s) + "][" + std::to_string(box.r) + "," +
           std::to_string(box.s) + "]";
}

std::size_t ChartPresentation::basis_index(const Monomial& box) const {
    auto it = std::find(basis.begin(), basis.end(), box);
    if (it == basis.end()) throw Error(to_string(box) + " is not a box of " + to_string(mu));
    return static_cast<std::size_t>(it - basis.begin());
}

std::vector<std::string> ChartPresentation::free_variables() const {
    std::vector<std::string> out;
    for (const auto& name : variables->names())
        if (!shared.contains(name)) out.push_back(name);
    return out;
}

namespace {

PolyMatrix multiplication_matrix(const ChartPresentation& pres, unsigned dr, unsigned ds) {
    const std::size_t n = pres.n();
    PolyMatrix m(pres.variables, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Monomial target{pres.basis[j].r + dr, pres.basis[j].s + ds};
        if (pres.mu.contains(target)) {
            m(pres.basis_index(target), j) = MultiPoly::constant(pres.variables, 1);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = MultiPoly::variable(pres.variables, chart_variable(target, pres.basis[i]));
    }
    return m;
}

std::vector<MultiPoly> nonzero_entries(const PolyMatrix& m) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!m(i, j).is_zero()) out.push_back(m(i, j));
    return out;
}

// Solve relations of the form c*v + p (c constant, p free of v) for the
// variables of non-corner border monomials, substituting as we go.
Assignment share_variables(const ChartPresentation& pres, std::vector<MultiPoly> relations) {
    std::vector<std::string> candidates;
    for (const auto& m : pres.border) {
        if (std::find(pres.corners.begin(), pres.corners.end(), m) != pres.corners.end()) continue;
        for (const auto& box : pres.basis) candidates.push_back(chart_variable(m, box));
    }

    Assignment shared;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& rel : relations) {
            for (const auto& v : candidates) {
                if (shared.contains(v)) continue;
                auto c = rel.partial_derivative(v).constant_value();
                if (!c || is_zero(*c)) continue;
                MultiPoly var = MultiPoly::variable(pres.variables, v);
                MultiPoly value = (rel - var * *c) * (Rational(-1) / *c);
                Assignment step{{v, value}};
                for (auto& [name, expr] : shared) expr = expr.substitute(step);
                shared.emplace(v, std::move(value));
                std::vector<MultiPoly> next;
                for (const auto& r : relations) {
                    MultiPoly s = r.substitute(step);
                    if (!s.is_zero()) next.push_back(std::move(s));
                }
                relations = std::move(next);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }
    return shared;
}

} // namespace

ChartPresentation build_presentation(const Partition& mu) {
    if (mu.empty()) throw Error("chart presentation needs a non-empty partition");
    auto basis = basis_monomials(mu);
    auto border = border_monomials(mu);
    auto corners = corner_monomials(mu);
    std::vector<std::string> names;
    for (const auto& m : border)
        for (const auto& box : basis) names.push_back(chart_variable(m, box));
    auto vars = make_variables(std::move(names));

    ChartPresentation pres{mu, basis, border, corners, vars, PolyMatrix(vars, 0), PolyMatrix(vars, 0), {}};
    pres.x = multiplication_matrix(pres, 1, 0);
    pres.y = multiplication_matrix(pres, 0, 1);
    pres.shared = share_variables(pres, raw_commutator_relations(pres));
    return pres;
}

std::vector<MultiPoly> raw_commutator_relations(const ChartPresentation& pres) {
    return nonzero_entries(pres.x * pres.y - pres.y * pres.x);
}

std::vector<MultiPoly> commutator_relations(const ChartPresentation& pres) {
    std::vector<MultiPoly> out;
    for (const auto& rel : raw_commutator_relations(pres)) {
        MultiPoly s = rel.substitute(pres.shared);
        if (!s.is_zero()) out.push_back(std::move(s));
    }
    return out;
}

std::vector<MultiPoly> zbeta_equations(const ChartPresentation& pres, unsigned beta) {
    const PolyMatrix y = pres.y.substitute(pres.shared);
    std::vector<MultiPoly> v(pres.n(), MultiPoly(pres.variables));
    v[pres.basis_index({0, 0})] = MultiPoly::constant(pres.variables, 1);
    for (unsigned k = 0; k < beta; ++k) v = y * v;
    return v;
}

bool zbeta_inconsistent(const std::vector<MultiPoly>& equations) {
    return std::any_of(equations.begin(), equations.end(), [](const MultiPoly& p) {
        auto c = p.constant_value();
        return c && !is_zero(*c);
    });
}

bool ChartPointEvaluation::commuting() const {
    return std::all_of(commutator.begin(), commutator.end(), [](const Rational& q) { return is_zero(q); });
}

bool ChartPointEvaluation::on_zbeta() const {
    return std::all_of(zbeta.begin(), zbeta.end(), [](const Rational& q) { return is_zero(q); });
}

ChartPointEvaluation substitute_point(const ChartPresentation& pres, const PointAssignment& point,
                                      std::optional<unsigned> beta) {
    for (const auto& [name, value] : point)
        if (!pres.variables->index(name)) throw Error("unknown chart variable '" + name + "'");
    PointAssignment full = point;
    for (const auto& name : pres.free_variables())
        if (!full.contains(name)) throw Error("incomplete assignment: missing " + name);
    for (const auto& [name, expr] : pres.shared)
        if (!full.contains(name)) full.emplace(name, expr.evaluate(point));

    ChartPointEvaluation out{pres.x.evaluate(full), pres.y.evaluate(full), {}, {}};
    const RationalMatrix comm = out.x * out.y - out.y * out.x;
    for (std::size_t i = 0; i < comm.rows(); ++i)
        for (std::size_t j = 0; j < comm.cols(); ++j) out.commutator.push_back(comm(i, j));
    if (beta) {
        std::vector<Rational> v(pres.n());
        v[pres.basis_index({0, 0})] = 1;
        for (unsigned k = 0; k < *beta; ++k) v = out.y * v;
        out.zbeta = std::move(v);
    }
    return out;
}

PointAssignment embed_un_point(const ChartIdealN& ideal) {
    const unsigned n = ideal.n();
    PointAssignment out;
    for (const auto& m : border_monomials(Partition{n})) {
        auto coeffs = normal_form(ideal, m.r, m.s);
        for (unsigned h = 0; h < n; ++h) out.emplace(chart_variable(m, {h, 0}), coeffs[h]);
    }
    return out;
}

namespace {

Rational monomial_value(const Monomial& m, const Rational& px, const Rational& py) {
    Rational v = 1;
    for (unsigned i = 0; i < m.r; ++i) v *= px;
    for (unsigned i = 0; i < m.s; ++i) v *= py;
    return v;
}

} // namespace

std::optional<PointAssignment> chart_point_from_support(const ChartPresentation& pres,
                                                        const std::vector<std::pair<Rational, Rational>>& support) {
    const std::size_t n = pres.n();
    if (support.size() != n) throw Error("support must contain exactly n points");
    // Row i holds the basis monomials evaluated at point i.
    RationalMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v(i, j) = monomial_value(pres.basis[j], support[i].first, support[i].second);

    PointAssignment out;
    for (const auto& m : pres.border) {
        std::vector<Rational> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = monomial_value(m, support[i].first, support[i].second);
        auto coeffs = solve(v, rhs);
        if (!coeffs) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) out.emplace(chart_variable(m, pres.basis[j]), (*coeffs)[j]);
    }
    return out;
}

std::size_t jacobian_rank(const std::vector<MultiPoly>& polys, const std::vector<std::string>& wrt,
                          const PointAssignment& point) {
    RationalMatrix j(polys.size(), wrt.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (std::size_t c = 0; c < wrt.size(); ++c) j(r, c) = polys[r].partial_derivative(wrt[c]).evaluate(point);
    return rank(j);
}

} // namespace hilbcurve
