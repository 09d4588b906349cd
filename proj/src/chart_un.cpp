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

#include "hilbcurve/chart_un.hpp"

#include <utility>

namespace hilbcurve {

ChartIdealN::ChartIdealN(UniPoly a, const UniPoly& b) : a_(std::move(a)) {
    if (!a_.is_monic() || *a_.degree() == 0) throw Error("a(x) must be monic of degree >= 1, got " + a_.to_string());
    b_ = divrem(b, a_).remainder;
}

ChartIdealN ChartIdealN::from_coordinates(const std::vector<Rational>& a_coords,
                                          const std::vector<Rational>& b_coords) {
    const std::size_t n = a_coords.size();
    if (n == 0 || b_coords.size() != n) throw Error("chart coordinates need n a-values and n b-values, n >= 1");
    std::vector<Rational> a(n + 1);
    for (std::size_t i = 0; i < n; ++i) a[i] = -a_coords[i];
    a[n] = 1;
    return {UniPoly(std::move(a)), UniPoly(b_coords)};
}

std::vector<Rational> ChartIdealN::a_coordinates() const {
    std::vector<Rational> out(n());
    for (unsigned i = 0; i < n(); ++i) out[i] = -a_.coeff(i);
    return out;
}

std::vector<Rational> ChartIdealN::b_coordinates() const {
    std::vector<Rational> out(n());
    for (unsigned i = 0; i < n(); ++i) out[i] = b_.coeff(i);
    return out;
}

namespace {

std::vector<Rational> padded(const UniPoly& p, unsigned n) {
    std::vector<Rational> out(n);
    for (unsigned i = 0; i < n; ++i) out[i] = p.coeff(i);
    return out;
}

} // namespace

std::vector<Rational> normal_form(const ChartIdealN& ideal, unsigned r, unsigned s) {
    UniPoly xr = powmod(UniPoly::x(), r, ideal.a());
    UniPoly bs = powmod(ideal.b(), s, ideal.a());
    return padded(divrem(xr * bs, ideal.a()).remainder, ideal.n());
}

bool contains_power_y(const ChartIdealN& ideal, unsigned beta) {
    return powmod(ideal.b(), beta, ideal.a()).is_zero();
}

bool contains_poly(const ChartIdealN& ideal, const MultiPoly& f) {
    const auto& vars = *f.variables();
    auto xi = vars.index("x");
    auto yi = vars.index("y");
    UniPoly acc;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && i != xi && i != yi)
                throw Error("membership polynomial may only use x and y, found '" + vars.name(i) + "'");
        unsigned r = xi ? e[*xi] : 0;
        unsigned s = yi ? e[*yi] : 0;
        UniPoly term = powmod(UniPoly::x(), r, ideal.a()) * powmod(ideal.b(), s, ideal.a());
        acc += divrem(term, ideal.a()).remainder * c;
    }
    return acc.is_zero();
}

Partition hilbert_chow_profile(const ChartIdealN& ideal) {
    std::vector<unsigned> mults;
    for (const auto& [factor, d] : squarefree_decomposition(ideal.a()))
        mults.insert(mults.end(), *factor.degree(), d);
    return Partition::from_multiset(std::move(mults));
}

RationalMatrix companion_matrix(const UniPoly& monic) {
    if (!monic.is_monic() || *monic.degree() == 0) throw Error("companion matrix needs a monic polynomial of degree >= 1");
    const std::size_t n = *monic.degree();
    RationalMatrix x(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) x(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i) x(i, n - 1) = -monic.coeff(i);
    return x;
}

RationalMatrix multiplication_by_y(const ChartIdealN& ideal) {
    const RationalMatrix x = companion_matrix(ideal.a());
    const std::size_t n = ideal.n();
    RationalMatrix acc(n, n);
    const auto& c = ideal.b().coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + RationalMatrix::identity(n) * *it;
    return acc;
}

bool oracle_nilpotency(const ChartIdealN& ideal, unsigned beta) {
    return pow(multiplication_by_y(ideal), beta).is_zero();
}

} // namespace hilbcurve
