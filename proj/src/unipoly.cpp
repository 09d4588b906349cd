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

#include "hilbcurve/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hilbcurve {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p = constant(1);
    for (const auto& r : roots) p *= UniPoly(std::vector<Rational>{-r, Rational(1)});
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && hilbcurve::is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::lead() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const { return eval_in<Rational>(x); }

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / lead();
    return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (hilbcurve::is_zero(coeffs_[i])) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (hilbcurve::is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (hilbcurve::is_zero(c)) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (k == 0 || !unit) {
            std::string m = hilbcurve::to_string(mag);
            out << m;
            if (k > 0) out << "*";
        }
        if (k >= 1) out << var;
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
    UniPoly result = UniPoly::constant(1);
    UniPoly sq = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= sq;
        exponent >>= 1U;
        if (exponent > 0) sq *= sq;
    }
    return result;
}

DivRem divrem(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw DivisionByZero();
    const std::size_t dg = *g.degree();
    std::vector<Rational> r = f.coeffs();
    if (r.size() <= dg) return {UniPoly(), f};
    std::vector<Rational> q(r.size() - dg);
    const Rational inv_lead = 1 / g.lead();
    const auto& gc = g.coeffs();
    for (std::size_t k = r.size(); k-- > dg;) {
        if (is_zero(r[k])) continue;
        Rational t = r[k] * inv_lead;
        q[k - dg] = t;
        for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= t * gc[j];
    }
    r.resize(dg);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f;
    UniPoly b = g;
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw Error("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    const UniPoly monic_f = f.monic();
    if (*monic_f.degree() == 0) return out;

    const UniPoly df = monic_f.derivative();
    UniPoly a = gcd(monic_f, df);
    UniPoly b = divrem(monic_f, a).quotient;
    UniPoly c = divrem(df, a).quotient;
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (*b.degree() > 0) {
        UniPoly g = gcd(b, d);
        if (*g.degree() > 0) out.push_back({g, i});
        b = divrem(b, g).quotient;
        c = divrem(d, g).quotient;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly powmod(const UniPoly& b, unsigned e, const UniPoly& a) {
    if (!a.is_monic() || *a.degree() == 0) throw Error("powmod requires a monic modulus of degree >= 1");
    UniPoly result = divrem(UniPoly::constant(1), a).remainder;
    UniPoly sq = divrem(b, a).remainder;
    while (e > 0) {
        if (e & 1U) result = divrem(result * sq, a).remainder;
        e >>= 1U;
        if (e > 0) sq = divrem(sq * sq, a).remainder;
    }
    return result;
}

} // namespace hilbcurve
