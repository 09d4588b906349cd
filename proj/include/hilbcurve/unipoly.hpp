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

#ifndef HILBCURVE_UNIPOLY_HPP
#define HILBCURVE_UNIPOLY_HPP

#include "hilbcurve/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hilbcurve {

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by the zero polynomial") {}
};

/// Dense univariate polynomial over the rationals.  coeffs()[i] is the
/// coefficient of x^i; trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient list.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t k);
    static UniPoly x() { return monomial(1, 1); }
    /// prod (x - r) over the given roots, repeated roots included.
    static UniPoly from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// nullopt is the degree of the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// Coefficient of x^i, zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& lead() const;

    Rational eval(const Rational& x) const;

    /// Horner evaluation in any ring T constructible from a Rational.
    template <typename T>
    T eval_in(const T& x) const {
        T acc{Rational(0)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + T{*it};
        return acc;
    }

    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form in the given variable, highest degree first.
    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

struct DivRem {
    UniPoly quotient;
    UniPoly remainder;
};

/// f = q*g + r with deg r < deg g.  Throws DivisionByZero for g == 0.
DivRem divrem(const UniPoly& f, const UniPoly& g);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

struct SquarefreeFactor {
    UniPoly factor;  // monic, squarefree
    unsigned multiplicity;
};

/// Yun's algorithm.  f = lc(f) * prod factor^multiplicity with factors
/// pairwise coprime and multiplicities strictly increasing.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

/// b^e mod a by square-and-multiply, reducing after every product.
/// a must be monic of degree >= 1.
UniPoly powmod(const UniPoly& b, unsigned e, const UniPoly& a);

} // namespace hilbcurve

#endif
