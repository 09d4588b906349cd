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

#ifndef HILBCURVE_CHART_UN_HPP
#define HILBCURVE_CHART_UN_HPP

#include "hilbcurve/multipoly.hpp"
#include "hilbcurve/partition.hpp"
#include "hilbcurve/rational_matrix.hpp"
#include "hilbcurve/unipoly.hpp"

#include <vector>

namespace hilbcurve {

/// An ideal I = (a(x), y - b(x)) of the chart U_(n): a is monic of degree
/// n >= 1 and b is kept reduced modulo a, so 1, x, ..., x^{n-1} is a basis
/// of the quotient.
class ChartIdealN {
  public:
    /// Reduces b modulo a.  Throws Error unless a is monic of degree >= 1.
    ChartIdealN(UniPoly a, const UniPoly& b);

    /// From chart coordinates: x^n = sum a_i x^i and y = sum b_i x^i.
    static ChartIdealN from_coordinates(const std::vector<Rational>& a_coords,
                                        const std::vector<Rational>& b_coords);

    unsigned n() const { return static_cast<unsigned>(*a_.degree()); }
    const UniPoly& a() const { return a_; }
    const UniPoly& b() const { return b_; }

    /// (a_0, ..., a_{n-1}) with x^n = sum a_i x^i mod I.
    std::vector<Rational> a_coordinates() const;
    /// (b_0, ..., b_{n-1}) with y = sum b_i x^i mod I.
    std::vector<Rational> b_coordinates() const;

    friend bool operator==(const ChartIdealN&, const ChartIdealN&) = default;

  private:
    UniPoly a_;
    UniPoly b_;
};

/// Coefficients C^{rs}_{h0} of x^r y^s in the basis 1, x, ..., x^{n-1}.
std::vector<Rational> normal_form(const ChartIdealN& ideal, unsigned r, unsigned s);

/// y^beta lies in I iff a(x) divides b(x)^beta.
bool contains_power_y(const ChartIdealN& ideal, unsigned beta);

/// f(x, y) lies in I iff f(x, b(x)) vanishes mod a(x).  f must be a
/// polynomial over variables named "x" and "y" (either may be absent).
bool contains_poly(const ChartIdealN& ideal, const MultiPoly& f);

/// Multiplicities of the distinct roots of a(x), read off the squarefree
/// decomposition without locating the roots.
Partition hilbert_chow_profile(const ChartIdealN& ideal);

/// Matrix of multiplication by x on the basis 1, x, ..., x^{n-1}.
RationalMatrix companion_matrix(const UniPoly& monic);

/// b(X) evaluated at the companion matrix X of a: multiplication by y.
RationalMatrix multiplication_by_y(const ChartIdealN& ideal);

/// Independent check of contains_power_y: b(X)^beta == 0 with X the
/// companion matrix of a.
bool oracle_nilpotency(const ChartIdealN& ideal, unsigned beta);

} // namespace hilbcurve

#endif
