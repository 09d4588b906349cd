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

#ifndef HILBCURVE_CHART_MU_HPP
#define HILBCURVE_CHART_MU_HPP

#include "hilbcurve/chart_un.hpp"
#include "hilbcurve/multipoly.hpp"
#include "hilbcurve/partition.hpp"
#include "hilbcurve/rational_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbcurve {

/// Square matrix with polynomial entries.
class PolyMatrix {
  public:
    PolyMatrix(VariableSetPtr vars, std::size_t n);

    std::size_t size() const { return n_; }
    MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    PolyMatrix operator*(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    std::vector<MultiPoly> operator*(const std::vector<MultiPoly>& v) const;

    PolyMatrix substitute(const Assignment& values) const;
    RationalMatrix evaluate(const PointAssignment& values) const;

  private:
    VariableSetPtr vars_;
    std::size_t n_;
    std::vector<MultiPoly> data_;
};

/// Generic presentation of the chart U_mu.  Every border monomial m carries
/// one variable per basis box, C[r,s][h,k], holding the expansion of m in
/// B_mu.  X and Y are the multiplication matrices: the column of box b is the
/// unit vector of x*b (resp. y*b) when that monomial is a box, and the
/// variable vector of the border monomial otherwise.  A border monomial
/// reached by both an x- and a y-shift uses one variable vector.
struct ChartPresentation {
    Partition mu;
    std::vector<Monomial> basis;
    std::vector<Monomial> border;
    std::vector<Monomial> corners;
    VariableSetPtr variables;
    PolyMatrix x;
    PolyMatrix y;
    /// Variables of non-corner border monomials solved from commutator
    /// entries of the form c*v + p, c a nonzero constant.  Values are
    /// polynomials in the remaining variables.
    Assignment shared;

    std::size_t n() const { return basis.size(); }
    std::size_t basis_index(const Monomial& box) const;
    /// Variables not eliminated by sharing, in declaration order.
    std::vector<std::string> free_variables() const;
};

/// Name of the coefficient of box (h,k) in the expansion of x^r y^s.
std::string chart_variable(const Monomial& expanded, const Monomial& box);

/// Throws Error for the empty partition.
ChartPresentation build_presentation(const Partition& mu);

/// Non-zero entries of XY - YX after applying the shared substitutions,
/// row-major.
std::vector<MultiPoly> commutator_relations(const ChartPresentation& pres);

/// Non-zero entries of the raw XY - YX over all border variables.
std::vector<MultiPoly> raw_commutator_relations(const ChartPresentation& pres);

/// The n entries of Y^beta e_(0,0), i.e. the coefficients C^{0,beta}_{hk},
/// after applying the shared substitutions.
std::vector<MultiPoly> zbeta_equations(const ChartPresentation& pres, unsigned beta);

/// True when some Z_beta equation is a non-zero constant, so Z_beta misses
/// the chart entirely.
bool zbeta_inconsistent(const std::vector<MultiPoly>& equations);

struct ChartPointEvaluation {
    RationalMatrix x;
    RationalMatrix y;
    /// Entries of XY - YX, row-major.
    std::vector<Rational> commutator;
    /// Entries of Y^beta e_(0,0); empty when no beta was requested.
    std::vector<Rational> zbeta;

    bool commuting() const;
    bool on_zbeta() const;
};

/// Evaluates X, Y and the residuals at a rational point.  Every free
/// variable must be assigned; shared variables that are missing are
/// computed from their substitutions.  Throws Error for missing or unknown
/// variables.
ChartPointEvaluation substitute_point(const ChartPresentation& pres, const PointAssignment& point,
                                      std::optional<unsigned> beta = std::nullopt);

/// Values of every variable of build_presentation((n)) at the given ideal:
/// the normal forms of the border monomials x^n, y, xy, ..., x^{n-1}y.
PointAssignment embed_un_point(const ChartIdealN& ideal);

/// Chart coordinates of the radical ideal of n distinct points of the
/// plane, or nullopt when B_mu is not a basis of its quotient.
std::optional<PointAssignment> chart_point_from_support(const ChartPresentation& pres,
                                                        const std::vector<std::pair<Rational, Rational>>& support);

/// Exact rank of the Jacobian of the polynomials with respect to the named
/// variables, evaluated at the point.
std::size_t jacobian_rank(const std::vector<MultiPoly>& polys, const std::vector<std::string>& wrt,
                          const PointAssignment& point);

} // namespace hilbcurve

#endif
