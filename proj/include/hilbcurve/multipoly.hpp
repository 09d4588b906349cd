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

#ifndef HILBCURVE_MULTIPOLY_HPP
#define HILBCURVE_MULTIPOLY_HPP

#include "hilbcurve/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hilbcurve {

/// Ordered list of variable names shared by every polynomial of one context.
class VariableSet {
  public:
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& name) const;

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

VariableSetPtr make_variables(std::vector<std::string> names);

/// Exponent vector, one entry per variable of the context.
using Exponents = std::vector<std::uint32_t>;

class MultiPoly;

/// Substitution target: a rational or a polynomial of the same context.
using Assignment = std::map<std::string, MultiPoly>;
using PointAssignment = std::map<std::string, Rational>;

/// Sparse multivariate polynomial with rational coefficients.  Zero
/// coefficients are never stored.  Binary operations require both operands
/// to live over the same VariableSet.
class MultiPoly {
  public:
    explicit MultiPoly(VariableSetPtr vars);

    static MultiPoly constant(VariableSetPtr vars, const Rational& c);
    static MultiPoly variable(VariableSetPtr vars, const std::string& name);

    const VariableSetPtr& variables() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// The value when the polynomial has no non-constant term.
    std::optional<Rational> constant_value() const;
    /// Total degree, nullopt for the zero polynomial.
    std::optional<std::uint32_t> total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Replace the named variables.  Throws Error for a name that is not
    /// part of the variable set.
    MultiPoly substitute(const Assignment& values) const;
    MultiPoly substitute(const PointAssignment& values) const;
    /// Full evaluation; throws Error if a variable occurring in the
    /// polynomial is left unassigned.
    Rational evaluate(const PointAssignment& values) const;

    MultiPoly partial_derivative(const std::string& var) const;

    std::string to_string() const;

  private:
    void check_compatible(const MultiPoly& rhs) const;

    VariableSetPtr vars_;
    std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

} // namespace hilbcurve

#endif
