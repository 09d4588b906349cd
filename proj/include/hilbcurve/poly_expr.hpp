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

#ifndef HILBCURVE_POLY_EXPR_HPP
#define HILBCURVE_POLY_EXPR_HPP

#include "hilbcurve/multipoly.hpp"
#include "hilbcurve/rational.hpp"
#include "hilbcurve/unipoly.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace hilbcurve {

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Syntax tree of a polynomial in x and y.
struct PolyExpr {
    enum class Op { Add, Sub, Mul };

    struct Number {
        Rational value;  // non-negative
    };
    struct Variable {
        char name;  // 'x' or 'y'
    };
    struct Negate {
        std::shared_ptr<const PolyExpr> operand;
    };
    struct Binary {
        Op op;
        std::shared_ptr<const PolyExpr> lhs;
        std::shared_ptr<const PolyExpr> rhs;
    };
    struct Power {
        std::shared_ptr<const PolyExpr> base;
        unsigned exponent;
    };

    std::variant<Number, Variable, Negate, Binary, Power> node;
};

using PolyExprPtr = std::shared_ptr<const PolyExpr>;

/// Recursive descent over
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' exponent)?
///   atom  := number | 'x' | 'y' | '(' expr ')'
/// Numbers are integers or p/q literals; exponents are non-negative
/// integers, optionally parenthesized.  Throws ParseError with the byte
/// offset of the offending token.
PolyExprPtr parse_poly(std::string_view text);

/// Prints with the minimal parentheses that parse back to the same tree.
std::string print(const PolyExpr& e);

bool structurally_equal(const PolyExpr& a, const PolyExpr& b);

/// Expands the tree over the variable set {x, y}.
MultiPoly to_multipoly(const PolyExpr& e);

/// Expands the tree as a polynomial in x alone.  Throws Error if y occurs.
UniPoly to_unipoly(const PolyExpr& e);

/// The shared {x, y} variable set.
const VariableSetPtr& xy_variables();

} // namespace hilbcurve

#endif
