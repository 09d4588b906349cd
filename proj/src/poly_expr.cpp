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

#include "hilbcurve/poly_expr.hpp"

#include <cctype>

namespace hilbcurve {

namespace {

PolyExprPtr make(PolyExpr::Number n) { return std::make_shared<const PolyExpr>(PolyExpr{std::move(n)}); }
PolyExprPtr make(PolyExpr::Variable v) { return std::make_shared<const PolyExpr>(PolyExpr{v}); }
PolyExprPtr make(PolyExpr::Negate n) { return std::make_shared<const PolyExpr>(PolyExpr{std::move(n)}); }
PolyExprPtr make(PolyExpr::Binary b) { return std::make_shared<const PolyExpr>(PolyExpr{std::move(b)}); }
PolyExprPtr make(PolyExpr::Power p) { return std::make_shared<const PolyExpr>(PolyExpr{std::move(p)}); }

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    PolyExprPtr parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        auto e = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

  private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    PolyExprPtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make(PolyExpr::Binary{PolyExpr::Op::Add, lhs, term()});
            else if (accept('-'))
                lhs = make(PolyExpr::Binary{PolyExpr::Op::Sub, lhs, term()});
            else
                return lhs;
        }
    }

    PolyExprPtr term() {
        auto lhs = unary();
        while (accept('*')) lhs = make(PolyExpr::Binary{PolyExpr::Op::Mul, lhs, unary()});
        return lhs;
    }

    PolyExprPtr unary() {
        if (accept('-')) return make(PolyExpr::Negate{unary()});
        return power();
    }

    PolyExprPtr power() {
        auto base = atom();
        if (!accept('^')) return base;
        unsigned e = exponent();
        if (peek() == '^') throw ParseError("exponent on non-atom", pos_);
        return make(PolyExpr::Power{base, e});
    }

    unsigned exponent() {
        skip_space();
        const std::size_t start = pos_;
        bool paren = accept('(');
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("exponent must be a non-negative integer", start);
        if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
        if (digits.size() > 6) throw ParseError("exponent too large", start);
        return static_cast<unsigned>(std::stoul(digits));
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
        return out;
    }

    PolyExprPtr atom() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return make(PolyExpr::Variable{c});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            std::string num = read_digits();
            std::string den = "1";
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = read_digits();
                if (den.empty()) throw ParseError("expected denominator", pos_);
            }
            Integer d(den, 10);
            if (sgn(d) == 0) throw ParseError("zero denominator", start);
            return make(PolyExpr::Number{make_rational(Integer(num, 10), d)});
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Binding strength: sums 1, products 2, negation 3, powers 4, atoms 5.
int level(const PolyExpr& e) {
    return std::visit(
        [](const auto& n) -> int {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, PolyExpr::Binary>)
                return n.op == PolyExpr::Op::Mul ? 2 : 1;
            else if constexpr (std::is_same_v<N, PolyExpr::Negate>)
                return 3;
            else if constexpr (std::is_same_v<N, PolyExpr::Power>)
                return 4;
            else
                return 5;
        },
        e.node);
}

std::string wrap(const PolyExpr& e, int min_level) {
    std::string s = print(e);
    return level(e) < min_level ? "(" + s + ")" : s;
}

} // namespace

PolyExprPtr parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string print(const PolyExpr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, PolyExpr::Number>) {
                return to_string(n.value);
            } else if constexpr (std::is_same_v<N, PolyExpr::Variable>) {
                return std::string(1, n.name);
            } else if constexpr (std::is_same_v<N, PolyExpr::Negate>) {
                return "-" + wrap(*n.operand, 3);
            } else if constexpr (std::is_same_v<N, PolyExpr::Power>) {
                return wrap(*n.base, 5) + "^" + std::to_string(n.exponent);
            } else {
                // Left-associative: the right operand needs a strictly
                // tighter binding than the operator itself.
                const int own = n.op == PolyExpr::Op::Mul ? 2 : 1;
                const char* sym = n.op == PolyExpr::Op::Add ? " + " : n.op == PolyExpr::Op::Sub ? " - " : "*";
                return wrap(*n.lhs, own) + sym + wrap(*n.rhs, own + 1);
            }
        },
        e.node);
}

bool structurally_equal(const PolyExpr& a, const PolyExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& n) -> bool {
            using N = std::decay_t<decltype(n)>;
            const auto& m = std::get<N>(b.node);
            if constexpr (std::is_same_v<N, PolyExpr::Number>)
                return n.value == m.value;
            else if constexpr (std::is_same_v<N, PolyExpr::Variable>)
                return n.name == m.name;
            else if constexpr (std::is_same_v<N, PolyExpr::Negate>)
                return structurally_equal(*n.operand, *m.operand);
            else if constexpr (std::is_same_v<N, PolyExpr::Power>)
                return n.exponent == m.exponent && structurally_equal(*n.base, *m.base);
            else
                return n.op == m.op && structurally_equal(*n.lhs, *m.lhs) && structurally_equal(*n.rhs, *m.rhs);
        },
        a.node);
}

const VariableSetPtr& xy_variables() {
    static const VariableSetPtr vars = make_variables({"x", "y"});
    return vars;
}

MultiPoly to_multipoly(const PolyExpr& e) {
    const auto& vars = xy_variables();
    return std::visit(
        [&](const auto& n) -> MultiPoly {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, PolyExpr::Number>) {
                return MultiPoly::constant(vars, n.value);
            } else if constexpr (std::is_same_v<N, PolyExpr::Variable>) {
                return MultiPoly::variable(vars, std::string(1, n.name));
            } else if constexpr (std::is_same_v<N, PolyExpr::Negate>) {
                return -to_multipoly(*n.operand);
            } else if constexpr (std::is_same_v<N, PolyExpr::Power>) {
                return pow(to_multipoly(*n.base), n.exponent);
            } else {
                MultiPoly l = to_multipoly(*n.lhs);
                MultiPoly r = to_multipoly(*n.rhs);
                switch (n.op) {
                case PolyExpr::Op::Add: return l + r;
                case PolyExpr::Op::Sub: return l - r;
                case PolyExpr::Op::Mul: return l * r;
                }
                throw Error("unreachable");
            }
        },
        e.node);
}

UniPoly to_unipoly(const PolyExpr& e) {
    MultiPoly p = to_multipoly(e);
    std::vector<Rational> coeffs;
    for (const auto& [exps, c] : p.terms()) {
        if (exps[1] != 0) throw Error("expected a polynomial in x alone, got " + p.to_string());
        if (coeffs.size() <= exps[0]) coeffs.resize(exps[0] + 1);
        coeffs[exps[0]] = c;
    }
    return UniPoly(std::move(coeffs));
}

} // namespace hilbcurve
