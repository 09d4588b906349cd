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

#ifndef HILBCURVE_RATIONAL_MATRIX_HPP
#define HILBCURVE_RATIONAL_MATRIX_HPP

#include "hilbcurve/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hilbcurve {

/// Dense row-major matrix of rationals.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Rational>& values);
    std::vector<Rational> row(std::size_t r) const;

    bool is_zero() const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix operator*(const Rational& c) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix pow(const RationalMatrix& m, unsigned exponent);

/// Exact rank.  Rows are cleared to integers and reduced by Bareiss
/// fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// Solution of m * x = rhs for square nonsingular m, nullopt if singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

} // namespace hilbcurve

#endif
