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

#include "hilbcurve/rational_matrix.hpp"

#include <sstream>
#include <utility>

namespace hilbcurve {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void RationalMatrix::set_column(std::size_t c, const std::vector<Rational>& values) {
    if (values.size() != rows_) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!hilbcurve::is_zero(v)) return false;
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix shape mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (hilbcurve::is_zero(a)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in sum");
    RationalMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in difference");
    RationalMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const {
    RationalMatrix out = *this;
    for (auto& v : out.data_) v *= c;
    return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << hilbcurve::to_string((*this)(i, j));
        out << "]\n";
    }
    return out.str();
}

RationalMatrix pow(const RationalMatrix& m, unsigned exponent) {
    if (m.rows() != m.cols()) throw Error("power of a non-square matrix");
    RationalMatrix result = RationalMatrix::identity(m.rows());
    RationalMatrix sq = m;
    while (exponent > 0) {
        if (exponent & 1U) result = result * sq;
        exponent >>= 1U;
        if (exponent > 0) sq = sq * sq;
    }
    return result;
}

std::size_t rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Scale each row by the lcm of its denominators.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    Integer prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev_pivot = a[r][c];
        ++r;
    }
    return r;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n) throw Error("solve requires a square system");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a[p][c])) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        const Rational inv = 1 / a[c][c];
        for (std::size_t j = c; j <= n; ++j) a[c][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a[i][c])) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

} // namespace hilbcurve
