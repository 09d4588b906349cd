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

#ifndef HILBCURVE_DIMCHECK_HPP
#define HILBCURVE_DIMCHECK_HPP

#include "hilbcurve/dual.hpp"
#include "hilbcurve/rational.hpp"
#include "hilbcurve/rational_matrix.hpp"
#include "hilbcurve/strata.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hilbcurve {

/// Arithmetic in T[x]/(a) for a monic a given by its chart coordinates,
/// x^n = sum a_i x^i.  Elements are coefficient vectors of length n.
template <typename T>
class MonicQuotient {
  public:
    explicit MonicQuotient(std::vector<T> a_coords) : a_(std::move(a_coords)) {
        if (a_.empty()) throw Error("quotient by a polynomial of degree 0");
    }

    std::size_t n() const { return a_.size(); }

    std::vector<T> one() const {
        std::vector<T> e(n(), T{Rational(0)});
        e[0] = T{Rational(1)};
        return e;
    }

    std::vector<T> multiply(const std::vector<T>& p, const std::vector<T>& q) const {
        const std::size_t n = this->n();
        std::vector<T> prod(2 * n - 1, T{Rational(0)});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) prod[i + j] += p[i] * q[j];
        for (std::size_t k = prod.size(); k-- > n;) {
            const T c = prod[k];
            for (std::size_t i = 0; i < n; ++i) prod[k - n + i] += c * a_[i];
        }
        prod.resize(n);
        return prod;
    }

    std::vector<T> power(std::vector<T> base, unsigned e) const {
        std::vector<T> result = one();
        while (e > 0) {
            if (e & 1U) result = multiply(result, base);
            e >>= 1U;
            if (e > 0) base = multiply(base, base);
        }
        return result;
    }

  private:
    std::vector<T> a_;
};

/// F(a_0..a_{n-1}, b_0..b_{n-1}) = coefficients of b(x)^beta mod a(x), with
/// a(x) = x^n - a_{n-1}x^{n-1} - ... - a_0.  Its zero set is Z_beta in U_(n).
class ConstraintMap {
  public:
    ConstraintMap(unsigned n, unsigned beta);

    unsigned n() const { return n_; }
    unsigned beta() const { return beta_; }

    template <typename T>
    std::vector<T> evaluate(const std::vector<T>& point) const {
        if (point.size() != 2 * n_) throw Error("constraint map expects 2n coordinates");
        MonicQuotient<T> ring(std::vector<T>(point.begin(), point.begin() + n_));
        return ring.power(std::vector<T>(point.begin() + n_, point.end()), beta_);
    }

    /// n x 2n Jacobian, one dual-number evaluation per column.
    RationalMatrix jacobian(const std::vector<Rational>& point) const;

  private:
    unsigned n_;
    unsigned beta_;
};

/// (x_1..x_s, alpha_0..alpha_t) -> (a-coordinates, b-coordinates) for the
/// ideals of a stratum.  In the special case there are no alpha inputs and
/// b = 0.
class ParamMap {
  public:
    explicit ParamMap(StratumLabel label);

    const StratumLabel& label() const { return label_; }
    std::size_t input_size() const;

    template <typename T>
    std::vector<T> evaluate(const std::vector<T>& input) const;

    /// 2n x input_size() Jacobian.
    RationalMatrix jacobian(const std::vector<Rational>& input) const;

    /// Input vector of a sampled point, roots first.
    std::vector<Rational> input_of(const StratumPoint& pt) const;

  private:
    StratumLabel label_;
};

/// 2n minus the rank of the constraint Jacobian at a point of Z_beta.
/// Throws Error if the point does not satisfy F = 0.
unsigned tangent_dim_un(unsigned n, unsigned beta, const std::vector<Rational>& point);

/// Rank of the parametrization Jacobian at a general-case sample.  Throws
/// Error for special-case labels.
unsigned param_rank(const StratumLabel& label, const StratumPoint& pt);

struct DimTrial {
    std::uint64_t seed = 0;
    /// Draws rejected for rank deficiency before this one.
    unsigned retries = 0;
    unsigned param_rank = 0;
    bool on_zbeta = false;
    std::optional<unsigned> tangent_dim;
};

struct LabelReport {
    StratumLabel label;
    StratumCase kase = StratumCase::General;
    unsigned expected_dim = 0;
    bool component = false;
    std::vector<DimTrial> trials;
    bool pass = false;

    std::size_t tangent_equals_n() const;
};

struct DimReport {
    unsigned n = 0;
    unsigned beta = 0;
    unsigned trials = 0;
    std::uint64_t seed = 0;
    std::vector<LabelReport> labels;

    bool pass() const;
};

/// Samples every stratum of Z_beta in U_(n) and checks the parametrization
/// rank against stratum_dimension and, on components, the tangent bound
/// tangent_dim >= n.  Deterministic in the seed.
DimReport verify_dims(unsigned n, unsigned beta, unsigned trials, std::uint64_t seed);

/// splitmix64 step; per-trial seeds are derived with it.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

} // namespace hilbcurve

#endif
