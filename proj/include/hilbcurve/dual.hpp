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

#ifndef HILBCURVE_DUAL_HPP
#define HILBCURVE_DUAL_HPP

#include "hilbcurve/rational.hpp"

namespace hilbcurve {

/// value + eps * infinitesimal, with eps^2 = 0.
template <typename T>
struct Dual {
    T value{};
    T infinitesimal{};

    Dual() = default;
    Dual(const T& v) : value(v) {}  // NOLINT(google-explicit-constructor)
    Dual(const T& v, const T& e) : value(v), infinitesimal(e) {}

    static Dual variable(const T& v) { return {v, T(1)}; }

    Dual& operator+=(const Dual& o) {
        value += o.value;
        infinitesimal += o.infinitesimal;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        value -= o.value;
        infinitesimal -= o.infinitesimal;
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        infinitesimal = value * o.infinitesimal + infinitesimal * o.value;
        value *= o.value;
        return *this;
    }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    Dual operator-() const { return {-value, -infinitesimal}; }

    friend bool operator==(const Dual& a, const Dual& b) {
        return a.value == b.value && a.infinitesimal == b.infinitesimal;
    }
};

using DualRational = Dual<Rational>;

} // namespace hilbcurve

#endif
