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

#ifndef HILBCURVE_RATIONAL_HPP
#define HILBCURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbcurve {

/// Exact rational number in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" and "p/q". Throws Error on malformed input or q == 0.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace hilbcurve

#endif
