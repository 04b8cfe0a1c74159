// Copyright 2026 The k3lat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace k3lat {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Builds a canonical rational p/q. Throws std::domain_error on q == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Result is canonical.
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& q);

/// Scales a rational vector to a primitive integer vector (content 1) with the
/// same direction. The zero vector maps to the zero vector.
IntegerVector primitive_integer_vector(const RationalVector& v);

}  // namespace k3lat
