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

#include "k3lat/rational.hpp"

#include <stdexcept>

namespace k3lat {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("malformed integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

IntegerVector primitive_integer_vector(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  IntegerVector out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (den / x.get_den());
    content = gcd(content, z);
    out.push_back(std::move(z));
  }
  if (content > 1)
    for (auto& z : out) z /= content;
  return out;
}

}  // namespace k3lat
