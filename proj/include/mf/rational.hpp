/*
   Copyright 2026 The mf Authors

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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "mf/error.hpp"

namespace mf {

/// Arbitrary precision rational; GMP keeps it canonical (gcd 1, den > 0)
/// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) {
            throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
        }
    }
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw Error(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
    }
    if (sgn(q.get_den()) == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

inline Integer lcm_of_denominators(const Rational* first, std::size_t count) {
    Integer l = 1;
    for (std::size_t i = 0; i < count; ++i) {
        const Integer& d = first[i].get_den();
        if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

/// Scales v by a positive rational so that it becomes a primitive integer
/// vector. The sign is left untouched.
inline Vector primitive_integer(const Vector& v) {
    if (v.empty()) return v;
    Integer l = lcm_of_denominators(v.data(), v.size());
    Integer g = 0;
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        if (sgn(ints[i]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(g) != 0) mpz_divexact(ints[i].get_mpz_t(), ints[i].get_mpz_t(), g.get_mpz_t());
        out[i] = Rational(ints[i]);
    }
    return out;
}

}  // namespace mf
