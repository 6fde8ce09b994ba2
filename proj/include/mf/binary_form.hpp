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

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "mf/error.hpp"
#include "mf/rational.hpp"

namespace mf {

/// Homogeneous polynomial of degree d in (s, t):
///     f = sum_k coeffs[k] * s^(d-k) * t^k.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(std::size_t degree) : coeffs_(degree + 1) {}
    explicit BinaryForm(Vector coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    /// a*s + b*t
    static BinaryForm linear(const Rational& a, const Rational& b) { return BinaryForm(Vector{a, b}); }

    /// The linear form vanishing at (s0 : t0): t0*s - s0*t.
    static BinaryForm vanishing_at(const Rational& s0, const Rational& t0) { return linear(t0, -s0); }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const Vector& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    Rational& operator[](std::size_t k) { return coeffs_[k]; }

    bool is_zero() const { return mf::is_zero(coeffs_); }

    Rational operator()(const Rational& s, const Rational& t) const {
        // Horner in s/t without division: sum c_k s^(d-k) t^k.
        Rational acc = 0;
        Rational tpow = 1;
        Vector spow(coeffs_.size());
        spow[0] = 1;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) spow[k] = spow[k - 1] * s;
        const std::size_t d = degree();
        for (std::size_t k = 0; k <= d; ++k) {
            if (sgn(coeffs_[k]) != 0) acc += coeffs_[k] * spow[d - k] * tpow;
            tpow *= t;
        }
        return acc;
    }

    BinaryForm& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        BinaryForm h(f.degree() + g.degree());
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (sgn(f.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
                if (sgn(g.coeffs_[j]) == 0) continue;
                h.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        return h;
    }

    friend BinaryForm operator*(const Rational& c, BinaryForm f) { return f *= c; }

    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
        if (f.degree() != g.degree()) throw Error(ErrorKind::DimensionMismatch, "adding binary forms of different degree");
        BinaryForm h = f;
        for (std::size_t k = 0; k < h.coeffs_.size(); ++k) h.coeffs_[k] += g.coeffs_[k];
        return h;
    }

    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + Rational(-1) * g; }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    Vector coeffs_;
};

inline BinaryForm power(const BinaryForm& f, std::size_t e) {
    BinaryForm r(Vector{Rational(1)});
    for (std::size_t i = 0; i < e; ++i) r = r * f;
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
    os << '(';
    for (std::size_t k = 0; k <= f.degree(); ++k) os << (k ? ", " : "") << f[k].get_str();
    return os << ')';
}

namespace detail {

/// Univariate polynomial, ascending coefficients, no trailing zeros
/// (empty = zero polynomial).
using Univariate = std::vector<Rational>;

inline void trim(Univariate& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Univariate remainder(Univariate a, const Univariate& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Univariate univariate_gcd(Univariate a, Univariate b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Univariate r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

/// Multiplicity of the root (1:0), i.e. the largest m with t^m | f.
inline std::size_t order_at_infinity(const BinaryForm& f) {
    std::size_t m = 0;
    while (m <= f.degree() && sgn(f[m]) == 0) ++m;
    return m;
}

/// f(z, 1) as an ascending univariate polynomial.
inline Univariate dehomogenize(const BinaryForm& f) {
    const std::size_t d = f.degree();
    Univariate p(d + 1);
    for (std::size_t k = 0; k <= d; ++k) p[d - k] = f[k];
    trim(p);
    return p;
}

}  // namespace detail

/// Greatest common divisor up to scale; gcd(0, g) = g.
inline BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const std::size_t m = std::min(detail::order_at_infinity(f), detail::order_at_infinity(g));
    const detail::Univariate h = detail::univariate_gcd(detail::dehomogenize(f), detail::dehomogenize(g));
    const std::size_t hd = h.size() - 1;
    BinaryForm out(m + hd);
    // homogenize h (degree hd in s) then multiply by t^m
    for (std::size_t j = 0; j <= hd; ++j) out[hd - j + m] = h[j];
    return out;
}

/// Multiplicity of (s0 : t0) as a root of f; the zero form returns its
/// degree + 1 as a sentinel for "vanishes identically".
inline std::size_t root_multiplicity(const BinaryForm& f, const Rational& s0, const Rational& t0) {
    if (f.is_zero()) return f.degree() + 1;
    // substitute (s, t) = (s0*u + a*v, t0*u + b*v) with (a, b) completing a
    // basis; the multiplicity is the order of v in the result.
    Rational a = 0, b = 1;
    if (sgn(s0) == 0) {
        a = 1;
        b = 0;
    }
    const BinaryForm su = BinaryForm::linear(s0, a);
    const BinaryForm tu = BinaryForm::linear(t0, b);
    const std::size_t d = f.degree();
    BinaryForm g(d);
    for (std::size_t k = 0; k <= d; ++k) {
        if (sgn(f[k]) == 0) continue;
        g = g + f[k] * (power(su, d - k) * power(tu, k));
    }
    return detail::order_at_infinity(g);
}

}  // namespace mf
