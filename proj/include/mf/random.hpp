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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mf/error.hpp"
#include "mf/projective.hpp"
#include "mf/rational.hpp"

namespace mf {

inline constexpr std::int64_t kDefaultCoefficientBound = 20;
inline constexpr int kDefaultMaxRetries = 1000;

/// Seeded source of small random rationals. The bounded draw is done by
/// hand on top of mt19937_64 so that a seed gives the same stream with any
/// standard library.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::int64_t bound = kDefaultCoefficientBound)
        : engine_(seed), bound_(bound < 1 ? 1 : bound) {}

    std::int64_t bound() const noexcept { return bound_; }

    /// Uniform integer in [lo, hi].
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational rational() {
        Rational q(integer(-bound_, bound_), integer(1, bound_));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational() {
        Rational q;
        do {
            q = rational();
        } while (sgn(q) == 0);
        return q;
    }

    Vector vector(std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = rational();
        return v;
    }

    ProjectivePoint point(std::size_t dim) {
        Vector v;
        do {
            v = vector(dim + 1);
        } while (is_zero(v));
        return ProjectivePoint(std::move(v));
    }

    /// k distinct indices from [0, n), sorted.
    std::vector<std::size_t> subset(std::size_t n, std::size_t k) {
        std::vector<std::size_t> p = permutation(n);
        p.resize(k);
        std::sort(p.begin(), p.end());
        return p;
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[index(i)]);
        return p;
    }

    /// Rejection sampling: draws until `accept` holds, at most `max_tries` times.
    template <class Draw, class Accept>
    auto sample(Draw&& draw, Accept&& accept, const std::string& what, int max_tries = kDefaultMaxRetries) {
        for (int attempt = 0; attempt < max_tries; ++attempt) {
            auto candidate = draw(*this);
            if (accept(candidate)) return candidate;
        }
        throw Error(ErrorKind::SamplingExhausted,
                    "no acceptable " + what + " after " + std::to_string(max_tries) + " draws");
    }

private:
    std::mt19937_64 engine_;
    std::int64_t bound_;
};

}  // namespace mf
