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

// Degree-one PGL(2) invariants of 2n points on the line: products of
// brackets (ij) = s_i t_j - s_j t_i over non-crossing perfect matchings.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mf/configuration.hpp"
#include "mf/error.hpp"
#include "mf/matrix.hpp"
#include "mf/memo.hpp"
#include "mf/projective.hpp"

namespace mf {

/// Perfect matching of {0, ..., 2n-1}; pairs (i, j) with i < j, sorted by i.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// "(12)(34)" with 1-based indices.
inline std::string to_string(const Matching& m) {
    std::string s;
    for (const auto& [i, j] : m.pairs) s += "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
    return s;
}

namespace detail {

inline void noncrossing_rec(std::size_t lo, std::size_t hi, std::vector<std::pair<std::size_t, std::size_t>>& acc,
                            std::vector<Matching>& out, std::vector<std::pair<std::size_t, std::size_t>> pending) {
    // match positions lo..hi-1, then continue with the pending intervals
    if (lo >= hi) {
        if (pending.empty()) {
            Matching m{acc};
            std::sort(m.pairs.begin(), m.pairs.end());
            out.push_back(std::move(m));
            return;
        }
        auto [nlo, nhi] = pending.back();
        pending.pop_back();
        noncrossing_rec(nlo, nhi, acc, out, std::move(pending));
        return;
    }
    for (std::size_t partner = lo + 1; partner < hi; partner += 2) {
        acc.emplace_back(lo, partner);
        auto next = pending;
        next.emplace_back(partner + 1, hi);
        noncrossing_rec(lo + 1, partner, acc, out, std::move(next));
        acc.pop_back();
    }
}

inline MemoCache<unsigned, std::vector<Matching>>& matching_cache() {
    static MemoCache<unsigned, std::vector<Matching>> cache;
    return cache;
}

}  // namespace detail

/// Non-crossing perfect matchings of 2n points. Order: recursively by the
/// partner of the first point, increasing. n = 2 gives (12)(34), (14)(23).
inline std::shared_ptr<const std::vector<Matching>> noncrossing_matchings(unsigned n) {
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "noncrossing matchings need n >= 1");
    return detail::matching_cache().get(n, [n] {
        std::vector<Matching> out;
        std::vector<std::pair<std::size_t, std::size_t>> acc;
        detail::noncrossing_rec(0, 2 * n, acc, out, {});
        return out;
    });
}

inline Rational bracket(const ProjectivePoint& a, const ProjectivePoint& b) { return a[0] * b[1] - b[0] * a[1]; }

/// Values of the bracket monomials of all non-crossing matchings at c, in
/// canonical matching order.
inline Vector bracket_values(unsigned n, const Configuration& c) {
    if (c.size() != 2 * static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(2 * n) + " points, got " +
                                                      std::to_string(c.size()));
    }
    auto matchings = noncrossing_matchings(n);
    Vector out;
    out.reserve(matchings->size());
    for (const auto& m : *matchings) {
        Rational v = 1;
        for (const auto& [i, j] : m.pairs) {
            v *= bracket(c[i], c[j]);
            if (sgn(v) == 0) break;
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// The point of P^{D-1} given by the bracket monomials, or empty when every
/// monomial vanishes (the zero vector, i.e. an unstable configuration).
inline std::optional<ProjectivePoint> git_point(unsigned n, const Configuration& c) {
    Vector v = bracket_values(n, c);
    if (is_zero(v)) return std::nullopt;
    return ProjectivePoint(std::move(v));
}

enum class Stability { Stable, StrictlySemistable, Unstable };

inline std::string_view to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::StrictlySemistable: return "StrictlySemistable";
        case Stability::Unstable: return "Unstable";
    }
    return "?";
}

inline std::size_t max_multiplicity(const Configuration& c) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (projective_equal(c[i], c[j])) ++k;
        best = std::max(best, k);
    }
    return best;
}

/// Stable iff no point has multiplicity >= n; exactly n is strictly
/// semistable; above n is unstable.
inline Stability classify_stability(unsigned n, const Configuration& c) {
    if (c.size() != 2 * static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(2 * n) + " points");
    }
    const std::size_t m = max_multiplicity(c);
    if (m < n) return Stability::Stable;
    if (m == n) return Stability::StrictlySemistable;
    return Stability::Unstable;
}

/// g.c for a 2x2 matrix g acting on column vectors (s, t).
inline Configuration transform(const RationalMatrix& g, const Configuration& c) {
    std::vector<ProjectivePoint> pts;
    for (const auto& p : c.points) pts.push_back(apply(g, p));
    return Configuration(std::move(pts));
}

/// (sigma.c)_{sigma(i)} = c_i.
inline Configuration permute(const Configuration& c, std::span<const std::size_t> sigma) {
    std::vector<ProjectivePoint> pts(c.points);
    for (std::size_t i = 0; i < sigma.size(); ++i) pts[sigma[i]] = c[i];
    return Configuration(std::move(pts));
}

struct LinearFit {
    std::optional<RationalMatrix> map;
    std::size_t solution_dim = 0;  // dimension of the solution space of the proportionality system
    std::size_t equations = 0;

    explicit operator bool() const noexcept { return map.has_value(); }
};

using PointPair = std::pair<ProjectivePoint, ProjectivePoint>;

/// Solves target_i ~ M source_i for M. Per pair, with k an index where the
/// target is nonzero, the constraints t_k (M s)_j - t_j (M s)_k = 0 for
/// j != k are linear in the entries of M and equivalent to rank-one-ness.
/// Succeeds only with a one-dimensional solution space and invertible M.
inline LinearFit fit_linear_map(std::span<const PointPair> pairs) {
    LinearFit fit;
    if (pairs.empty()) return fit;
    const std::size_t ds = pairs.front().first.size();
    const std::size_t dt = pairs.front().second.size();
    RationalMatrix eqs(0, ds * dt);
    Vector row(ds * dt);
    for (const auto& [src, tgt] : pairs) {
        if (src.size() != ds || tgt.size() != dt) throw Error(ErrorKind::DimensionMismatch, "mixed pair dimensions");
        std::size_t k = 0;
        while (sgn(tgt[k]) == 0) ++k;
        for (std::size_t j = 0; j < dt; ++j) {
            if (j == k) continue;
            std::fill(row.begin(), row.end(), Rational(0));
            for (std::size_t c = 0; c < ds; ++c) {
                row[j * ds + c] = tgt[k] * src[c];
                row[k * ds + c] = -tgt[j] * src[c];
            }
            eqs.append_row(row);
        }
    }
    fit.equations = eqs.rows();
    auto kernel = kernel_basis(eqs);
    fit.solution_dim = kernel.size();
    if (kernel.size() != 1 || ds != dt) return fit;
    RationalMatrix m(dt, ds);
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t c = 0; c < ds; ++c) m(i, c) = kernel[0][i * ds + c];
    if (!inverse(m)) return fit;
    fit.map = std::move(m);
    return fit;
}

}  // namespace mf
