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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mf/error.hpp"
#include "mf/matrix.hpp"
#include "mf/rational.hpp"

namespace mf {

/// A point of P^d given by a nonzero representative in Q^{d+1}.
class ProjectivePoint {
public:
    explicit ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw Error(ErrorKind::InvalidPoint, "point with no coordinates");
        if (is_zero(coords_)) throw Error(ErrorKind::InvalidPoint, "the zero vector is not a projective point");
    }
    ProjectivePoint(std::initializer_list<Rational> coords) : ProjectivePoint(Vector(coords)) {}

    std::size_t dimension() const noexcept { return coords_.size() - 1; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Vector& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    /// Primitive integer representative whose first nonzero entry is positive.
    ProjectivePoint canonical() const {
        Vector v = primitive_integer(coords_);
        std::size_t k = 0;
        while (sgn(v[k]) == 0) ++k;
        if (sgn(v[k]) < 0)
            for (auto& x : v) x = -x;
        return ProjectivePoint(std::move(v));
    }

    ProjectivePoint scaled(const Rational& lambda) const {
        Vector v = coords_;
        for (auto& x : v) x *= lambda;
        return ProjectivePoint(std::move(v));
    }

private:
    Vector coords_;
};

/// Rank-one test on the 2 x (d+1) matrix [p; q] by cross multiplication.
inline bool projective_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimensionMismatch, "comparing points of P^" + std::to_string(p.dimension()) +
                                                      " and P^" + std::to_string(q.dimension()));
    }
    std::size_t k = 0;
    while (sgn(p[k]) == 0) ++k;
    if (sgn(q[k]) == 0) return false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[k] * q[j] != p[j] * q[k]) return false;
    }
    return true;
}

inline bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.size() == q.size() && projective_equal(p, q);
}

/// Comma separated coordinates of the canonical representative.
inline std::string to_string(const ProjectivePoint& p) {
    const ProjectivePoint c = p.canonical();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += c[i].get_str();
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ":" : "") << p[i].get_str();
    return os << ']';
}

/// Parses "a,b,c" (entries are rationals "p" or "p/q").
inline ProjectivePoint parse_point(std::string_view text, char sep = ',') {
    Vector v;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        v.push_back(parse_rational(text.substr(start, end == std::string_view::npos ? end : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return ProjectivePoint(std::move(v));
}

/// e_index of P^dim (0-based index).
inline ProjectivePoint coordinate_point(std::size_t dim, std::size_t index) {
    if (index > dim) throw Error(ErrorKind::IndexOutOfRange, "coordinate point index");
    Vector v(dim + 1);
    v[index] = 1;
    return ProjectivePoint(std::move(v));
}

inline ProjectivePoint unit_point(std::size_t dim) { return ProjectivePoint(Vector(dim + 1, Rational(1))); }

/// The d+1 coordinate points followed by the unit point.
inline std::vector<ProjectivePoint> standard_frame(std::size_t dim) {
    std::vector<ProjectivePoint> f;
    for (std::size_t i = 0; i <= dim; ++i) f.push_back(coordinate_point(dim, i));
    f.push_back(unit_point(dim));
    return f;
}

/// M·p; the image must be nonzero.
inline ProjectivePoint apply(const RationalMatrix& m, const ProjectivePoint& p) {
    Vector v = m * p.coords();
    if (is_zero(v)) throw Error(ErrorKind::InvalidPoint, "point lies in the kernel of the projectivity");
    return ProjectivePoint(std::move(v));
}

inline RationalMatrix matrix_of_columns(std::span<const ProjectivePoint> points) {
    RationalMatrix m(points.front().size(), points.size());
    for (std::size_t j = 0; j < points.size(); ++j)
        for (std::size_t i = 0; i < points[j].size(); ++i) m(i, j) = points[j][i];
    return m;
}

inline std::size_t rank_of_points(std::span<const ProjectivePoint> points) {
    if (points.empty()) return 0;
    std::vector<Vector> rows;
    for (const auto& p : points) rows.push_back(p.coords());
    return rank(RationalMatrix::from_rows(rows));
}

namespace detail {

inline std::string index_list(const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
    return s + "}";
}

/// Matrix sending the standard frame to `frame`: A·diag(lambda) with
/// A·lambda = last point. Throws DegenerateFrame with the dependent subset.
inline RationalMatrix frame_matrix(std::span<const ProjectivePoint> frame, const char* which) {
    const std::size_t n = frame.size() - 1;  // d + 1
    const RationalMatrix a = matrix_of_columns(frame.first(n));
    auto lambda = solve(a, frame[n].coords());
    if (!lambda) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        throw Error(ErrorKind::DegenerateFrame, std::string(which) + " frame has dependent points",
                    index_list(idx));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn((*lambda)[i]) != 0) continue;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) idx.push_back(j);
        throw Error(ErrorKind::DegenerateFrame, std::string(which) + " frame has dependent points",
                    index_list(idx));
    }
    RationalMatrix m = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) *= (*lambda)[j];
    return m;
}

}  // namespace detail

/// The projectivity M (unique up to scale) with M·source_i ~ target_i for
/// all d+2 frame points.
inline RationalMatrix projectivity_from_frames(std::span<const ProjectivePoint> source,
                                               std::span<const ProjectivePoint> target) {
    if (source.size() != target.size() || source.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "frames of different sizes");
    }
    const std::size_t d1 = source.front().size();
    if (source.size() != d1 + 1) {
        throw Error(ErrorKind::DimensionMismatch, "a frame of P^d has d+2 points");
    }
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (source[i].size() != d1 || target[i].size() != d1) {
            throw Error(ErrorKind::DimensionMismatch, "frame points of mixed dimension");
        }
    }
    const RationalMatrix s = detail::frame_matrix(source, "source");
    const RationalMatrix t = detail::frame_matrix(target, "target");
    return t * *inverse(s);
}

}  // namespace mf
