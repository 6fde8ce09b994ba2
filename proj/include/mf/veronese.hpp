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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mf/binary_form.hpp"
#include "mf/error.hpp"
#include "mf/matrix.hpp"
#include "mf/projective.hpp"

namespace mf {

/// Rational normal curve of degree d in P^d, parametrized by d+1 binary
/// forms of degree d. `frame` is the projectivity that was applied to the
/// normalized parametrization (identity for curves built directly).
class ParamCurve {
public:
    ParamCurve(std::vector<BinaryForm> components, RationalMatrix frame)
        : components_(std::move(components)), frame_(std::move(frame)) {
        if (components_.size() < 2) throw Error(ErrorKind::DimensionMismatch, "a curve needs at least 2 components");
        const std::size_t d = components_.size() - 1;
        for (const auto& c : components_) {
            if (c.degree() != d) {
                throw Error(ErrorKind::DimensionMismatch, "component degree differs from the ambient dimension");
            }
        }
        if (rank(coefficient_matrix()) != d + 1) {
            throw Error(ErrorKind::DegenerateConfiguration, "components are linearly dependent");
        }
        BinaryForm g;
        for (const auto& c : components_) g = gcd(g, c);
        if (g.degree() != 0) throw Error(ErrorKind::DegenerateConfiguration, "components share a base point");
    }

    explicit ParamCurve(std::vector<BinaryForm> components)
        : ParamCurve(components, RationalMatrix::identity(components.size())) {}

    /// s^d, s^{d-1} t, ..., t^d
    static ParamCurve standard(std::size_t d) {
        std::vector<BinaryForm> comps;
        for (std::size_t i = 0; i <= d; ++i) {
            BinaryForm f(d);
            f[i] = 1;
            comps.push_back(f);
        }
        return ParamCurve(std::move(comps));
    }

    std::size_t ambient_dim() const noexcept { return components_.size() - 1; }
    const std::vector<BinaryForm>& components() const noexcept { return components_; }
    const RationalMatrix& frame() const noexcept { return frame_; }

    /// Row i holds the coefficients of component i.
    RationalMatrix coefficient_matrix() const {
        std::vector<Vector> rows;
        for (const auto& c : components_) rows.push_back(c.coeffs());
        return RationalMatrix::from_rows(rows);
    }

private:
    std::vector<BinaryForm> components_;
    RationalMatrix frame_;
};

namespace detail {

inline std::string one_based(std::initializer_list<std::size_t> idx) {
    std::string s = "{";
    bool first = true;
    for (auto i : idx) {
        s += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

}  // namespace detail

/// The unique rational normal curve through d+3 points of P^d in general
/// position. With A the matrix of the first d+1 points, p = A^{-1} x_{d+2}
/// and q = A^{-1} x_{d+3}, the curve is A applied to
///     x_i(s, t) = p_i q_i prod_{j != i} (s q_j - t p_j).
/// Point d+2 sits at (1:0), point d+3 at (0:1), point i at (p_i : q_i).
inline ParamCurve rnc_through(std::span<const ProjectivePoint> points) {
    if (points.size() < 4) throw Error(ErrorKind::DimensionMismatch, "need d+3 points with d >= 1");
    const std::size_t d = points.size() - 3;
    for (const auto& x : points) {
        if (x.dimension() != d) throw Error(ErrorKind::DimensionMismatch, "d+3 points must lie in P^d");
    }
    const RationalMatrix a = matrix_of_columns(points.first(d + 1));
    auto ainv = inverse(a);
    if (!ainv) {
        throw Error(ErrorKind::DegenerateConfiguration, "the first d+1 points are dependent",
                    detail::index_list([&] {
                        std::vector<std::size_t> v(d + 1);
                        for (std::size_t i = 0; i <= d; ++i) v[i] = i;
                        return v;
                    }()));
    }
    const Vector p = *ainv * points[d + 1].coords();
    const Vector q = *ainv * points[d + 2].coords();
    for (std::size_t i = 0; i <= d; ++i) {
        if (sgn(p[i]) == 0 || sgn(q[i]) == 0) {
            const std::size_t extra = sgn(p[i]) == 0 ? d + 1 : d + 2;
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j <= d; ++j)
                if (j != i) idx.push_back(j);
            idx.push_back(extra);
            throw Error(ErrorKind::DegenerateConfiguration,
                        "point " + std::to_string(extra + 1) + " lies in a coordinate hyperplane of the frame",
                        detail::index_list(idx));
        }
    }
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j) {
            if (p[i] * q[j] == p[j] * q[i]) {
                throw Error(ErrorKind::DegenerateConfiguration,
                            "parameters of points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " coincide",
                            "ratio " + detail::one_based({i, j}) + " = " + to_string(Rational(p[i] / q[i])));
            }
        }
    std::vector<BinaryForm> normalized;
    for (std::size_t i = 0; i <= d; ++i) {
        BinaryForm f(Vector{p[i] * q[i]});
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            f = f * BinaryForm::linear(q[j], -p[j]);
        }
        normalized.push_back(std::move(f));
    }
    std::vector<BinaryForm> comps;
    for (std::size_t r = 0; r <= d; ++r) {
        BinaryForm f(d);
        for (std::size_t c = 0; c <= d; ++c) {
            if (sgn(a(r, c)) == 0) continue;
            f = f + a(r, c) * normalized[c];
        }
        comps.push_back(std::move(f));
    }
    return ParamCurve(std::move(comps), a);
}

inline ProjectivePoint curve_eval(const ParamCurve& c, const ProjectivePoint& param) {
    if (param.dimension() != 1) throw Error(ErrorKind::DimensionMismatch, "curve parameters live in P^1");
    Vector v;
    v.reserve(c.components().size());
    for (const auto& f : c.components()) v.push_back(f(param[0], param[1]));
    return ProjectivePoint(std::move(v));
}

/// The parameter (s:t) with curve_eval(c, (s:t)) ~ x, if x is on the curve.
/// Common roots of the forms x_k c_j - x_j c_k are found through their gcd.
inline std::optional<ProjectivePoint> parameter_of_point(const ParamCurve& c, const ProjectivePoint& x) {
    if (x.dimension() != c.ambient_dim()) return std::nullopt;
    std::size_t k = 0;
    while (sgn(x[k]) == 0) ++k;
    BinaryForm g;
    const auto& comps = c.components();
    for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j == k) continue;
        g = gcd(g, x[k] * comps[j] - x[j] * comps[k]);
    }
    if (g.is_zero() || g.degree() == 0) return std::nullopt;
    // Injectivity leaves a single root, so g = const * l^m for a linear l.
    const Rational m = static_cast<unsigned long>(g.degree());
    std::optional<ProjectivePoint> candidate;
    if (sgn(g[0]) != 0) {
        candidate = ProjectivePoint{-g[1], m * g[0]};
    } else {
        candidate = ProjectivePoint{1, 0};
    }
    if (!projective_equal(curve_eval(c, *candidate), x)) return std::nullopt;
    return candidate;
}

}  // namespace mf
