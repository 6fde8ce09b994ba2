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
#include <memory>
#include <string>
#include <vector>

#include "mf/combinatorics.hpp"
#include "mf/error.hpp"
#include "mf/forms.hpp"
#include "mf/memo.hpp"
#include "mf/omega.hpp"
#include "mf/projective.hpp"

namespace mf {

/// Standard Cremona inversion in cleared form: x_i -> prod_{j != i} x_j.
inline ProjectivePoint cremona_inv(const ProjectivePoint& x) {
    const std::size_t m = x.size();
    if (m < 2) throw Error(ErrorKind::DimensionMismatch, "Cremona inversion needs P^d with d >= 1");
    // prefix/suffix products avoid the division by x_i
    Vector prefix(m + 1), suffix(m + 1);
    prefix[0] = 1;
    suffix[m] = 1;
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * x[i];
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * x[i];
    Vector y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = prefix[i] * suffix[i + 1];
    if (is_zero(y)) {
        throw Error(ErrorKind::IndeterminacyPoint, "point lies where the inversion is undefined", to_string(x));
    }
    return ProjectivePoint(std::move(y));
}

/// Linear projection P^d -> P^{d-1} from the unit point:
/// (x_0 - x_d, ..., x_{d-1} - x_d).
inline ProjectivePoint project_from_unit(const ProjectivePoint& x) {
    const std::size_t d = x.dimension();
    if (d < 1) throw Error(ErrorKind::DimensionMismatch, "cannot project from P^0");
    Vector y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = x[i] - x[d];
    if (is_zero(y)) throw Error(ErrorKind::CenterPoint, "the point is the projection center", to_string(x));
    return ProjectivePoint(std::move(y));
}

/// Projection from the coordinate point e_index: drops that coordinate.
inline ProjectivePoint project_from_coordinate_point(const ProjectivePoint& x, std::size_t index) {
    if (index > x.dimension()) throw Error(ErrorKind::IndexOutOfRange, "projection center index");
    Vector y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i != index) y.push_back(x[i]);
    if (is_zero(y)) throw Error(ErrorKind::CenterPoint, "the point is the projection center", to_string(x));
    return ProjectivePoint(std::move(y));
}

struct XiSystem {
    unsigned n = 0;
    LinearSystem system;  // degree n-1 on P^{2n-3}, multiplicity n-2 at the standard frame

    std::size_t dimension() const noexcept { return system.dimension(); }
    const std::vector<HomogeneousForm>& basis() const noexcept { return system.basis; }
};

namespace detail {

inline XiSystem build_xi(unsigned n) {
    XiSystem out;
    out.n = n;
    const std::size_t dim = 2 * n - 3;
    std::vector<PointCondition> cons;
    if (n >= 3) {
        for (auto& p : standard_frame(dim)) cons.push_back({p, n - 2});
    }
    out.system = linear_system_basis(dim, n - 1, cons);
    return out;
}

inline MemoCache<unsigned, XiSystem>& xi_cache() {
    static MemoCache<unsigned, XiSystem> cache;
    return cache;
}

}  // namespace detail

/// Degree n-1 forms on P^{2n-3} vanishing to order n-2 at the 2n-1 points of
/// the standard frame. For n = 2 the multiplicity is 0 and the system is
/// every linear form on P^1.
inline std::shared_ptr<const XiSystem> xi_basis(unsigned n) {
    require_half_count(n);
    return detail::xi_cache().get(n, [n] { return detail::build_xi(n); });
}

inline ProjectivePoint phi_xi(unsigned n, const ProjectivePoint& y) {
    auto sys = xi_basis(n);
    if (y.dimension() != 2 * n - 3) throw Error(ErrorKind::DimensionMismatch, "point outside P^{2n-3}");
    return evaluate_system(sys->basis(), y);
}

}  // namespace mf
