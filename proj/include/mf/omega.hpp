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

// The base W of P^{2n-2} (coordinate points plus the unit point), the
// system of degree-n forms vanishing to order n-1 along W, and the rational
// map it defines.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mf/combinatorics.hpp"
#include "mf/configuration.hpp"
#include "mf/error.hpp"
#include "mf/forms.hpp"
#include "mf/matrix.hpp"
#include "mf/memo.hpp"
#include "mf/projective.hpp"
#include "mf/random.hpp"
#include "mf/veronese.hpp"

namespace mf {

struct BaseW {
    unsigned n = 0;
    std::vector<ProjectivePoint> points;  // e_1, ..., e_{2n-1}, u

    std::size_t ambient_dim() const noexcept { return 2 * n - 2; }
};

inline void require_half_count(unsigned n) {
    if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "n must be at least 2, got " + std::to_string(n));
}

inline BaseW base_w(unsigned n) {
    require_half_count(n);
    return BaseW{n, standard_frame(2 * n - 2)};
}

struct OmegaSystem {
    unsigned n = 0;
    LinearSystem system;
    /// n-subsets I of {0, ..., 2n-2} indexing the square-free monomials x_I,
    /// in canonical monomial order.
    std::vector<std::vector<std::size_t>> monomial_index;

    std::size_t dimension() const noexcept { return system.dimension(); }
    const std::vector<HomogeneousForm>& basis() const noexcept { return system.basis; }
};

/// Rows: (n-2)-subsets J, columns: n-subsets I, entry 1 iff J is inside I.
inline RationalMatrix incidence_matrix(unsigned n) {
    require_half_count(n);
    const auto rows = combinations(2 * n - 1, n - 2);
    const auto cols = combinations(2 * n - 1, n);
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (std::includes(cols[c].begin(), cols[c].end(), rows[r].begin(), rows[r].end())) m(r, c) = 1;
        }
    return m;
}

inline Monomial squarefree_monomial(std::size_t num_vars, const std::vector<std::size_t>& support) {
    Monomial m{std::vector<unsigned>(num_vars, 0)};
    for (auto i : support) m.exponents[i] = 1;
    return m;
}

namespace detail {

inline OmegaSystem build_omega(unsigned n) {
    OmegaSystem out;
    out.n = n;
    out.monomial_index = combinations(2 * n - 1, n);
    const std::size_t nv = 2 * n - 1;
    std::vector<Monomial> mons;
    for (const auto& I : out.monomial_index) mons.push_back(squarefree_monomial(nv, I));
    out.system.ambient_dim = 2 * n - 2;
    out.system.degree = n;
    for (auto& p : base_w(n).points) out.system.constraints.push_back({p, n - 1});
    for (const auto& v : kernel_basis(incidence_matrix(n))) {
        out.system.basis.push_back(HomogeneousForm::from_coefficients(nv, n, mons, v));
    }
    return out;
}

inline MemoCache<unsigned, OmegaSystem>& omega_cache() {
    static MemoCache<unsigned, OmegaSystem> cache;
    return cache;
}

}  // namespace detail

/// Forms sum_{I} a_I x_I over square-free degree-n monomials with
/// sum_{I contains J} a_I = 0 for every (n-2)-subset J. Memoized per n.
inline std::shared_ptr<const OmegaSystem> omega_basis(unsigned n) {
    require_half_count(n);
    return detail::omega_cache().get(n, [n] { return detail::build_omega(n); });
}

/// Same system from the definition: the full derivative conditions of
/// order n-2 at all 2n points of W. Dense, so practical for n <= 4.
inline LinearSystem omega_basis_generic(unsigned n) {
    const BaseW w = base_w(n);
    std::vector<PointCondition> cons;
    for (const auto& p : w.points) cons.push_back({p, n - 1});
    return linear_system_basis(w.ambient_dim(), n, cons);
}

/// Evaluation of an ordered basis at x; BaseLocusPoint when all vanish.
inline ProjectivePoint evaluate_system(std::span<const HomogeneousForm> basis, const ProjectivePoint& x) {
    Vector v = evaluate_forms(basis, x);
    if (is_zero(v)) {
        throw Error(ErrorKind::BaseLocusPoint, "every form of the system vanishes at the point", to_string(x));
    }
    return ProjectivePoint(std::move(v));
}

inline ProjectivePoint phi_omega(unsigned n, const ProjectivePoint& x) {
    auto sys = omega_basis(n);
    if (x.dimension() != 2 * n - 2) {
        throw Error(ErrorKind::DimensionMismatch, "phi_omega(" + std::to_string(n) + ") takes points of P^" +
                                                      std::to_string(2 * n - 2));
    }
    return evaluate_system(sys->basis(), x);
}

/// Rank of the D x (2n-1) Jacobian of the basis at x; the image has
/// projective dimension rank - 1 near x.
inline std::size_t jacobian_rank(std::span<const HomogeneousForm> basis, const ProjectivePoint& x) {
    evaluate_system(basis, x);
    RationalMatrix jac(basis.size(), x.size());
    const auto pw = detail::power_table(x.coords(), basis.empty() ? 0 : basis.front().degree());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t j = 0; j < x.size(); ++j) jac(k, j) = detail::evaluate_with(differentiate(basis[k], j), pw);
    return rank(jac);
}

inline std::size_t jacobian_rank(unsigned n, const ProjectivePoint& x) {
    auto sys = omega_basis(n);
    if (x.dimension() != 2 * n - 2) throw Error(ErrorKind::DimensionMismatch, "point outside P^{2n-2}");
    return jacobian_rank(sys->basis(), x);
}

/// The projectivity A_sigma with A_sigma W_i ~ W_{sigma(i)} (0-based).
inline RationalMatrix frame_automorphism(unsigned n, std::span<const std::size_t> sigma) {
    const BaseW w = base_w(n);
    if (sigma.size() != w.points.size()) throw Error(ErrorKind::DimensionMismatch, "permutation of 2n points expected");
    std::vector<bool> seen(sigma.size(), false);
    std::vector<ProjectivePoint> target;
    for (auto s : sigma) {
        if (s >= sigma.size() || seen[s]) throw Error(ErrorKind::IndexOutOfRange, "sigma is not a bijection");
        seen[s] = true;
        target.push_back(w.points[s]);
    }
    return projectivity_from_frames(w.points, target);
}

/// The 2n points cut on P^1 by the rational normal curve through W and x,
/// read off the closed form: e_i at (1 : x_i), u at (1 : 0).
inline Configuration config_of_point(unsigned n, const ProjectivePoint& x) {
    require_half_count(n);
    if (x.dimension() != 2 * n - 2) throw Error(ErrorKind::DimensionMismatch, "point outside P^{2n-2}");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) {
            throw Error(ErrorKind::DegenerateConfiguration, "coordinate x" + std::to_string(i) + " vanishes",
                        "x" + std::to_string(i) + "=0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (x[i] == x[j]) {
                throw Error(ErrorKind::DegenerateConfiguration,
                            "coordinates x" + std::to_string(j) + " and x" + std::to_string(i) + " coincide",
                            "x" + std::to_string(j) + "=x" + std::to_string(i) + "=" + x[i].get_str());
            }
        }
    }
    std::vector<ProjectivePoint> pts;
    for (std::size_t i = 0; i < x.size(); ++i) pts.push_back(ProjectivePoint{1, x[i]});
    pts.push_back(ProjectivePoint{1, 0});
    return Configuration(std::move(pts));
}

/// W followed by x, the input order used for the curve through W and x.
inline std::vector<ProjectivePoint> w_with(unsigned n, const ProjectivePoint& x) {
    std::vector<ProjectivePoint> pts = base_w(n).points;
    pts.push_back(x);
    return pts;
}

/// Random combination with nonzero coefficients of the given points.
inline ProjectivePoint random_point_in_span(std::span<const ProjectivePoint> points, RandomSource& rng) {
    if (points.empty()) throw Error(ErrorKind::DimensionMismatch, "span of no points");
    Vector v = rng.sample(
        [&](RandomSource& r) {
            Vector acc(points.front().size());
            for (const auto& p : points) {
                const Rational c = r.nonzero_rational();
                for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * p[i];
            }
            return acc;
        },
        [](const Vector& acc) { return !is_zero(acc); }, "point in span");
    return ProjectivePoint(std::move(v));
}

/// Point of P^{2n-2} with nonzero pairwise distinct coordinates, outside the
/// base locus.
inline ProjectivePoint sample_generic_point(unsigned n, RandomSource& rng) {
    return rng.sample([n](RandomSource& r) { return r.point(2 * n - 2); },
                      [n](const ProjectivePoint& x) {
                          for (std::size_t i = 0; i < x.size(); ++i) {
                              if (sgn(x[i]) == 0) return false;
                              for (std::size_t j = 0; j < i; ++j)
                                  if (x[i] == x[j]) return false;
                          }
                          return !is_zero(evaluate_forms(omega_basis(n)->basis(), x));
                      },
                      "generic point of P^" + std::to_string(2 * n - 2));
}

}  // namespace mf
