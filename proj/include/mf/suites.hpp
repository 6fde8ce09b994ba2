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

// Named verification suites. Each one is deterministic in (name, n, seed,
// samples, bound) and reports its checks sorted by name.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mf/brackets.hpp"
#include "mf/combinatorics.hpp"
#include "mf/cremona.hpp"
#include "mf/error.hpp"
#include "mf/forms.hpp"
#include "mf/json_io.hpp"
#include "mf/omega.hpp"
#include "mf/random.hpp"
#include "mf/trees.hpp"
#include "mf/veronese.hpp"

namespace mf {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
    std::string witness;  // empty when there is nothing to show
};

struct SuiteReport {
    std::string suite;
    unsigned n = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::int64_t bound = kDefaultCoefficientBound;
    std::string claim;
    std::vector<Check> checks;
    std::optional<long long> elapsed_ms;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    std::vector<std::string> witnesses() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.witness.empty()) out.push_back(c.name + ": " + c.witness);
        return out;
    }
};

inline Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    Json out{{"suite", r.suite},
             {"claim", r.claim},
             {"n", r.n},
             {"seed", r.seed},
             {"samples", r.samples},
             {"bound", r.bound},
             {"status", r.passed() ? "pass" : "fail"},
             {"checks", std::move(checks)},
             {"witnesses", r.witnesses()}};
    if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "base-locus",    "basis-agreement", "cremona-fiber",  "cremona-line",    "dimensions",
        "equivariance",  "fiber-contraction", "fiber-separation", "incidence-rank", "jacobian-rank",
        "rho-bridge",    "segre-cubic",     "span-contraction", "stability-oracle", "tree-central",
        "tree-counts",   "xi-dim"};
    return names;
}

namespace detail {

inline Check exact_check(std::string name, const std::string& expected, const std::string& actual,
                         std::string witness = {}) {
    const bool ok = expected == actual;
    return Check{std::move(name), expected, actual, ok, ok ? std::string{} : std::move(witness)};
}

/// Pass/fail counter over repeated trials; keeps the first failure.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    template <class Witness>
    void record(bool ok, Witness&& witness) {
        ++total_;
        if (ok) {
            ++ok_;
        } else if (witness_.empty()) {
            witness_ = witness();
        }
    }

    Check check() const {
        const std::string all = std::to_string(total_) + "/" + std::to_string(total_);
        Check c{name_, all, std::to_string(ok_) + "/" + std::to_string(total_), ok_ == total_ && total_ > 0,
                witness_};
        if (total_ == 0) c.witness = "no trials ran";
        return c;
    }

private:
    std::string name_;
    std::size_t total_ = 0;
    std::size_t ok_ = 0;
    std::string witness_;
};

inline std::string str(const Integer& z) { return z.get_str(); }
inline std::string str(std::size_t v) { return std::to_string(v); }

inline std::string point_str(const ProjectivePoint& p) { return "[" + to_string(p) + "]"; }

/// phi_omega that reports base-locus hits as empty instead of throwing.
inline std::optional<ProjectivePoint> try_phi(unsigned n, const ProjectivePoint& x) {
    Vector v = evaluate_forms(omega_basis(n)->basis(), x);
    if (is_zero(v)) return std::nullopt;
    return ProjectivePoint(std::move(v));
}

/// A point of the curve with all coordinates nonzero and off the base
/// locus of the system.
inline ProjectivePoint sample_curve_point(unsigned n, const ParamCurve& c, RandomSource& rng) {
    return rng.sample([&](RandomSource& r) { return curve_eval(c, r.point(1)); },
                      [&](const ProjectivePoint& y) {
                          for (const auto& v : y.coords())
                              if (sgn(v) == 0) return false;
                          return !projective_equal(y, unit_point(y.dimension())) && try_phi(n, y).has_value();
                      },
                      "point on the curve through W and x");
}

/// Primitive integer representative of a matrix up to scale, row by row.
inline std::string matrix_str(const RationalMatrix& m) {
    const ProjectivePoint flat(m.entries());
    const ProjectivePoint c = flat.canonical();
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + c[i * m.cols() + j].get_str();
        s += "]";
    }
    return s + "]";
}

struct SuiteContext {
    unsigned n;
    std::size_t samples;
    RandomSource& rng;
    SuiteReport& report;

    void add(Check c) { report.checks.push_back(std::move(c)); }
};

using SuiteBody = std::function<void(SuiteContext&)>;

inline std::size_t dim_of(unsigned n) { return catalan(n).get_ui(); }

// ---------------------------------------------------------------- omega

inline void suite_dimensions(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    const Integer r = binomial(2 * n - 1, n), s = binomial(2 * n - 1, static_cast<long>(n) - 2);
    const Integer hook = catalan(n);
    cx.report.claim = "degree-n forms on P^{2n-2} singular to order n-1 along 2n general points: the count "
                      "#R - #S, the hook length value and the computed basis size agree";
    cx.add(exact_check("basis-size", str(hook), str(omega_basis(n)->dimension())));
    cx.add(exact_check("incidence-difference", str(hook), str(Integer(r - s)), str(r) + " - " + str(s)));
    const std::string basis = str(omega_basis(n)->dimension());
    const bool all = Integer(r - s) == hook && basis == str(hook);
    cx.add(Check{"identity", "equal",
                 str(r) + " - " + str(s) + " = " + str(Integer(r - s)) + ", " + std::to_string(2 * n) + "!/(" +
                     std::to_string(n + 1) + "!*" + std::to_string(n) + "!) = " + str(hook) + ", basis " + basis,
                 all, all ? "" : "values differ"});
    cx.add(exact_check("noncrossing-count", str(hook), str(noncrossing_matchings(n)->size())));
    // r(2n-2) = sum of the 2n multiplicities and r(n-1) = n mu, with r = n, mu = n-1
    const long rr = n, mu = static_cast<long>(n) - 1;
    cx.add(exact_check("degree-bookkeeping", "true",
                       (rr * (2 * rr - 2) == 2 * rr * mu && rr * (rr - 1) == rr * mu) ? "true" : "false"));
}

inline void suite_incidence_rank(SuiteContext& cx) {
    const unsigned n = cx.n;
    const RationalMatrix m = incidence_matrix(n);
    cx.report.claim = "the incidence matrix of (n-2)-subsets in n-subsets of 2n-1 indices has maximal rank";
    cx.add(exact_check("shape", str(binomial(2 * n - 1, static_cast<long>(n) - 2)) + "x" + str(binomial(2 * n - 1, n)),
                       str(m.rows()) + "x" + str(m.cols())));
    cx.add(exact_check("rank", str(m.rows()), str(rank(m))));
}

inline void suite_basis_agreement(SuiteContext& cx) {
    const unsigned n = cx.n;
    cx.report.claim = "the square-free incidence kernel spans the same system as the full derivative conditions";
    const auto fast = omega_basis(n);
    const LinearSystem generic = omega_basis_generic(n);
    cx.add(exact_check("dimension", str(fast->dimension()), str(generic.dimension())));
    cx.add(exact_check("row-space", "equal", same_span(generic, fast->system) ? "equal" : "different"));
}

inline void suite_base_locus(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "every form of the system vanishes on the spans of (n-1)-subsets of W";
    const auto sys = omega_basis(n);
    const BaseW w = base_w(n);
    Tally vanish("forms-vanish-on-spans");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const auto idx = cx.rng.subset(w.points.size(), n - 1);
        std::vector<ProjectivePoint> pts;
        for (auto i : idx) pts.push_back(w.points[i]);
        const ProjectivePoint y = random_point_in_span(pts, cx.rng);
        vanish.record(is_zero(evaluate_forms(sys->basis(), y)),
                      [&] { return "point " + point_str(y) + " on span " + detail::index_list(idx); });
    }
    cx.add(vanish.check());
    // control: a generic point is not in the base locus
    const ProjectivePoint x = sample_generic_point(n, cx.rng);
    cx.add(exact_check("generic-point-off-locus", "nonzero",
                       is_zero(evaluate_forms(sys->basis(), x)) ? "zero" : "nonzero", point_str(x)));
}

inline void suite_span_contraction(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "the span of n points of W and the span of the complementary n points map to one point";
    const BaseW w = base_w(n);
    Tally same_span_pts("span-contracted");
    Tally complementary("complement-identified");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const auto idx = cx.rng.subset(w.points.size(), n);
        std::vector<ProjectivePoint> s_pts, c_pts;
        std::vector<std::size_t> comp;
        for (std::size_t i = 0; i < w.points.size(); ++i) {
            if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
                s_pts.push_back(w.points[i]);
            } else {
                c_pts.push_back(w.points[i]);
                comp.push_back(i);
            }
        }
        const ProjectivePoint y = random_point_in_span(s_pts, cx.rng);
        const ProjectivePoint y2 = random_point_in_span(s_pts, cx.rng);
        const ProjectivePoint z = random_point_in_span(c_pts, cx.rng);
        const auto fy = try_phi(n, y), fy2 = try_phi(n, y2), fz = try_phi(n, z);
        same_span_pts.record(fy && fy2 && projective_equal(*fy, *fy2), [&] {
            return "span " + detail::index_list(idx) + ": " + point_str(y) + ", " + point_str(y2);
        });
        complementary.record(fy && fz && projective_equal(*fy, *fz), [&] {
            return "span " + detail::index_list(idx) + " vs " + detail::index_list(comp) + ": " + point_str(y) +
                   ", " + point_str(z);
        });
    }
    cx.add(same_span_pts.check());
    cx.add(complementary.check());
}

inline constexpr std::size_t kPointsPerCurve = 8;

inline void suite_fiber_contraction(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "the rational normal curve through W and x is contracted to the image of x, and "
                      "different curves give different images";
    Tally constant("curve-contracted");
    Tally separated("curves-separated");
    std::vector<std::pair<ProjectivePoint, ParamCurve>> seen;
    std::vector<ProjectivePoint> images;
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint x = sample_generic_point(n, cx.rng);
        const ParamCurve c = rnc_through(w_with(n, x));
        const ProjectivePoint fx = phi_omega(n, x);
        bool ok = true;
        std::string bad;
        for (std::size_t j = 0; j < kPointsPerCurve; ++j) {
            const ProjectivePoint y = sample_curve_point(n, c, cx.rng);
            if (!projective_equal(phi_omega(n, y), fx)) {
                ok = false;
                bad = point_str(y);
                break;
            }
        }
        constant.record(ok, [&] { return "x = " + point_str(x) + ", curve point " + bad; });
        for (std::size_t i = 0; i < seen.size(); ++i) {
            // only pairs certified to lie on different curves
            if (parameter_of_point(seen[i].second, x)) continue;
            separated.record(!projective_equal(images[i], fx),
                             [&] { return point_str(seen[i].first) + " and " + point_str(x); });
        }
        seen.emplace_back(x, c);
        images.push_back(fx);
    }
    cx.add(constant.check());
    if (cx.samples >= 2) cx.add(separated.check());
}

inline void suite_fiber_separation(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "points not on a common curve through W have different images";
    Tally certified("pairs-certified-off-curve");
    Tally distinct("images-distinct");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint x = sample_generic_point(n, cx.rng);
        const ProjectivePoint x2 = sample_generic_point(n, cx.rng);
        const ParamCurve c = rnc_through(w_with(n, x));
        const bool off = !parameter_of_point(c, x2).has_value();
        certified.record(off, [&] { return point_str(x2) + " lies on the curve of " + point_str(x); });
        if (!off) continue;
        distinct.record(!projective_equal(phi_omega(n, x), phi_omega(n, x2)),
                        [&] { return point_str(x) + " and " + point_str(x2); });
    }
    cx.add(certified.check());
    cx.add(distinct.check());
}

inline void suite_equivariance(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "for each tested permutation of W there is one invertible linear map L with "
                      "phi(A x) = L phi(x)";
    const std::size_t m = 2 * n;
    const std::size_t dd = dim_of(n);
    std::vector<std::pair<std::string, std::vector<std::size_t>>> perms;
    std::vector<std::size_t> t01(m), tlast(m);
    for (std::size_t i = 0; i < m; ++i) t01[i] = tlast[i] = i;
    std::swap(t01[0], t01[1]);
    std::swap(tlast[m - 2], tlast[m - 1]);
    perms.emplace_back("(1 2)", t01);
    perms.emplace_back("(" + std::to_string(m - 1) + " " + std::to_string(m) + ")", tlast);
    perms.emplace_back("random", cx.rng.permutation(m));
    for (const auto& [label, sigma] : perms) {
        const RationalMatrix a = frame_automorphism(n, sigma);
        auto draw = [&] { return sample_generic_point(n, cx.rng); };
        auto pair_at = [&](const ProjectivePoint& x) -> std::optional<PointPair> {
            auto fx = try_phi(n, x);
            auto fax = try_phi(n, apply(a, x));
            if (!fx || !fax) return std::nullopt;
            return PointPair{*fx, *fax};
        };
        std::vector<PointPair> train;
        while (train.size() < dd * dd) {
            if (auto p = pair_at(draw())) train.push_back(*p);
        }
        std::string sig;
        for (auto s : sigma) sig += (sig.empty() ? "" : ",") + std::to_string(s + 1);
        const LinearFit fit = fit_linear_map(train);
        cx.add(Check{"fit " + label, "solution dimension 1, invertible",
                     "solution dimension " + std::to_string(fit.solution_dim) + (fit ? ", invertible" : ""),
                     fit.map.has_value(), fit ? "" : "sigma = " + sig});
        Tally held("held-out " + label);
        for (std::size_t k = 0; k < cx.samples; ++k) {
            const ProjectivePoint x = draw();
            auto p = pair_at(x);
            held.record(fit && p && projective_equal(apply(*fit.map, p->first), p->second),
                        [&] { return "sigma = " + sig + ", x = " + point_str(x); });
        }
        cx.add(held.check());
    }
}

inline void suite_jacobian_rank(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "the image of the map has dimension 2n-3";
    Tally t("image-dimension");
    std::string last;
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint x = sample_generic_point(n, cx.rng);
        const std::size_t r = jacobian_rank(n, x);
        last = std::to_string(r - 1);
        t.record(r - 1 == 2 * n - 3, [&] { return "rank " + std::to_string(r) + " at " + point_str(x); });
    }
    cx.add(t.check());
    cx.add(exact_check("expected-dimension", std::to_string(2 * n - 3), last));
}

inline constexpr std::size_t kSegreTraining = 50;

inline void suite_segre_cubic(SuiteContext& cx) {
    const unsigned n = cx.n;
    if (n != 3) throw Error(ErrorKind::IndexOutOfRange, "the cubic fit is defined for n = 3 only");
    cx.report.claim = "for n = 3 the image is a cubic hypersurface of P^4";
    const auto mons = monomials_of_degree(5, 3);
    auto row_at = [&](const ProjectivePoint& y) {
        const auto pw = detail::power_table(y.coords(), 3);
        Vector r;
        for (const auto& m : mons) {
            Rational v = 1;
            for (std::size_t i = 0; i < 5; ++i) v *= pw[i][m.exponents[i]];
            r.push_back(std::move(v));
        }
        return r;
    };
    RationalMatrix eval(0, mons.size());
    for (std::size_t k = 0; k < kSegreTraining; ++k) eval.append_row(row_at(phi_omega(3, sample_generic_point(3, cx.rng))));
    const auto kernel = kernel_basis(eval);
    cx.add(exact_check("cubics-through-image", "1", std::to_string(kernel.size())));
    if (kernel.size() != 1) return;
    const HomogeneousForm cubic = HomogeneousForm::from_coefficients(5, 3, mons, kernel[0]);
    Tally fresh("cubic-vanishes-on-fresh-points");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint y = phi_omega(3, sample_generic_point(3, cx.rng));
        fresh.record(sgn(evaluate_form(cubic, y)) == 0, [&] { return point_str(y); });
    }
    cx.add(fresh.check());
    std::ostringstream os;
    os << cubic;
    cx.add(Check{"cubic", "one cubic form", os.str(), true, {}});
}

// ---------------------------------------------------------------- cremona

inline void suite_cremona_line(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    const std::size_t d = 2 * n - 2;
    cx.report.claim = "the Cremona inversion is an involution and sends lines through the unit point to rational "
                      "normal curves through the frame";
    Tally inv("involution");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint x = cx.rng.sample([&](RandomSource& r) { return r.point(d); },
                                                [](const ProjectivePoint& p) {
                                                    for (const auto& v : p.coords())
                                                        if (sgn(v) == 0) return false;
                                                    return true;
                                                },
                                                "point off the coordinate hyperplanes");
        inv.record(projective_equal(cremona_inv(cremona_inv(x)), x), [&] { return point_str(x); });
    }
    cx.add(inv.check());
    Tally on_curve("line-images-on-curve");
    const auto frame = standard_frame(d);
    for (std::size_t k = 0; k < cx.samples; ++k) {
        // direction with pairwise distinct coordinates, so the images have distinct ratios
        const Vector v = cx.rng.sample([&](RandomSource& r) { return r.vector(d + 1); },
                                       [](const Vector& w) {
                                           for (std::size_t i = 0; i < w.size(); ++i)
                                               for (std::size_t j = 0; j < i; ++j)
                                                   if (w[i] == w[j]) return false;
                                           return true;
                                       },
                                       "line direction");
        auto point_at = [&](const Rational& t) {
            Vector p(d + 1);
            for (std::size_t i = 0; i <= d; ++i) p[i] = 1 + t * v[i];
            return p;
        };
        auto image = [&](RandomSource& r) {
            return r.sample([&](RandomSource& rr) { return point_at(rr.nonzero_rational()); },
                            [](const Vector& p) {
                                for (const auto& c : p)
                                    if (sgn(c) == 0) return false;
                                return true;
                            },
                            "point of the line off the coordinate hyperplanes");
        };
        const ProjectivePoint first = cremona_inv(ProjectivePoint(image(cx.rng)));
        std::vector<ProjectivePoint> pts = frame;
        pts.push_back(first);
        const ParamCurve c = rnc_through(pts);
        bool ok = true;
        std::string bad;
        for (std::size_t j = 0; j < kPointsPerCurve && ok; ++j) {
            const ProjectivePoint y = cremona_inv(ProjectivePoint(image(cx.rng)));
            if (!parameter_of_point(c, y)) {
                ok = false;
                bad = point_str(y);
            }
        }
        on_curve.record(ok, [&] { return "direction " + point_str(ProjectivePoint(v)) + ", image " + bad; });
    }
    cx.add(on_curve.check());
}

inline void suite_cremona_fiber(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    const std::size_t d = 2 * n - 2;
    cx.report.claim = "the Cremona inversion sends each curve through W and x to a line through the unit point, "
                      "so projecting from the unit point is constant on fibers";
    const ProjectivePoint u = unit_point(d);
    Tally collinear("images-collinear");
    Tally through_u("line-through-unit");
    Tally projection("projection-constant");
    // centers: e_0, ..., e_d, then u (index d + 1)
    std::vector<bool> center_ok(d + 2, true);
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint x = sample_generic_point(n, cx.rng);
        const ParamCurve c = rnc_through(w_with(n, x));
        std::vector<ProjectivePoint> imgs;
        for (std::size_t j = 0; j < kPointsPerCurve; ++j) imgs.push_back(cremona_inv(sample_curve_point(n, c, cx.rng)));
        collinear.record(rank_of_points(imgs) == 2, [&] { return "x = " + point_str(x); });
        auto with_u = imgs;
        with_u.push_back(u);
        through_u.record(rank_of_points(with_u) == 2, [&] { return "x = " + point_str(x); });
        bool constant = true;
        const ProjectivePoint p0 = project_from_unit(imgs.front());
        for (const auto& y : imgs) constant = constant && projective_equal(project_from_unit(y), p0);
        projection.record(constant, [&] { return "x = " + point_str(x); });
        for (std::size_t e = 0; e <= d + 1; ++e) {
            if (!center_ok[e]) continue;
            try {
                auto proj = [&](const ProjectivePoint& y) {
                    return e <= d ? project_from_coordinate_point(y, e) : project_from_unit(y);
                };
                const ProjectivePoint q0 = proj(imgs.front());
                for (const auto& y : imgs)
                    if (!projective_equal(proj(y), q0)) center_ok[e] = false;
            } catch (const Error&) {
                center_ok[e] = false;
            }
        }
    }
    cx.add(collinear.check());
    cx.add(through_u.check());
    cx.add(projection.check());
    std::string centers;
    for (std::size_t e = 0; e <= d + 1; ++e) {
        if (!center_ok[e]) continue;
        if (!centers.empty()) centers += ",";
        centers += e <= d ? "e" + std::to_string(e) : "u";
    }
    if (centers.empty()) centers = "none";
    cx.add(Check{"center-scan", "u", centers, center_ok[d + 1] && cx.samples > 0,
                 center_ok[d + 1] ? "" : "centers with constant projection: " + centers});
}

inline void suite_xi_dim(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "degree n-1 forms on P^{2n-3} singular to order n-2 at 2n-1 general points have Catalan "
                      "dimension and separate generic points";
    const auto xi = xi_basis(n);
    cx.add(exact_check("dimension", str(catalan(n)), str(xi->dimension())));
    cx.add(exact_check("matches-omega", str(omega_basis(n)->dimension()), str(xi->dimension())));
    const std::size_t d = 2 * n - 3;
    auto draw = [&] {
        return cx.rng.sample([&](RandomSource& r) { return r.point(d); },
                             [&](const ProjectivePoint& y) { return !is_zero(evaluate_forms(xi->basis(), y)); },
                             "point off the base locus of the xi system");
    };
    Tally inj("generic-injectivity");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint y = draw(), y2 = draw();
        if (projective_equal(y, y2)) continue;
        inj.record(!projective_equal(phi_xi(n, y), phi_xi(n, y2)),
                   [&] { return point_str(y) + " and " + point_str(y2); });
    }
    if (cx.samples > 0) cx.add(inj.check());
}

// ---------------------------------------------------------------- trees

inline std::string labels_str(const LabelSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

inline void suite_tree_counts(SuiteContext& cx) {
    const unsigned n = cx.n;
    cx.report.claim = "stable trees with two vertices correspond to splits; balanced ones have no central vertex "
                      "and number C(n,n/2)/2";
    const auto trees = enumerate_two_vertex(n);
    const Integer expected = (Integer(1) << (n - 1)) - n - 1;
    cx.add(exact_check("two-vertex-count", str(expected), str(trees.size())));
    std::size_t balanced = 0;
    for (const auto& t : trees)
        if (std::holds_alternative<BalancedSplit>(contract(t))) ++balanced;
    const Integer want = n % 2 == 0 ? Integer(binomial(n, n / 2) / 2) : Integer(0);
    cx.add(exact_check("balanced-no-central", str(want), str(balanced)));
}

inline Configuration collided_configuration(const std::vector<LabelSet>& classes, std::size_t label_count) {
    std::vector<ProjectivePoint> pts(label_count, ProjectivePoint{1, 0});
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (auto l : classes[k]) pts[l - 1] = ProjectivePoint{1, static_cast<long>(k + 1)};
    return Configuration(std::move(pts));
}

inline Stability stability_from_classes(const std::vector<LabelSet>& classes, std::size_t label_count) {
    std::size_t m = 0;
    for (const auto& c : classes) m = std::max(m, c.size());
    if (2 * m < label_count) return Stability::Stable;
    if (2 * m == label_count) return Stability::StrictlySemistable;
    return Stability::Unstable;
}

inline void suite_tree_central(SuiteContext& cx) {
    const unsigned n = cx.n;
    if (n < 3 || n > 7) throw Error(ErrorKind::IndexOutOfRange, "tree enumeration is bounded to 3 <= n <= 7");
    cx.report.claim = "every stable tree has a unique central vertex unless a single edge splits the labels in "
                      "half; contraction classes match the stability of the collided configuration";
    const auto trees = enumerate_trees(n, 4);
    Tally unique("central-unique");
    Tally dichotomy("dichotomy");
    Tally partition("classes-partition");
    Tally link("stability-link");
    std::size_t no_central = 0;
    for (const auto& t : trees) {
        const auto central = central_vertices(t);
        const auto splits = balanced_splits(t);
        const std::string tree = to_json(t).dump();
        unique.record(central.size() <= 1, [&] { return tree; });
        const bool one = (central.size() == 1 && splits.empty()) ||
                         (central.empty() && splits.size() == 1 && n % 2 == 0);
        dichotomy.record(one, [&] { return tree; });
        const ContractionResult res = contract(t);
        std::vector<LabelSet> classes;
        if (const auto* c = std::get_if<Central>(&res)) {
            classes = c->classes;
            LabelSet all;
            for (const auto& k : classes) all.insert(all.end(), k.begin(), k.end());
            std::sort(all.begin(), all.end());
            LabelSet want(n);
            for (unsigned l = 0; l < n; ++l) want[l] = l + 1;
            partition.record(all == want && classes.size() == t.weight(c->vertex) + t.degree(c->vertex),
                             [&] { return tree; });
        } else {
            ++no_central;
            const auto& s = std::get<BalancedSplit>(res);
            classes = {s.side, s.complement};
        }
        if (n % 2 == 0) {
            const Configuration conf = collided_configuration(classes, n);
            const Stability want = stability_from_classes(classes, n);
            const Stability got = classify_stability(n / 2, conf);
            const bool zero = !git_point(n / 2, conf).has_value();
            link.record(got == want && zero == (got == Stability::Unstable), [&] {
                return tree + " classified " + std::string(to_string(got));
            });
        }
    }
    cx.add(unique.check());
    cx.add(dichotomy.check());
    cx.add(partition.check());
    if (n % 2 == 0) cx.add(link.check());
    cx.add(Check{"trees-enumerated", "at least one", str(trees.size()) + " trees, " + str(no_central) + " without center",
                 !trees.empty(), {}});
}

// ---------------------------------------------------------------- brackets

inline void suite_stability_oracle(SuiteContext& cx) {
    const unsigned n = cx.n;
    if (n < 1 || n > 5) throw Error(ErrorKind::IndexOutOfRange, "the profile sweep is bounded to 1 <= n <= 5");
    cx.report.claim = "a configuration is unstable exactly when every bracket monomial vanishes; two half-size "
                      "clusters are strictly semistable";
    const std::size_t m = 2 * n;
    Tally agree("unstable-iff-zero");
    Tally balanced("balanced-profile-semistable");
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& rgs : set_partitions(m)) {
        std::vector<ProjectivePoint> pts;
        std::size_t blocks = 0;
        for (auto b : rgs) {
            pts.push_back(ProjectivePoint{1, static_cast<long>(b)});
            blocks = std::max<std::size_t>(blocks, b + 1);
        }
        const Configuration c(std::move(pts));
        const Stability s = classify_stability(n, c);
        const auto g = git_point(n, c);
        ++counts[static_cast<int>(s)];
        agree.record((s == Stability::Unstable) == !g.has_value(),
                     [&] { return to_string(c) + " is " + std::string(to_string(s)); });
        if (blocks == 2 && std::count(rgs.begin(), rgs.end(), 0u) == static_cast<long>(n)) {
            balanced.record(s == Stability::StrictlySemistable && g.has_value(), [&] { return to_string(c); });
        }
    }
    cx.add(agree.check());
    cx.add(balanced.check());
    cx.add(Check{"profile-counts", "all labeled profiles",
                 "stable " + str(counts[0]) + ", strictly semistable " + str(counts[1]) + ", unstable " +
                     str(counts[2]),
                 true, {}});
}

inline void suite_rho_bridge(SuiteContext& cx) {
    const unsigned n = cx.n;
    require_half_count(n);
    cx.report.claim = "one invertible linear map carries the bracket invariants of the configuration of x to "
                      "the image of x";
    const std::size_t dd = dim_of(n);
    auto pair_at = [&](const ProjectivePoint& x) {
        return PointPair{*git_point(n, config_of_point(n, x)), phi_omega(n, x)};
    };
    std::vector<PointPair> train;
    for (std::size_t k = 0; k < dd * dd; ++k) train.push_back(pair_at(sample_generic_point(n, cx.rng)));
    const LinearFit fit = fit_linear_map(train);
    cx.add(Check{"fit", "solution dimension 1, invertible",
                 "solution dimension " + std::to_string(fit.solution_dim) + (fit ? ", invertible" : ""),
                 fit.map.has_value(), fit ? "" : "no unique invertible map"});
    if (fit) cx.add(Check{"fitted-map", "invertible " + str(dd) + "x" + str(dd), matrix_str(*fit.map), true, {}});
    Tally held("held-out");
    for (std::size_t k = 0; k < cx.samples; ++k) {
        const ProjectivePoint x = sample_generic_point(n, cx.rng);
        const PointPair p = pair_at(x);
        held.record(fit && projective_equal(apply(*fit.map, p.first), p.second), [&] { return point_str(x); });
    }
    cx.add(held.check());
}

inline const std::map<std::string, SuiteBody>& suite_table() {
    static const std::map<std::string, SuiteBody> table{
        {"base-locus", suite_base_locus},
        {"basis-agreement", suite_basis_agreement},
        {"cremona-fiber", suite_cremona_fiber},
        {"cremona-line", suite_cremona_line},
        {"dimensions", suite_dimensions},
        {"equivariance", suite_equivariance},
        {"fiber-contraction", suite_fiber_contraction},
        {"fiber-separation", suite_fiber_separation},
        {"incidence-rank", suite_incidence_rank},
        {"jacobian-rank", suite_jacobian_rank},
        {"rho-bridge", suite_rho_bridge},
        {"segre-cubic", suite_segre_cubic},
        {"span-contraction", suite_span_contraction},
        {"stability-oracle", suite_stability_oracle},
        {"tree-central", suite_tree_central},
        {"tree-counts", suite_tree_counts},
        {"xi-dim", suite_xi_dim},
    };
    return table;
}

}  // namespace detail

/// Runs one named suite. Throws UnknownSuite for names outside
/// suite_names(). Tree suites read n as the number of labels; all others
/// as half the number of points.
inline SuiteReport verify_suite(const std::string& name, unsigned n, std::uint64_t seed, std::size_t samples,
                                std::int64_t bound = kDefaultCoefficientBound) {
    const auto& table = detail::suite_table();
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'", name);
    SuiteReport report;
    report.suite = name;
    report.n = n;
    report.seed = seed;
    report.samples = samples;
    report.bound = bound;
    RandomSource rng(seed, bound);
    detail::SuiteContext cx{n, samples, rng, report};
    it->second(cx);
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    return report;
}

}  // namespace mf
