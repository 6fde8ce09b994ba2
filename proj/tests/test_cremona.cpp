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

#include <gtest/gtest.h>

#include "mf/combinatorics.hpp"
#include "mf/cremona.hpp"
#include "mf/omega.hpp"
#include "mf/random.hpp"
#include "mf/veronese.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no mf::Error thrown";
    return ErrorKind::Parse;
}

ProjectivePoint nonzero_point(std::size_t d, RandomSource& rng) {
    Vector v(d + 1);
    for (auto& c : v) c = rng.nonzero_rational();
    return ProjectivePoint(v);
}

/// Oracle: coordinatewise reciprocal.
ProjectivePoint reciprocal(const ProjectivePoint& p) {
    Vector v;
    for (const auto& c : p.coords()) v.push_back(1 / c);
    return ProjectivePoint(v);
}

}  // namespace

TEST(Cremona, Examples) {
    EXPECT_EQ(cremona_inv({1, 2, 3}).canonical().coords(), (Vector{6, 3, 2}));
    for (std::size_t d = 1; d <= 6; ++d) EXPECT_TRUE(projective_equal(cremona_inv(unit_point(d)), unit_point(d)));
    EXPECT_TRUE(projective_equal(cremona_inv(cremona_inv({1, 2, 3})), ProjectivePoint{1, 2, 3}));
}

TEST(Cremona, AgreesWithReciprocalsAndIsAnInvolution) {
    RandomSource rng(3);
    for (int k = 0; k < 50; ++k) {
        const ProjectivePoint p = nonzero_point(1 + rng.index(6), rng);
        EXPECT_TRUE(projective_equal(cremona_inv(p), reciprocal(p)));
        EXPECT_TRUE(projective_equal(cremona_inv(cremona_inv(p)), p));
    }
}

TEST(Cremona, OneZeroCoordinateGoesToACoordinatePoint) {
    EXPECT_TRUE(projective_equal(cremona_inv({0, 2, 3}), ProjectivePoint{1, 0, 0}));
}

TEST(Cremona, IndeterminacyLocus) {
    EXPECT_EQ(kind_of([] { cremona_inv({0, 0, 1}); }), ErrorKind::IndeterminacyPoint);
    EXPECT_EQ(kind_of([] { cremona_inv({0, 0, 1, 4}); }), ErrorKind::IndeterminacyPoint);
    EXPECT_EQ(kind_of([] { cremona_inv(ProjectivePoint{Vector{1}}); }), ErrorKind::DimensionMismatch);
}

TEST(Projection, FromUnitPoint) {
    EXPECT_TRUE(projective_equal(project_from_unit({1, 2, 3}), ProjectivePoint{2, 1}));
    EXPECT_TRUE(projective_equal(project_from_unit({1, 1, 2}), ProjectivePoint{1, 1}));
    EXPECT_EQ(kind_of([] { project_from_unit({1, 1, 1}); }), ErrorKind::CenterPoint);
    EXPECT_EQ(kind_of([] { project_from_unit({5, 5, 5, 5}); }), ErrorKind::CenterPoint);
    // points of a line through u project to one point
    RandomSource rng(4);
    const Vector v = rng.vector(5);
    const ProjectivePoint ref = project_from_unit(ProjectivePoint{1 + v[0], 1 + v[1], 1 + v[2], 1 + v[3], 1 + v[4]});
    for (int k = 0; k < 5; ++k) {
        const Rational t = rng.nonzero_rational();
        Vector p(5);
        for (std::size_t i = 0; i < 5; ++i) p[i] = 1 + t * v[i];
        EXPECT_TRUE(projective_equal(project_from_unit(ProjectivePoint(p)), ref));
    }
}

TEST(Projection, FromCoordinatePoint) {
    EXPECT_EQ(project_from_coordinate_point({1, 2, 3}, 1).coords(), (Vector{1, 3}));
    EXPECT_EQ(kind_of([] { project_from_coordinate_point({0, 2, 0}, 1); }), ErrorKind::CenterPoint);
    EXPECT_EQ(kind_of([] { project_from_coordinate_point({1, 2, 3}, 3); }), ErrorKind::IndexOutOfRange);
}

TEST(Xi, DimensionsMatchCatalan) {
    const std::size_t want[] = {0, 0, 2, 5, 14, 42};
    for (unsigned n = 2; n <= 5; ++n) {
        EXPECT_EQ(xi_basis(n)->dimension(), want[n]) << "n=" << n;
        EXPECT_EQ(xi_basis(n)->dimension(), omega_basis(n)->dimension());
    }
    EXPECT_TRUE(xi_basis(2)->system.constraints.empty());
    EXPECT_EQ(xi_basis(3)->system.constraints.size(), 5u);
    EXPECT_EQ(xi_basis(3)->system.degree, 2u);
}

TEST(Xi, QuadricsThroughFivePointsByInterpolationOracle) {
    // quadrics on P^3 through the standard frame: 10 monomials, 5 independent conditions
    std::vector<oracle::Row> m;
    for (const auto& p : standard_frame(3)) {
        oracle::Row r;
        for (const auto& mon : monomials_of_degree(4, 2)) {
            Rational v = 1;
            for (std::size_t i = 0; i < 4; ++i)
                for (unsigned e = 0; e < mon.exponents[i]; ++e) v *= p[i];
            r.push_back(v);
        }
        m.push_back(r);
    }
    EXPECT_EQ(10 - oracle::rank(m), xi_basis(3)->dimension());
    for (const auto& f : xi_basis(3)->basis())
        for (const auto& p : standard_frame(3)) EXPECT_EQ(evaluate_form(f, p), 0);
}

TEST(Xi, TwoPointCaseIsAnIsomorphismOfTheLine) {
    RandomSource rng(6);
    const ProjectivePoint a = phi_xi(2, {1, 0}), b = phi_xi(2, {0, 1});
    RationalMatrix m = RationalMatrix::from_columns({a.coords(), b.coords()});
    ASSERT_TRUE(inverse(m).has_value());
    for (int k = 0; k < 10; ++k) {
        const ProjectivePoint y = rng.point(1);
        EXPECT_TRUE(projective_equal(phi_xi(2, y), apply(m, y)));
    }
}

TEST(Xi, InjectiveOnRandomPairs) {
    RandomSource rng(7);
    for (int k = 0; k < 20; ++k) {
        const ProjectivePoint y = nonzero_point(3, rng), z = nonzero_point(3, rng);
        if (projective_equal(y, z)) continue;
        EXPECT_FALSE(projective_equal(phi_xi(3, y), phi_xi(3, z)));
    }
}

TEST(Xi, BasePointsAndShapeErrors) {
    for (const auto& p : standard_frame(3)) EXPECT_EQ(kind_of([&] { phi_xi(3, p); }), ErrorKind::BaseLocusPoint);
    EXPECT_EQ(kind_of([] { phi_xi(3, {1, 2, 3}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { xi_basis(1); }), ErrorKind::IndexOutOfRange);
}

TEST(Cremona, LinesThroughUnitPointBecomeCurvesThroughTheFrame) {
    RandomSource rng(9);
    for (std::size_t d : {2u, 4u, 6u}) {
        Vector v;
        do {
            v = rng.vector(d + 1);
        } while ([&] {
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (v[i] == v[j]) return true;
            return false;
        }());
        auto line_point = [&](const Rational& t) {
            Vector p(d + 1);
            for (std::size_t i = 0; i <= d; ++i) p[i] = 1 + t * v[i];
            return p;
        };
        std::vector<ProjectivePoint> images;
        for (int k = 1; images.size() < 8; ++k) {
            const Vector p = line_point(Rational(k, 7));
            if (std::any_of(p.begin(), p.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
            images.push_back(cremona_inv(ProjectivePoint(p)));
        }
        auto pts = standard_frame(d);
        pts.push_back(images.front());
        const ParamCurve c = rnc_through(pts);
        for (const auto& y : images) EXPECT_TRUE(parameter_of_point(c, y).has_value()) << "d=" << d;
    }
}

TEST(Cremona, FiberCurvesBecomeLinesThroughTheUnitPoint) {
    RandomSource rng(10);
    for (unsigned n = 2; n <= 4; ++n) {
        const std::size_t d = 2 * n - 2;
        const ProjectivePoint x = sample_generic_point(n, rng);
        const ParamCurve c = rnc_through(w_with(n, x));
        std::vector<ProjectivePoint> imgs{unit_point(d)};
        for (int k = 0; k < 8; ++k) {
            ProjectivePoint y = curve_eval(c, rng.point(1));
            if (std::any_of(y.coords().begin(), y.coords().end(), [](const Rational& q) { return sgn(q) == 0; }) ||
                projective_equal(y, unit_point(d)))
                continue;
            imgs.push_back(cremona_inv(y));
        }
        ASSERT_GE(imgs.size(), 3u);
        EXPECT_EQ(rank_of_points(imgs), 2u) << "n=" << n;
        const ProjectivePoint q = project_from_unit(imgs[1]);
        for (std::size_t i = 2; i < imgs.size(); ++i) EXPECT_TRUE(projective_equal(project_from_unit(imgs[i]), q));
        // the line is the one through u and the reciprocal of x
        EXPECT_TRUE(projective_equal(q, project_from_unit(reciprocal(x))));
    }
}
