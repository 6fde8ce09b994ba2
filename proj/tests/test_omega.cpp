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

#include "mf/omega.hpp"
#include "mf/random.hpp"
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

mpz_class oracle_factorial(unsigned k) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

std::vector<oracle::Row> rows_of(const RationalMatrix& m) {
    std::vector<oracle::Row> r;
    for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(m.row_vector(i));
    return r;
}

HomogeneousForm x(std::size_t i) { return HomogeneousForm::variable(3, i); }

/// The n = 2 basis written out by hand: x0x1 - x0x2, x1x2 - x0x2.
std::vector<HomogeneousForm> hand_basis() { return {x(0) * x(1) - x(0) * x(2), x(1) * x(2) - x(0) * x(2)}; }

}  // namespace

TEST(Omega, DimensionsMatchBothCounts) {
    const std::size_t want[] = {0, 0, 2, 5, 14, 42, 132};
    for (unsigned n = 2; n <= 6; ++n) {
        const mpz_class diff = oracle::binomial(2 * n - 1, n) - oracle::binomial(2 * n - 1, n - 2);
        const mpz_class hook = oracle_factorial(2 * n) / (oracle_factorial(n + 1) * oracle_factorial(n));
        EXPECT_EQ(diff, hook);
        EXPECT_EQ(hook, want[n]);
        EXPECT_EQ(omega_basis(n)->dimension(), want[n]) << "n=" << n;
    }
}

TEST(Omega, DegreeBookkeeping) {
    for (unsigned n = 2; n <= 20; ++n) {
        const unsigned r = n, mu = n - 1;
        EXPECT_EQ(r * (2 * n - 2), 2 * n * mu);
        EXPECT_EQ(r * (n - 1), n * mu);
    }
    for (unsigned n = 2; n <= 5; ++n) {
        const auto sys = omega_basis(n);
        EXPECT_EQ(sys->system.degree, n);
        ASSERT_EQ(sys->system.constraints.size(), 2 * n);
        unsigned total = 0;
        for (const auto& c : sys->system.constraints) total += c.multiplicity;
        EXPECT_EQ(sys->system.degree * (2 * n - 2), total);
    }
}

TEST(Omega, IncidenceMatrix) {
    const RationalMatrix m2 = incidence_matrix(2);
    EXPECT_EQ(m2, RationalMatrix::from_rows({{1, 1, 1}}));
    const std::size_t shape[][2] = {{0, 0}, {0, 0}, {1, 3}, {5, 10}, {21, 35}, {84, 126}};
    for (unsigned n = 2; n <= 5; ++n) {
        const RationalMatrix m = incidence_matrix(n);
        EXPECT_EQ(m.rows(), shape[n][0]);
        EXPECT_EQ(m.cols(), shape[n][1]);
        EXPECT_EQ(oracle::rank(rows_of(m)), shape[n][0]) << "n=" << n;
        // each n-subset contains C(n, n-2) subsets of size n-2
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Rational s = 0;
            for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, c);
            EXPECT_EQ(s, oracle::binomial(n, n - 2));
        }
    }
}

TEST(Omega, BasisIsSquarefreeAndSatisfiesIncidence) {
    for (unsigned n = 2; n <= 5; ++n) {
        const auto sys = omega_basis(n);
        const RationalMatrix inc = incidence_matrix(n);
        const auto mons = [&] {
            std::vector<Monomial> m;
            for (const auto& I : sys->monomial_index) m.push_back(squarefree_monomial(2 * n - 1, I));
            return m;
        }();
        for (const auto& f : sys->basis()) {
            const Vector v = f.coefficients(mons);
            EXPECT_TRUE(is_zero(inc * v));
        }
        EXPECT_EQ(rank(sys->system.coefficient_matrix()), sys->dimension());
    }
}

TEST(Omega, HandWrittenBasisForFourPoints) {
    const auto sys = omega_basis(2);
    LinearSystem hand = sys->system;
    hand.basis = hand_basis();
    EXPECT_TRUE(same_span(sys->system, hand));
    // incidence condition: the three coefficients of each form sum to zero
    for (const auto& f : hand.basis) {
        Rational s = 0;
        for (const auto& [m, c] : f.terms()) s += c;
        EXPECT_EQ(s, 0);
    }
}

TEST(Omega, GenericConstructionAgrees) {
    for (unsigned n = 2; n <= 4; ++n) {
        const LinearSystem g = omega_basis_generic(n);
        EXPECT_EQ(g.dimension(), omega_basis(n)->dimension());
        EXPECT_TRUE(same_span(g, omega_basis(n)->system)) << "n=" << n;
    }
}

TEST(Phi, FourPointExamples) {
    const ProjectivePoint p{1, 2, 3};
    EXPECT_TRUE(projective_equal(evaluate_system(hand_basis(), p), ProjectivePoint{-1, 3}));
    EXPECT_TRUE(projective_equal(phi_omega(2, p), ProjectivePoint{1, 4}));
    // the line through e1, e2 is contracted
    RandomSource rng(2);
    const ProjectivePoint hand_image = evaluate_system(hand_basis(), {1, 1, 0});
    const ProjectivePoint image = phi_omega(2, {1, 1, 0});
    EXPECT_TRUE(projective_equal(hand_image, ProjectivePoint{1, 0}));
    for (int k = 0; k < 10; ++k) {
        const ProjectivePoint y{rng.nonzero_rational(), rng.nonzero_rational(), 0};
        EXPECT_TRUE(projective_equal(evaluate_system(hand_basis(), y), hand_image));
        EXPECT_TRUE(projective_equal(phi_omega(2, y), image));
    }
}

TEST(Phi, BaseLocusAndShapeErrors) {
    EXPECT_EQ(kind_of([] { phi_omega(3, {1, 1, 0, 0, 0}); }), ErrorKind::BaseLocusPoint);
    EXPECT_EQ(kind_of([] { phi_omega(3, {0, 2, -5, 0, 0}); }), ErrorKind::BaseLocusPoint);
    for (const auto& w : base_w(2).points) EXPECT_EQ(kind_of([&] { phi_omega(2, w); }), ErrorKind::BaseLocusPoint);
    EXPECT_EQ(kind_of([] { phi_omega(2, {1, 2, 3, 4}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { omega_basis(1); }), ErrorKind::IndexOutOfRange);
}

TEST(Phi, RepresentativeIndependence) {
    RandomSource rng(8);
    for (unsigned n = 2; n <= 4; ++n)
        for (int k = 0; k < 5; ++k) {
            const ProjectivePoint p = sample_generic_point(n, rng);
            EXPECT_TRUE(projective_equal(phi_omega(n, p), phi_omega(n, p.scaled(rng.nonzero_rational()))));
        }
}

TEST(Phi, BaseLocusContainsSpansOfSmallSubsets) {
    RandomSource rng(13);
    for (unsigned n = 3; n <= 4; ++n) {
        const BaseW w = base_w(n);
        for (int k = 0; k < 20; ++k) {
            const auto idx = rng.subset(w.points.size(), n - 1);
            std::vector<ProjectivePoint> pts;
            for (auto i : idx) pts.push_back(w.points[i]);
            const ProjectivePoint y = random_point_in_span(pts, rng);
            EXPECT_TRUE(is_zero(evaluate_forms(omega_basis(n)->basis(), y)));
        }
    }
}

TEST(Phi, ComplementarySpansMeet) {
    RandomSource rng(14);
    const unsigned n = 3;
    const BaseW w = base_w(n);
    for (int k = 0; k < 5; ++k) {
        const auto idx = rng.subset(w.points.size(), n);
        std::vector<ProjectivePoint> s, c;
        for (std::size_t i = 0; i < w.points.size(); ++i)
            (std::find(idx.begin(), idx.end(), i) != idx.end() ? s : c).push_back(w.points[i]);
        const ProjectivePoint a = phi_omega(n, random_point_in_span(s, rng));
        EXPECT_TRUE(projective_equal(a, phi_omega(n, random_point_in_span(s, rng))));
        EXPECT_TRUE(projective_equal(a, phi_omega(n, random_point_in_span(c, rng))));
    }
}

TEST(FrameAutomorphism, Examples) {
    const std::vector<std::size_t> id{0, 1, 2, 3};
    EXPECT_TRUE(is_scalar_matrix(frame_automorphism(2, id)));
    const std::vector<std::size_t> swap12{1, 0, 2, 3};
    EXPECT_TRUE(proportional(frame_automorphism(2, swap12), RationalMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})));
    const std::vector<std::size_t> swap34{0, 1, 3, 2};
    EXPECT_TRUE(
        proportional(frame_automorphism(2, swap34), RationalMatrix::from_rows({{-1, 0, 1}, {0, -1, 1}, {0, 0, 1}})));
    const std::vector<std::size_t> bad{0, 0, 2, 3};
    EXPECT_EQ(kind_of([&] { frame_automorphism(2, bad); }), ErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of([&] { frame_automorphism(3, id); }), ErrorKind::DimensionMismatch);
}

TEST(FrameAutomorphism, PermutesW) {
    RandomSource rng(21);
    for (unsigned n = 2; n <= 4; ++n) {
        const auto sigma = rng.permutation(2 * n);
        const RationalMatrix a = frame_automorphism(n, sigma);
        const BaseW w = base_w(n);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            EXPECT_TRUE(projective_equal(apply(a, w.points[i]), w.points[sigma[i]]));
    }
}

TEST(ConfigOfPoint, Examples) {
    EXPECT_EQ(to_string(config_of_point(2, {1, 2, 3})), "1:1,1:2,1:3,1:0");
    EXPECT_EQ(to_string(config_of_point(3, {1, 2, 3, 4, 5})), "1:1,1:2,1:3,1:4,1:5,1:0");
    EXPECT_EQ(kind_of([] { config_of_point(2, {1, 1, 2}); }), ErrorKind::DegenerateConfiguration);
    EXPECT_EQ(kind_of([] { config_of_point(2, {0, 1, 2}); }), ErrorKind::DegenerateConfiguration);
    EXPECT_EQ(kind_of([] { config_of_point(2, {1, 2}); }), ErrorKind::DimensionMismatch);
}

TEST(ConfigOfPoint, MatchesParametersOfTheCurveThroughWAndX) {
    RandomSource rng(29);
    for (unsigned n = 2; n <= 4; ++n) {
        const ProjectivePoint p = sample_generic_point(n, rng);
        const auto pts = w_with(n, p);
        const ParamCurve c = rnc_through(pts);
        std::vector<ProjectivePoint> params;
        for (const auto& y : pts) params.push_back(*parameter_of_point(c, y));
        const Configuration conf = config_of_point(n, p);
        // the configuration lists e_1..e_{2n-1}, then u; x itself is the extra point at (0:1)
        for (std::size_t i = 0; i < conf.size(); ++i) {
            EXPECT_TRUE(projective_equal(conf[i], params[i])) << "n=" << n << " i=" << i;
        }
        EXPECT_TRUE(projective_equal(params.back(), ProjectivePoint{0, 1}));
    }
}

TEST(Jacobian, ImageDimension) {
    RandomSource rng(31);
    for (unsigned n = 2; n <= 4; ++n)
        for (int k = 0; k < 3; ++k) EXPECT_EQ(jacobian_rank(n, sample_generic_point(n, rng)), 2 * n - 2) << "n=" << n;
    EXPECT_EQ(kind_of([] { jacobian_rank(2, ProjectivePoint{1, 0, 0}); }), ErrorKind::BaseLocusPoint);
}

TEST(Sampling, GenericPointsAvoidDegeneracies) {
    RandomSource rng(37);
    for (int k = 0; k < 20; ++k) {
        const ProjectivePoint p = sample_generic_point(3, rng);
        EXPECT_NO_THROW(config_of_point(3, p));
        EXPECT_NO_THROW(phi_omega(3, p));
    }
}
