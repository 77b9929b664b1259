#include "ostrowski/error.hpp"
#include "ostrowski/quadrature.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace ostrowski;
using namespace testutil;

TEST(CellRule, Validation) {
    EXPECT_THROW(CellRule(0.6), ArgumentError);
    EXPECT_THROW(CellRule(-0.1), ArgumentError);
    EXPECT_DOUBLE_EQ(CellRule().point(0.0, 1.0), 0.25);
    EXPECT_DOUBLE_EQ(CellRule(0.5).point(0.0, 1.0), 0.5);
}

TEST(Composite, SquareTwoCells) {
    const QuadratureResult r = composite_integrate(square(), 2, CellRule(0.25));
    EXPECT_NEAR(r.estimate, 21.0 / 64.0, 1e-15);
    EXPECT_NEAR(r.error_bound, 1.0 / 16.0, 1e-15);
    ASSERT_EQ(r.cells.size(), 2u);
    EXPECT_NEAR(r.cells[0].bound, 1.0 / 64.0, 1e-15);
    EXPECT_NEAR(r.cells[1].bound, 3.0 / 64.0, 1e-15);
    EXPECT_LE(std::abs(r.estimate - 1.0 / 3.0), r.error_bound);

    const QuadratureResult c = composite_integrate(square(), 2, CellRule(0.25), Certification::coarse);
    EXPECT_NEAR(c.estimate, 21.0 / 64.0, 1e-15);
    EXPECT_NEAR(c.error_bound, 1.0 / 8.0, 1e-15);
}

TEST(Composite, ConstantIsExact) {
    for (std::size_t n : {1u, 3u, 10u}) {
        const QuadratureResult r = composite_integrate(constant(2.5), n);
        EXPECT_NEAR(r.estimate, 2.5, 1e-14);
        EXPECT_DOUBLE_EQ(r.error_bound, 0.0);
    }
}

TEST(Composite, RejectsZeroCells) {
    EXPECT_THROW(composite_integrate(square(), 0), ArgumentError);
}

TEST(Composite, EnclosureOnContinuousCorpus) {
    for (const PwmFunction& f : corpus(31, 200, 3, 0.0)) {
        const double exact = f.integral(f.domain().a(), f.domain().b());
        for (std::size_t n : {1u, 2u, 4u, 8u, 16u}) {
            for (Certification c : {Certification::refined, Certification::coarse}) {
                const QuadratureResult r = composite_integrate(f, n, {}, c);
                EXPECT_LE(std::abs(r.estimate - exact), r.error_bound + 1e-12);
            }
        }
    }
}

TEST(Composite, EnclosureWithJumpsAndLambdas) {
    for (const PwmFunction& f : corpus(32, 100, 4, 0.6)) {
        const double exact = f.integral(f.domain().a(), f.domain().b());
        for (double lambda : {0.0, 0.1, 0.25, 0.5}) {
            const QuadratureResult r = composite_integrate(f, 7, CellRule(lambda));
            EXPECT_LE(std::abs(r.estimate - exact), r.error_bound + 1e-12);
        }
    }
}

TEST(Composite, RefinedNeverExceedsCoarse) {
    for (const PwmFunction& f : corpus(33, 100)) {
        for (std::size_t n : {1u, 4u, 9u}) {
            const double refined = composite_integrate(f, n).error_bound;
            const double coarse = composite_integrate(f, n, {}, Certification::coarse).error_bound;
            EXPECT_LE(refined, coarse + 1e-12);
        }
    }
}

TEST(Adaptive, SquareReachesTolerance) {
    for (double tol : {1e-3, 1e-4}) {
        const QuadratureResult r = adaptive_integrate(square(), tol);
        EXPECT_TRUE(r.converged);
        EXPECT_LE(r.error_bound, tol);
        EXPECT_LE(std::abs(r.estimate - 1.0 / 3.0), r.error_bound);
    }
}

TEST(Adaptive, ConstantNeedsOneCell) {
    const QuadratureResult r = adaptive_integrate(constant(1.0), 1e-12);
    EXPECT_EQ(r.cells.size(), 1u);
    EXPECT_DOUBLE_EQ(r.error_bound, 0.0);
}

TEST(Adaptive, StepStaysEnclosed) {
    const QuadratureResult r = adaptive_integrate(step_at(0.25), 1e-6, {}, Certification::refined, 4096);
    EXPECT_LE(std::abs(r.estimate - 0.75), r.error_bound + 1e-15);
    if (!r.converged) {
        EXPECT_GT(r.error_bound, 1e-6);
    }
}

TEST(Adaptive, CellsTileTheDomain) {
    for (const PwmFunction& f : corpus(34, 20)) {
        const QuadratureResult r = adaptive_integrate(f, 1e-3, {}, Certification::refined, 2000);
        double left = f.domain().a();
        double sum = 0.0;
        for (const QuadratureCell& c : r.cells) {
            EXPECT_DOUBLE_EQ(c.left, left);
            left = c.right;
            sum += c.bound;
        }
        EXPECT_DOUBLE_EQ(left, f.domain().b());
        EXPECT_NEAR(sum, r.error_bound, 1e-12);
        const double exact = f.integral(f.domain().a(), f.domain().b());
        EXPECT_LE(std::abs(r.estimate - exact), r.error_bound + 1e-12);
    }
}

TEST(Adaptive, Validation) {
    EXPECT_THROW(adaptive_integrate(square(), 0.0), ArgumentError);
    EXPECT_THROW(adaptive_integrate(square(), 1e-3, {}, Certification::refined, 0), ArgumentError);
}

TEST(Certification, StringRoundTrip) {
    EXPECT_EQ(certification_from_string("coarse"), Certification::coarse);
    EXPECT_EQ(to_string(Certification::refined), "refined");
    EXPECT_THROW(certification_from_string("tight"), ArgumentError);
}
