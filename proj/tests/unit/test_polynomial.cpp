#include "ostrowski/error.hpp"
#include "ostrowski/polynomial.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using ostrowski::Polynomial;

TEST(Polynomial, EvaluatesAroundItsOrigin) {
    const Polynomial p({1.0, 2.0, 3.0}, 0.5);  // 1 + 2(t-0.5) + 3(t-0.5)^2
    EXPECT_DOUBLE_EQ(p(0.5), 1.0);
    EXPECT_DOUBLE_EQ(p(1.5), 6.0);
    EXPECT_EQ(p.degree(), 2);
}

TEST(Polynomial, DerivativeAndAntiderivative) {
    const Polynomial p({0.0, 0.0, 1.0});
    EXPECT_DOUBLE_EQ(p.derivative()(3.0), 6.0);
    EXPECT_DOUBLE_EQ(p.integrate(0.0, 1.0), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(p.antiderivative().derivative()(0.7), p(0.7));
}

TEST(Polynomial, RecenterPreservesValues) {
    const Polynomial p({2.0, -1.0, 0.5, 4.0}, 0.3);
    const Polynomial q = p.recentered(-1.2);
    for (double t : {-2.0, 0.0, 0.3, 1.7}) {
        EXPECT_NEAR(p(t), q(t), 1e-12 * (1.0 + std::abs(p(t))));
    }
}

TEST(Polynomial, ReflectedIsMirrorImage) {
    const Polynomial p({1.0, 2.0, -3.0}, 0.1);
    const Polynomial r = p.reflected(1.0);
    for (double t : {0.0, 0.2, 0.6, 1.0}) {
        EXPECT_NEAR(r(t), p(1.0 - t), 1e-14);
    }
}

TEST(Polynomial, ArithmeticAcrossOrigins) {
    const Polynomial p({1.0, 1.0}, 0.0);
    const Polynomial q({0.0, 2.0}, 1.0);
    for (double t : {-1.0, 0.5, 2.0}) {
        EXPECT_NEAR((p * q)(t), p(t) * q(t), 1e-13);
        EXPECT_NEAR((p + q)(t), p(t) + q(t), 1e-13);
        EXPECT_NEAR((p - q)(t), p(t) - q(t), 1e-13);
        EXPECT_NEAR((p + 3.0)(t), p(t) + 3.0, 1e-13);
        EXPECT_NEAR((-p)(t), -p(t), 1e-13);
    }
}

TEST(Polynomial, RootsInsideInterval) {
    // (t - 0.2)(t - 0.5)(t - 0.9)
    const Polynomial p = Polynomial({-0.2, 1.0}) * Polynomial({-0.5, 1.0}) * Polynomial({-0.9, 1.0});
    const auto r = p.roots(0.0, 1.0);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_NEAR(r[0], 0.2, 1e-12);
    EXPECT_NEAR(r[1], 0.5, 1e-12);
    EXPECT_NEAR(r[2], 0.9, 1e-12);
    EXPECT_EQ(p.roots(0.3, 0.4).size(), 0u);
}

TEST(Polynomial, RangeFindsInteriorExtremum) {
    const Polynomial p({0.0, 1.0, -1.0});  // t - t^2, max 1/4 at 1/2
    const auto [lo, hi] = p.range(0.0, 1.0);
    EXPECT_NEAR(lo, 0.0, 1e-15);
    EXPECT_NEAR(hi, 0.25, 1e-15);
}

TEST(Polynomial, PowerMomentMatchesQuadrature) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p({u(rng), u(rng), u(rng), u(rng)}, u(rng));
        const double anchor = 0.3;
        for (double e : {0.0, 0.5, 1.0, 2.0, 3.5}) {
            // Simpson loses order at the anchor for fractional exponents
            const double tol = e == std::floor(e) ? 1e-10 : 1e-5;
            const double exact = ostrowski::power_moment(p, anchor, e, 0.4, 1.1);
            const double numeric = testutil::simpson(
                [&](double t) { return std::pow(std::abs(t - anchor), e) * p(t); }, 0.4, 1.1, 4000);
            EXPECT_NEAR(exact, numeric, tol) << "e=" << e;
            // left of the anchor
            const double left = ostrowski::power_moment(p, anchor, e, -0.5, 0.3);
            const double nleft = testutil::simpson(
                [&](double t) { return std::pow(std::abs(t - anchor), e) * p(t); }, -0.5, 0.3, 4000);
            EXPECT_NEAR(left, nleft, tol) << "e=" << e;
        }
    }
}

TEST(Polynomial, PowerMomentRejectsStraddle) {
    EXPECT_THROW(ostrowski::power_moment(Polynomial({1.0}), 0.5, 1.5, 0.0, 1.0),
                 ostrowski::ArgumentError);
}
