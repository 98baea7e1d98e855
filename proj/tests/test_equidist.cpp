#include "latgaps/equidist.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace latgaps;

namespace {

constexpr double kPhi = std::numbers::phi;
constexpr double kPi = std::numbers::pi;

TestFunction reference_bump() {
    TestFunction phi;
    phi.radial = BumpProfile{1.0, 2.0, 0.1};
    phi.angular = BumpProfile{0.0, kPi / 2.0, 0.1};
    return phi;
}

}  // namespace

TEST(BumpProfile, ShapeAndIntegral) {
    const BumpProfile f{1.0, 2.0, 0.1};
    EXPECT_DOUBLE_EQ(f(0.9), 0.0);
    EXPECT_DOUBLE_EQ(f(1.0), 0.0);
    EXPECT_DOUBLE_EQ(f(1.5), 1.0);
    EXPECT_DOUBLE_EQ(f(2.0), 0.0);
    EXPECT_NEAR(f(1.05), 0.5, 1e-15);  // midpoint of the smoothstep ramp
    EXPECT_GT(f(1.08), f(1.02));
    EXPECT_DOUBLE_EQ(f.integral(), 0.9);
    EXPECT_THROW((BumpProfile{0.0, 0.1, 0.2}.validate()), std::domain_error);
}

TEST(TargetIntegral, QuadratureMatchesClosedForm) {
    const TestFunction phi = reference_bump();
    // dw/|w| factors in polar coordinates, so I = (int f)(int g).
    const double closed = phi.radial.integral() * phi.angular.integral();
    EXPECT_NEAR(target_integral(phi), closed, 1e-8 * closed);

    // With sharp rolloffs the indicator product 1 * (pi/2) emerges.
    TestFunction sharp;
    sharp.radial = BumpProfile{1.0, 2.0, 0.02};
    sharp.angular = BumpProfile{0.0, kPi / 2.0, 0.02};
    EXPECT_NEAR(target_integral(sharp), kPi / 2.0, 0.06);
}

TEST(TargetIntegral, ScalesLinearly) {
    TestFunction phi = reference_bump();
    const double base = target_integral(phi);
    phi.scale = 2.0;
    EXPECT_NEAR(target_integral(phi), 2.0 * base, 1e-12 * base);
}

TEST(OrbitStatistic, MissedSupportGivesZero) {
    TestFunction phi = reference_bump();
    phi.radial = BumpProfile{1e5, 2e5, 10.0};  // far beyond reach of T = 10
    const auto stat = orbit_statistic(Vec2R{1.0, kPhi}, 10.0, phi);
    EXPECT_EQ(stat.value, 0.0);
    EXPECT_EQ(stat.sample_count, 0u);
}

TEST(OrbitStatistic, TinyBallIsExplicit) {
    // The ball at T = 1.5 is {I, -I, J, -J}; the statistic is the 4-term sum.
    const Vec2R v{1.0, kPhi};
    const TestFunction phi = reference_bump();
    const auto stat = orbit_statistic(v, 1.5, phi);
    const double expected =
        (phi(v) + phi(-v) + phi(Vec2R{v.y, -v.x}) + phi(Vec2R{-v.y, v.x})) / 1.5;
    EXPECT_DOUBLE_EQ(stat.value, expected);
    EXPECT_GT(phi(v), 0.0);  // v itself lies in the support
}

TEST(OrbitStatistic, LinearityInPhi) {
    const Vec2R v{1.0, kPi / 2.0};
    const TestFunction phi1 = reference_bump();
    TestFunction phi2 = reference_bump();
    phi2.radial = BumpProfile{2.0, 6.0, 0.3};
    phi2.angular = BumpProfile{-2.0, -0.5, 0.2};
    const double alpha = 2.75;
    auto combo = [&](const Vec2R& w) { return alpha * phi1(w) + phi2(w); };
    const double T = 60.0;
    const auto s_combo = orbit_statistic(v, T, combo);
    const auto s1 = orbit_statistic(v, T, phi1);
    const auto s2 = orbit_statistic(v, T, phi2);
    EXPECT_NEAR(s_combo.value, alpha * s1.value + s2.value,
                1e-12 * (1.0 + std::abs(s_combo.value)));
}

TEST(OrbitStatistic, PartitionIndependence) {
    // Task-merged accumulation vs one straight compensated pass.
    const Vec2R v{1.0, kPi / 2.0};
    const TestFunction phi = reference_bump();
    const double T = 80.0;
    const auto merged = orbit_statistic(v, T, phi, 4);

    CompensatedSum straight;
    for_each_in_ball(detail::ball_spec_for(T), [&](const UnimodularMatrix& g) {
        const double val = phi(apply(g, v));
        if (val != 0.0) straight.add(val);
    });
    const double serial = straight.value() / T;
    EXPECT_NEAR(merged.value, serial, 1e-10 * (1.0 + std::abs(serial)));
}

TEST(OrbitStatistic, ReferenceRegressionBaseline) {
    // Frozen at the first run of this configuration.
    TestFunction phi;
    phi.radial = BumpProfile{1.0, 10.0, 1.0};
    phi.angular = BumpProfile{0.3, 1.2, 0.15};
    const auto stat = orbit_statistic(Vec2R{1.0, kPi / 2.0}, 1000.0, phi);
    EXPECT_DOUBLE_EQ(stat.value, 3.9177099464673786);
    EXPECT_EQ(stat.sample_count, 5269u);
}

TEST(RatioTest, IdenticalAndScaledFunctions) {
    const Vec2R v{1.0, kPi / 2.0};
    const TestFunction phi = reference_bump();
    const auto same = ratio_test(v, 100.0, phi, phi);
    EXPECT_DOUBLE_EQ(same.rel_err, 0.0);

    TestFunction tripled = phi;
    tripled.scale = 3.0;
    const auto scaled = ratio_test(v, 100.0, tripled, phi);
    EXPECT_NEAR(scaled.lhs_ratio, 3.0, 1e-12);
    EXPECT_NEAR(scaled.rhs_ratio, 3.0, 1e-12);
    EXPECT_NEAR(scaled.rel_err, 0.0, 1e-12);
}

TEST(RatioTest, ThrowsWhenReferenceMissesOrbit) {
    TestFunction ghost = reference_bump();
    ghost.radial = BumpProfile{1e5, 2e5, 10.0};
    EXPECT_THROW(ratio_test(Vec2R{1.0, kPhi}, 10.0, reference_bump(), ghost),
                 std::domain_error);
}

TEST(ConstantEstimate, ConsistentAcrossTestFunctions) {
    const Vec2R v{1.0, kPi / 2.0};
    TestFunction phi1 = reference_bump();
    phi1.radial = BumpProfile{1.0, 10.0, 0.5};
    TestFunction phi2 = phi1;
    phi2.angular = BumpProfile{kPi, 3.0 * kPi / 2.0, 0.1};
    const double c1 = constant_estimate(v, 300.0, phi1, 1, 2000.0);
    const double c2 = constant_estimate(v, 300.0, phi2, 1, 2000.0);
    EXPECT_NEAR(c1 / c2, 1.0, 0.25);
}

TEST(AnnulusCount, BasicProperties) {
    const Vec2R v{1.0, kPi / 2.0};
    EXPECT_EQ(annulus_count(v, 20.0, Annulus{1e6, 2e6}), 0u);
    const auto inner = annulus_count(v, 20.0, Annulus{2.0, 5.0});
    const auto outer = annulus_count(v, 20.0, Annulus{1.0, 8.0});
    EXPECT_LE(inner, outer);
    EXPECT_GT(outer, 0u);
    EXPECT_THROW(annulus_count(v, 20.0, Annulus{3.0, 2.0}), std::domain_error);
    EXPECT_THROW(annulus_count(v, 5000.0, Annulus{1.0, 2.0}), GuardError);
}

TEST(AnnulusCount, WorkerInvariance) {
    const Vec2R v{1.0, kPhi};
    EXPECT_EQ(annulus_count(v, 50.0, Annulus{1.0, 10.0}, 1),
              annulus_count(v, 50.0, Annulus{1.0, 10.0}, 4));
}
