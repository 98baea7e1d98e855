#include "latgaps/rational_geometry.hpp"

#include "latgaps/ball.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace latgaps;

namespace {

std::mt19937_64 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937_64(seq);
}

Vec2Q random_rational_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-10'000, 10'000);
    std::uniform_int_distribution<std::int64_t> den(1, 200);
    Vec2Q v{Rational(BigInt(num(rng)), BigInt(den(rng))),
            Rational(BigInt(num(rng)), BigInt(den(rng)))};
    if (v.is_zero()) v.x = Rational(1);
    return v;
}

std::pair<std::int64_t, std::int64_t> random_coprime(std::mt19937_64& rng, std::int64_t mag) {
    std::uniform_int_distribution<std::int64_t> dist(-mag, mag);
    for (;;) {
        const std::int64_t p = dist(rng), q = dist(rng);
        if ((p | q) == 0) continue;
        if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) == 1) return {p, q};
    }
}

Rational random_positive_rational(std::mt19937_64& rng, std::int64_t cap) {
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    const std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(1, cap * d);
    return Rational(BigInt(num(rng)), BigInt(d));
}

}  // namespace

TEST(PrimitiveDecompose, Examples) {
    const auto d1 = primitive_decompose(Vec2Q{Rational(1, 2), Rational(3, 2)});
    EXPECT_EQ(d1.t, Rational(1, 2));
    EXPECT_EQ(d1.p, 1);
    EXPECT_EQ(d1.q, 3);

    const auto d2 = primitive_decompose(Vec2Q{Rational(-2), Rational(4)});
    EXPECT_EQ(d2.t, Rational(2));
    EXPECT_EQ(d2.p, -1);
    EXPECT_EQ(d2.q, 2);

    const auto d3 = primitive_decompose(Vec2Q{Rational(0), Rational(-3)});
    EXPECT_EQ(d3.t, Rational(3));
    EXPECT_EQ(d3.p, 0);
    EXPECT_EQ(d3.q, -1);

    EXPECT_THROW(primitive_decompose(Vec2Q{Rational(0), Rational(0)}), std::domain_error);
}

TEST(PrimitiveDecompose, RoundTripsAndNormalizes) {
    auto rng = rng_for("decompose-roundtrip");
    for (int i = 0; i < 500; ++i) {
        const Vec2Q v = random_rational_point(rng);
        const auto dec = primitive_decompose(v);
        EXPECT_TRUE(dec.t.is_positive());
        EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(dec.p),
                                             boost::multiprecision::abs(dec.q)),
                  1);
        const Vec2Q back{dec.t * Rational(dec.p), dec.t * Rational(dec.q)};
        ASSERT_EQ(back, v);
    }
}

TEST(Period, Examples) {
    EXPECT_EQ(period(Vec2Q{Rational(1), Rational(2)}), Rational(1));
    EXPECT_EQ(period(Vec2Q{Rational(1, 2), Rational(3, 2)}), Rational(4));
    EXPECT_EQ(period(Vec2Q{Rational(3), Rational(0)}), Rational(1, 9));
}

TEST(HeightSq, Examples) {
    EXPECT_EQ(height_sq(Vec2Q{Rational(1), Rational(2)}), Rational(5));
    EXPECT_EQ(height_sq(Vec2Q{Rational(-2), Rational(4)}), Rational(5));
    EXPECT_EQ(height_sq(Vec2Q{Rational(0), Rational(-3)}), Rational(1));
}

TEST(TautologicalFormula, ExamplesAndRandom) {
    EXPECT_TRUE(tautological_identity_holds(Vec2Q{Rational(1), Rational(2)}));
    EXPECT_TRUE(tautological_identity_holds(Vec2Q{Rational(1, 2), Rational(3, 2)}));
    EXPECT_TRUE(tautological_identity_holds(Vec2Q{Rational(-2), Rational(4)}));
    auto rng = rng_for("tautological");
    for (int i = 0; i < 1000; ++i) {
        ASSERT_TRUE(tautological_identity_holds(random_rational_point(rng)));
    }
}

TEST(Section, Examples) {
    EXPECT_EQ(section(Vec2Q{Rational(1), Rational(0)}), Mat2Q::identity());
    const Mat2Q s1 = section(Vec2Q{Rational(2), Rational(3)});
    EXPECT_EQ(s1, (Mat2Q{Rational(2), Rational(0), Rational(3), Rational(1, 2)}));
    const Mat2Q s2 = section(Vec2Q{Rational(1, 2), Rational(1)});
    EXPECT_EQ(s2, (Mat2Q{Rational(1, 2), Rational(0), Rational(1), Rational(2)}));
    EXPECT_EQ(s1.det(), Rational(1));
    EXPECT_EQ(s2.det(), Rational(1));
    EXPECT_THROW(section(Vec2Q{Rational(0), Rational(5)}), std::domain_error);
    EXPECT_NO_THROW(section_swapped(Vec2Q{Rational(0), Rational(5)}));
}

TEST(Horocycle, OneParameterGroup) {
    EXPECT_EQ(horocycle(Rational(0)), Mat2Q::identity());
    EXPECT_EQ(horocycle(Rational(1)) * horocycle(Rational(2)), horocycle(Rational(3)));
    EXPECT_EQ(horocycle(Rational(1, 4)),
              (Mat2Q{Rational(1), Rational(1, 4), Rational(0), Rational(1)}));
}

TEST(PeriodWitness, Examples) {
    EXPECT_EQ(period_witness(1, 0).mat(), (Mat2Z{1, 1, 0, 1}));
    const auto g = period_witness(2, 3);
    EXPECT_EQ(g.mat(), (Mat2Z{-5, 4, -9, 7}));
    EXPECT_EQ(g.mat().det(), Int128{1});
    EXPECT_EQ(period_witness(1, 1).mat(), (Mat2Z{0, 1, -1, 2}));
    EXPECT_THROW(period_witness(2, 4), std::domain_error);
    EXPECT_THROW(period_witness(0, 2), std::domain_error);
}

TEST(PeriodWitness, ConjugationIdentityHoldsExactly) {
    auto rng = rng_for("witness-identity");
    for (int i = 0; i < 300; ++i) {
        const auto [p, q] = random_coprime(rng, 10'000);
        const Rational t = random_positive_rational(rng, 1000);
        ASSERT_TRUE(period_witness_identity_holds(p, q, t)) << p << " " << q << " t=" << t;
    }
}

TEST(PeriodWitness, VerticalPointsUseTheSwappedSection) {
    for (int q : {1, -1}) {
        EXPECT_TRUE(period_witness_identity_holds(0, q, Rational(7, 5)));
        EXPECT_TRUE(period_witness_identity_holds(0, q, Rational(3)));
    }
}

TEST(Period, InvariantUnderTheGroup) {
    const auto ball = enumerate_ball(BallSpec::from_radius(Rational(20)));
    auto rng = rng_for("period-invariance");
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const Vec2Q v = random_rational_point(rng);
        const UnimodularMatrix& g = ball[pick(rng)];
        ASSERT_EQ(period(apply(g, v)), period(v));
    }
}

TEST(PrimitiveSet, MembershipCoherence) {
    auto rng = rng_for("primitive-membership");
    for (int i = 0; i < 300; ++i) {
        const Vec2Q v = random_rational_point(rng);
        ASSERT_TRUE(primitive_set_contains(period(v), v));
    }
}

TEST(PrimitiveSet, Examples) {
    // P(1) is exactly the coprime integer pairs.
    EXPECT_TRUE(primitive_set_contains(Rational(1), Vec2Q{Rational(1), Rational(2)}));
    EXPECT_FALSE(primitive_set_contains(Rational(1), Vec2Q{Rational(2), Rational(4)}));
    EXPECT_FALSE(primitive_set_contains(Rational(1), Vec2Q{Rational(1, 2), Rational(1)}));
    // P(4) = (1/2) Z^Z.
    EXPECT_TRUE(primitive_set_contains(Rational(4), Vec2Q{Rational(1, 2), Rational(3, 2)}));
    // rho not a rational square has no rational points.
    EXPECT_FALSE(primitive_set_contains(Rational(2), Vec2Q{Rational(1), Rational(1)}));
    EXPECT_THROW(primitive_set_contains(Rational(-1), Vec2Q{Rational(1), Rational(0)}),
                 std::domain_error);
}
