#include "latgaps/numeric.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace latgaps;

namespace {

std::mt19937_64 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937_64(seq);
}

Rational random_rational(std::mt19937_64& rng, std::int64_t num_mag, std::int64_t den_max) {
    std::uniform_int_distribution<std::int64_t> num(-num_mag, num_mag);
    std::uniform_int_distribution<std::int64_t> den(1, den_max);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST(CheckedInt, DetectsOverflow) {
    const Int128 big = (Int128{1} << 126);
    EXPECT_THROW(checked_add(big, big), OverflowError);
    EXPECT_THROW(checked_mul(big, 4), OverflowError);
    EXPECT_EQ(checked_mul(Int128{10'000'000}, Int128{10'000'000}), Int128{100'000'000'000'000});
    // products of four entries of magnitude 1e7 stay representable
    Int128 four = 1;
    for (int i = 0; i < 4; ++i) four = checked_mul(four, Int128{10'000'000});
    EXPECT_EQ(to_string(four), "10000000000000000000000000000");
}

TEST(CheckedInt, Int128RoundTrip) {
    for (Int128 x : {Int128{0}, Int128{-1}, Int128{42}, (Int128{1} << 100)}) {
        EXPECT_EQ(to_int128(to_bigint(x)), x);
    }
    EXPECT_THROW(to_int128(BigInt(1) << 127), OverflowError);
}

TEST(Rational, CanonicalForm) {
    auto rng = rng_for("rational-canonical");
    std::uniform_int_distribution<std::int64_t> k_dist(1, 1000);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < 1000; ++i) {
        const Rational r = random_rational(rng, 1'000'000, 1000);
        std::int64_t k = k_dist(rng);
        if (sign(rng)) k = -k;
        const Rational scaled(r.num() * k, r.den() * k);
        EXPECT_EQ(scaled.num(), r.num());
        EXPECT_EQ(scaled.den(), r.den());
        EXPECT_TRUE(r.den() > 0);
        EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(r.num()), r.den()), 1);
    }
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, ParseAndConvert) {
    EXPECT_EQ(Rational::parse("1.96"), Rational(49, 25));
    EXPECT_EQ(Rational::parse("-4/9"), Rational(-4, 9));
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
    EXPECT_THROW(Rational::parse("1.2.3"), std::domain_error);
    EXPECT_THROW(Rational::parse(""), std::domain_error);
    EXPECT_THROW(Rational::parse("x"), std::domain_error);

    EXPECT_EQ(Rational::from_double(0.5), Rational(1, 2));
    EXPECT_EQ(Rational::from_double(-2.0), Rational(-2));
    EXPECT_DOUBLE_EQ(Rational::from_double(0.1).to_double(), 0.1);
    EXPECT_THROW(Rational::from_double(std::numeric_limits<double>::infinity()),
                 std::domain_error);
}

TEST(Rational, Arithmetic) {
    const Rational half(1, 2), third(1, 3);
    EXPECT_EQ(half + third, Rational(5, 6));
    EXPECT_EQ(half * third, Rational(1, 6));
    EXPECT_EQ(half - third, Rational(1, 6));
    EXPECT_EQ(half / third, Rational(3, 2));
    EXPECT_EQ(half.reciprocal(), Rational(2));
    EXPECT_THROW(Rational(0).reciprocal(), std::domain_error);
    EXPECT_THROW(half / Rational(0), std::domain_error);
    EXPECT_LT(third, half);
}

TEST(Mat2Z, MultiplicationExamples) {
    const Mat2Z id = Mat2Z::identity();
    EXPECT_EQ(id * id, id);
    const Mat2Z upper{1, 1, 0, 1}, lower{1, 0, 1, 1};
    EXPECT_EQ(upper * lower, (Mat2Z{2, 1, 1, 1}));
    const Mat2Z rot{0, 1, -1, 0};
    EXPECT_EQ(rot * rot, -id);
}

TEST(Mat2Z, DeterminantIsMultiplicative) {
    auto rng = rng_for("det-multiplicative");
    std::uniform_int_distribution<std::int64_t> entry(-1000, 1000);
    for (int i = 0; i < 10'000; ++i) {
        const Mat2Z x{entry(rng), entry(rng), entry(rng), entry(rng)};
        const Mat2Z y{entry(rng), entry(rng), entry(rng), entry(rng)};
        ASSERT_EQ((x * y).det(), checked_mul(x.det(), y.det()));
    }
}

TEST(Mat2Z, ApplyExamples) {
    const Vec2Q v{Rational(1), Rational(3, 2)};
    EXPECT_EQ(apply(Mat2Z::identity(), v), v);
    EXPECT_EQ(apply(Mat2Z{1, 1, 0, 1}, (Vec2Q{Rational(1), Rational(2)})),
              (Vec2Q{Rational(3), Rational(2)}));
    const Vec2Q w{Rational(7, 3), Rational(-2, 5)};
    EXPECT_EQ(apply(Mat2Z{0, -1, 1, 0}, w), (Vec2Q{-w.y, w.x}));
}

TEST(Mat2Z, ApplyRespectsComposition) {
    auto rng = rng_for("apply-composition");
    std::uniform_int_distribution<std::int64_t> entry(-50, 50);
    for (int i = 0; i < 500; ++i) {
        const Mat2Z g{entry(rng), entry(rng), entry(rng), entry(rng)};
        const Mat2Z h{entry(rng), entry(rng), entry(rng), entry(rng)};
        const Vec2Q v{random_rational(rng, 1000, 50), random_rational(rng, 1000, 50)};
        ASSERT_EQ(apply(g * h, v), apply(g, apply(h, v)));
    }
}

TEST(Mat2Z, FrobeniusNormSq) {
    EXPECT_EQ(frobenius_norm_sq(Mat2Z::identity()), Int128{2});
    EXPECT_EQ(frobenius_norm_sq(Mat2Z{1, 1, 0, 1}), Int128{3});
    for (std::int64_t t : {2, 5, 100, 9999}) {
        EXPECT_EQ(frobenius_norm_sq(Mat2Z{1, t - 1, 0, 1}), Int128{2 + (t - 1) * (t - 1)});
    }
}

TEST(UnimodularMatrix, ChecksDeterminant) {
    EXPECT_NO_THROW(UnimodularMatrix(1, 1, 0, 1));
    EXPECT_THROW(UnimodularMatrix(1, 0, 0, -1), std::domain_error);
    EXPECT_THROW(UnimodularMatrix(2, 0, 0, 2), std::domain_error);
    const UnimodularMatrix g(3, 2, 4, 3);
    EXPECT_EQ(g * g.inverse(), UnimodularMatrix::identity());
    EXPECT_EQ(frobenius_norm_sq(-g), frobenius_norm_sq(g));
}

TEST(Mat2Q, SectionStyleAlgebra) {
    const Mat2Q m{Rational(2), Rational(0), Rational(3), Rational(1, 2)};
    EXPECT_EQ(m.det(), Rational(1));
    EXPECT_EQ(m * Mat2Q::identity(), m);
    const Vec2Q v{Rational(1), Rational(1)};
    EXPECT_EQ(apply(m, v), (Vec2Q{Rational(2), Rational(7, 2)}));
}
