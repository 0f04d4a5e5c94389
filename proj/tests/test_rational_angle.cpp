#include <gtest/gtest.h>

#include <numeric>

#include "scae/rational_angle.hpp"

using scae::RationalAngle;

TEST(RationalAngle, NormalizesIntoUnitInterval)
{
    EXPECT_EQ(RationalAngle(2, 4), RationalAngle(1, 2));
    EXPECT_EQ(RationalAngle(-1, 4), RationalAngle(3, 4));
    EXPECT_EQ(RationalAngle(5, -4), RationalAngle(3, 4));
    EXPECT_EQ(RationalAngle(7, 7), RationalAngle::zero());
    EXPECT_EQ(RationalAngle(3, 4).den(), 4);
    EXPECT_EQ(RationalAngle(6, 4).num(), 1);
}

TEST(RationalAngle, ZeroDenominatorIsInputError)
{
    EXPECT_THROW(RationalAngle(1, 0), scae::InputError);
}

TEST(RationalAngle, OrderIsReducedDenominator)
{
    EXPECT_EQ(RationalAngle(3, 4).order(), 4);
    EXPECT_EQ(RationalAngle(2, 6).order(), 3);
    EXPECT_EQ(RationalAngle::zero().order(), 1);
    EXPECT_TRUE(scae::is_primitive_root(RationalAngle(5, 6), 6));
    EXPECT_FALSE(scae::is_primitive_root(RationalAngle(2, 6), 6));
}

TEST(RationalAngle, SymbolsAndParsing)
{
    EXPECT_EQ(scae::parse_angle("i"), RationalAngle(1, 4));
    EXPECT_EQ(scae::parse_angle("-i"), RationalAngle(3, 4));
    EXPECT_EQ(scae::parse_angle("-1"), RationalAngle(1, 2));
    EXPECT_EQ(scae::parse_angle("1"), RationalAngle::zero());
    EXPECT_EQ(scae::parse_angle("2/3"), RationalAngle(2, 3));
    EXPECT_EQ(scae::parse_angle("-1/3"), RationalAngle(2, 3));
    EXPECT_THROW(scae::parse_angle("x"), scae::InputError);
    EXPECT_THROW(scae::parse_angle("1/0"), scae::InputError);
    EXPECT_THROW(scae::parse_angle("1/"), scae::InputError);
    EXPECT_EQ(RationalAngle(1, 4).symbol(), "i");
    EXPECT_EQ(RationalAngle(3, 4).symbol(), "-i");
    EXPECT_EQ(RationalAngle(1, 2).symbol(), "-1");
    EXPECT_EQ(RationalAngle::zero().symbol(), "1");
    EXPECT_EQ(RationalAngle(1, 3).symbol(), "exp(2 pi i 1/3)");
    EXPECT_EQ(RationalAngle(5, 6).str(), "5/6");
}

TEST(RationalAngle, ProductAndPowerMatchExponentArithmetic)
{
    EXPECT_EQ(RationalAngle(1, 4) + RationalAngle(1, 4), RationalAngle(1, 2));
    EXPECT_EQ(RationalAngle(1, 3) + RationalAngle(1, 2), RationalAngle(5, 6));
    EXPECT_EQ(3 * RationalAngle(1, 4), RationalAngle(3, 4));
    EXPECT_EQ(-1 * RationalAngle(1, 4), RationalAngle(3, 4));
    EXPECT_EQ(4 * RationalAngle(1, 4), RationalAngle::zero());
}

// Roots of unity of order dividing 24 form the cyclic group Z/24.
TEST(RationalAngle, GroupAxiomsExhaustive)
{
    std::vector<RationalAngle> all;
    for (std::int64_t den = 1; den <= 24; ++den)
        for (std::int64_t num = 0; num < den; ++num)
            if (std::gcd(num, den) == 1) all.emplace_back(num, den);
    for (const auto& a : all) {
        EXPECT_EQ(a + RationalAngle::zero(), a);
        EXPECT_TRUE((a + (-a)).is_zero());
        EXPECT_TRUE((a.order() * a).is_zero());
        for (std::int64_t k = 1; k < a.order(); ++k) EXPECT_FALSE((k * a).is_zero());
        for (const auto& b : all) {
            EXPECT_EQ(a + b, b + a);
            // lcm of orders bounds the order of the product
            EXPECT_EQ(std::lcm(a.order(), b.order()) % (a + b).order(), 0);
        }
    }
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 5)
            for (std::size_t k = 0; k < all.size(); k += 3)
                EXPECT_EQ((all[i] + all[j]) + all[k], all[i] + (all[j] + all[k]));
}

TEST(RationalAngle, PowerIsHomomorphism)
{
    for (std::int64_t den = 1; den <= 24; ++den)
        for (std::int64_t num = 0; num < den; ++num) {
            const RationalAngle a(num, den);
            for (std::int64_t m = -30; m <= 30; m += 7)
                for (std::int64_t n = -30; n <= 30; n += 11) {
                    EXPECT_EQ((m + n) * a, m * a + n * a);
                    EXPECT_EQ((m * n) * a, m * (n * a));
                }
        }
}

TEST(RationalAngle, ComparisonIsNumeric)
{
    EXPECT_LT(RationalAngle(1, 4), RationalAngle(1, 3));
    EXPECT_LT(RationalAngle::zero(), RationalAngle(1, 24));
    EXPECT_GT(RationalAngle(5, 6), RationalAngle(3, 4));
}
