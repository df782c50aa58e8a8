#include "sl3/error.hpp"
#include "sl3/rational.hpp"

#include <gtest/gtest.h>

using namespace sl3;

TEST(Rational, PrintsReducedFractions) {
    EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
    EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesSignsAndSlashes) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_EQ(parse_rational("+2/4"), Rational(1, 2));
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5"}) EXPECT_THROW(parse_rational(bad), Error) << bad;
}

TEST(Rational, RoundTrip) {
    for (int p = -12; p <= 12; ++p)
        for (int q = 1; q <= 7; ++q) EXPECT_EQ(parse_rational(to_string(Rational(p, q))), Rational(p, q));
}

TEST(Rational, RankOfSmallMatrices) {
    EXPECT_EQ(rank({}), 0u);
    EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(rank({{Rational(1, 2), 1, 0}, {0, 1, Rational(1, 3)}, {Rational(1, 2), 2, Rational(1, 3)}}), 2u);
    EXPECT_EQ(rank({{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
}

TEST(Rational, Helpers) {
    EXPECT_EQ(positive_part(Rational(-3)), 0);
    EXPECT_EQ(positive_part(Rational(5, 2)), Rational(5, 2));
    EXPECT_EQ(sign(Rational(-1, 9)), -1);
    EXPECT_EQ(rmax(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
    EXPECT_EQ(rmin(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
}
