#include "support.hpp"

#include "umbral/series.hpp"
#include "umbral/series_parse.hpp"

#include <gtest/gtest.h>

using namespace umbral;
using umbral::testing::random_nonzero_rational;
using umbral::testing::random_rational;

constexpr int kIterations = 60;
constexpr std::size_t kOrder = 10;

namespace {

Series random_series(std::size_t order, bool zero_constant = false) {
    Series s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = Poly(random_rational());
    if (zero_constant) s[0] = Poly();
    return s;
}

Series one(std::size_t order) { return Series::constant(Poly(1), order); }

Rational inv_factorial(std::size_t k) { return Rational(Integer(1), factorial(k)); }

}  // namespace

TEST(Series, TextForm) {
    EXPECT_EQ(parse_series("exp(z)-1", 3).str(), "z + 1/2*z^2 + 1/6*z^3 + O(z^4)");
    EXPECT_EQ(parse_series("1-t", 2, SeriesVar::D).str(), "1 - D + O(D^3)");
    EXPECT_EQ(Series(2).str(), "0 + O(z^3)");
}

TEST(Series, ExpMatchesFactorials) {
    Series e = exp(Series::identity(kOrder));
    for (std::size_t k = 0; k <= kOrder; ++k) EXPECT_EQ(e[k], Poly(inv_factorial(k)));
}

TEST(Series, LogOfOnePlusZ) {
    Series l = log(one(kOrder) + Series::identity(kOrder));
    EXPECT_TRUE(l[0].is_zero());
    for (std::size_t k = 1; k <= kOrder; ++k)
        EXPECT_EQ(l[k], Poly(Rational(k % 2 ? 1 : -1, static_cast<long>(k))));
}

TEST(Series, ExpAndLogAreInverse) {
    for (int i = 0; i < kIterations; ++i) {
        Series f = random_series(kOrder, true);
        EXPECT_EQ(log(exp(f)), f);
        Series g = random_series(kOrder);
        g[0] = Poly(1);
        EXPECT_EQ(exp(log(g)), g);
    }
}

TEST(Series, ReciprocalTimesSeriesIsOne) {
    for (int i = 0; i < kIterations; ++i) {
        Series f = random_series(kOrder);
        f[0] = Poly(random_nonzero_rational());
        EXPECT_EQ(f * reciprocal(f), one(kOrder));
    }
    Series bad = random_series(kOrder, true);
    EXPECT_THROW(reciprocal(bad), std::domain_error);
}

TEST(Series, ExpTurnsSumsIntoProducts) {
    for (int i = 0; i < kIterations; ++i) {
        Series f = random_series(kOrder, true), g = random_series(kOrder, true);
        EXPECT_EQ(exp(f + g), exp(f) * exp(g));
    }
}

TEST(Series, CompositionalInverseBothSides) {
    for (int i = 0; i < kIterations; ++i) {
        Series f = random_series(kOrder, true);
        f[1] = Poly(random_nonzero_rational());
        DeltaSeries h = comp_inverse(DeltaSeries(f));
        EXPECT_EQ(compose(f, h.series()), Series::identity(kOrder));
        EXPECT_EQ(compose(h.series(), f), Series::identity(kOrder));
    }
}

TEST(Series, KnownInverses) {
    DeltaSeries f(parse_series("exp(z)-1", kOrder));
    EXPECT_EQ(comp_inverse(f).series(), parse_series("log(1+z)", kOrder));
}

TEST(Series, CompositionIsAssociative) {
    for (int i = 0; i < 20; ++i) {
        Series f = random_series(8), g = random_series(8, true), h = random_series(8, true);
        EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    }
}

TEST(Series, DerivativeLowersOrder) {
    Series e = exp(Series::identity(kOrder));
    Series d = e.derivative();
    EXPECT_EQ(d.order(), kOrder - 1);
    EXPECT_EQ(d, e.truncate(kOrder - 1));
}

TEST(Series, TruncationCannotExtend) {
    Series s(3);
    EXPECT_THROW(s.truncate(4), std::out_of_range);
    EXPECT_EQ((Series(3) + Series(5)).order(), 3u);
}

TEST(Series, DeltaSeriesValidation) {
    EXPECT_THROW(DeltaSeries(parse_series("1+z", 3)), std::invalid_argument);
    EXPECT_THROW(DeltaSeries(parse_series("z^2", 3)), std::invalid_argument);
    EXPECT_THROW(DeltaSeries(Series(0)), std::invalid_argument);
    EXPECT_THROW(DeltaSeries(parse_series("c*z", 3)), std::invalid_argument);
    EXPECT_NO_THROW(DeltaSeries(parse_series("2*z+c*z^2", 3)));
}

TEST(Series, ApplyOperator) {
    Poly x3 = X().pow(3);
    EXPECT_EQ(apply_operator_series(Series::identity(4, SeriesVar::D), x3), X().pow(2) * 3);
    // e^D shifts x by 1.
    Poly shifted = apply_operator_series(exp(Series::identity(4, SeriesVar::D)), x3);
    EXPECT_EQ(shifted, (X() + 1).pow(3));
    EXPECT_THROW(apply_operator_series(Series::identity(2, SeriesVar::D), x3), std::out_of_range);
    EXPECT_THROW(apply_operator_series(parse_series("x*t", 4, SeriesVar::D), x3), std::invalid_argument);
}

TEST(Series, ParserHandlesDivisionAndPowers) {
    Series s = parse_series("(exp(z)-1)/z", 4);
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(s[k], Poly(inv_factorial(k + 1)));
    EXPECT_EQ(parse_series("(1-z)^-1", 5), parse_series("1+z+z^2+z^3+z^4+z^5", 5));
    EXPECT_THROW(parse_series("1/z", 3), std::invalid_argument);
    EXPECT_THROW(parse_series("log(z)", 3), std::invalid_argument);
    EXPECT_THROW(parse_series("exp(1)", 3), std::invalid_argument);
    EXPECT_THROW(parse_series("(z", 3), std::invalid_argument);
}
