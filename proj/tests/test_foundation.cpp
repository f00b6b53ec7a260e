#include "support.hpp"

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace umbral;
using umbral::testing::random_poly;
using umbral::testing::random_rational;

constexpr int kIterations = 200;

namespace {

// Reduced fraction from machine integers, as an independent reference.
struct SmallFraction {
    long long num;
    long long den;
    SmallFraction(long long n, long long d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n, d);
        num = n / g;
        den = d / g;
    }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace

TEST(Rational, ParsesAndPrintsReducedForm) {
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-3").str(), "-3");
    EXPECT_EQ(Rational::parse("4/-8").str(), "-1/2");
    EXPECT_EQ(Rational::parse("0/5").str(), "0");
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, ArithmeticMatchesMachineFractions) {
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int i = 0; i < kIterations; ++i) {
        long long a = num(umbral::testing::rng()), b = den(umbral::testing::rng());
        long long c = num(umbral::testing::rng()), d = den(umbral::testing::rng());
        Rational p(a, b), q(c, d);
        EXPECT_EQ((p + q).str(), SmallFraction(a * d + c * b, b * d).str());
        EXPECT_EQ((p - q).str(), SmallFraction(a * d - c * b, b * d).str());
        EXPECT_EQ((p * q).str(), SmallFraction(a * c, b * d).str());
        if (c != 0) EXPECT_EQ((p / q).str(), SmallFraction(a * d, b * c).str());
    }
}

TEST(Rational, BinomialCoefficients) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(-2, 3), -4);  // (-2)(-3)(-4)/3!
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(factorial(10), 3628800);
}

TEST(Rational, PowersAndPredicates) {
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_EQ(Rational(-3, 7).sign(), -1);
}

TEST(Var, ParsesSubscripts) {
    Var v = Var::parse("a_12");
    EXPECT_EQ(v.stem, "a");
    EXPECT_EQ(v.index, 12u);
    EXPECT_EQ(v.name(), "a_12");
    EXPECT_EQ(Var::parse("x").index, 0u);
    EXPECT_EQ(Var::parse("b_x").stem, "b_x");
}

TEST(Poly, CanonicalText) {
    Poly x = X();
    EXPECT_EQ(((x + 1) * (x + 2)).str(), "x^2+3x+2");
    EXPECT_EQ((x * Rational(1, 2) - 1).str(), "1/2*x-1");
    EXPECT_EQ((-x).str(), "-x");
    EXPECT_EQ(Poly().str(), "0");
    Poly a1 = Poly::variable(Var("a", 1)), a2 = Poly::variable(Var("a", 2));
    EXPECT_EQ((a2 * 2 + a1 * a1 * 2).str(), "2a_1^2+2a_2");
}

TEST(Poly, RingAxioms) {
    std::vector<Var> vs{vars::x(), vars::y(), Var("a", 1)};
    for (int i = 0; i < kIterations; ++i) {
        Poly p = random_poly(vs), q = random_poly(vs), r = random_poly(vs);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST(Poly, EvaluationIsARingHomomorphism) {
    std::vector<Var> vs{vars::x(), vars::y()};
    for (int i = 0; i < kIterations; ++i) {
        Poly p = random_poly(vs), q = random_poly(vs);
        std::map<Var, Poly> at{{vars::x(), Poly(random_rational())}, {vars::y(), Poly(random_rational())}};
        EXPECT_EQ((p * q).substitute(at).as_rational(), p.substitute(at).as_rational() * q.substitute(at).as_rational());
        EXPECT_EQ((p + q).substitute(at).as_rational(), p.substitute(at).as_rational() + q.substitute(at).as_rational());
    }
}

TEST(Poly, DerivativeObeysLeibniz) {
    std::vector<Var> vs{vars::x(), vars::y()};
    for (int i = 0; i < kIterations; ++i) {
        Poly p = random_poly(vs), q = random_poly(vs);
        EXPECT_EQ((p * q).derivative(vars::x()), p.derivative(vars::x()) * q + p * q.derivative(vars::x()));
    }
}

TEST(Poly, SubstitutionIsSimultaneous) {
    Poly x = X(), y = Poly::variable(vars::y());
    Poly p = x * x + y;
    EXPECT_EQ(p.substitute({{vars::x(), y}, {vars::y(), x}}), y * y + x);
    std::vector<Var> required{vars::x(), vars::y()};
    EXPECT_THROW(p.substitute({{vars::x(), y}}, required), std::invalid_argument);
}

TEST(Poly, DegreesAndCoefficients) {
    Poly x = X(), y = Poly::variable(vars::y());
    Poly p = x.pow(3) * y + x * y.pow(4) * 2 + 5;
    EXPECT_EQ(p.total_degree(), 5);
    EXPECT_EQ(p.degree(vars::x()), 3);
    EXPECT_EQ(p.degree(vars::y()), 4);
    EXPECT_EQ(p.coefficient(vars::x(), 1), y.pow(4) * 2);
    EXPECT_EQ(Poly().degree(vars::x()), -1);
    EXPECT_THROW(p.as_rational(), std::invalid_argument);
    EXPECT_EQ(p.evaluate(vars::x(), 0), Poly(5));
}
