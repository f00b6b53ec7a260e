#include "support.hpp"

#include "umbral/multiplicative.hpp"

#include <gtest/gtest.h>

using namespace umbral;
using umbral::testing::random_rational;

constexpr int kIterations = 10;
constexpr std::size_t kN = 8;

namespace {

using Coeffs = std::vector<Rational>;

Poly a(std::uint32_t i) { return Poly::variable(Var("a", i)); }

// Truncated products and powers of exponential generating functions held
// as plain coefficient lists c_k = [z^k].
Coeffs multiply(const Coeffs& f, const Coeffs& g) {
    Coeffs out(f.size(), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; i + j < f.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
    return out;
}

Coeffs egf_of(const std::vector<Rational>& moments) {
    Coeffs c;
    for (std::size_t k = 0; k < moments.size(); ++k) c.push_back(moments[k] / Rational(factorial(k)));
    return c;
}

// prod_i A(c_i z)^{i+1}, the expected EGF of the general construction at g = 1.
Coeffs expected_general(const std::vector<Rational>& c, const std::vector<Rational>& moments) {
    Coeffs base = egf_of(moments);
    Coeffs out(base.size(), Rational(0));
    out[0] = Rational(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Coeffs scaled = base;
        for (std::size_t k = 0; k < scaled.size(); ++k) scaled[k] = scaled[k] * c[i].pow(static_cast<long>(k));
        for (std::size_t r = 0; r <= i; ++r) out = multiply(out, scaled);
    }
    return out;
}

Rational at(const Poly& p, const std::vector<Rational>& moments) {
    std::map<Var, Poly> values;
    for (std::uint32_t i = 1; i < moments.size(); ++i) values.emplace(Var("a", i), Poly(moments[i]));
    return p.substitute(values).as_rational();
}

std::vector<Rational> random_moments(std::size_t N) {
    std::vector<Rational> m{Rational(1)};
    for (std::size_t i = 1; i <= N; ++i) m.push_back(random_rational());
    return m;
}

}  // namespace

TEST(KPolynomials, ConstantOneGivesMoments) {
    Alphabet alph;
    UmbraId one = alph.register_umbra("one", MomentSeq::constant(Poly(1)));
    KSeq K = k_polynomials(alph, one, kN);
    for (std::uint32_t m = 1; m <= kN; ++m) EXPECT_EQ(K[m], a(m));
    EXPECT_EQ(K[0], Poly(1));
}

TEST(KPolynomials, UniformLowOrders) {
    Alphabet alph;
    UmbraId u = alph.register_umbra("u", MomentSeq::uniform());
    KSeq K = k_polynomials(alph, u, 3);
    EXPECT_EQ(K[1], a(1) * Rational(1, 2));
    EXPECT_EQ(K[2], a(1) * Rational(1, 12) + a(2) * Rational(1, 4));
    EXPECT_EQ(K[3], a(2) * Rational(1, 8) + a(3) * Rational(1, 8));
}

TEST(KPolynomials, FallingFactorialMoments) {
    // With g = 1 + z the K polynomials are E[(a)_m], the falling factorial moments.
    Alphabet alph;
    UmbraId lin = alph.register_umbra(
        "lin", MomentSeq::closed_form([](std::size_t k) { return Poly(k <= 1 ? 1 : 0); }, "1+z"));
    KSeq K = k_polynomials(alph, lin, 5);
    EXPECT_EQ(K[3], a(3) - a(2) * 3 + a(1) * 2);
}

TEST(KPolynomials, RejectSymbolicRightOperand) {
    Alphabet alph;
    UmbraId g = alph.register_umbra("g", MomentSeq::generic("g"));
    EXPECT_THROW(k_polynomials(alph, g, 3), std::invalid_argument);
}

TEST(Multiplicative, KPolynomialsAreMultiplicative) {
    Alphabet alph;
    std::vector<UmbraId> gs{alph.register_umbra("u", MomentSeq::uniform()),
                            alph.register_umbra("one", MomentSeq::constant(Poly(1))),
                            alph.register_umbra("two", MomentSeq::constant(Poly(2)))};
    for (const UmbraId& g : gs) {
        KSeq K = k_polynomials(alph, g, kN);
        EXPECT_TRUE(is_multiplicative(K, kN)) << g.str();
        EXPECT_TRUE(is_linear_in_each(K));
        EXPECT_TRUE(respects_dependence_bound(K));
    }
}

TEST(Multiplicative, RejectsNonMultiplicative) {
    KSeq K{{Poly(1), a(1), a(2) + Poly(1)}, "a", "ad hoc"};
    EXPECT_FALSE(is_multiplicative(K, 2));
    KSeq bad_start{{Poly(2), a(1)}, "a", "ad hoc"};
    EXPECT_FALSE(is_multiplicative(bad_start, 1));
    KSeq too_short{{Poly(1)}, "a", "ad hoc"};
    EXPECT_FALSE(is_multiplicative(too_short, 3));
}

TEST(GeneralMultiplicative, TwoCopiesExample) {
    Alphabet alph;
    UmbraId one = alph.register_umbra("one", MomentSeq::constant(Poly(1)));
    KSeq K = general_multiplicative({Rational(0), Rational(1)}, alph, one, 3);
    EXPECT_EQ(K[1], a(1) * 2);
    EXPECT_EQ(K[2], a(2) * 2 + a(1).pow(2) * 2);
    EXPECT_THROW(general_multiplicative({}, alph, one, 3), std::invalid_argument);
}

TEST(GeneralMultiplicative, MatchesProductOfScaledEgfs) {
    Alphabet alph;
    UmbraId one = alph.register_umbra("one", MomentSeq::constant(Poly(1)));
    for (int it = 0; it < kIterations; ++it) {
        std::vector<Rational> c{random_rational(), random_rational(), random_rational()};
        KSeq K = general_multiplicative(c, alph, one, 6);
        std::vector<Rational> m = random_moments(6);
        Coeffs expected = expected_general(c, m);
        for (std::size_t k = 0; k <= 6; ++k)
            EXPECT_EQ(at(K[k], m), expected[k] * Rational(factorial(k))) << K.construction << " k = " << k;
    }
}

TEST(GeneralMultiplicative, MultiplicativeHomogeneousAndBounded) {
    Alphabet alph;
    UmbraId one = alph.register_umbra("one", MomentSeq::constant(Poly(1)));
    UmbraId u = alph.register_umbra("u", MomentSeq::uniform());
    for (int it = 0; it < 4; ++it) {
        std::vector<Rational> c{random_rational(), random_rational()};
        KSeq K = general_multiplicative(c, alph, one, kN);
        EXPECT_TRUE(is_multiplicative(K, kN));
        EXPECT_TRUE(is_homogeneous(K));
        EXPECT_TRUE(respects_dependence_bound(K));
        KSeq Ku = general_multiplicative(c, alph, u, 6);
        EXPECT_TRUE(is_multiplicative(Ku, 6));
        EXPECT_TRUE(respects_dependence_bound(Ku));
    }
}

TEST(GeneralMultiplicative, DoesNotTouchCallerAlphabet) {
    Alphabet alph;
    UmbraId one = alph.register_umbra("one", MomentSeq::constant(Poly(1)));
    std::size_t before = alph.size();
    general_multiplicative({Rational(1), Rational(2)}, alph, one, 4);
    EXPECT_EQ(alph.size(), before);
}

TEST(Homogeneity, GradedDegrees) {
    EXPECT_EQ(graded_degree(a(2) * a(3) + a(1), "a"), 5);
    EXPECT_EQ(graded_degree(Poly(), "a"), -1);
    EXPECT_THROW(graded_degree(X(), "a"), std::invalid_argument);
    Alphabet alph;
    UmbraId u = alph.register_umbra("u", MomentSeq::uniform());
    EXPECT_FALSE(is_homogeneous(k_polynomials(alph, u, 3)));
}

TEST(MSequence, OrdinaryCoefficients) {
    Alphabet alph;
    UmbraId one = alph.register_umbra("one", MomentSeq::constant(Poly(1)));
    std::vector<Poly> L = m_sequence(general_multiplicative({Rational(0), Rational(1)}, alph, one, 4));
    EXPECT_EQ(L[2], a(2) * 2 + a(1).pow(2));
    std::vector<Poly> id = m_sequence(k_polynomials(alph, one, 4));
    for (std::uint32_t m = 1; m <= 4; ++m) EXPECT_EQ(id[m], a(m));
    for (int it = 0; it < 4; ++it) {
        std::vector<Rational> c{random_rational(), random_rational(), random_rational()};
        EXPECT_TRUE(is_m_sequence(m_sequence(general_multiplicative(c, alph, one, 6)), 6));
    }
    UmbraId u = alph.register_umbra("u", MomentSeq::uniform());
    EXPECT_THROW(m_sequence(k_polynomials(alph, u, 3)), std::invalid_argument);
}

TEST(MSequence, LiteralDivisionIsNotAnMSequence) {
    // K_m = a_m divided by m! fails the ordinary product identity at m = 2.
    std::vector<Poly> literal{Poly(1), a(1), a(2) * Rational(1, 2)};
    EXPECT_FALSE(is_m_sequence(literal, 2));
}
