#pragma once

// Identity suites run by `umbral verify <suite>`. Each suite checks a family
// of exact identities and reports the first failure.

#include "umbral/dot.hpp"
#include "umbral/multiplicative.hpp"
#include "umbral/oracle.hpp"
#include "umbral/sequences.hpp"
#include "umbral/series_parse.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace umbral::verify {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

using Suite = std::function<std::vector<CheckResult>()>;

namespace detail {

class Checks {
public:
    void expect(bool ok, const std::string& name, const std::string& detail = "") {
        for (auto& r : results_)
            if (r.name == name) {
                if (r.passed && !ok) {
                    r.passed = false;
                    r.detail = detail;
                }
                return;
            }
        results_.push_back({name, ok, ok ? "" : detail});
    }
    void expect(const IdentityCheck& c, const std::string& name) { expect(c.ok, name, c.reason); }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

inline std::vector<Poly> random_moments(std::mt19937& rng, std::size_t count) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Poly> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(Rational(num(rng), den(rng)));
    return out;
}

}  // namespace detail

inline std::vector<CheckResult> bernoulli_suite() {
    detail::Checks c;
    constexpr std::size_t N = 20;
    Alphabet a;
    UmbraId u = a.register_umbra("u", MomentSeq::uniform());
    UmbraId b = inverse_umbra(a, u);
    Series target = reciprocal(parse_series("(exp(z)-1)/z", N));
    for (std::size_t k = 0; k <= N; ++k)
        c.expect(a.moments(b).moment(k) == target.egf_value(k), "inverse of uniform matches reciprocal of (e^z-1)/z",
                 "k = " + std::to_string(k));
    return c.take();
}

inline std::vector<CheckResult> blissard_suite() {
    detail::Checks c;
    for (unsigned m = 1; m <= 4; ++m) {
        BlissardReport r = blissard_example(m, 8);
        c.expect(r.agree(), "three computations of P_n agree", "m = " + std::to_string(m));
    }
    return c.take();
}

inline std::vector<CheckResult> oracle_suite() {
    detail::Checks c;
    for (unsigned m = 0; m <= 8; ++m)
        for (unsigned n = 0; n <= 8; ++n)
            c.expect(oracle::forward_difference_power(m, n) == factorial(m) * oracle::stirling2(m + n, m),
                     "forward difference of powers equals m! S(m+n,m)", "m = " + std::to_string(m) + ", n = " + std::to_string(n));
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned x = 0; x <= 2; ++x) {
            std::vector<unsigned> colors(n, 1);
            for (unsigned j = 1; j < n; ++j) colors[j] = 1 + j % 2;
            oracle::ForestSpec spec{n, x, colors};
            std::vector<Poly> moments;
            for (unsigned j = 1; j < n; ++j) moments.emplace_back(static_cast<long>(colors[j]));
            Alphabet a;
            UmbraId alpha = a.register_umbra("a", moments.empty() ? MomentSeq::epsilon() : MomentSeq::finite(moments));
            Poly abel = abel_sequence(a, alpha, n)[n].evaluate(vars::x(), Rational(static_cast<long>(x)));
            Poly rising = rising_factorial_sequence(a, alpha, n)[n].evaluate(vars::x(), Rational(static_cast<long>(x)));
            std::string where = "n = " + std::to_string(n) + ", x = " + std::to_string(x);
            c.expect(abel == Poly(Rational(oracle::count_colored_forests(spec))), "Abel values count colored forests", where);
            c.expect(rising == Poly(Rational(oracle::count_increasing_colored_forests(spec))),
                     "rising-factorial values count increasing forests", where);
        }
    }
    return c.take();
}

inline std::vector<CheckResult> dot_suite() {
    detail::Checks c;
    constexpr std::size_t N = 8;
    Alphabet a;
    UmbraId alpha = a.register_umbra("al", MomentSeq::generic("a"));
    UmbraId beta = a.register_umbra("be", MomentSeq::generic("b"));
    UmbraId gamma = a.register_umbra("ga", MomentSeq::generic("g"));

    std::vector<Poly> q = dot_coeff_polys(a.moments(gamma), 6);
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned k = 0; k <= 6; ++k)
            c.expect(q[k].evaluate(vars::n(), Rational(static_cast<long>(n))) == dot_int_oracle(a, n, gamma, k),
                     "q_{g,k}(n) matches the multinomial expansion", "n = " + std::to_string(n) + ", k = " + std::to_string(k));

    UmbraId sum_dot = dot(a, UmbralPoly(alpha) + UmbralPoly(beta), UmbralPoly(gamma));
    UmbralPoly split = UmbralPoly(dot(a, UmbralPoly(alpha), UmbralPoly(gamma))) + UmbralPoly(dot(a, UmbralPoly(beta), UmbralPoly(gamma)));
    c.expect(exchangeable_up_to(a, UmbralPoly(sum_dot), split, N), "(p+q).r matches p.r + q.r");

    Rational s(3, 2);
    UmbraId right_sum = dot(a, UmbralPoly(s), UmbralPoly(beta) + UmbralPoly(gamma));
    UmbralPoly right_split = UmbralPoly(dot(a, UmbralPoly(s), UmbralPoly(beta))) + UmbralPoly(dot(a, UmbralPoly(s), UmbralPoly(gamma)));
    c.expect(exchangeable_up_to(a, UmbralPoly(right_sum), right_split, N), "a.(q+r) matches a.q + a.r for scalar a");

    Rational cc(-2, 3);
    UmbraId scaled = dot(a, UmbralPoly(s), UmbralPoly(alpha) * UmbralPoly(cc));
    UmbralPoly outer = UmbralPoly(dot(a, UmbralPoly(s), UmbralPoly(alpha))) * UmbralPoly(cc);
    c.expect(exchangeable_up_to(a, UmbralPoly(scaled), outer, N), "a.(cp) matches c(a.p)");

    UmbraId left = dot_chain(a, {UmbralPoly(alpha), UmbralPoly(beta), UmbralPoly(gamma)});
    MomentSeq ab = dot_moments(a.moments(alpha), a.moments(beta), "ab");
    MomentSeq ab_g = dot_moments(ab, a.moments(gamma), "ab.g");
    bool assoc = true;
    for (std::size_t k = 0; k <= N; ++k) assoc = assoc && a.moments(left).moment(k) == ab_g.moment(k);
    c.expect(assoc, "(a.b).g matches a.(b.g)");

    UmbraId joint = dot(a, UmbralPoly(alpha), UmbralPoly(beta) + UmbralPoly(gamma));
    UmbralPoly separate = UmbralPoly(dot(a, UmbralPoly(alpha), UmbralPoly(beta))) + UmbralPoly(dot(a, UmbralPoly(alpha), UmbralPoly(gamma)));
    c.expect(!(eval(a, UmbralPoly::umbra(joint, 2)) == eval(a, separate.pow(2))), "a.(b+g) differs from a.b + a.g at k = 2");
    return c.take();
}

inline std::vector<CheckResult> binomial_suite() {
    detail::Checks c;
    constexpr std::size_t N = 8;
    Alphabet a;
    UmbraId g = a.register_umbra("g", MomentSeq::generic("g"));
    c.expect(validate_binomial(binomial_from_umbra(a, g, N), N), "x.g is of binomial type (generic)");
    c.expect(validate_binomial(abel_sequence(a, g, N), N), "Abel sequence is of binomial type (generic)");
    c.expect(validate_binomial(rising_factorial_sequence(a, g, N), N), "rising-factorial sequence is of binomial type (generic)");
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        UmbraId r = a.register_derived("r", MomentSeq::finite(detail::random_moments(rng, N)), Partition::base);
        std::string where = "trial " + std::to_string(trial);
        c.expect(validate_binomial(binomial_from_umbra(a, r, N), N).ok, "x.g is of binomial type (random)", where);
        c.expect(validate_binomial(abel_sequence(a, r, N), N).ok, "Abel sequence is of binomial type (random)", where);
        c.expect(validate_binomial(rising_factorial_sequence(a, r, N), N).ok, "rising-factorial sequence is of binomial type (random)", where);
    }
    return c.take();
}

inline std::vector<CheckResult> delta_suite() {
    detail::Checks c;
    constexpr std::size_t N = 10;
    Alphabet a;
    std::mt19937 rng(7);
    UmbraId r = a.register_derived("r", MomentSeq::finite(detail::random_moments(rng, 12)), Partition::base);
    std::vector<std::pair<std::string, PolySeq>> seqs{
        {"rising", rising_factorial_sequence(a, r, N)}, {"abel", abel_sequence(a, r, N)}};
    for (const auto& [name, seq] : seqs) {
        DeltaSeries f = delta_operator_of(seq);
        for (std::size_t n = 1; n <= N; ++n)
            c.expect(apply_delta(f, seq[n]) == seq[n - 1] * Rational(static_cast<long>(n)), "f(D) p_n = n p_{n-1}",
                     name + ", n = " + std::to_string(n));
        c.expect(sequence_from_delta(a, f, N) == seq, "sequence from its delta operator round-trips", name);
        Series d = Series::identity(N, SeriesVar::D);
        std::vector<Poly> coeffs = expansion_coefficients(d, seq);
        std::vector<Poly> derivs = derivatives_at_zero(seq);
        c.expect(coeffs == derivs, "expansion of D has coefficients p_k'(0)", name);
    }
    for (const char* spec : {"t", "exp(t)-1", "1-exp(-t)", "t-t^2"}) {
        DeltaSeries f(parse_series(spec, 12, SeriesVar::D));
        PolySeq seq = sequence_from_delta(a, f, 12);
        c.expect(delta_operator_of(seq) == f, "delta operator of the sequence from f is f", spec);
        Poly p(1);
        for (std::size_t n = 1; n <= 8; ++n) {
            c.expect(transfer_formula(f, n) == seq[n], "transfer formula rebuilds p_n", std::string(spec) + ", n = " + std::to_string(n));
            p = rodrigues_step(f, p);
            c.expect(p == seq[n], "Rodrigues iteration rebuilds p_n", std::string(spec) + ", n = " + std::to_string(n));
        }
    }
    return c.take();
}

inline std::vector<CheckResult> sheffer_suite() {
    detail::Checks c;
    constexpr std::size_t N = 8;
    Alphabet a;
    UmbraId beta = a.register_umbra("be", MomentSeq::generic("b"));
    std::mt19937 rng(11);
    std::vector<Poly> moments = detail::random_moments(rng, N);
    moments[0] = Poly(1);
    UmbraId r = a.register_umbra("r", MomentSeq::finite(moments));
    std::vector<std::pair<std::string, PolySeq>> bases{{"from-umbra", binomial_from_umbra(a, r, N)},
                                                        {"abel", abel_sequence(a, r, N)},
                                                        {"rising", rising_factorial_sequence(a, r, N)}};
    for (const auto& [name, base] : bases) {
        UmbraId g = umbra_for_derivatives(a, derivatives_at_zero(base));
        UmbraId alpha = abel_umbra_for(a, base);
        UmbraId mu = rising_umbra_for(a, base);
        PolySeq s = sheffer_from(a, base, beta);
        c.expect(sheffer_dot_presentation(a, g, beta, N) == s, "((x+b).g)^n presentation agrees", name);
        c.expect(sheffer_abel_presentation(a, alpha, beta, N) == s, "Abel-shifted presentation agrees", name);
        c.expect(sheffer_rising_presentation(a, mu, beta, N) == s, "rising-shifted presentation agrees", name);
        c.expect(validate_sheffer_expansion(base, s, N), "s_n(x+y) expands over p_i(x) s_{n-i}(y)");
        DeltaSeries Q = delta_operator_of(base);
        bool lowers = true;
        for (std::size_t n = 1; n <= N; ++n) lowers = lowers && apply_delta(Q, s[n]) == s[n - 1] * Rational(static_cast<long>(n));
        c.expect(lowers, "base delta operator lowers the Sheffer sequence", name);
    }
    c.expect(validate_appell(appell_from(a, beta, N), N), "Appell sequence satisfies s_n' = n s_{n-1}");
    return c.take();
}

inline std::vector<CheckResult> multiplicative_suite() {
    detail::Checks c;
    constexpr std::size_t N = 8;
    Alphabet a;
    UmbraId u = a.register_umbra("u", MomentSeq::uniform());
    UmbraId one = a.register_umbra("one", MomentSeq::constant(Poly(1)));
    std::mt19937 rng(3);
    UmbraId r = a.register_umbra("r", MomentSeq::finite(detail::random_moments(rng, N)));
    for (const UmbraId& g : {u, one, r}) {
        KSeq K = k_polynomials(a, g, N);
        c.expect(is_multiplicative(K, N), "K_m = E[(a.g)^m] is multiplicative", g.str());
        c.expect(is_linear_in_each(K), "K_m is linear in each a_i", g.str());
        c.expect(respects_dependence_bound(K), "K_m depends only on a_1..a_m", g.str());
    }
    std::vector<std::vector<Rational>> params{{1}, {0, 1}, {Rational(1, 2), -1, 2}};
    for (const auto& cs : params) {
        KSeq K = general_multiplicative(cs, a, one, N);
        c.expect(is_multiplicative(K, N), "general construction is multiplicative", K.construction);
        c.expect(is_homogeneous(K), "general construction with g = 1 is homogeneous", K.construction);
        c.expect(respects_dependence_bound(K), "general construction depends only on a_1..a_m", K.construction);
        c.expect(is_m_sequence(m_sequence(K), N), "L_m satisfies the ordinary product identity", K.construction);
        KSeq Kr = general_multiplicative(cs, a, u, 6);
        c.expect(is_multiplicative(Kr, 6), "general construction is multiplicative", Kr.construction);
    }
    return c.take();
}

struct NamedSuite {
    const char* name;
    std::vector<CheckResult> (*run)();
};

inline const std::vector<NamedSuite>& suites() {
    static const std::vector<NamedSuite> all{{"bernoulli", bernoulli_suite}, {"blissard", blissard_suite},
                                             {"oracle", oracle_suite},       {"dot", dot_suite},
                                             {"binomial", binomial_suite},   {"delta", delta_suite},
                                             {"sheffer", sheffer_suite},     {"multiplicative", multiplicative_suite}};
    return all;
}

}  // namespace umbral::verify
