#pragma once

// Shared helpers for the unit tests: seeded random inputs and closed forms
// computed without the library's series or umbral machinery.

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

#include <random>
#include <string>
#include <vector>

namespace umbral::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0xC0FFEE);
    return gen;
}

inline Rational random_rational(long span = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng()), den(rng()));
}

inline Rational random_nonzero_rational(long span = 9, long max_den = 5) {
    Rational r = random_rational(span, max_den);
    return r.is_zero() ? Rational(1) : r;
}

/// Random polynomial in the given variables with up to `terms` terms of
/// degree at most `degree` in each variable.
inline Poly random_poly(const std::vector<Var>& vs, unsigned degree = 3, unsigned terms = 4) {
    std::uniform_int_distribution<unsigned> exp(0, degree);
    Poly p;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        for (const auto& v : vs) m = m * Monomial(v, exp(rng()));
        p.add_term(m, random_rational());
    }
    return p;
}

/// m_1..m_count with a nonzero first entry.
inline std::vector<Poly> random_moment_list(std::size_t count) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(i == 0 ? random_nonzero_rational() : random_rational());
    return out;
}

/// B_0..B_N from sum_{j<=m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_by_recurrence(std::size_t N) {
    std::vector<Rational> b{Rational(1)};
    for (std::size_t m = 1; m <= N; ++m) {
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j) acc = acc + Rational(binomial(static_cast<long>(m + 1), static_cast<long>(j))) * b[j];
        b.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return b;
}

inline Poly x_plus(const Rational& c) { return X() + Poly(c); }

/// x (x + a)(x + 2a) ... (x + (n-1)a).
inline Poly rising_product(std::size_t n, const Rational& a) {
    Poly p(1);
    for (std::size_t j = 0; j < n; ++j) p *= x_plus(a * Rational(static_cast<long>(j)));
    return p;
}

/// x (x + n a)^{n-1}, and 1 for n = 0.
inline Poly abel_closed(std::size_t n, const Rational& a) {
    if (n == 0) return Poly(1);
    return X() * x_plus(a * Rational(static_cast<long>(n))).pow(static_cast<std::uint32_t>(n - 1));
}

inline Poly x_power(std::size_t n) { return Poly::variable(vars::x(), static_cast<std::uint32_t>(n)); }

}  // namespace umbral::testing
