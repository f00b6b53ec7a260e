#pragma once

// Multiplicative sequences K_m over generic moment symbols a_1, a_2, ...
//
// With a an umbra whose moments are the symbols a_i, K_m = E[(a.g)^m]. A
// sequence is multiplicative when its EGF turns binomial convolution of the
// a's and b's into a product.

#include "umbral/dot.hpp"
#include "umbral/umbra.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace umbral {

struct KSeq {
    std::vector<Poly> entries;
    /// Stem of the generic symbols, "a" for a_1, a_2, ...
    std::string stem = "a";
    std::string construction;

    std::size_t size() const { return entries.size(); }
    const Poly& operator[](std::size_t m) const { return entries.at(m); }
};

namespace detail {

inline void require_rational_moments(const MomentSeq& g, std::size_t N, const char* what) {
    for (std::size_t k = 1; k <= N; ++k)
        if (!g.moment(k).is_constant())
            throw std::invalid_argument(std::string(what) + ": the right operand needs rational moments, m_" +
                                        std::to_string(k) + " = " + g.moment(k).str());
}

// Picks a stem for the second symbol family that no entry already uses.
inline std::string other_stem(const std::vector<Poly>& entries, const std::string& taken) {
    std::set<std::string> used{taken};
    for (const Poly& p : entries)
        for (const Var& v : p.variables()) used.insert(v.stem);
    for (std::string s : {"b", "c", "d", "e", "f"})
        if (!used.count(s)) return s;
    std::string s = "b";
    while (used.count(s)) s += "b";
    return s;
}

inline std::map<Var, Poly> rename_stem(const std::string& from, const std::string& to, std::size_t upto) {
    std::map<Var, Poly> m;
    for (std::uint32_t i = 1; i <= upto; ++i) m.emplace(Var(from, i), Poly::variable(Var(to, i)));
    return m;
}

// a_j -> sum_i w(j,i) a_i b_{j-i}, with a_0 = b_0 = 1.
inline std::map<Var, Poly> convolution(const std::string& a, const std::string& b, std::size_t upto, bool binomial_weights) {
    std::map<Var, Poly> m;
    auto sym = [](const std::string& stem, std::size_t i) {
        return i == 0 ? Poly(1) : Poly::variable(Var(stem, static_cast<std::uint32_t>(i)));
    };
    for (std::size_t j = 1; j <= upto; ++j) {
        Poly c;
        for (std::size_t i = 0; i <= j; ++i) {
            Poly t = sym(a, i) * sym(b, j - i);
            c += binomial_weights ? t * Rational(binomial(static_cast<long>(j), static_cast<long>(i))) : t;
        }
        m.emplace(Var(a, static_cast<std::uint32_t>(j)), c);
    }
    return m;
}

inline std::size_t max_index_of(const std::vector<Poly>& entries, const std::string& stem) {
    std::size_t hi = entries.size();
    for (const Poly& p : entries)
        for (const Var& v : p.variables())
            if (v.stem == stem) hi = std::max<std::size_t>(hi, v.index);
    return hi;
}

// sum_i w_i F_i(a) F_{k-i}(b) == F_k(c) for k <= N.
inline bool product_identity(const std::vector<Poly>& F, const std::string& stem, std::size_t N, bool binomial_weights) {
    if (N >= F.size()) return false;
    std::string other = other_stem(F, stem);
    std::size_t upto = max_index_of(F, stem);
    auto to_b = rename_stem(stem, other, upto);
    auto to_c = convolution(stem, other, upto, binomial_weights);
    std::vector<Poly> in_b;
    for (std::size_t k = 0; k <= N; ++k) in_b.push_back(F[k].substitute(to_b));
    for (std::size_t k = 0; k <= N; ++k) {
        Poly rhs;
        for (std::size_t i = 0; i <= k; ++i) {
            Poly t = F[i] * in_b[k - i];
            rhs += binomial_weights ? t * Rational(binomial(static_cast<long>(k), static_cast<long>(i))) : t;
        }
        if (!(F[k].substitute(to_c) == rhs)) return false;
    }
    return true;
}

}  // namespace detail

/// K_m = E[q_{g,m}(a)] for m = 0..N; g needs rational moments.
inline KSeq k_polynomials(const Alphabet& alphabet, const UmbraId& gamma, std::size_t N, const std::string& stem = "a") {
    const MomentSeq& g = alphabet.moments(gamma);
    detail::require_rational_moments(g, N, "k_polynomials");
    MomentSeq k = dot_moments(MomentSeq::generic(stem), g, "K");
    return {k.moments(N), stem, "k(" + gamma.str() + ")"};
}

/// K_m = E[(sum_i i.(c_i a).g)^m] over independent auxiliary umbrae.
inline KSeq general_multiplicative(const std::vector<Rational>& c, const Alphabet& alphabet, const UmbraId& gamma,
                                   std::size_t N, const std::string& stem = "a") {
    if (c.empty()) throw std::invalid_argument("general_multiplicative needs at least one parameter");
    Alphabet local = alphabet.restricted_to({gamma});
    UmbraId alpha = local.register_derived(stem, MomentSeq::generic(stem), Partition::base);
    UmbralPoly sum;
    std::string construction = "general(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) construction += ",";
        construction += c[i].str();
        if (c[i].is_zero()) continue;
        UmbralPoly scaled = UmbralPoly::umbra(alpha) * UmbralPoly(c[i]);
        sum += UmbralPoly(dot_chain(local, {UmbralPoly(Rational(static_cast<long>(i + 1))), scaled, UmbralPoly(gamma)}));
    }
    construction += ";" + gamma.str() + ")";
    std::vector<Poly> entries;
    UmbralPoly power(1);
    for (std::size_t m = 0; m <= N; ++m) {
        entries.push_back(eval(local, power));
        power *= sum;
    }
    return {entries, stem, construction};
}

/// K_k(c) = sum_i C(k,i) K_i(a) K_{k-i}(b) with c_j = sum_i C(j,i) a_i b_{j-i}, for k <= N.
inline bool is_multiplicative(const KSeq& K, std::size_t N) {
    if (K.entries.empty() || !(K[0] == Poly(1))) return false;
    return detail::product_identity(K.entries, K.stem, N, true);
}

/// Largest total degree of K_m when a_i has degree i, or -1 for zero;
/// throws if another symbol occurs.
inline long graded_degree(const Poly& p, const std::string& stem) {
    long best = -1;
    for (const auto& [mono, coeff] : p.terms()) {
        long d = 0;
        for (const auto& [v, e] : mono.factors()) {
            if (v.stem != stem || v.index == 0) throw std::invalid_argument("unexpected symbol " + v.name());
            d += static_cast<long>(v.index) * e;
        }
        best = std::max(best, d);
    }
    return best;
}

/// Every monomial of K_m has graded degree exactly m.
inline bool is_homogeneous(const KSeq& K) {
    for (std::size_t m = 0; m < K.size(); ++m)
        for (const auto& [mono, coeff] : K[m].terms())
            if (graded_degree(Poly::term(mono, coeff), K.stem) != static_cast<long>(m)) return false;
    return true;
}

/// Every K_m has degree at most 1 in each a_i.
inline bool is_linear_in_each(const KSeq& K) {
    for (const Poly& p : K.entries)
        for (const Var& v : p.variables())
            if (p.degree(v) > 1) return false;
    return true;
}

/// No K_m involves a_j with j > m.
inline bool respects_dependence_bound(const KSeq& K) {
    for (std::size_t m = 0; m < K.size(); ++m)
        for (const Var& v : K[m].variables())
            if (v.stem == K.stem && v.index > m) return false;
    return true;
}

/// L_m = K_m / m! written in ordinary-generating-function coefficients: the
/// moment a_j is j! times the coefficient a_j of z^j, so
/// L_m(a) = K_m(1! a_1, 2! a_2, ...) / m!. Needs homogeneous K.
inline std::vector<Poly> m_sequence(const KSeq& K) {
    if (!is_homogeneous(K)) throw std::invalid_argument("m_sequence needs a homogeneous sequence");
    std::size_t upto = detail::max_index_of(K.entries, K.stem);
    std::map<Var, Poly> scale;
    for (std::uint32_t j = 1; j <= upto; ++j)
        scale.emplace(Var(K.stem, j), Poly::variable(Var(K.stem, j)) * Rational(factorial(j)));
    std::vector<Poly> L;
    for (std::size_t m = 0; m < K.size(); ++m) L.push_back(K[m].substitute(scale) / Rational(factorial(m)));
    return L;
}

/// L_k(c) = sum_i L_i(a) L_{k-i}(b) with c_j = sum_i a_i b_{j-i}, for k <= N.
inline bool is_m_sequence(const std::vector<Poly>& L, std::size_t N, const std::string& stem = "a") {
    if (L.empty() || !(L[0] == Poly(1))) return false;
    return detail::product_identity(L, stem, N, false);
}

}  // namespace umbral
