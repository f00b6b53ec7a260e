#pragma once

// The dot operation on umbrae.
//
// For an umbra g with moment EGF g(z), q_{g,k}(n) is k! [z^k] exp(n log g(z)),
// a polynomial in n. The auxiliary umbra p.g has moments E[q_{g,k}(p)], i.e.
// q_{g,k} with n^j replaced by the j-th moment of p. With p an integer this
// is the sum of that many independent copies of g.

#include "umbral/series.hpp"
#include "umbral/umbra.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace umbral {

/// q_{g,k}(n) for one umbra g and one k; n is the variable "n".
struct DotCoeffPoly {
    UmbraId gamma;
    std::size_t k = 0;
    Poly value;
};

/// q_{g,0}(n), ..., q_{g,order}(n) from the moments of g.
inline std::vector<Poly> dot_coeff_polys(const MomentSeq& g, std::size_t order) {
    Series log_g = log(g.egf(order));
    Series power = exp(log_g * Poly::variable(vars::n()));
    std::vector<Poly> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) out.push_back(power.egf_value(k));
    return out;
}

inline void require_base_only(const Alphabet& alphabet, const UmbralPoly& p, const char* what) {
    for (const auto& id : p.support())
        if (alphabet.is_auxiliary(id))
            throw std::invalid_argument(std::string(what) + ": auxiliary umbra '" + id.str() +
                                        "' is not allowed as a dot operand");
}

inline DotCoeffPoly dot_coeff_poly(const Alphabet& alphabet, const UmbraId& gamma, std::size_t k, std::size_t order) {
    if (k > order) throw std::out_of_range("dot_coeff_poly: k exceeds the truncation order");
    if (alphabet.is_auxiliary(gamma)) throw std::invalid_argument("dot_coeff_poly needs a base umbra");
    return {gamma, k, dot_coeff_polys(alphabet.moments(gamma), order)[k]};
}

/// Moments E[p^k] of an umbral polynomial, realized lazily.
inline MomentSeq power_moments(const Alphabet& alphabet, const UmbralPoly& p) {
    if (p.is_scalar()) return MomentSeq::constant(p.scalar_part());
    if (p.terms().size() == 1) {
        const auto& [mono, coeff] = *p.terms().begin();
        if (coeff == Poly(1) && mono.factors().size() == 1 && mono.factors()[0].second == 1)
            return alphabet.moments(mono.factors()[0].first);
    }
    struct State {
        Alphabet alphabet;
        UmbralPoly base;
        UmbralPoly power{1};
        std::size_t exponent = 0;
    };
    std::optional<std::size_t> limit;
    for (const auto& id : p.support())
        if (auto l = alphabet.moments(id).limit(); l && (!limit || *l < *limit)) limit = l;
    auto state = std::make_shared<State>(State{alphabet.restricted_to(p.support()), p});
    return MomentSeq::recursive(
        [state](std::size_t k, const std::vector<Poly>&) {
            while (state->exponent < k) {
                state->power *= state->base;
                ++state->exponent;
            }
            return eval(state->alphabet, state->power);
        },
        "powers(" + p.str() + ")", limit);
}

inline std::optional<std::size_t> combined_limit(const MomentSeq& a, const MomentSeq& b) {
    if (a.limit() && b.limit()) return std::min(*a.limit(), *b.limit());
    return a.limit() ? a.limit() : b.limit();
}

/// Moments of the dot product of an umbra with moments `left` and one with
/// moments `right`: k-th moment sum_j [n^j] q_{right,k}(n) * left_j.
inline MomentSeq dot_moments(const MomentSeq& left, const MomentSeq& right, std::string description) {
    return MomentSeq::from_egf_builder(
        [left, right](std::size_t order) {
            std::vector<Poly> q = dot_coeff_polys(right, order);
            std::vector<Poly> values;
            values.reserve(order + 1);
            for (std::size_t k = 0; k <= order; ++k) {
                Poly v;
                for (std::uint32_t j = 0; j <= k; ++j) {
                    Poly c = q[k].coefficient(vars::n(), j);
                    if (!c.is_zero()) v += c * left.moment(j);
                }
                values.push_back(std::move(v));
            }
            return Series::from_egf_values(values, order);
        },
        std::move(description), combined_limit(left, right));
}

/// q_{q,0}(a), ..., q_{q,order}(a) for a scalar a; nothing is registered.
inline std::vector<Poly> dot_scalar(const Poly& a, const Alphabet& alphabet, const UmbralPoly& q, std::size_t order) {
    require_base_only(alphabet, q, "dot_scalar");
    std::vector<Poly> polys = dot_coeff_polys(power_moments(alphabet, q), order);
    for (auto& p : polys) p = p.substitute({{vars::n(), a}});
    return polys;
}

namespace detail {

inline UmbraId dot_unchecked(Alphabet& alphabet, const UmbralPoly& p, const UmbralPoly& q) {
    return alphabet.register_auxiliary("(" + p.str() + ").(" + q.str() + ")",
                                       dot_moments(power_moments(alphabet, p), power_moments(alphabet, q),
                                                   "dot(" + p.str() + "," + q.str() + ")"));
}

}  // namespace detail

/// The auxiliary umbra n.p; n may be negative. Each call yields a new,
/// independent umbra.
inline UmbraId dot_int(Alphabet& alphabet, long n, const UmbralPoly& p) {
    require_base_only(alphabet, p, "dot_int");
    return detail::dot_unchecked(alphabet, UmbralPoly(Rational(n)), p);
}

/// The auxiliary umbra p.q for umbral polynomials over base umbrae.
inline UmbraId dot(Alphabet& alphabet, const UmbralPoly& p, const UmbralPoly& q) {
    require_base_only(alphabet, p, "dot");
    require_base_only(alphabet, q, "dot");
    return detail::dot_unchecked(alphabet, p, q);
}

/// p_1.p_2.....p_n, folded from the right: p_1.(p_2.(....p_n)).
inline UmbraId dot_chain(Alphabet& alphabet, const std::vector<UmbralPoly>& operands) {
    if (operands.size() < 2) throw std::invalid_argument("dot_chain needs at least two operands");
    for (const auto& p : operands) require_base_only(alphabet, p, "dot_chain");
    UmbraId rho = detail::dot_unchecked(alphabet, operands[operands.size() - 2], operands.back());
    for (std::size_t i = operands.size() - 2; i-- > 0;) rho = detail::dot_unchecked(alphabet, operands[i], UmbralPoly(rho));
    return rho;
}

/// E[(g_1 + ... + g_n)^k] over n independent copies of g, by direct
/// multinomial expansion over compositions of k. Oracle scale only.
inline Poly dot_int_oracle(const Alphabet& alphabet, unsigned n, const UmbraId& gamma, unsigned k) {
    const MomentSeq& g = alphabet.moments(gamma);
    std::vector<Poly> moments = g.moments(k);
    Poly total;
    std::vector<unsigned> parts(n, 0);
    // Enumerates j_1 + ... + j_n = k; weight k!/prod j_i! * prod g_{j_i}.
    auto recurse = [&](auto&& self, unsigned slot, unsigned remaining) -> void {
        if (slot + 1 == n || n == 0) {
            if (n == 0) {
                if (remaining == 0) total += Poly(1);
                return;
            }
            parts[slot] = remaining;
            Rational weight(factorial(k));
            Poly value(1);
            for (unsigned j : parts) {
                weight /= Rational(factorial(j));
                value *= moments[j];
            }
            total += value * weight;
            return;
        }
        for (unsigned j = 0; j <= remaining; ++j) {
            parts[slot] = j;
            self(self, slot + 1, remaining - j);
        }
    };
    recurse(recurse, 0, k);
    return total;
}

}  // namespace umbral
