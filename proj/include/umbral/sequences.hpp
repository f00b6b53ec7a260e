#pragma once

// Polynomial sequences of binomial type, Appell and Sheffer sequences, and
// their delta operators.
//
// A sequence p_0, p_1, ... is of binomial type when
//   p_k(x + y) = sum_i C(k,i) p_i(x) p_{k-i}(y).
// Every such sequence is p_n(x) = E[(x.g)^n] for some umbra g; the Abel and
// rising-factorial constructions give two further presentations.

#include "umbral/dot.hpp"
#include "umbral/oracle.hpp"
#include "umbral/series.hpp"
#include "umbral/umbra.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace umbral {

enum class SeqOrigin { explicit_list, from_umbra, abel, rising, appell, sheffer, from_delta, composed };

inline const char* name_of(SeqOrigin o) {
    switch (o) {
        case SeqOrigin::explicit_list: return "explicit";
        case SeqOrigin::from_umbra: return "from-umbra";
        case SeqOrigin::abel: return "abel";
        case SeqOrigin::rising: return "rising";
        case SeqOrigin::appell: return "appell";
        case SeqOrigin::sheffer: return "sheffer";
        case SeqOrigin::from_delta: return "from-delta";
        case SeqOrigin::composed: return "composed";
    }
    return "explicit";
}

inline SeqOrigin seq_origin_from_name(const std::string& s) {
    for (auto o : {SeqOrigin::explicit_list, SeqOrigin::from_umbra, SeqOrigin::abel, SeqOrigin::rising,
                   SeqOrigin::appell, SeqOrigin::sheffer, SeqOrigin::from_delta, SeqOrigin::composed})
        if (s == name_of(o)) return o;
    throw std::invalid_argument("unknown sequence origin '" + s + "'");
}

struct Provenance {
    SeqOrigin origin = SeqOrigin::explicit_list;
    /// Umbrae the construction was parameterized by, in construction order.
    std::vector<UmbraId> umbrae;
    /// A base umbra g with p_n = E[(x.g)^n], when one is known.
    std::optional<UmbraId> representing;
    std::string detail;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Entries p_0..p_N, polynomials in x.
struct PolySeq {
    std::vector<Poly> entries;
    Provenance provenance;

    std::size_t size() const { return entries.size(); }
    std::size_t max_index() const { return entries.empty() ? 0 : entries.size() - 1; }
    const Poly& operator[](std::size_t n) const { return entries.at(n); }

    friend bool operator==(const PolySeq& a, const PolySeq& b) { return a.entries == b.entries; }
};

/// "1; x; x^2+x; ..." on one line.
inline std::string format_entries(const std::vector<Poly>& entries) {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += "; ";
        s += entries[i].str();
    }
    return s;
}

/// Result of an identity check: the first index where it fails, and why.
struct IdentityCheck {
    bool ok = true;
    std::optional<std::size_t> failing_k;
    std::string reason;

    explicit operator bool() const { return ok; }

    static IdentityCheck fail(std::size_t k, std::string why) { return {false, k, std::move(why)}; }
};

namespace detail {

inline Var fresh_variable(const std::vector<const PolySeq*>& seqs, const std::string& stem) {
    for (std::uint32_t i = 0;; ++i) {
        Var v(stem, i);
        bool used = false;
        for (const PolySeq* s : seqs)
            for (const Poly& p : s->entries)
                if (p.contains(v)) used = true;
        if (!used) return v;
    }
}

inline Poly shift_x(const Poly& p, const Poly& by) { return p.substitute({{vars::x(), X() + by}}); }
inline Poly rename_x(const Poly& p, const Var& to) { return p.substitute({{vars::x(), Poly::variable(to)}}); }

inline std::size_t checked_upto(const PolySeq& seq, std::size_t n) {
    if (seq.entries.empty()) throw std::invalid_argument("empty sequence");
    return std::min(n, seq.max_index());
}

/// d/dx p at x = 0.
inline Poly derivative_at_zero(const Poly& p) { return p.coefficient(vars::x(), 1); }

}  // namespace detail

/// Exact two-variable check of the binomial identity for k <= N. Each p_k
/// must also have x-degree exactly k.
inline IdentityCheck validate_binomial(const PolySeq& seq, std::size_t N) {
    if (seq.entries.empty()) return IdentityCheck::fail(0, "empty sequence");
    if (N > seq.max_index()) return IdentityCheck::fail(seq.size(), "sequence has no entry " + std::to_string(seq.size()));
    const Var y = detail::fresh_variable({&seq}, "y");
    std::vector<Poly> in_y;
    for (std::size_t k = 0; k <= N; ++k) in_y.push_back(detail::rename_x(seq[k], y));
    for (std::size_t k = 0; k <= N; ++k) {
        if (seq[k].degree(vars::x()) != static_cast<long>(k))
            return IdentityCheck::fail(k, "entry " + std::to_string(k) + " does not have degree " + std::to_string(k));
        Poly lhs = detail::shift_x(seq[k], Poly::variable(y));
        Poly rhs;
        for (std::size_t i = 0; i <= k; ++i)
            rhs += seq[i] * in_y[k - i] * Rational(binomial(static_cast<long>(k), static_cast<long>(i)));
        if (!(lhs == rhs)) return IdentityCheck::fail(k, "binomial identity fails at k = " + std::to_string(k));
    }
    return {};
}

/// s_n(x+y) = sum_i C(n,i) p_i(x) s_{n-i}(y) for n <= N.
inline IdentityCheck validate_sheffer_expansion(const PolySeq& base, const PolySeq& s, std::size_t N) {
    if (N > base.max_index() || N > s.max_index()) return IdentityCheck::fail(N, "sequences are too short");
    const Var y = detail::fresh_variable({&base, &s}, "y");
    for (std::size_t n = 0; n <= N; ++n) {
        Poly lhs = detail::shift_x(s[n], Poly::variable(y));
        Poly rhs;
        for (std::size_t i = 0; i <= n; ++i)
            rhs += base[i] * detail::rename_x(s[n - i], y) * Rational(binomial(static_cast<long>(n), static_cast<long>(i)));
        if (!(lhs == rhs)) return IdentityCheck::fail(n, "Sheffer expansion fails at n = " + std::to_string(n));
    }
    return {};
}

/// s_n' = n s_{n-1} for 1 <= n <= N.
inline IdentityCheck validate_appell(const PolySeq& s, std::size_t N) {
    if (N > s.max_index()) return IdentityCheck::fail(N, "sequence is too short");
    if (!(s[0] == Poly(1))) return IdentityCheck::fail(0, "entry 0 is not 1");
    for (std::size_t n = 1; n <= N; ++n)
        if (!(s[n].derivative(vars::x()) == s[n - 1] * Rational(static_cast<long>(n))))
            return IdentityCheck::fail(n, "derivative identity fails at n = " + std::to_string(n));
    return {};
}

inline void require_binomial(const PolySeq& seq, const char* what) {
    if (auto check = validate_binomial(seq, seq.max_index()); !check)
        throw std::invalid_argument(std::string(what) + ": sequence is not of binomial type (" + check.reason + ")");
}

/// p_n(x) = E[(x.g)^n] = q_{g,n}(x).
inline PolySeq binomial_from_umbra(const Alphabet& alphabet, const UmbraId& gamma, std::size_t N) {
    if (alphabet.is_auxiliary(gamma)) throw std::invalid_argument("binomial_from_umbra needs a base umbra");
    PolySeq seq{dot_scalar(X(), alphabet, UmbralPoly(gamma), N), {}};
    seq.provenance = {SeqOrigin::from_umbra, {gamma}, gamma, ""};
    return seq;
}

/// E[L (L + n.a)^{n-1}] for n = 0..N; L = x gives the Abel presentation.
inline std::vector<Poly> abel_entries(Alphabet& alphabet, const UmbraId& alpha, const UmbralPoly& left, std::size_t N) {
    std::vector<Poly> out{Poly(1)};
    for (std::size_t n = 1; n <= N; ++n) {
        UmbraId u = dot_int(alphabet, static_cast<long>(n), UmbralPoly(alpha));
        out.push_back(eval(alphabet, left * (left + UmbralPoly(u)).pow(static_cast<std::uint32_t>(n - 1))));
    }
    return out;
}

/// E[L (L + m_1)(L + m_1 + m_2) ... (L + m_1 + ... + m_{n-1})] over clones m_i.
/// Factors are multiplied from the right and each clone is evaluated as
/// soon as no remaining factor contains it.
inline std::vector<Poly> rising_entries(Alphabet& alphabet, const UmbraId& mu, const UmbralPoly& left, std::size_t N) {
    std::vector<UmbraId> clones;
    for (std::size_t i = 1; i < N; ++i) clones.push_back(alphabet.clone_exchangeable(mu));
    std::vector<UmbralPoly> partial_sums(N > 0 ? N : 1);
    for (std::size_t i = 1; i < N; ++i) partial_sums[i] = partial_sums[i - 1] + UmbralPoly(clones[i - 1]);
    std::vector<Poly> out{Poly(1)};
    for (std::size_t n = 1; n <= N; ++n) {
        UmbralPoly r(1);
        for (std::size_t i = n - 1; i >= 1; --i) {
            r = (left + partial_sums[i]) * r;
            r = eval_partial(alphabet, r, clones[i - 1]);
        }
        out.push_back(eval(alphabet, left * r));
    }
    return out;
}

/// p_n(x) = E[x (x + n.a)^{n-1}].
inline PolySeq abel_sequence(Alphabet& alphabet, const UmbraId& alpha, std::size_t N) {
    if (alphabet.is_auxiliary(alpha)) throw std::invalid_argument("abel_sequence needs a base umbra");
    return {abel_entries(alphabet, alpha, UmbralPoly(X()), N), {SeqOrigin::abel, {alpha}, std::nullopt, ""}};
}

/// p_n(x) = E[x (x + m_1) ... (x + m_1 + ... + m_{n-1})].
inline PolySeq rising_factorial_sequence(Alphabet& alphabet, const UmbraId& mu, std::size_t N) {
    if (alphabet.is_auxiliary(mu)) throw std::invalid_argument("rising_factorial_sequence needs a base umbra");
    return {rising_entries(alphabet, mu, UmbralPoly(X()), N), {SeqOrigin::rising, {mu}, std::nullopt, ""}};
}

/// p_k'(0) for k = 0..N.
inline std::vector<Poly> derivatives_at_zero(const PolySeq& seq) {
    std::vector<Poly> out;
    for (const Poly& p : seq.entries) out.push_back(detail::derivative_at_zero(p));
    return out;
}

/// The delta operator f(D) with f(D) p_n = n p_{n-1}: the compositional
/// inverse of sum_k p_k'(0) t^k / k!.
inline DeltaSeries delta_operator_of(const PolySeq& seq) {
    if (seq.max_index() < 2) throw std::invalid_argument("delta_operator_of needs entries up to index 2");
    require_binomial(seq, "delta_operator_of");
    std::vector<Poly> d = derivatives_at_zero(seq);
    if (d[1].is_zero()) throw std::domain_error("delta_operator_of: p_1'(0) is zero");
    if (!d[1].is_constant()) throw std::domain_error("delta_operator_of: p_1'(0) must be rational");
    return comp_inverse(DeltaSeries(Series::from_egf_values(d, seq.max_index(), SeriesVar::D)));
}

/// f(D) p.
inline Poly apply_delta(const DeltaSeries& f, const Poly& p) { return apply_operator_series(f.series(), p, vars::x()); }

/// The binomial-type sequence whose delta operator is f. Registers the base
/// umbra g with moment EGF exp(f^{-1}(z)).
inline PolySeq sequence_from_delta(Alphabet& alphabet, const DeltaSeries& f, std::size_t N) {
    if (f.order() < N) throw std::out_of_range("delta series order is below the requested length");
    Series inverse = comp_inverse(f).series().truncate(N).with_var(SeriesVar::z);
    UmbraId gamma = alphabet.register_derived("from-delta", MomentSeq::from_egf(exp(inverse), "from-delta"), Partition::base);
    PolySeq seq = binomial_from_umbra(alphabet, gamma, N);
    seq.provenance = {SeqOrigin::from_delta, {gamma}, gamma, f.series().str()};
    return seq;
}

/// s_n(x) = E[(x + a)^n].
inline PolySeq appell_from(const Alphabet& alphabet, const UmbraId& alpha, std::size_t N) {
    std::vector<Poly> out;
    UmbralPoly shifted = UmbralPoly(X()) + UmbralPoly(alpha);
    UmbralPoly power(1);
    for (std::size_t n = 0; n <= N; ++n) {
        out.push_back(eval(alphabet, power));
        power *= shifted;
    }
    return {out, {SeqOrigin::appell, {alpha}, std::nullopt, ""}};
}

/// s_n(x) = E[p_n(x + b)] for a binomial-type base.
inline PolySeq sheffer_from(const Alphabet& alphabet, const PolySeq& base, const UmbraId& beta) {
    require_binomial(base, "sheffer_from");
    UmbralPoly shifted = UmbralPoly(X()) + UmbralPoly(beta);
    std::vector<Poly> out;
    for (const Poly& p : base.entries) out.push_back(eval(alphabet, UmbralPoly::substitute_variable(p, vars::x(), shifted)));
    Provenance prov{SeqOrigin::sheffer, base.provenance.umbrae, std::nullopt, name_of(base.provenance.origin)};
    prov.umbrae.push_back(beta);
    return {out, prov};
}

/// s_n(x) = E[((x + b).g)^n].
inline PolySeq sheffer_dot_presentation(Alphabet& alphabet, const UmbraId& gamma, const UmbraId& beta, std::size_t N) {
    UmbraId rho = dot(alphabet, UmbralPoly(X()) + UmbralPoly(beta), UmbralPoly(gamma));
    return {alphabet.moments(rho).moments(N), {SeqOrigin::sheffer, {gamma, beta}, std::nullopt, "from-umbra"}};
}

/// s_n(x) = E[(x + b)(x + b + n.a)^{n-1}].
inline PolySeq sheffer_abel_presentation(Alphabet& alphabet, const UmbraId& alpha, const UmbraId& beta, std::size_t N) {
    return {abel_entries(alphabet, alpha, UmbralPoly(X()) + UmbralPoly(beta), N),
            {SeqOrigin::sheffer, {alpha, beta}, std::nullopt, "abel"}};
}

/// s_n(x) = E[(x + b)(x + b + m_1) ... (x + b + m_1 + ... + m_{n-1})].
inline PolySeq sheffer_rising_presentation(Alphabet& alphabet, const UmbraId& mu, const UmbraId& beta, std::size_t N) {
    return {rising_entries(alphabet, mu, UmbralPoly(X()) + UmbralPoly(beta), N),
            {SeqOrigin::sheffer, {mu, beta}, std::nullopt, "rising"}};
}

/// The linear map x^i -> E[(x.g)^i] applied to r.
inline Poly umbral_operator(const Alphabet& alphabet, const UmbraId& gamma, const Poly& r) {
    long deg = r.degree(vars::x());
    if (deg < 0) return Poly();
    std::vector<Poly> images = dot_scalar(X(), alphabet, UmbralPoly(gamma), static_cast<std::size_t>(deg));
    Poly out;
    for (long i = 0; i <= deg; ++i) out += r.coefficient(vars::x(), static_cast<std::uint32_t>(i)) * images[static_cast<std::size_t>(i)];
    return out;
}

/// T(a_n) with T the linear map x^i -> b_i.
inline PolySeq umbral_compose_by_operator(const PolySeq& a, const PolySeq& b) {
    std::vector<Poly> out;
    for (const Poly& an : a.entries) {
        long deg = an.degree(vars::x());
        if (deg > static_cast<long>(b.max_index()))
            throw std::out_of_range("umbral composition needs b_" + std::to_string(deg));
        Poly r;
        for (long i = 0; i <= deg; ++i) r += an.coefficient(vars::x(), static_cast<std::uint32_t>(i)) * b[static_cast<std::size_t>(i)];
        out.push_back(std::move(r));
    }
    return {out, {SeqOrigin::composed, {}, std::nullopt, "operator"}};
}

/// Umbral composition of a (from umbra a) with b (from umbra b): the
/// sequence represented by x.b.a. Without umbra provenance on both sides the
/// operator definition T(x^i) = b_i is used.
inline PolySeq umbral_compose(Alphabet& alphabet, const PolySeq& a, const PolySeq& b) {
    require_binomial(a, "umbral_compose");
    require_binomial(b, "umbral_compose");
    if (!a.provenance.representing || !b.provenance.representing) return umbral_compose_by_operator(a, b);
    const UmbraId& alpha = *a.provenance.representing;
    const UmbraId& beta = *b.provenance.representing;
    std::size_t N = std::min(a.max_index(), b.max_index());
    UmbraId rho = dot_chain(alphabet, {UmbralPoly(X()), UmbralPoly(beta), UmbralPoly(alpha)});
    return {alphabet.moments(rho).moments(N), {SeqOrigin::composed, {alpha, beta}, std::nullopt, "chain"}};
}

/// x (f(t)/t)^{-n} x^{n-1}.
inline Poly transfer_formula(const DeltaSeries& f, std::size_t n) {
    if (n < 1) throw std::invalid_argument("transfer_formula needs n >= 1");
    if (f.order() < n) throw std::out_of_range("transfer_formula: delta series order is below n");
    Series op = reciprocal(f.series().divide_by_var()).pow(n);
    return X() * apply_operator_series(op, Poly::variable(vars::x(), static_cast<std::uint32_t>(n - 1)));
}

/// x (f'(D))^{-1} p_{n-1}.
inline Poly rodrigues_step(const DeltaSeries& f, const Poly& previous) {
    Series op = reciprocal(f.series().derivative());
    return X() * apply_operator_series(op, previous);
}

/// c_k = (T p_k)(0), checked against T = sum_k c_k Q^k / k! with Q the
/// delta operator of seq, to the common order.
inline std::vector<Poly> expansion_coefficients(const Series& T, const PolySeq& seq) {
    DeltaSeries Q = delta_operator_of(seq);
    std::size_t N = std::min(T.order(), seq.max_index());
    std::vector<Poly> c;
    for (std::size_t k = 0; k <= N; ++k) c.push_back(apply_operator_series(T, seq[k]).evaluate(vars::x(), 0));
    Series rebuilt(N, SeriesVar::D);
    Series q = Q.series().truncate(N);
    Series power = Series::constant(Poly(1), N, SeriesVar::D);
    for (std::size_t k = 0; k <= N; ++k) {
        rebuilt = rebuilt + power * (c[k] / Rational(factorial(k)));
        power = power * q;
    }
    if (!(rebuilt == T.truncate(N).with_var(SeriesVar::D)))
        throw std::logic_error("expansion coefficients do not reconstruct the operator");
    return c;
}

/// p_n / a^n with a = p_1'(0), so that p_1 = x.
inline PolySeq normalize(const PolySeq& seq) {
    if (seq.max_index() < 1) return seq;
    Poly a = detail::derivative_at_zero(seq[1]);
    if (!a.is_constant() || a.is_zero()) throw std::domain_error("normalize needs a nonzero rational p_1'(0)");
    Rational inv = a.as_rational().inverse();
    PolySeq out = seq;
    for (std::size_t n = 0; n < out.size(); ++n) out.entries[n] = out.entries[n] * inv.pow(static_cast<long>(n));
    return out;
}

/// Abel delta operator D e^{(-1.a)D}: coefficient of D^k is E[(-1.a)^{k-1}]/(k-1)!.
inline DeltaSeries abel_delta_operator(Alphabet& alphabet, const UmbraId& alpha, std::size_t order) {
    const MomentSeq& neg = alphabet.moments(dot_int(alphabet, -1, UmbralPoly(alpha)));
    Series f(order, SeriesVar::D);
    for (std::size_t k = 1; k <= order; ++k) f[k] = neg.moment(k - 1) / Rational(factorial(k - 1));
    return DeltaSeries(f);
}

/// Rising-factorial delta operator (e^{(-1.m)t} - 1)/(-1.m): coefficient of
/// t^k is E[(-1.m)^{k-1}]/k!.
inline DeltaSeries rising_delta_operator(Alphabet& alphabet, const UmbraId& mu, std::size_t order) {
    const MomentSeq& neg = alphabet.moments(dot_int(alphabet, -1, UmbralPoly(mu)));
    Series f(order, SeriesVar::D);
    for (std::size_t k = 1; k <= order; ++k) f[k] = neg.moment(k - 1) / Rational(factorial(k));
    return DeltaSeries(f);
}

namespace detail {

// Solves for moments m_1..m_L one at a time. At step j the value
// probe(list, n) is affine in m_j with slope `lead(n)`; m_j is set so the
// probe hits target[n].
inline std::vector<Poly> solve_moments(std::size_t L, const std::function<std::size_t(std::size_t)>& target_index,
                                       const std::function<Poly(const std::vector<Poly>&, std::size_t)>& probe,
                                       const std::function<Rational(std::size_t)>& lead, const std::vector<Poly>& targets) {
    std::vector<Poly> moments;
    for (std::size_t j = 1; j <= L; ++j) {
        moments.push_back(Poly());
        std::size_t n = target_index(j);
        Poly rest = probe(moments, n);
        moments.back() = (targets[n] - rest) / lead(n);
    }
    return moments;
}

}  // namespace detail

/// A base umbra g whose sequence x.g has the given p_k'(0) for k = 1..N
/// (targets[0] is ignored). The coefficient of x in (x.g)^k is g_k plus
/// terms in lower moments, which fixes g_k in order.
inline UmbraId umbra_for_derivatives(Alphabet& alphabet, const std::vector<Poly>& targets) {
    if (targets.size() < 2) throw std::invalid_argument("need at least p_1'(0)");
    std::size_t N = targets.size() - 1;
    auto moments = detail::solve_moments(
        N, [](std::size_t j) { return j; },
        [](const std::vector<Poly>& m, std::size_t n) {
            return dot_coeff_polys(MomentSeq::finite(m), n)[n].coefficient(vars::n(), 1);
        },
        [](std::size_t) { return Rational(1); }, targets);
    return alphabet.register_derived("solved", MomentSeq::finite(moments, "solved"), Partition::base);
}

/// An umbra a whose Abel sequence has p_n'(0) = targets[n]; needs
/// p_1'(0) = 1. E[(n.a)^{n-1}] = n a_{n-1} + (lower moments).
inline UmbraId abel_umbra_for(Alphabet& alphabet, const PolySeq& seq) {
    std::vector<Poly> d = derivatives_at_zero(seq);
    if (d.size() < 2 || !(d[1] == Poly(1))) throw std::invalid_argument("Abel presentation needs p_1(x) = x");
    std::size_t N = seq.max_index();
    auto moments = detail::solve_moments(
        N > 1 ? N - 1 : 0, [](std::size_t j) { return j + 1; },
        [](const std::vector<Poly>& m, std::size_t n) {
            Alphabet scratch;
            UmbraId a = scratch.register_umbra("a", MomentSeq::finite(m));
            return scratch.moments(dot_int(scratch, static_cast<long>(n), UmbralPoly(a))).moment(n - 1);
        },
        [](std::size_t n) { return Rational(static_cast<long>(n)); }, d);
    return alphabet.register_derived("abel-solved", MomentSeq::finite(moments, "abel-solved"), Partition::base);
}

/// An umbra m whose rising-factorial sequence has p_n'(0) = targets[n]; needs
/// p_1'(0) = 1. E[m_1 (m_1 + m_2) ...] = m_{n-1} + (lower moments).
inline UmbraId rising_umbra_for(Alphabet& alphabet, const PolySeq& seq) {
    std::vector<Poly> d = derivatives_at_zero(seq);
    if (d.size() < 2 || !(d[1] == Poly(1))) throw std::invalid_argument("rising presentation needs p_1(x) = x");
    std::size_t N = seq.max_index();
    auto moments = detail::solve_moments(
        N > 1 ? N - 1 : 0, [](std::size_t j) { return j + 1; },
        [](const std::vector<Poly>& m, std::size_t n) {
            Alphabet scratch;
            UmbraId mu = scratch.register_umbra("m", MomentSeq::finite(m));
            return detail::derivative_at_zero(rising_entries(scratch, mu, UmbralPoly(X()), n)[n]);
        },
        [](std::size_t) { return Rational(1); }, d);
    return alphabet.register_derived("rising-solved", MomentSeq::finite(moments, "rising-solved"), Partition::base);
}

/// Coefficients P_0..P_N of (z / log(1+z))^m computed three ways.
struct BlissardReport {
    unsigned m = 0;
    std::vector<Rational> direct;
    std::vector<Rational> umbral;
    std::vector<Rational> closed_form;

    /// Size of the largest group of methods that agree (1..3).
    unsigned methods_agreeing() const {
        if (direct == umbral && umbral == closed_form) return 3;
        if (direct == umbral || umbral == closed_form || direct == closed_form) return 2;
        return 1;
    }
    bool agree() const { return methods_agreeing() == 3; }
};

/// P_n three ways: series division; E[C(U, n)] with U a sum of m clones of
/// the uniform umbra; and (1/n!) sum_k s(n,k) S(m+k,m)/C(m+k,m).
inline BlissardReport blissard_example(unsigned m, std::size_t N) {
    if (m < 1) throw std::invalid_argument("blissard_example needs m >= 1");
    BlissardReport report;
    report.m = m;

    Series log1p = log(Series::constant(Poly(1), N + 1) + Series::identity(N + 1));
    Series direct = reciprocal(log1p.divide_by_var()).pow(m);
    for (std::size_t n = 0; n <= N; ++n) report.direct.push_back(direct[n].as_rational());

    Alphabet alphabet;
    UmbraId g = alphabet.register_umbra("g", MomentSeq::uniform());
    UmbralPoly U;
    for (unsigned i = 0; i < m; ++i) U += UmbralPoly(alphabet.clone_exchangeable(g));
    UmbralPoly falling(1);
    for (std::size_t n = 0; n <= N; ++n) {
        report.umbral.push_back(eval(alphabet, falling).as_rational() / Rational(factorial(n)));
        falling *= U - UmbralPoly(Rational(static_cast<long>(n)));
    }

    for (std::size_t n = 0; n <= N; ++n) {
        Rational total(0);
        for (unsigned k = 0; k <= n; ++k) {
            Rational power(oracle::stirling2(m + k, m), binomial(m + k, m));
            total = total + Rational(oracle::stirling1(static_cast<unsigned>(n), k)) * power;
        }
        report.closed_form.push_back(total / Rational(factorial(n)));
    }
    return report;
}

}  // namespace umbral
