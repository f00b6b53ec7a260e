#pragma once

// Umbrae, their moment sequences, and the evaluation map E.
//
// An umbra is a symbol whose k-th power evaluates to the k-th entry of its
// moment sequence. Distinct umbrae are independent: E factors over monomials
// that share no umbra.

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umbral {

/// Lazily realized, memoized sequence m_0 = 1, m_1, m_2, ... of polynomials.
/// Copies share the memo.
class MomentSeq {
public:
    /// Fills memo up to at least index `upto` (memo already holds m_0..).
    using Extender = std::function<void(std::vector<Poly>& memo, std::size_t upto)>;

    MomentSeq() : MomentSeq(epsilon()) {}

    static MomentSeq closed_form(std::function<Poly(std::size_t)> f, std::string description) {
        return MomentSeq(std::move(description), std::nullopt, [f = std::move(f)](std::vector<Poly>& memo, std::size_t upto) {
            while (memo.size() <= upto) memo.push_back(f(memo.size()));
        });
    }

    /// m_k computed from k and m_0..m_{k-1}.
    static MomentSeq recursive(std::function<Poly(std::size_t, const std::vector<Poly>&)> rule, std::string description,
                               std::optional<std::size_t> limit = std::nullopt) {
        return MomentSeq(std::move(description), limit,
                         [rule = std::move(rule)](std::vector<Poly>& memo, std::size_t upto) {
                             while (memo.size() <= upto) memo.push_back(rule(memo.size(), memo));
                         });
    }

    /// Explicit m_1..m_L; requesting m_k for k > L is an error.
    static MomentSeq finite(std::vector<Poly> from_first, std::string description = "list") {
        std::size_t limit = from_first.size();
        auto values = std::make_shared<std::vector<Poly>>(std::move(from_first));
        return MomentSeq(std::move(description), limit, [values](std::vector<Poly>& memo, std::size_t upto) {
            while (memo.size() <= upto) memo.push_back((*values)[memo.size() - 1]);
        });
    }

    /// Moments read off an exponential generating function that can be
    /// produced to any requested order. Orders grow geometrically.
    /// A `limit` caps the orders requested (and the moments available).
    static MomentSeq from_egf_builder(std::function<Series(std::size_t)> build, std::string description,
                                      std::optional<std::size_t> limit = std::nullopt) {
        return MomentSeq(std::move(description), limit,
                         [build = std::move(build), limit](std::vector<Poly>& memo, std::size_t upto) {
                             std::size_t order = std::max<std::size_t>({upto, 2 * memo.size(), 8});
                             if (limit) order = std::min(order, *limit);
                             Series egf = build(order);
                             if (!(egf[0] == Poly(1))) throw std::invalid_argument("moment series must have constant term 1");
                             for (std::size_t k = memo.size(); k <= order; ++k) memo.push_back(egf.egf_value(k));
                         });
    }

    /// Moments read off a fixed EGF; finite, up to the series order.
    static MomentSeq from_egf(const Series& egf, std::string description = "egf") {
        if (!(egf[0] == Poly(1))) throw std::invalid_argument("moment series must have constant term 1");
        std::vector<Poly> values;
        for (std::size_t k = 1; k <= egf.order(); ++k) values.push_back(egf.egf_value(k));
        return finite(std::move(values), std::move(description));
    }

    static MomentSeq uniform() {
        return closed_form([](std::size_t k) { return Poly(Rational(1, static_cast<long>(k) + 1)); }, "uniform");
    }
    static MomentSeq constant(const Poly& c) {
        return closed_form([c](std::size_t k) { return c.pow(static_cast<std::uint32_t>(k)); }, "const:" + c.str());
    }
    static MomentSeq epsilon() {
        return closed_form([](std::size_t k) { return Poly(k == 0 ? 1 : 0); }, "eps");
    }
    /// Symbolic moments stem_1, stem_2, ...
    static MomentSeq generic(const std::string& stem) {
        return closed_form([stem](std::size_t k) { return Poly::variable(Var(stem, static_cast<std::uint32_t>(k))); },
                           "generic:" + stem);
    }

    /// Moments of the umbra b with b + g exchangeable with the zero umbra:
    /// b_0 = 1, b_n = -sum_{i<n} C(n,i) b_i g_{n-i}.
    static MomentSeq inverse_of(const MomentSeq& g) {
        return recursive(
            [g](std::size_t n, const std::vector<Poly>& b) {
                Poly acc;
                for (std::size_t i = 0; i < n; ++i) {
                    const Poly& gi = g.moment(n - i);
                    if (!gi.is_zero() && !b[i].is_zero())
                        acc += b[i] * gi * Rational(binomial(static_cast<long>(n), static_cast<long>(i)));
                }
                return -acc;
            },
            "inverse(" + g.description() + ")", g.limit());
    }

    static MomentSeq bernoulli() {
        MomentSeq b = inverse_of(uniform());
        b.impl_->description = "bernoulli";
        return b;
    }

    Poly moment(std::size_t k) const {
        std::lock_guard lock(impl_->mutex);
        if (k == 0) return Poly(1);
        if (impl_->limit && k > *impl_->limit)
            throw std::out_of_range("moment " + std::to_string(k) + " requested but only " +
                                    std::to_string(*impl_->limit) + " are given");
        if (impl_->memo.size() <= k) impl_->extend(impl_->memo, k);
        return impl_->memo[k];
    }
    Poly operator[](std::size_t k) const { return moment(k); }

    /// m_0..m_upto.
    std::vector<Poly> moments(std::size_t upto) const {
        std::vector<Poly> out;
        out.reserve(upto + 1);
        for (std::size_t k = 0; k <= upto; ++k) out.push_back(moment(k));
        return out;
    }

    /// Exponential generating function sum m_k z^k / k! to the given order.
    Series egf(std::size_t order) const { return Series::from_egf_values(moments(order), order); }

    std::optional<std::size_t> limit() const { return impl_->limit; }
    const std::string& description() const { return impl_->description; }

private:
    struct Impl {
        std::string description;
        std::optional<std::size_t> limit;
        Extender extend;
        std::vector<Poly> memo{Poly(1)};
        std::mutex mutex;
    };

    MomentSeq(std::string description, std::optional<std::size_t> limit, Extender extend)
        : impl_(std::make_shared<Impl>()) {
        impl_->description = std::move(description);
        impl_->limit = limit;
        impl_->extend = std::move(extend);
    }

    std::shared_ptr<Impl> impl_;
};

/// Base name plus copy index; copy k > 0 prints with k primes.
struct UmbraId {
    std::string name;
    std::uint32_t copy = 0;

    std::string str() const { return name + std::string(copy, '\''); }

    friend bool operator==(const UmbraId&, const UmbraId&) = default;
    friend auto operator<=>(const UmbraId&, const UmbraId&) = default;
};

enum class Partition { base, auxiliary };

/// Registry of umbrae. Bindings are only ever added. Writes must be
/// serialized by the caller; concurrent reads are safe.
class Alphabet {
public:
    UmbraId register_umbra(const std::string& name, const MomentSeq& m) {
        if (name.empty()) throw std::invalid_argument("umbra name must not be empty");
        if (next_copy_.count(name)) throw std::invalid_argument("umbra name '" + name + "' is already registered");
        return add(UmbraId{name, 0}, m, Partition::base);
    }

    /// Registers under a generated unique name.
    UmbraId register_derived(const std::string& description, const MomentSeq& m, Partition partition) {
        std::string name = description;
        while (next_copy_.count(name)) name = description + "#" + std::to_string(++serial_);
        return add(UmbraId{name, 0}, m, partition);
    }

    UmbraId register_auxiliary(const std::string& description, const MomentSeq& m) {
        return register_derived(description, m, Partition::auxiliary);
    }

    /// A fresh umbra with the same moments, independent of every existing one.
    UmbraId clone_exchangeable(const UmbraId& id) {
        const Entry& e = entry(id);
        MomentSeq m = e.moments;
        Partition p = e.partition;
        UmbraId fresh{id.name, ++next_copy_.at(id.name)};
        return add(fresh, m, p);
    }

    bool contains(const UmbraId& id) const { return entries_.count(id) > 0; }
    const MomentSeq& moments(const UmbraId& id) const { return entry(id).moments; }
    Partition partition(const UmbraId& id) const { return entry(id).partition; }
    bool is_auxiliary(const UmbraId& id) const { return partition(id) == Partition::auxiliary; }
    std::size_t size() const { return entries_.size(); }

    /// Copy holding only the given umbrae; shares their memoized moments.
    Alphabet restricted_to(const std::set<UmbraId>& ids) const {
        Alphabet a;
        for (const auto& id : ids) {
            a.entries_.emplace(id, entry(id));
            a.next_copy_.try_emplace(id.name, 0);
        }
        return a;
    }

private:
    struct Entry {
        MomentSeq moments;
        Partition partition;
    };

    UmbraId add(const UmbraId& id, const MomentSeq& m, Partition p) {
        entries_.emplace(id, Entry{m, p});
        next_copy_.try_emplace(id.name, 0);
        return id;
    }

    const Entry& entry(const UmbraId& id) const {
        auto it = entries_.find(id);
        if (it == entries_.end()) throw std::out_of_range("unknown umbra '" + id.str() + "'");
        return it->second;
    }

    std::map<UmbraId, Entry> entries_;
    std::map<std::string, std::uint32_t> next_copy_;
    std::uint64_t serial_ = 0;
};

class UmbralMonomial {
public:
    using Factor = std::pair<UmbraId, std::uint32_t>;

    UmbralMonomial() = default;
    explicit UmbralMonomial(const UmbraId& id, std::uint32_t e = 1) {
        if (e > 0) factors_.emplace_back(id, e);
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    std::uint32_t exponent(const UmbraId& id) const {
        for (const auto& f : factors_)
            if (f.first == id) return f.second;
        return 0;
    }

    std::pair<UmbralMonomial, std::uint32_t> split(const UmbraId& id) const {
        UmbralMonomial rest;
        std::uint32_t e = 0;
        for (const auto& f : factors_) {
            if (f.first == id) {
                e = f.second;
            } else {
                rest.factors_.push_back(f);
            }
        }
        return {rest, e};
    }

    friend UmbralMonomial operator*(const UmbralMonomial& a, const UmbralMonomial& b) {
        UmbralMonomial r;
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first < j->first) {
                r.factors_.push_back(*i++);
            } else if (j->first < i->first) {
                r.factors_.push_back(*j++);
            } else {
                r.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, a.factors_.end());
        r.factors_.insert(r.factors_.end(), j, b.factors_.end());
        return r;
    }

    std::string str() const {
        std::string s;
        for (const auto& [id, e] : factors_) {
            if (!s.empty()) s += '*';
            s += id.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    friend bool operator==(const UmbralMonomial&, const UmbralMonomial&) = default;
    friend auto operator<=>(const UmbralMonomial&, const UmbralMonomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Polynomial in umbrae with coefficients in Poly.
class UmbralPoly {
public:
    using Terms = std::map<UmbralMonomial, Poly>;

    UmbralPoly() = default;
    UmbralPoly(const Poly& scalar) {  // NOLINT(implicit)
        if (!scalar.is_zero()) terms_.emplace(UmbralMonomial{}, scalar);
    }
    UmbralPoly(const Rational& c) : UmbralPoly(Poly(c)) {}  // NOLINT(implicit)
    UmbralPoly(long c) : UmbralPoly(Poly(c)) {}            // NOLINT(implicit)
    UmbralPoly(int c) : UmbralPoly(Poly(c)) {}             // NOLINT(implicit)
    UmbralPoly(const UmbraId& id) { terms_.emplace(UmbralMonomial(id), Poly(1)); }  // NOLINT(implicit)

    static UmbralPoly umbra(const UmbraId& id, std::uint32_t e = 1) {
        UmbralPoly p;
        p.terms_.emplace(UmbralMonomial(id, e), Poly(1));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    Poly scalar_part() const {
        auto it = terms_.find(UmbralMonomial{});
        return it == terms_.end() ? Poly() : it->second;
    }

    /// Umbrae that occur to a positive power in some term.
    std::set<UmbraId> support() const {
        std::set<UmbraId> s;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) s.insert(f.first);
        return s;
    }

    void add_term(const UmbralMonomial& m, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    UmbralPoly& operator+=(const UmbralPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    UmbralPoly& operator-=(const UmbralPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    UmbralPoly& operator*=(const UmbralPoly& o) { return *this = *this * o; }

    friend UmbralPoly operator+(UmbralPoly a, const UmbralPoly& b) { return a += b; }
    friend UmbralPoly operator-(UmbralPoly a, const UmbralPoly& b) { return a -= b; }
    friend UmbralPoly operator-(const UmbralPoly& a) {
        UmbralPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend UmbralPoly operator*(const UmbralPoly& a, const UmbralPoly& b) {
        UmbralPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    UmbralPoly pow(std::uint32_t e) const {
        UmbralPoly result(1);
        UmbralPoly base = *this;
        while (e) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return result;
    }

    /// Replaces every occurrence of umbra `id` by `replacement`.
    UmbralPoly substitute(const UmbraId& id, const UmbralPoly& replacement) const {
        UmbralPoly r;
        std::map<std::uint32_t, UmbralPoly> powers;
        for (const auto& [m, c] : terms_) {
            auto [rest, e] = m.split(id);
            UmbralPoly term;
            term.terms_.emplace(rest, c);
            if (e > 0) {
                auto it = powers.find(e);
                if (it == powers.end()) it = powers.emplace(e, replacement.pow(e)).first;
                term *= it->second;
            }
            r += term;
        }
        return r;
    }

    /// p with the scalar variable v replaced by an umbral polynomial.
    static UmbralPoly substitute_variable(const Poly& p, const Var& v, const UmbralPoly& replacement) {
        UmbralPoly r;
        std::map<std::uint32_t, UmbralPoly> powers;
        for (const auto& [m, c] : p.terms()) {
            auto [rest, e] = m.split(v);
            UmbralPoly term(Poly::term(rest, c));
            if (e > 0) {
                auto it = powers.find(e);
                if (it == powers.end()) it = powers.emplace(e, replacement.pow(e)).first;
                term *= it->second;
            }
            r += term;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string t;
            if (m.empty()) {
                t = c.str();
            } else if (c == Poly(1)) {
                t = m.str();
            } else if (c == Poly(-1)) {
                t = "-" + m.str();
            } else {
                t = "(" + c.str() + ")*" + m.str();
            }
            if (!s.empty() && t.front() != '-') s += '+';
            s += t;
        }
        return s;
    }

    friend bool operator==(const UmbralPoly&, const UmbralPoly&) = default;

private:
    Terms terms_;
};

/// The evaluation map: F-linear, E[1] = 1, and multiplicative across
/// distinct umbrae.
inline Poly eval(const Alphabet& alphabet, const UmbralPoly& p) {
    Poly result;
    for (const auto& [m, c] : p.terms()) {
        Poly value = c;
        for (const auto& [id, e] : m.factors()) {
            value *= alphabet.moments(id).moment(e);
            if (value.is_zero()) break;
        }
        result += value;
    }
    return result;
}

/// Applies E to one umbra only, leaving the others symbolic.
inline UmbralPoly eval_partial(const Alphabet& alphabet, const UmbralPoly& p, const UmbraId& id) {
    const MomentSeq& m = alphabet.moments(id);
    UmbralPoly result;
    for (const auto& [mono, c] : p.terms()) {
        auto [rest, e] = mono.split(id);
        result.add_term(rest, e == 0 ? c : c * m.moment(e));
    }
    return result;
}

inline bool umbrally_equivalent(const Alphabet& alphabet, const UmbralPoly& p, const UmbralPoly& q) {
    return eval(alphabet, p) == eval(alphabet, q);
}

/// p^k and q^k umbrally equivalent for every 0 <= k <= order.
inline bool exchangeable_up_to(const Alphabet& alphabet, const UmbralPoly& p, const UmbralPoly& q, std::size_t order) {
    UmbralPoly pk(1);
    UmbralPoly qk(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (!(eval(alphabet, pk) == eval(alphabet, qk))) return false;
        pk *= p;
        qk *= q;
    }
    return true;
}

/// No umbra occurs in both.
inline bool independent(const UmbralPoly& p, const UmbralPoly& q) {
    auto sp = p.support();
    for (const auto& id : q.support())
        if (sp.count(id)) return false;
    return true;
}

/// Registers the inverse umbra b of a base umbra g, so that b + g is
/// exchangeable with the zero umbra.
inline UmbraId inverse_umbra(Alphabet& alphabet, const UmbraId& g) {
    if (alphabet.is_auxiliary(g)) throw std::invalid_argument("inverse_umbra needs a base umbra");
    return alphabet.register_derived("inv(" + g.str() + ")", MomentSeq::inverse_of(alphabet.moments(g)), Partition::base);
}

}  // namespace umbral
