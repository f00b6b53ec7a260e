#pragma once

// Sparse multivariate polynomials over Rational.
//
// A polynomial is a map from monomials to nonzero coefficients. The map is
// ordered exactly as terms are printed: descending total degree, then
// lexicographically descending with variables ranked by (stem, index).

#include "umbral/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umbral {

/// A commuting indeterminate: a stem such as "x" or "a", with an optional
/// positive subscript ("a_3"). Index 0 means unsubscripted.
struct Var {
    std::string stem;
    std::uint32_t index = 0;

    Var() = default;
    Var(std::string s, std::uint32_t i = 0) : stem(std::move(s)), index(i) {}  // NOLINT
    Var(const char* s) : Var(parse(s)) {}  // NOLINT(implicit)

    static Var parse(std::string_view name) {
        auto us = name.rfind('_');
        if (us != std::string_view::npos && us + 1 < name.size() && us > 0) {
            auto digits = name.substr(us + 1);
            if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                return Var(std::string(name.substr(0, us)),
                           static_cast<std::uint32_t>(std::stoul(std::string(digits))));
            }
        }
        if (name.empty()) throw std::invalid_argument("empty variable name");
        return Var(std::string(name), 0);
    }

    std::string name() const { return index == 0 ? stem : stem + "_" + std::to_string(index); }

    friend bool operator==(const Var&, const Var&) = default;
    friend auto operator<=>(const Var& a, const Var& b) {
        if (auto c = a.stem.compare(b.stem); c != 0) return c <=> 0;
        return a.index <=> b.index;
    }
};

/// Power product of variables; factors sorted by Var, exponents positive.
class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(const Var& v, std::uint32_t e = 1) {
        if (e > 0) {
            factors_.emplace_back(v, e);
            degree_ = e;
        }
    }
    Monomial(std::initializer_list<Factor> fs) {
        for (const auto& [v, e] : fs) *this = *this * Monomial(v, e);
    }

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t total_degree() const { return degree_; }
    bool empty() const { return factors_.empty(); }

    std::uint32_t exponent(const Var& v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, const Var& x) { return f.first < x; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.factors_.reserve(a.factors_.size() + b.factors_.size());
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
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// Monomial with v's exponent removed, and that exponent.
    std::pair<Monomial, std::uint32_t> split(const Var& v) const {
        Monomial rest;
        std::uint32_t e = 0;
        for (const auto& f : factors_) {
            if (f.first == v) {
                e = f.second;
            } else {
                rest.factors_.push_back(f);
                rest.degree_ += f.second;
            }
        }
        return {rest, e};
    }

    std::string str() const {
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += '*';
            s += v.name();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    /// Print order: true when a is printed before b.
    struct Order {
        bool operator()(const Monomial& a, const Monomial& b) const {
            if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
            auto i = a.factors_.begin();
            auto j = b.factors_.begin();
            for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
                if (i->first != j->first) return i->first < j->first;
                if (i->second != j->second) return i->second > j->second;
            }
            return i != a.factors_.end() && j == b.factors_.end();
        }
    };

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational, Monomial::Order>;

    Poly() = default;
    Poly(const Rational& c) {  // NOLINT(implicit)
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(implicit)
    Poly(int c) : Poly(Rational(c)) {}   // NOLINT(implicit)

    static Poly variable(const Var& v, std::uint32_t e = 1) { return term(Monomial(v, e), Rational(1)); }
    static Poly term(Monomial m, const Rational& c) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    Rational constant_term() const {
        if (terms_.empty()) return {};
        auto last = std::prev(terms_.end());
        return last->first.empty() ? last->second : Rational{};
    }

    /// The value of a constant polynomial; throws if any variable occurs.
    Rational as_rational() const {
        if (!is_constant()) throw std::invalid_argument("polynomial '" + str() + "' is not a constant");
        return constant_term();
    }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.total_degree()); }

    /// Degree in v; -1 for the zero polynomial.
    long degree(const Var& v) const {
        if (terms_.empty()) return -1;
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, m.exponent(v));
        return d;
    }

    std::set<Var> variables() const {
        std::set<Var> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& f : m.factors()) vs.insert(f.first);
        return vs;
    }

    bool contains(const Var& v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly a, long s) { return a *= Rational(s); }
    friend Poly operator*(Poly a, int s) { return a *= Rational(s); }
    friend Poly operator*(long s, Poly a) { return a *= Rational(s); }
    friend Poly operator*(int s, Poly a) { return a *= Rational(s); }
    friend Poly operator/(Poly a, const Rational& s) { return a *= s.inverse(); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b * a.constant_term();
        if (b.is_constant()) return a * b.constant_term();
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly pow(std::uint32_t e) const {
        Poly result(1);
        Poly base = *this;
        while (e) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e) base *= base;
        }
        return result;
    }

    Poly derivative(const Var& v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            auto [rest, e] = m.split(v);
            if (e == 0) continue;
            r.add_term(rest * Monomial(v, e - 1), c * Rational(static_cast<long>(e)));
        }
        return r;
    }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coefficient(const Var& v, std::uint32_t k) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            auto [rest, e] = m.split(v);
            if (e == k) r.add_term(rest, c);
        }
        return r;
    }

    /// Simultaneous substitution of every bound variable; unbound variables stay.
    Poly substitute(const std::map<Var, Poly>& bindings) const {
        Poly r;
        std::map<std::pair<Var, std::uint32_t>, Poly> powers;
        auto power_of = [&](const Var& v, std::uint32_t e) -> const Poly& {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
            return it->second;
        };
        for (const auto& [m, c] : terms_) {
            Monomial kept;
            Poly value(c);
            for (const auto& [v, e] : m.factors()) {
                if (bindings.count(v)) {
                    value *= power_of(v, e);
                } else {
                    kept = kept * Monomial(v, e);
                }
            }
            if (kept.empty()) {
                r += value;
            } else {
                r += value * Poly::term(kept, Rational(1));
            }
        }
        return r;
    }

    /// As substitute(), but every variable in `required` must have a binding.
    Poly substitute(const std::map<Var, Poly>& bindings, std::span<const Var> required) const {
        for (const auto& v : required)
            if (!bindings.count(v)) throw std::invalid_argument("no binding for variable '" + v.name() + "'");
        return substitute(bindings);
    }

    Poly evaluate(const Var& v, const Rational& value) const { return substitute({{v, Poly(value)}}); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string t;
            if (m.empty()) {
                t = c.str();
            } else if (c.is_one()) {
                t = m.str();
            } else if (c == Rational(-1)) {
                t = "-" + m.str();
            } else if (c.is_integer()) {
                t = c.str() + m.str();
            } else {
                t = c.str() + "*" + m.str();
            }
            if (!s.empty() && t.front() != '-') s += '+';
            s += t;
        }
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
            if (!(i->first == j->first) || !(i->second == j->second)) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    Terms terms_;
};

namespace vars {
inline Var x() { return Var("x"); }
inline Var y() { return Var("y"); }
inline Var n() { return Var("n"); }
inline Var moment(const std::string& stem, std::uint32_t k) { return Var(stem, k); }
}  // namespace vars

inline Poly X() { return Poly::variable(vars::x()); }

}  // namespace umbral
