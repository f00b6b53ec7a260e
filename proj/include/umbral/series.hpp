#pragma once

// Truncated formal power series with polynomial coefficients.
//
// A Series of order N stores exactly N+1 coefficients c_0..c_N and stands for
// c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}). Binary operations truncate to the
// smaller order of their operands.

#include "umbral/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace umbral {

enum class SeriesVar { z, D };

inline const char* name_of(SeriesVar v) { return v == SeriesVar::z ? "z" : "D"; }

class Series {
public:
    explicit Series(std::size_t order, SeriesVar var = SeriesVar::z) : coeffs_(order + 1), var_(var) {}
    Series(std::vector<Poly> coeffs, SeriesVar var = SeriesVar::z) : coeffs_(std::move(coeffs)), var_(var) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    static Series constant(const Poly& c, std::size_t order, SeriesVar var = SeriesVar::z) {
        Series s(order, var);
        s.coeffs_[0] = c;
        return s;
    }
    /// The series z (or D) itself.
    static Series identity(std::size_t order, SeriesVar var = SeriesVar::z) {
        Series s(order, var);
        if (order >= 1) s.coeffs_[1] = Poly(1);
        return s;
    }
    /// Sum of c_k z^k / k! from the given values c_0, c_1, ...
    static Series from_egf_values(const std::vector<Poly>& values, std::size_t order, SeriesVar var = SeriesVar::z) {
        if (values.size() < order + 1) throw std::out_of_range("not enough values for requested order");
        Series s(order, var);
        for (std::size_t k = 0; k <= order; ++k) s.coeffs_[k] = values[k] / Rational(factorial(k));
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    SeriesVar var() const { return var_; }
    const std::vector<Poly>& coefficients() const { return coeffs_; }
    const Poly& operator[](std::size_t k) const { return coeffs_.at(k); }
    Poly& operator[](std::size_t k) { return coeffs_.at(k); }

    /// k! times the coefficient of z^k.
    Poly egf_value(std::size_t k) const { return coeffs_.at(k) * Rational(factorial(k)); }

    Series truncate(std::size_t order) const {
        if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
        return Series(std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1), var_);
    }

    Series with_var(SeriesVar v) const {
        Series s = *this;
        s.var_ = v;
        return s;
    }

    bool has_rational_coefficients() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_constant(); });
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()), a.var_);
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()), a.var_);
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }
    friend Series operator-(const Series& a) {
        Series r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Series operator*(const Series& a, const Poly& s) {
        Series r = a;
        for (auto& c : r.coeffs_) c = c * s;
        return r;
    }
    friend Series operator*(const Poly& s, const Series& a) { return a * s; }

    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()), a.var_);
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    Series pow(std::size_t e) const {
        Series result = constant(Poly(1), order(), var_);
        Series base = *this;
        while (e) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e) base = base * base;
        }
        return result;
    }

    /// Formal derivative; the order drops by one (order 0 stays order 0).
    Series derivative() const {
        if (order() == 0) return Series(0, var_);
        Series r(order() - 1, var_);
        for (std::size_t k = 1; k <= order(); ++k) r.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        return r;
    }

    /// f(z)/z for a series with zero constant term; the order drops by one.
    Series divide_by_var() const {
        if (!coeffs_[0].is_zero()) throw std::domain_error("series has a nonzero constant term");
        if (order() == 0) throw std::domain_error("series of order 0 cannot be divided by its variable");
        return Series(std::vector<Poly>(coeffs_.begin() + 1, coeffs_.end()), var_);
    }

    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k <= order(); ++k) {
            const Poly& c = coeffs_[k];
            if (c.is_zero()) continue;
            std::string power = k == 0 ? "" : k == 1 ? std::string(name_of(var_)) : std::string(name_of(var_)) + "^" + std::to_string(k);
            std::string body;
            bool negative = false;
            if (c.size() == 1) {
                Rational coeff = c.terms().begin()->second;
                negative = coeff.sign() < 0;
                Poly magnitude = negative ? -c : c;
                body = magnitude.str();
                if (!power.empty()) body = (k > 0 && magnitude == Poly(1)) ? power : body + "*" + power;
            } else {
                body = power.empty() ? "(" + c.str() + ")" : "(" + c.str() + ")*" + power;
            }
            if (s.empty()) {
                s = negative ? "-" + body : body;
            } else {
                s += negative ? " - " : " + ";
                s += body;
            }
        }
        if (s.empty()) s = "0";
        return s + " + O(" + name_of(var_) + "^" + std::to_string(order() + 1) + ")";
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Poly> coeffs_;
    SeriesVar var_ = SeriesVar::z;
};

/// A series f with f(0) = 0 and f'(0) a nonzero rational.
class DeltaSeries {
public:
    explicit DeltaSeries(Series s) : series_(std::move(s)) {
        if (series_.order() < 1) throw std::invalid_argument("delta series needs order at least 1");
        if (!series_[0].is_zero()) throw std::invalid_argument("delta series must have zero constant term");
        if (!series_[1].is_constant() || series_[1].is_zero())
            throw std::invalid_argument("delta series needs a nonzero rational linear coefficient");
    }

    const Series& series() const { return series_; }
    std::size_t order() const { return series_.order(); }
    const Poly& operator[](std::size_t k) const { return series_[k]; }
    Rational linear_coefficient() const { return series_[1].as_rational(); }

    friend bool operator==(const DeltaSeries& a, const DeltaSeries& b) { return a.series_ == b.series_; }

private:
    Series series_;
};

/// 1/f; the constant term must be a nonzero rational.
inline Series reciprocal(const Series& f) {
    if (!f[0].is_constant() || f[0].is_zero())
        throw std::domain_error("reciprocal needs an invertible rational constant term");
    Rational inv0 = f[0].as_rational().inverse();
    Series r(f.order(), f.var());
    r[0] = Poly(inv0);
    for (std::size_t k = 1; k <= f.order(); ++k) {
        Poly acc;
        for (std::size_t i = 1; i <= k; ++i)
            if (!f[i].is_zero()) acc += f[i] * r[k - i];
        r[k] = -acc * inv0;
    }
    return r;
}

/// exp(f) for f(0) = 0, via k h_k = sum_j j f_j h_{k-j}.
inline Series exp(const Series& f) {
    if (!f[0].is_zero()) throw std::domain_error("exp needs a zero constant term");
    Series h(f.order(), f.var());
    h[0] = Poly(1);
    for (std::size_t k = 1; k <= f.order(); ++k) {
        Poly acc;
        for (std::size_t j = 1; j <= k; ++j)
            if (!f[j].is_zero()) acc += f[j] * h[k - j] * Rational(static_cast<long>(j));
        h[k] = acc / Rational(static_cast<long>(k));
    }
    return h;
}

/// log(f) for f(0) = 1, via k g_k = k f_k - sum_{j<k} j g_j f_{k-j}.
inline Series log(const Series& f) {
    if (!(f[0] == Poly(1))) throw std::domain_error("log needs constant term 1");
    Series g(f.order(), f.var());
    for (std::size_t k = 1; k <= f.order(); ++k) {
        Poly acc = f[k] * Rational(static_cast<long>(k));
        for (std::size_t j = 1; j < k; ++j)
            if (!g[j].is_zero() && !f[k - j].is_zero()) acc -= g[j] * f[k - j] * Rational(static_cast<long>(j));
        g[k] = acc / Rational(static_cast<long>(k));
    }
    return g;
}

/// f(g(z)) for g(0) = 0, by Horner nesting.
inline Series compose(const Series& f, const Series& g) {
    if (!g[0].is_zero()) throw std::domain_error("inner series of a composition must have zero constant term");
    std::size_t order = std::min(f.order(), g.order());
    Series inner = g.truncate(order);
    Series r = Series::constant(f[order], order, f.var());
    for (std::size_t k = order; k-- > 0;) {
        r = r * inner;
        r[0] += f[k];
    }
    return r;
}

/// Compositional inverse: h with f(h(z)) = h(f(z)) = z to the order of f.
/// Solved one coefficient at a time from [z^k] f(h(z)) = 0 for k >= 2.
inline DeltaSeries comp_inverse(const DeltaSeries& f) {
    const std::size_t order = f.order();
    Rational inv1 = f.linear_coefficient().inverse();
    Series h(order, f.series().var());
    h[1] = Poly(inv1);
    for (std::size_t k = 2; k <= order; ++k) {
        // Only h_1..h_{k-1} influence [z^k] of f(h) apart from the linear term f_1 h_k.
        Series partial = h.truncate(k);
        Series composed = compose(f.series().truncate(k), partial);
        h[k] = -composed[k] * inv1;
    }
    return DeltaSeries(h);
}

/// Sum_k T_k D^k p with D = d/d(var). T must reach at least deg_var(p) and
/// its coefficients must not involve var.
inline Poly apply_operator_series(const Series& op, const Poly& p, const Var& var = vars::x()) {
    long deg = p.degree(var);
    if (deg > static_cast<long>(op.order()))
        throw std::out_of_range("operator series of order " + std::to_string(op.order()) +
                                " cannot act on a polynomial of degree " + std::to_string(deg));
    for (std::size_t k = 0; k <= op.order(); ++k)
        if (op[k].contains(var)) throw std::invalid_argument("operator coefficients must be constant in " + var.name());
    Poly result;
    Poly derived = p;
    for (long k = 0; k <= deg; ++k) {
        if (!op[static_cast<std::size_t>(k)].is_zero()) result += op[static_cast<std::size_t>(k)] * derived;
        derived = derived.derivative(var);
    }
    return result;
}

}  // namespace umbral
