#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

using Integer = mpz_class;

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(implicit)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(trim_plus(s)));
            return Rational(Integer(trim_plus(s.substr(0, slash))),
                            Integer(trim_plus(s.substr(slash + 1))));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + s + "'");
        }
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational r;
        r.value_ = 1 / value_;
        return r;
    }

    Rational pow(long exponent) const {
        if (exponent < 0) return inverse().pow(-exponent);
        Rational result(1);
        Rational base = *this;
        auto e = static_cast<unsigned long>(exponent);
        while (e) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const {
        return std::hash<std::string>{}(str());
    }

private:
    static std::string trim_plus(std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (!s.empty() && s.front() == '+') s.erase(s.begin());
        if (s.empty()) throw std::invalid_argument("empty");
        for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("digit");
        if (s == "-") throw std::invalid_argument("sign");
        return s;
    }

    mpq_class value_{0};
};

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k) for integer n of either sign; zero for k < 0.
inline Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        Integer big_n(n);
        mpz_bin_ui(r.get_mpz_t(), big_n.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

}  // namespace umbral
