#pragma once

// Parser for series expressions such as "exp(t)-1", "1-exp(-t)", "t-t^2",
// "(exp(z)-1)/z". Either z or t names the series variable; other identifiers
// become polynomial coefficients. Supported: + - * / ^int, exp(), log(),
// parentheses, integer literals.

#include "umbral/series.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

namespace detail {

class SeriesParser {
public:
    SeriesParser(std::string_view text, std::size_t order, SeriesVar var)
        : text_(text), order_(order), var_(var) {}

    Series parse() {
        Series s = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("series spec '" + std::string(text_) + "': " + what);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Series expr() {
        Series acc = term();
        while (true) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Series term() {
        Series acc = unary();
        while (true) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                acc = divide(acc, unary());
            } else {
                return acc;
            }
        }
    }

    Series unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Series power() {
        Series base = primary();
        if (!eat('^')) return base;
        bool negative = eat('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be an integer");
        auto e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        return negative ? reciprocal(base.pow(e)) : base.pow(e);
    }

    Series primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Series s = expr();
            if (!eat(')')) fail("missing ')'");
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Series::constant(Poly(Rational::parse(text_.substr(start, pos_ - start))), order_, var_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "exp" || name == "log") {
                if (!eat('(')) fail("expected '(' after " + name);
                Series arg = expr();
                if (!eat(')')) fail("missing ')'");
                try {
                    return name == "exp" ? umbral::exp(arg) : umbral::log(arg);
                } catch (const std::domain_error& e) {
                    fail(e.what());
                }
            }
            if (name == "z" || name == "t" || name == "D") return Series::identity(order_, var_);
            return Series::constant(Poly::variable(Var::parse(name)), order_, var_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // Cancels common powers of the variable before inverting the denominator.
    Series divide(const Series& num, const Series& den) {
        std::size_t shift = 0;
        while (shift <= den.order() && den[shift].is_zero()) ++shift;
        if (shift > den.order()) fail("division by zero series");
        Series a = num;
        Series b = den;
        for (std::size_t i = 0; i < shift; ++i) {
            if (!a[0].is_zero()) fail("division leaves a pole");
            a = a.divide_by_var();
            b = b.divide_by_var();
        }
        try {
            return a * reciprocal(b);
        } catch (const std::domain_error& e) {
            fail(e.what());
        }
    }

    std::string_view text_;
    std::size_t order_;
    SeriesVar var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a series expression, exact to the given order. Divisions by a
/// power of the variable consume order, so the parse runs with headroom.
inline Series parse_series(std::string_view text, std::size_t order, SeriesVar var = SeriesVar::z) {
    constexpr std::size_t headroom = 8;
    Series s = detail::SeriesParser(text, order + headroom, var).parse();
    if (s.order() < order) throw std::invalid_argument("series spec '" + std::string(text) + "' loses too much order");
    return s.truncate(order);
}

}  // namespace umbral
