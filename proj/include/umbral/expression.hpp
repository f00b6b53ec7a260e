#pragma once

// Small umbral expression language:
//   expr    := term (('+' | '-') term)*
//   term    := chain (('*' | '·') chain)*
//   chain   := power ('.' power)*          dot, folded from the right
//   power   := atom ('^' integer)?
//   atom    := integer | integer '/' integer | 'x' | name '\''* | '(' expr ')' | '-' atom
// A name with k primes is the k-th exchangeable clone of that umbra.

#include "umbral/dot.hpp"
#include "umbral/umbra.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umbral {

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    UmbralPoly parse() {
        UmbralPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression '" + std::string(text_) + "': " + what);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    UmbralPoly expr() {
        UmbralPoly acc = term();
        while (true) {
            if (eat("+")) {
                acc += term();
            } else if (eat("-")) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    UmbralPoly term() {
        UmbralPoly acc = chain();
        while (eat("*") || eat("\xC2\xB7")) acc *= chain();
        return acc;
    }

    UmbralPoly chain() {
        std::vector<UmbralPoly> operands{power()};
        while (eat(".")) operands.push_back(power());
        if (operands.size() == 1) return operands.front();
        try {
            return UmbralPoly(dot_chain(alphabet_, operands));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    UmbralPoly power() {
        UmbralPoly base = atom();
        if (!eat("^")) return base;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be a non-negative integer");
        return base.pow(static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    UmbralPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            UmbralPoly p = expr();
            if (!eat(")")) fail("missing ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty()) fail("malformed fraction");
                try {
                    return UmbralPoly(Rational::parse(num + "/" + den));
                } catch (const std::exception& e) {
                    fail(e.what());
                }
            }
            return UmbralPoly(Rational::parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            std::uint32_t copy = 0;
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                ++copy;
                ++pos_;
            }
            if (name == "x") {
                if (copy) fail("the variable x has no clones");
                return UmbralPoly(X());
            }
            return UmbralPoly(resolve(name, copy));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    UmbraId resolve(const std::string& name, std::uint32_t copy) {
        UmbraId id{name, copy};
        if (alphabet_.contains(id)) return id;
        if (!alphabet_.contains(UmbraId{name, 0})) fail("unknown umbra '" + name + "'");
        while (!alphabet_.contains(id)) {
            UmbraId made = alphabet_.clone_exchangeable(UmbraId{name, 0});
            if (made.copy > copy) fail("clone '" + id.str() + "' is unavailable");
        }
        return id;
    }

    std::string_view text_;
    Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression over the umbrae of `alphabet`; dots register
/// auxiliary umbrae and primes register clones as needed.
inline UmbralPoly parse_umbral_expression(std::string_view text, Alphabet& alphabet) {
    return detail::ExpressionParser(text, alphabet).parse();
}

}  // namespace umbral
