#pragma once

// Text specs for moment sequences:
//   uniform            m_k = 1/(k+1)
//   const:c            m_k = c^k
//   eps                m_k = 0 for k > 0
//   bernoulli          the inverse of uniform
//   list:[m1,m2,...]   finite list m_1, m_2, ... (brackets optional)
//   generic:a          symbols a_1, a_2, ...
//   egf:<series>       k! [z^k] of a series with constant term 1

#include "umbral/series_parse.hpp"
#include "umbral/umbra.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umbral {

namespace detail {

inline std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline bool valid_stem(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::string body = detail::trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unterminated list '" + body + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<Rational> out;
    if (detail::trim(body).empty()) return out;
    for (const auto& item : detail::split(body, ',')) out.push_back(Rational::parse(item));
    return out;
}

inline MomentSeq parse_moment_spec(std::string_view text) {
    std::string spec = detail::trim(text);
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto no_arg = [&] {
        if (colon != std::string::npos) throw std::invalid_argument("moment spec '" + kind + "' takes no argument");
    };
    if (kind == "uniform") {
        no_arg();
        return MomentSeq::uniform();
    }
    if (kind == "eps") {
        no_arg();
        return MomentSeq::epsilon();
    }
    if (kind == "bernoulli") {
        no_arg();
        return MomentSeq::bernoulli();
    }
    if (kind == "const") return MomentSeq::constant(Poly(Rational::parse(arg)));
    if (kind == "list") {
        std::vector<Poly> values;
        for (const auto& r : parse_rational_list(arg)) values.emplace_back(r);
        return MomentSeq::finite(std::move(values), "list");
    }
    if (kind == "generic") {
        if (!detail::valid_stem(arg)) throw std::invalid_argument("generic moments need a name such as generic:a");
        return MomentSeq::generic(arg);
    }
    if (kind == "egf") {
        if (detail::trim(arg).empty()) throw std::invalid_argument("egf spec needs a series");
        Series probe = parse_series(arg, 1);
        if (!(probe[0] == Poly(1))) throw std::invalid_argument("egf spec '" + arg + "' must have constant term 1");
        return MomentSeq::from_egf_builder([arg](std::size_t order) { return parse_series(arg, order); }, "egf:" + arg);
    }
    throw std::invalid_argument("unknown moment spec '" + spec + "'");
}

}  // namespace umbral
