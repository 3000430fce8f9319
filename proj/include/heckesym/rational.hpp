#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "heckesym/errors.hpp"

namespace heckesym {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r)) throw InternalError("expected an integer, got " + r.str());
    const BigInt& num = boost::multiprecision::numerator(r);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
        throw InternalError("integer overflow converting " + num.str());
    return num.convert_to<std::int64_t>();
}

/// "p/q" or "p"; canonical (reduced, positive denominator).
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(std::int64_t v) { return std::to_string(v); }

/// Accepts "3", "-3", "3/4", "-3/4"; surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("bad rational '" + std::string(text) + "'");
    std::string ns(num);
    if (!ns.empty() && ns.front() == '+') ns.erase(0, 1);
    BigInt n(ns), d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace heckesym
