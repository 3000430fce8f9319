#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/rational.hpp"

namespace heckesym {

/// Laurent polynomial in v = q^{1/2} with coefficients in C.
///
/// Stored densely from the lowest nonzero exponent; both ends are trimmed so
/// that equality is structural.
template <class C>
class Laurent {
public:
    using coeff_type = C;

    Laurent() = default;
    Laurent(int c) : Laurent(C(c), 0) {}  // NOLINT: integers promote implicitly
    Laurent(C c, int exponent) : lo_(exponent), c_{std::move(c)} { trim(); }

    static Laurent v(int k = 1) { return Laurent(C(1), k); }
    static Laurent q(int k = 1) { return Laurent(C(1), 2 * k); }

    /// From a map exponent-of-v -> coefficient.
    static Laurent from_map(const std::map<int, C>& m) {
        Laurent r;
        for (const auto& [e, c] : m) r += Laurent(c, e);
        return r;
    }

    /// From coefficients of 1, q, q^2, ...
    static Laurent from_q_coeffs(const std::vector<C>& cs) {
        Laurent r;
        r.lo_ = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            r.c_.push_back(cs[i]);
            if (i + 1 < cs.size()) r.c_.push_back(C(0));
        }
        r.trim();
        return r;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(c_.size()) - 1; }

    C coeff(int e) const {
        if (e < lo_ || e > hi()) return C(0);
        return c_[e - lo_];
    }

    /// Nonzero (exponent, coefficient) pairs, increasing exponent.
    std::vector<std::pair<int, C>> terms() const {
        std::vector<std::pair<int, C>> t;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != C(0)) t.emplace_back(lo_ + static_cast<int>(i), c_[i]);
        return t;
    }

    /// All exponents of v are even, i.e. this is a Laurent polynomial in q.
    bool is_q_polynomial() const {
        for (const auto& [e, c] : terms())
            if (e % 2 != 0) return false;
        return true;
    }

    /// Coefficients of q^0, q^1, ..., q^{deg}; requires even exponents >= 0.
    std::vector<C> q_coeffs() const {
        if (!is_q_polynomial() || (!is_zero() && lo_ < 0))
            throw DomainError("q_coeffs: not a polynomial in q");
        std::vector<C> out;
        if (is_zero()) return out;
        out.assign(hi() / 2 + 1, C(0));
        for (const auto& [e, c] : terms()) out[e / 2] = c;
        return out;
    }

    /// v -> v^{-1}
    Laurent bar() const {
        Laurent r;
        if (is_zero()) return r;
        r.lo_ = -hi();
        r.c_.assign(c_.rbegin(), c_.rend());
        return r;
    }

    /// Multiplication by v^k.
    Laurent shift(int k) const {
        Laurent r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }

    /// Value at v = 1.
    C at_one() const {
        C s(0);
        for (const auto& c : c_) s += c;
        return s;
    }

    /// q -> q^k on a q-polynomial (v -> v^k).
    Laurent dilate(int k) const {
        Laurent r;
        for (const auto& [e, c] : terms()) r += Laurent(c, e * k);
        return r;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
        std::vector<C> nc(nhi - nlo + 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) nc[lo_ - nlo + i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) nc[o.lo_ - nlo + i] += o.c_[i];
        lo_ = nlo;
        c_ = std::move(nc);
        trim();
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        if (a.is_zero() || b.is_zero()) return r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == C(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Laurent operator*(const C& s, const Laurent& a) { return Laurent(s, 0) * a; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.is_zero() ? b.is_zero() : (a.lo_ == b.lo_ && a.c_ == b.c_);
    }

    /// Ordering for use as a map key; not an algebraic order.
    friend bool operator<(const Laurent& a, const Laurent& b) {
        if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
        return a.c_ < b.c_;
    }

    template <class D>
    Laurent<D> cast() const {
        std::map<int, D> m;
        for (const auto& [e, c] : terms()) m[e] = D(c);
        return Laurent<D>::from_map(m);
    }

    /// Canonical text: in q when every exponent is even, otherwise in v.
    std::string to_string() const {
        if (is_zero()) return "0";
        const bool in_q = is_q_polynomial();
        const char var = in_q ? 'q' : 'v';
        std::string s;
        for (const auto& [e, c] : terms()) {
            int k = in_q ? e / 2 : e;
            std::string term = format_term(c, var, k);
            if (!s.empty() && term.front() != '-') s += '+';
            s += term;
        }
        return s;
    }

    /// True when the printed form has more than one term, so it needs
    /// parentheses when used as a multiplier.
    bool is_monomial() const { return terms().size() == 1; }

private:
    static std::string format_term(const C& c, char var, int k) {
        std::string mono;
        if (k != 0) {
            mono = var;
            if (k != 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) return coeff_string(c);
        if (c == C(1)) return mono;
        if (c == C(-1)) return "-" + mono;
        std::string cs = coeff_string(c);
        if (cs.find('/') != std::string::npos) {
            bool neg = cs.front() == '-';
            return (neg ? "-(" + cs.substr(1) : "(" + cs) + ")" + mono;
        }
        return cs + mono;
    }

    static std::string coeff_string(const C& c) {
        return heckesym::to_string(c);
    }

    void trim() {
        std::size_t b = 0;
        while (b < c_.size() && c_[b] == C(0)) ++b;
        if (b == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t e = c_.size();
        while (c_[e - 1] == C(0)) --e;
        c_ = std::vector<C>(c_.begin() + static_cast<std::ptrdiff_t>(b), c_.begin() + static_cast<std::ptrdiff_t>(e));
        lo_ += static_cast<int>(b);
    }

    int lo_ = 0;
    std::vector<C> c_;
};

using LaurentScalar = Laurent<std::int64_t>;
using RationalLaurent = Laurent<Rational>;

namespace detail {

/// Text placed in front of a basis symbol for coefficient c: "" for 1, "2",
/// "(1+q)". A minus common to every term is reported through `negative` and stripped.
template <class C>
std::string coeff_prefix(const Laurent<C>& c, bool& negative) {
    negative = false;
    auto t = c.terms();
    if (t.size() == 1 && t.front().first == 0) {
        C x = t.front().second;
        if (x < C(0)) {
            negative = true;
            x = -x;
        }
        return x == C(1) ? "" : to_string(x);
    }
    Laurent<C> d = c;
    if (std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second < C(0); })) {
        negative = true;
        d = -c;
    }
    return "(" + d.to_string() + ")";
}

}  // namespace detail

/// c with b*c = a, dividing from the lowest exponent up.
template <class C>
Laurent<C> exact_div(const Laurent<C>& a, const Laurent<C>& b) {
    if (b.is_zero()) throw DomainError("exact_div: division by zero");
    Laurent<C> quotient, rem = a;
    const C b0 = b.coeff(b.lo());
    const int max_exp = a.is_zero() ? 0 : a.hi() - b.hi();
    while (!rem.is_zero()) {
        const int e = rem.lo() - b.lo();
        if (e > max_exp) break;
        const C r0 = rem.coeff(rem.lo());
        C c;
        if constexpr (std::is_integral_v<C>) {
            if (r0 % b0 != 0) break;
            c = r0 / b0;
        } else {
            c = r0 / b0;
        }
        Laurent<C> term(c, e);
        quotient += term;
        rem -= term * b;
    }
    if (!rem.is_zero())
        throw NotDivisible("exact_div: " + a.to_string() + " is not divisible by " + b.to_string(), rem.to_string());
    return quotient;
}

/// Evaluate an integer Laurent polynomial at v = 1.
inline std::int64_t eval_at_one(const LaurentScalar& a) { return a.at_one(); }

/// [n]_q = 1 + q + ... + q^{n-1}
inline LaurentScalar q_int(int n) {
    if (n < 0) throw DomainError("q_int: negative argument");
    return LaurentScalar::from_q_coeffs(std::vector<std::int64_t>(n, 1));
}

inline LaurentScalar q_factorial(int n) {
    LaurentScalar r(1);
    for (int k = 2; k <= n; ++k) r *= q_int(k);
    return r;
}

inline LaurentScalar q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    LaurentScalar num = q_factorial(n);
    LaurentScalar den = q_factorial(k) * q_factorial(n - k);
    try {
        return exact_div(num, den);
    } catch (const NotDivisible& e) {
        throw InternalError(std::string("q_binomial: ") + e.what());
    }
}

/// |W_J|_q = prod over blocks of [size]_q!, given block sizes.
inline LaurentScalar q_multinomial_denominator(const std::vector<int>& blocks) {
    LaurentScalar r(1);
    for (int b : blocks) r *= q_factorial(b);
    return r;
}

/// Parses "1+q+2q^2", "q^-1", "v+v^3", "-(1/2)q", "3" (also "*" between
/// coefficient and variable). Mixing q and v is allowed.
template <class C>
Laurent<C> parse_laurent(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty polynomial");
    Laurent<C> result;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("bad polynomial '" + std::string(text) + "': " + why);
    };
    auto read_int = [&](bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
        return std::stoi(s.substr(start, i - start));
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        C coeff(1);
        bool have_coeff = false;
        if (i < s.size() && s[i] == '(') {
            auto close = s.find(')', i);
            if (close == std::string::npos) fail("unbalanced parenthesis");
            Rational r = parse_rational(s.substr(i + 1, close - i - 1));
            if constexpr (std::is_integral_v<C>) {
                coeff = static_cast<C>(to_int64(r));
            } else {
                coeff = C(r);
            }
            i = close + 1;
            have_coeff = true;
        } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            Rational r = parse_rational(s.substr(start, i - start));
            if constexpr (std::is_integral_v<C>) {
                coeff = static_cast<C>(to_int64(r));
            } else {
                coeff = C(r);
            }
            have_coeff = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        int exponent = 0;
        if (i < s.size() && (s[i] == 'q' || s[i] == 'v')) {
            int scale = s[i] == 'q' ? 2 : 1;
            ++i;
            int k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                k = read_int(true);
            }
            exponent = k * scale;
        } else if (!have_coeff) {
            fail("expected a term");
        }
        result += Laurent<C>(sign < 0 ? C(-coeff) : coeff, exponent);
    }
    return result;
}

inline LaurentScalar parse_scalar(std::string_view text) { return parse_laurent<std::int64_t>(text); }

}  // namespace heckesym
