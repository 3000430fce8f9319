#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/kostka.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/partition.hpp"
#include "heckesym/rational.hpp"

namespace heckesym {

enum class Basis { m, e, h, p, s };

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::p: return 'p';
        case Basis::s: return 's';
    }
    return '?';
}

inline Basis parse_basis(std::string_view text) {
    if (text == "m") return Basis::m;
    if (text == "e") return Basis::e;
    if (text == "h") return Basis::h;
    if (text == "p") return Basis::p;
    if (text == "s") return Basis::s;
    throw ParseError("unknown basis '" + std::string(text) + "' (expected m, e, h, p or s)");
}

namespace detail {

using DenseRational = std::vector<std::vector<Rational>>;
using SparseRow = std::map<Partition, Rational>;

inline SparseRow multiply_p_expansions(const SparseRow& a, const SparseRow& b) {
    SparseRow r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) r[la.join(lb)] += ca * cb;
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

/// p-expansion of h_k (sign = false) or e_k (sign = true).
inline SparseRow single_row_p_expansion(int k, bool sign) {
    SparseRow r;
    for (const auto& mu : partitions_of(k)) {
        Rational c(1, mu.z());
        if (sign && (k - mu.length()) % 2) c = -c;
        r[mu] = c;
    }
    return r;
}

/// Number of maps f from parts of mu to parts of lambda with fibre sums lambda_j:
/// the coefficient of m_lambda in p_mu.
inline std::int64_t p_to_m_count(const Partition& mu, const Partition& lambda) {
    const auto& parts = mu.parts();
    std::vector<int> room(lambda.parts().begin(), lambda.parts().end());
    std::int64_t count = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == parts.size()) {
            for (int r : room)
                if (r != 0) return;
            ++count;
            return;
        }
        for (auto& r : room) {
            if (r >= parts[i]) {
                r -= parts[i];
                self(self, i + 1);
                r += parts[i];
            }
        }
    };
    rec(rec, 0);
    return count;
}

inline DenseRational invert(DenseRational a) {
    const std::size_t n = a.size();
    DenseRational inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        ensure(piv < n, "transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Transition data between basis b and p in degree n. Row/column indices
/// follow partitions_of(n).
struct Transition {
    std::vector<Partition> parts;
    DenseRational to_p;    // b_lambda = sum_mu to_p[lambda][mu] p_mu
    DenseRational from_p;  // p_mu = sum_lambda from_p[mu][lambda] b_lambda
};

inline std::shared_ptr<const Transition> build_transition(Basis b, int n) {
    auto t = std::make_shared<Transition>();
    t->parts = partitions_of(n);
    const std::size_t N = t->parts.size();
    t->to_p.assign(N, std::vector<Rational>(N, Rational(0)));
    auto idx = [](const Partition& l) { return static_cast<std::size_t>(partition_index(l)); };
    switch (b) {
        case Basis::p:
            for (std::size_t i = 0; i < N; ++i) t->to_p[i][i] = 1;
            t->from_p = t->to_p;
            return t;
        case Basis::h:
        case Basis::e: {
            const bool sign = b == Basis::e;
            for (std::size_t i = 0; i < N; ++i) {
                SparseRow row{{Partition(), Rational(1)}};
                for (int part : t->parts[i].parts()) row = multiply_p_expansions(row, single_row_p_expansion(part, sign));
                for (const auto& [mu, c] : row) t->to_p[i][idx(mu)] = c;
            }
            break;
        }
        case Basis::s:
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    const auto& mu = t->parts[j];
                    t->to_p[i][j] = Rational(sn_character(t->parts[i], mu), mu.z());
                }
            break;
        case Basis::m: {
            DenseRational pm(N, std::vector<Rational>(N, Rational(0)));
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) pm[i][j] = p_to_m_count(t->parts[i], t->parts[j]);
            t->from_p = pm;
            t->to_p = invert(pm);
            return t;
        }
    }
    t->from_p = invert(t->to_p);
    return t;
}

inline std::shared_ptr<const Transition> transition(Basis b, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Transition>> cache;
    std::pair<int, int> key{static_cast<int>(b), n};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto t = build_transition(b, n);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(t)).first->second;
}

inline bool integral(const RationalLaurent& c) {
    for (const auto& [e, x] : c.terms())
        if (!is_integer(x)) return false;
    return true;
}

}  // namespace detail

/// Homogeneous symmetric function of degree n, expanded in one of the bases
/// m, e, h, p, s. Coefficients are rational Laurent polynomials in v; outside
/// the p basis they are integral in every computation this library performs.
class SymmetricFunction {
public:
    using Coeff = RationalLaurent;
    using Terms = std::map<Partition, Coeff>;

    SymmetricFunction() = default;
    SymmetricFunction(Basis b, int degree) : basis_(b), degree_(degree) {
        if (degree < 0) throw DomainError("negative degree");
    }

    /// The basis element b_lambda.
    static SymmetricFunction basis_element(Basis b, const Partition& lambda) {
        SymmetricFunction f(b, lambda.size());
        f.terms_.emplace(lambda, Coeff(1));
        return f;
    }

    static SymmetricFunction one(Basis b = Basis::h) { return basis_element(b, Partition()); }

    Basis basis() const noexcept { return basis_; }
    int degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coeff coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Coeff() : it->second;
    }

    /// Coefficient as an integer Laurent polynomial; throws if not integral.
    LaurentScalar integral_coeff(const Partition& lambda) const {
        Coeff c = coeff(lambda);
        std::map<int, std::int64_t> m;
        for (const auto& [e, x] : c.terms()) m[e] = to_int64(x);
        return LaurentScalar::from_map(m);
    }

    bool is_integral() const {
        for (const auto& [l, c] : terms_)
            if (!detail::integral(c)) return false;
        return true;
    }

    SymmetricFunction& add_term(const Partition& lambda, const Coeff& c) {
        if (lambda.size() != degree_)
            throw SizeMismatch("term " + lambda.to_string() + " has wrong degree for a degree " + std::to_string(degree_) + " function");
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    SymmetricFunction& add_term(const Partition& lambda, const LaurentScalar& c) {
        return add_term(lambda, c.template cast<Rational>());
    }

    SymmetricFunction to_basis(Basis target) const {
        if (target == basis_) return *this;
        SymmetricFunction f = to_p();
        if (target == Basis::p) return f;
        SymmetricFunction out(target, degree_);
        auto t = detail::transition(target, degree_);
        for (const auto& [mu, c] : f.terms_) {
            const auto& row = t->from_p[partition_index(mu)];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) out.add_term(t->parts[j], scale(c, row[j]));
        }
        if (basis_ != Basis::p && is_integral() && !out.is_integral())
            throw InternalError("basis conversion lost integrality");
        return out;
    }

    SymmetricFunction to_p() const {
        if (basis_ == Basis::p) return *this;
        SymmetricFunction out(Basis::p, degree_);
        auto t = detail::transition(basis_, degree_);
        for (const auto& [lambda, c] : terms_) {
            const auto& row = t->to_p[partition_index(lambda)];
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) out.add_term(t->parts[j], scale(c, row[j]));
        }
        return out;
    }

    /// Evaluate every coefficient at v = 1.
    SymmetricFunction at_q1() const {
        SymmetricFunction out(basis_, degree_);
        for (const auto& [l, c] : terms_) out.add_term(l, Coeff(c.at_one(), 0));
        return out;
    }

    SymmetricFunction map_coeffs(const std::function<Coeff(const Coeff&)>& f) const {
        SymmetricFunction out(basis_, degree_);
        for (const auto& [l, c] : terms_) out.add_term(l, f(c));
        return out;
    }

    SymmetricFunction operator-() const {
        return map_coeffs([](const Coeff& c) { return -c; });
    }

    SymmetricFunction& operator+=(const SymmetricFunction& o) {
        check_degree(o);
        for (const auto& [l, c] : o.to_basis(basis_).terms_) add_term(l, c);
        return *this;
    }
    SymmetricFunction& operator-=(const SymmetricFunction& o) { return *this += -o; }

    friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) { return a += b; }
    friend SymmetricFunction operator-(SymmetricFunction a, const SymmetricFunction& b) { return a -= b; }

    friend SymmetricFunction operator*(const Coeff& s, const SymmetricFunction& f) {
        return f.map_coeffs([&](const Coeff& c) { return s * c; });
    }
    friend SymmetricFunction operator*(const LaurentScalar& s, const SymmetricFunction& f) {
        return s.template cast<Rational>() * f;
    }

    /// Mathematical equality (bases may differ).
    friend bool operator==(const SymmetricFunction& a, const SymmetricFunction& b) {
        if (a.degree_ != b.degree_) return a.is_zero() && b.is_zero();
        if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
        return a.to_p().terms_ == b.to_p().terms_;
    }

    /// Canonical text, e.g. "(q+q^2)h[2,2]+h[3,1]" or "(p[1,1]+p[2])/2".
    std::string to_string() const;

private:
    static Coeff scale(const Coeff& c, const Rational& r) { return Coeff(r, 0) * c; }

    void check_degree(const SymmetricFunction& o) const {
        if (o.degree_ != degree_)
            throw SizeMismatch("adding symmetric functions of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
    }

    Basis basis_ = Basis::h;
    int degree_ = 0;
    Terms terms_;
};

inline SymmetricFunction h(const Partition& l) { return SymmetricFunction::basis_element(Basis::h, l); }
inline SymmetricFunction e(const Partition& l) { return SymmetricFunction::basis_element(Basis::e, l); }
inline SymmetricFunction p(const Partition& l) { return SymmetricFunction::basis_element(Basis::p, l); }
inline SymmetricFunction s(const Partition& l) { return SymmetricFunction::basis_element(Basis::s, l); }
inline SymmetricFunction m(const Partition& l) { return SymmetricFunction::basis_element(Basis::m, l); }

/// Product, returned in the basis of f. Multiplicative bases h, e, p multiply
/// directly; everything else goes through p.
inline SymmetricFunction multiply(const SymmetricFunction& f, const SymmetricFunction& g) {
    const Basis b = f.basis();
    const bool direct = b == g.basis() && (b == Basis::h || b == Basis::e || b == Basis::p);
    SymmetricFunction fa = direct ? f : f.to_p();
    SymmetricFunction ga = direct ? g : g.to_p();
    SymmetricFunction out(fa.basis(), f.degree() + g.degree());
    for (const auto& [la, ca] : fa.terms())
        for (const auto& [lb, cb] : ga.terms()) out.add_term(la.join(lb), ca * cb);
    return direct ? out : out.to_basis(b);
}

inline SymmetricFunction operator*(const SymmetricFunction& f, const SymmetricFunction& g) { return multiply(f, g); }

/// The involution omega, returned in the basis of f.
inline SymmetricFunction omega(const SymmetricFunction& f) {
    SymmetricFunction out;
    switch (f.basis()) {
        case Basis::h:
        case Basis::e:
            out = SymmetricFunction(f.basis() == Basis::h ? Basis::e : Basis::h, f.degree());
            for (const auto& [l, c] : f.terms()) out.add_term(l, c);
            return out.to_basis(f.basis());
        case Basis::s:
            out = SymmetricFunction(Basis::s, f.degree());
            for (const auto& [l, c] : f.terms()) out.add_term(l.conjugate(), c);
            return out;
        case Basis::p:
            out = SymmetricFunction(Basis::p, f.degree());
            for (const auto& [l, c] : f.terms()) out.add_term(l, (l.size() - l.length()) % 2 ? -c : c);
            return out;
        case Basis::m:
            return omega(f.to_p()).to_basis(Basis::m);
    }
    return out;
}

/// p_k[f]: in the p basis, p_mu -> p_{k mu}. Coefficients are left untouched.
inline SymmetricFunction plethysm_power(int k, const SymmetricFunction& f) {
    if (k < 1) throw DomainError("plethysm_power: k must be positive");
    SymmetricFunction fp = f.to_p();
    SymmetricFunction out(Basis::p, f.degree() * k);
    for (const auto& [l, c] : fp.terms()) out.add_term(l.scaled(k), c);
    return out;
}

namespace detail {

inline BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace detail

inline std::string SymmetricFunction::to_string() const {
    if (terms_.empty()) return "0";
    BigInt den = 1;
    for (const auto& [l, c] : terms_)
        for (const auto& [e, x] : c.terms()) den = detail::lcm_big(den, boost::multiprecision::denominator(x));
    std::string out;
    for (const auto& [l, c] : terms_) {
        RationalLaurent scaled = den == 1 ? c : Coeff(Rational(den), 0) * c;
        bool neg = false;
        std::string pre = detail::coeff_prefix(scaled, neg);
        if (neg)
            out += '-';
        else if (!out.empty())
            out += '+';
        out += pre;
        out += basis_letter(basis_);
        out += l.to_string();
    }
    if (den != 1) out = "(" + out + ")/" + den.str();
    return out;
}

/// Inverse of SymmetricFunction::to_string. A bare "0" needs the basis and
/// degree supplied by the caller.
inline SymmetricFunction parse_symfunc(std::string_view text, Basis zero_basis = Basis::h, int zero_degree = 0) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty symmetric function");
    if (s == "0") return SymmetricFunction(zero_basis, zero_degree);
    Rational divisor = 1;
    // Outer "(...)/d" wrapper, only if the opening parenthesis closes at the slash.
    if (s.front() == '(') {
        auto slash = s.rfind(")/");
        if (slash != std::string::npos) {
            int depth = 0;
            std::size_t close = std::string::npos;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                if (s[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == slash) {
                divisor = parse_rational(s.substr(slash + 2));
                s = s.substr(1, slash - 1);
            }
        }
    }
    std::vector<std::tuple<Basis, Partition, RationalLaurent>> parsed;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw ParseError("bad symmetric function '" + std::string(text) + "': " + why); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!parsed.empty()) {
            fail("expected + or -");
        }
        RationalLaurent c(1);
        if (i < s.size() && s[i] == '(') {
            int depth = 0;
            std::size_t j = i;
            for (; j < s.size(); ++j) {
                if (s[j] == '(') ++depth;
                if (s[j] == ')' && --depth == 0) break;
            }
            if (j == s.size()) fail("unbalanced parenthesis");
            c = parse_laurent<Rational>(s.substr(i + 1, j - i - 1));
            i = j + 1;
        } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            c = RationalLaurent(parse_rational(s.substr(i, j - i)), 0);
            i = j;
        }
        if (i < s.size() && s[i] == '*') ++i;
        if (i >= s.size()) fail("missing basis symbol");
        Basis b = parse_basis(std::string_view(&s[i], 1));
        ++i;
        if (i >= s.size() || s[i] != '[') fail("expected '[' after basis letter");
        auto close = s.find(']', i);
        if (close == std::string::npos) fail("missing ']'");
        Partition lambda = Partition::parse(s.substr(i, close - i + 1));
        i = close + 1;
        parsed.emplace_back(b, lambda, sign < 0 ? -c : c);
    }
    const Basis b = std::get<0>(parsed.front());
    const int degree = std::get<1>(parsed.front()).size();
    SymmetricFunction f(b, degree);
    for (const auto& [bb, l, c] : parsed) {
        if (bb != b) fail("mixed bases");
        f.add_term(l, c);
    }
    if (divisor != 1) f = RationalLaurent(Rational(1) / divisor, 0) * f;
    return f;
}

}  // namespace heckesym
