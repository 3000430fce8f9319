#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/permutation.hpp"

namespace heckesym {

/// Element of the Hecke algebra H_n, sum of c_w T_w.
///
/// Relations: T_w T_s = T_{ws} if l(ws) > l(w), else (q-1)T_w + q T_{ws}.
class HeckeElement {
public:
    using Terms = std::map<Permutation, LaurentScalar>;

    HeckeElement() = default;
    explicit HeckeElement(int n) : n_(n) {}

    /// c T_w
    static HeckeElement basis(const Permutation& w, const LaurentScalar& c = LaurentScalar(1)) {
        HeckeElement a(w.size());
        a.add(w, c);
        return a;
    }

    static HeckeElement one(int n) { return basis(Permutation::identity(n)); }

    int rank() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentScalar coeff(const Permutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    HeckeElement& add(const Permutation& w, const LaurentScalar& c) {
        if (w.size() != n_) throw SizeMismatch("Hecke term from a different symmetric group");
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }

    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    friend HeckeElement operator*(const LaurentScalar& s, const HeckeElement& a) {
        HeckeElement r(a.n_);
        for (const auto& [w, c] : a.terms_) r.add(w, s * c);
        return r;
    }

    /// this * T_{s_i}
    HeckeElement right_mul_generator(int i) const {
        HeckeElement r(n_);
        const LaurentScalar q = LaurentScalar::q(), qm1 = LaurentScalar::q() - LaurentScalar(1);
        for (const auto& [w, c] : terms_) {
            Permutation ws = w.right_mul_simple(i);
            if (!w.has_right_descent(i)) {
                r.add(ws, c);
            } else {
                r.add(w, qm1 * c);
                r.add(ws, q * c);
            }
        }
        return r;
    }

    /// T_{s_i} * this
    HeckeElement left_mul_generator(int i) const {
        HeckeElement r(n_);
        const LaurentScalar q = LaurentScalar::q(), qm1 = LaurentScalar::q() - LaurentScalar(1);
        for (const auto& [w, c] : terms_) {
            Permutation sw = w.left_mul_simple(i);
            if (!w.has_left_descent(i)) {
                r.add(sw, c);
            } else {
                r.add(w, qm1 * c);
                r.add(sw, q * c);
            }
        }
        return r;
    }

    /// this * T_w, by right multiplication along a reduced word of w.
    HeckeElement right_mul_basis(const Permutation& w) const {
        HeckeElement r = *this;
        for (int i : w.reduced_word()) r = r.right_mul_generator(i);
        return r;
    }

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
        a.check(b);
        HeckeElement r(a.n_);
        for (const auto& [y, c] : b.terms_) r += c * a.right_mul_basis(y);
        return r;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Sum of coefficients at v = 1 per term, i.e. the q = 1 specialization.
    std::map<Permutation, std::int64_t> at_q1() const {
        std::map<Permutation, std::int64_t> r;
        for (const auto& [w, c] : terms_)
            if (auto x = c.at_one(); x != 0) r[w] = x;
        return r;
    }

    /// "(q)T[21]+T[12]"-style text, ordered by (length, lexicographic).
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Permutation, LaurentScalar>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& x, const auto& y) { return LengthLexLess{}(x.first, y.first); });
        std::string out;
        for (const auto& [w, c] : sorted) {
            bool neg = false;
            std::string pre = detail::coeff_prefix(c, neg);
            if (neg)
                out += '-';
            else if (!out.empty())
                out += '+';
            out += pre + "T[" + w.to_string() + "]";
        }
        return out;
    }

private:
    void check(const HeckeElement& o) const {
        if (o.n_ != n_) throw SizeMismatch("Hecke elements of different rank");
    }

    int n_ = 1;
    Terms terms_;
};

namespace detail {

class IotaCache {
public:
    static IotaCache& instance() {
        static IotaCache c;
        return c;
    }

    /// iota(T_w) = iota(T_{ws}) iota(T_s) for a right descent s.
    HeckeElement get(const Permutation& w) {
        {
            std::lock_guard lock(mu_);
            if (auto it = table_.find(w); it != table_.end()) return it->second;
        }
        HeckeElement r;
        const int n = w.size();
        if (w.is_identity()) {
            r = HeckeElement::one(n);
        } else {
            int i = 1;
            while (!w.has_right_descent(i)) ++i;
            HeckeElement prev = get(w.right_mul_simple(i));
            // x * iota(T_s) = q^{-1} x T_s - (1 - q^{-1}) x
            const LaurentScalar qinv = LaurentScalar::q(-1);
            r = qinv * prev.right_mul_generator(i) - (LaurentScalar(1) - qinv) * prev;
        }
        std::lock_guard lock(mu_);
        return table_.emplace(w, std::move(r)).first->second;
    }

private:
    std::mutex mu_;
    std::unordered_map<Permutation, HeckeElement> table_;
};

}  // namespace detail

/// The ring involution with iota(v) = v^{-1} and iota(T_w) = T_{w^{-1}}^{-1}.
inline HeckeElement iota(const HeckeElement& a) {
    HeckeElement r(a.rank());
    for (const auto& [w, c] : a.terms()) r += c.bar() * detail::IotaCache::instance().get(w);
    return r;
}

}  // namespace heckesym
