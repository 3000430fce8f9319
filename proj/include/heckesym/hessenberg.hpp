#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/permutation.hpp"

namespace heckesym {

/// m: [n] -> [n] weakly increasing with m(i) >= i.
class HessenbergFunction {
public:
    HessenbergFunction() = default;

    explicit HessenbergFunction(std::vector<int> values) : m_(std::move(values)) {
        const int n = size();
        if (n < 1 || n > kMaxRank) throw DomainError("Hessenberg function length out of range");
        for (int i = 1; i <= n; ++i) {
            if (m_[i - 1] < i || m_[i - 1] > n) throw DomainError("Hessenberg function needs i <= m(i) <= n");
            if (i > 1 && m_[i - 1] < m_[i - 2]) throw DomainError("Hessenberg function must be weakly increasing");
        }
    }

    HessenbergFunction(std::initializer_list<int> v) : HessenbergFunction(std::vector<int>(v)) {}

    int size() const noexcept { return static_cast<int>(m_.size()); }
    int operator()(int i) const { return m_[i - 1]; }
    const std::vector<int>& values() const noexcept { return m_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(m_[i]);
        }
        return s;
    }

    static HessenbergFunction parse(std::string_view text) {
        std::vector<int> v;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) return;
            v.push_back(std::stoi(cur));
            cur.clear();
        };
        for (char c : text) {
            if (c >= '0' && c <= '9')
                cur += c;
            else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']')
                flush();
            else
                throw ParseError("bad Hessenberg function '" + std::string(text) + "'");
        }
        flush();
        try {
            return HessenbergFunction(std::move(v));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }

    friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
    friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
    std::vector<int> m_;
};

/// All Hessenberg functions on [n] (Catalan many), lexicographic.
inline std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
    std::vector<HessenbergFunction> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.emplace_back(cur);
            return;
        }
        int lo = std::max(i, cur.empty() ? 1 : cur.back());
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Contains the pattern 312: positions a<b<c with w(b) < w(c) < w(a).
inline bool is_codominant(const Permutation& w) {
    const int n = w.size();
    for (int b = 2; b < n; ++b) {
        int max_before = 0;
        for (int a = 1; a < b; ++a) max_before = std::max(max_before, w(a));
        for (int c = b + 1; c <= n; ++c)
            if (w(b) < w(c) && w(c) < max_before) return false;
    }
    return true;
}

/// w_m(i) = largest value <= m(i) not used by w_m(1), ..., w_m(i-1).
inline Permutation codominant_permutation(const HessenbergFunction& m) {
    const int n = m.size();
    std::vector<bool> used(n + 1, false);
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        int v = m(i);
        while (v >= 1 && used[v]) --v;
        // m(i) >= i guarantees some value <= m(i) is still free.
        detail::ensure(v >= 1, "codominant_permutation: no free value");
        used[v] = true;
        img[i - 1] = v;
    }
    return Permutation(img);
}

/// Inverse of codominant_permutation on 312-avoiding permutations.
inline HessenbergFunction hessenberg_of(const Permutation& w) {
    if (!is_codominant(w)) throw DomainError("permutation " + w.to_string() + " is not codominant (contains 312)");
    const int n = w.size();
    std::vector<int> m(n);
    int prev = 0, running_max = 0;
    for (int i = 1; i <= n; ++i) {
        running_max = std::max(running_max, w(i));
        prev = std::max({running_max, prev, i});
        m[i - 1] = prev;
    }
    return HessenbergFunction(std::move(m));
}

}  // namespace heckesym
