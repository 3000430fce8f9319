#pragma once

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/permutation.hpp"

namespace heckesym {

/// A subset J of the simple reflections {s_1, ..., s_{n-1}} of S_n, stored as
/// a bitmask over indices.
class SimpleSubset {
public:
    SimpleSubset() = default;

    SimpleSubset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
        if (n < 1 || n > kMaxRank) throw DomainError("subset rank out of range");
        if (mask_ & ~full_mask(n)) throw DomainError("simple subset contains an index outside [1,n-1]");
    }

    SimpleSubset(int n, const std::vector<int>& members) : n_(n) {
        if (n < 1 || n > kMaxRank) throw DomainError("subset rank out of range");
        for (int i : members) {
            if (i < 1 || i >= n) throw DomainError("simple subset index " + std::to_string(i) + " outside [1,n-1]");
            mask_ |= 1u << i;
        }
    }

    static SimpleSubset empty(int n) { return {n, 0u}; }
    static SimpleSubset full(int n) { return {n, full_mask(n)}; }

    /// {a, a+1, ..., b}, empty when a > b.
    static SimpleSubset interval(int n, int a, int b) {
        std::uint32_t m = 0;
        for (int i = a; i <= b; ++i) m |= 1u << i;
        return {n, m};
    }

    /// Subset whose blocks have the given sizes, left to right.
    static SimpleSubset from_blocks(const std::vector<int>& sizes) {
        int n = 0;
        std::uint32_t m = 0;
        for (int b : sizes) {
            if (b < 1) throw DomainError("block sizes must be positive");
            for (int k = 1; k < b; ++k) m |= 1u << (n + k);
            n += b;
        }
        return {n, m};
    }

    int rank() const noexcept { return n_; }
    std::uint32_t mask() const noexcept { return mask_; }
    bool contains(int i) const noexcept { return i >= 1 && i < n_ && (mask_ >> i) & 1u; }
    int count() const noexcept { return std::popcount(mask_); }
    bool is_empty() const noexcept { return mask_ == 0; }

    std::vector<int> members() const {
        std::vector<int> m;
        for (int i = 1; i < n_; ++i)
            if (contains(i)) m.push_back(i);
        return m;
    }

    /// Sizes of the consecutive blocks [a, b] of [n] joined by J; sums to n.
    std::vector<int> blocks() const {
        std::vector<int> b;
        int run = 1;
        for (int i = 1; i < n_; ++i) {
            if (contains(i)) {
                ++run;
            } else {
                b.push_back(run);
                run = 1;
            }
        }
        b.push_back(run);
        return b;
    }

    /// 1-based start of each block.
    std::vector<int> block_starts() const {
        std::vector<int> s{1};
        for (int i = 1; i < n_; ++i)
            if (!contains(i)) s.push_back(i + 1);
        return s;
    }

    SimpleSubset operator&(const SimpleSubset& o) const { return {same(o), mask_ & o.mask_}; }
    SimpleSubset operator|(const SimpleSubset& o) const { return {same(o), mask_ | o.mask_}; }
    bool subset_of(const SimpleSubset& o) const {
        same(o);
        return (mask_ & ~o.mask_) == 0;
    }

    /// The set {j' : s_{j'} = w s_j w^{-1} for some j in J}; conjugates that
    /// are not simple are dropped.
    SimpleSubset conjugate_by(const Permutation& w) const {
        if (w.size() != n_) throw SizeMismatch("conjugating subset by permutation of different size");
        std::uint32_t m = 0;
        for (int j = 1; j < n_; ++j) {
            if (!contains(j)) continue;
            int a = w(j), b = w(j + 1);
            if (b == a + 1) m |= 1u << a;
            if (a == b + 1) m |= 1u << b;
        }
        return {n_, m};
    }

    /// w J w^{-1} = J as sets of reflections: every conjugate is simple and lands in J.
    bool stable_under(const Permutation& w) const {
        for (int j = 1; j < n_; ++j) {
            if (!contains(j)) continue;
            int a = w(j), b = w(j + 1);
            int lo = std::min(a, b);
            if (std::abs(a - b) != 1 || !contains(lo)) return false;
        }
        return true;
    }

    /// Set notation "{1,3}".
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i : members()) {
            if (!first) s += ',';
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    /// "1,3", "{1,3}", "" or "{}".
    static SimpleSubset parse(int n, std::string_view text) {
        std::vector<int> m;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) return;
            m.push_back(std::stoi(cur));
            cur.clear();
        };
        for (char c : text) {
            if (c >= '0' && c <= '9')
                cur += c;
            else if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '[' || c == ']')
                flush();
            else
                throw ParseError("bad subset string '" + std::string(text) + "'");
        }
        flush();
        try {
            return SimpleSubset(n, m);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }

    friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;
    friend auto operator<=>(const SimpleSubset& a, const SimpleSubset& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.mask_ <=> b.mask_;
    }

private:
    static std::uint32_t full_mask(int n) { return n <= 1 ? 0u : (1u << n) - 2u; }

    int same(const SimpleSubset& o) const {
        if (n_ != o.n_) throw SizeMismatch("simple subsets of different rank");
        return n_;
    }

    int n_ = 1;
    std::uint32_t mask_ = 0;
};

/// All 2^{n-1} subsets of {1,...,n-1}.
inline std::vector<SimpleSubset> all_simple_subsets(int n) {
    std::vector<SimpleSubset> out;
    for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) out.emplace_back(n, m << 1);
    return out;
}

}  // namespace heckesym
