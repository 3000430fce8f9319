#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/partition.hpp"

namespace heckesym {

inline constexpr int kMaxRank = 16;

/// A permutation of [n] in one-line notation, 1-based: w(i) = images[i-1].
///
/// Composition follows functions: (w * z)(i) = w(z(i)). Left multiplication
/// by s_i therefore swaps the values i and i+1, right multiplication swaps the
/// positions i and i+1.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::span<const int> images) : n_(static_cast<std::uint8_t>(images.size())) {
        if (images.empty() || images.size() > static_cast<std::size_t>(kMaxRank))
            throw DomainError("permutation size must be in [1," + std::to_string(kMaxRank) + "]");
        std::uint32_t seen = 0;
        for (std::size_t i = 0; i < images.size(); ++i) {
            int v = images[i];
            if (v < 1 || v > n_ || (seen & (1u << v)))
                throw DomainError("images do not form a permutation of [n]");
            seen |= 1u << v;
            img_[i] = static_cast<std::uint8_t>(v);
        }
    }

    Permutation(std::initializer_list<int> images)
        : Permutation(std::span<const int>(images.begin(), images.size())) {}

    static Permutation identity(int n) {
        Permutation p;
        p.n_ = static_cast<std::uint8_t>(check_size(n));
        for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
        return p;
    }

    static Permutation longest(int n) {
        Permutation p;
        p.n_ = static_cast<std::uint8_t>(check_size(n));
        for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(n - i);
        return p;
    }

    /// The simple transposition s_i = (i i+1), 1 <= i < n.
    static Permutation simple(int n, int i) {
        if (i < 1 || i >= n) throw DomainError("simple transposition index out of range");
        Permutation p = identity(n);
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    int size() const noexcept { return n_; }
    int operator()(int i) const noexcept { return img_[i - 1]; }

    std::vector<int> images() const { return {img_.begin(), img_.begin() + n_}; }

    bool is_identity() const noexcept {
        for (int i = 0; i < n_; ++i)
            if (img_[i] != i + 1) return false;
        return true;
    }

    int length() const noexcept {
        int inv = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv;
    }

    Permutation inverse() const noexcept {
        Permutation p;
        p.n_ = n_;
        for (int i = 0; i < n_; ++i) p.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
        return p;
    }

    /// s_i * w
    Permutation left_mul_simple(int i) const noexcept {
        Permutation p = *this;
        for (int k = 0; k < n_; ++k) {
            if (p.img_[k] == i)
                p.img_[k] = static_cast<std::uint8_t>(i + 1);
            else if (p.img_[k] == i + 1)
                p.img_[k] = static_cast<std::uint8_t>(i);
        }
        return p;
    }

    /// w * s_i
    Permutation right_mul_simple(int i) const noexcept {
        Permutation p = *this;
        std::swap(p.img_[i - 1], p.img_[i]);
        return p;
    }

    /// l(s_i w) < l(w): i+1 occurs before i.
    bool has_left_descent(int i) const noexcept { return position_of(i + 1) < position_of(i); }
    /// l(w s_i) < l(w)
    bool has_right_descent(int i) const noexcept { return img_[i - 1] > img_[i]; }

    int position_of(int value) const noexcept {
        for (int k = 0; k < n_; ++k)
            if (img_[k] == value) return k + 1;
        return 0;
    }

    std::vector<int> left_descents() const {
        std::vector<int> d;
        for (int i = 1; i < n_; ++i)
            if (has_left_descent(i)) d.push_back(i);
        return d;
    }

    std::vector<int> right_descents() const {
        std::vector<int> d;
        for (int i = 1; i < n_; ++i)
            if (has_right_descent(i)) d.push_back(i);
        return d;
    }

    /// Cycle lengths sorted decreasingly (fixed points included).
    Partition cycle_type() const {
        std::vector<int> lens;
        std::uint32_t seen = 0;
        for (int i = 1; i <= n_; ++i) {
            if (seen & (1u << i)) continue;
            int len = 0;
            for (int j = i; !(seen & (1u << j)); j = img_[j - 1]) {
                seen |= 1u << j;
                ++len;
            }
            lens.push_back(len);
        }
        return Partition(std::move(lens));
    }

    /// Cycles as lists starting at their smallest element, ordered by that element.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::uint32_t seen = 0;
        for (int i = 1; i <= n_; ++i) {
            if (seen & (1u << i)) continue;
            std::vector<int> c;
            for (int j = i; !(seen & (1u << j)); j = img_[j - 1]) {
                seen |= 1u << j;
                c.push_back(j);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    /// A reduced word (a_1,...,a_l) with w = s_{a_1} ... s_{a_l}.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation u = *this;
        for (;;) {
            int i = 1;
            while (i < n_ && !u.has_right_descent(i)) ++i;
            if (i >= n_) break;
            word.push_back(i);
            u = u.right_mul_simple(i);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    /// Lehmer-code rank in [0, n!), lexicographic on one-line notation.
    std::uint64_t rank() const noexcept {
        std::uint64_t r = 0;
        std::uint32_t used = 0;
        for (int i = 0; i < n_; ++i) {
            int v = img_[i];
            int smaller_unused = std::popcount(((1u << v) - 1) & ~used & ~1u);
            r = r * static_cast<std::uint64_t>(n_ - i) + static_cast<std::uint64_t>(smaller_unused);
            used |= 1u << v;
        }
        return r;
    }

    static Permutation unrank(int n, std::uint64_t r) {
        check_size(n);
        std::array<int, kMaxRank> digits{};
        for (int i = n - 1; i >= 0; --i) {
            std::uint64_t base = static_cast<std::uint64_t>(n - i);
            digits[i] = static_cast<int>(r % base);
            r /= base;
        }
        std::vector<int> avail(n);
        for (int i = 0; i < n; ++i) avail[i] = i + 1;
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) {
            img[i] = avail[digits[i]];
            avail.erase(avail.begin() + digits[i]);
        }
        return Permutation(img);
    }

    std::uint64_t pack() const noexcept {
        std::uint64_t h = n_;
        for (int i = 0; i < n_; ++i) h = (h << 4) ^ static_cast<std::uint64_t>(img_[i] - 1);
        return h;
    }

    /// "3412" for n <= 9, "10,3,..." otherwise.
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (n_ > 9 && i) s += ',';
            s += std::to_string(img_[i]);
        }
        return s;
    }

    /// Compact digit strings ("3412") or comma lists ("10,3,...").
    static Permutation parse(std::string_view text) {
        std::vector<int> img;
        bool has_sep = text.find_first_of(", ") != std::string_view::npos;
        if (!has_sep) {
            for (char c : text) {
                if (c < '1' || c > '9') throw ParseError("bad permutation string '" + std::string(text) + "'");
                img.push_back(c - '0');
            }
        } else {
            std::string cur;
            auto flush = [&] {
                if (cur.empty()) return;
                img.push_back(std::stoi(cur));
                cur.clear();
            };
            for (char c : text) {
                if (c >= '0' && c <= '9')
                    cur += c;
                else if (c == ',' || c == ' ')
                    flush();
                else
                    throw ParseError("bad permutation string '" + std::string(text) + "'");
            }
            flush();
        }
        if (img.empty()) throw ParseError("empty permutation string");
        try {
            return Permutation(img);
        } catch (const DomainError& e) {
            throw ParseError("'" + std::string(text) + "' is not a permutation: " + e.what());
        }
    }

    friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
        return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
    }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (int i = 0; i < a.n_; ++i)
            if (auto c = a.img_[i] <=> b.img_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    static int check_size(int n) {
        if (n < 1 || n > kMaxRank) throw DomainError("permutation size out of range");
        return n;
    }

    std::array<std::uint8_t, kMaxRank> img_{};
    std::uint8_t n_ = 0;
};

/// (w * z)(i) = w(z(i))
inline Permutation operator*(const Permutation& w, const Permutation& z) {
    if (w.size() != z.size()) throw SizeMismatch("composing permutations of different sizes");
    std::vector<int> img(w.size());
    for (int i = 1; i <= w.size(); ++i) img[i - 1] = w(z(i));
    return Permutation(img);
}

/// Order used for printing Hecke elements: by length, then lexicographic.
struct LengthLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a < b;
    }
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// Rank matrix r(i,j) = #{k <= i : w(k) <= j}, indices 0..n inclusive.
class RankMatrix {
public:
    explicit RankMatrix(const Permutation& w) : n_(w.size()), r_((n_ + 1) * (n_ + 1), 0) {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                at(i, j) = at(i - 1, j) + (w(i) <= j ? 1 : 0);
    }

    int size() const noexcept { return n_; }
    int operator()(int i, int j) const { return r_[i * (n_ + 1) + j]; }

    friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

private:
    int& at(int i, int j) { return r_[i * (n_ + 1) + j]; }
    int n_;
    std::vector<int> r_;
};

inline RankMatrix rank_matrix(const Permutation& w) { return RankMatrix(w); }

/// Bruhat order via the rank-matrix criterion: z <= w iff r(z) >= r(w) entrywise.
inline bool bruhat_leq(const Permutation& z, const Permutation& w) {
    if (z.size() != w.size()) throw SizeMismatch("bruhat_leq: permutations of different sizes");
    const int n = z.size();
    // Running counts avoid materializing both matrices.
    std::array<int, kMaxRank + 1> rz{}, rw{};
    for (int i = 1; i <= n; ++i) {
        for (int j = z(i); j <= n; ++j) ++rz[j];
        for (int j = w(i); j <= n; ++j) ++rw[j];
        for (int j = 1; j <= n; ++j)
            if (rz[j] < rw[j]) return false;
    }
    return true;
}

}  // namespace heckesym

template <>
struct std::hash<heckesym::Permutation> {
    std::size_t operator()(const heckesym::Permutation& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.pack());
    }
};
