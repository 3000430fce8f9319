#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "heckesym/errors.hpp"

namespace heckesym {

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the part lists, so for a fixed size the
/// one-row partition is the largest and (1,...,1) the smallest. Lexicographic
/// order refines dominance, which the unitriangular solves rely on.
class Partition {
public:
    Partition() = default;

    /// Parts need not be sorted; zeros are dropped.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw DomainError("partition parts must be nonnegative");
        std::erase(parts_, 0);
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; !parts_.empty() && j <= parts_.front(); ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    /// Multiplicity of part value i.
    int multiplicity(int i) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    /// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation
    /// with cycle type mu.
    std::int64_t z() const {
        std::int64_t r = 1;
        std::map<int, int> mult;
        for (int p : parts_) ++mult[p];
        for (auto [part, m] : mult)
            for (int k = 1; k <= m; ++k) r *= static_cast<std::int64_t>(part) * k;
        return r;
    }

    /// Every part multiplied by k (the cycle type of a k-fold "blow up").
    Partition scaled(int k) const {
        std::vector<int> p = parts_;
        for (int& x : p) x *= k;
        return Partition(std::move(p));
    }

    /// Multiset union of parts.
    Partition join(const Partition& other) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), other.parts_.begin(), other.parts_.end());
        return Partition(std::move(p));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    /// Accepts "[2,2]", "2,2", "(2,2)" and "[]".
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) return;
            try {
                parts.push_back(std::stoi(cur));
            } catch (const std::exception&) {
                throw ParseError("bad partition part '" + cur + "'");
            }
            cur.clear();
        };
        for (char c : text) {
            if (c >= '0' && c <= '9') {
                cur += c;
            } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')') {
                flush();
            } else {
                throw ParseError("unexpected character in partition: '" + std::string(text) + "'");
            }
        }
        flush();
        for (int p : parts)
            if (p <= 0) throw ParseError("partition parts must be positive");
        return Partition(std::move(parts));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// lambda dominates mu (same size assumed): all partial sums of lambda are
/// at least those of mu.
inline bool dominates(const Partition& lambda, const Partition& mu) {
    int a = 0, b = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return true;
}

/// All partitions of n in decreasing lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    rec(n, n);
    return out;
}

/// Index of lambda inside partitions_of(|lambda|).
inline int partition_index(const Partition& lambda) {
    static thread_local std::map<int, std::map<Partition, int>> cache;
    auto& table = cache[lambda.size()];
    if (table.empty()) {
        auto all = partitions_of(lambda.size());
        for (int i = 0; i < static_cast<int>(all.size()); ++i) table.emplace(all[i], i);
    }
    return table.at(lambda);
}

/// Compositions (ordered, positive parts) of n.
inline std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> c;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace heckesym
