#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/partition.hpp"

namespace heckesym {

namespace detail {

template <class Key, class Value>
class MemoTable {
public:
    template <class F>
    Value get(const Key& k, F&& compute) {
        {
            std::lock_guard lock(mu_);
            if (auto it = table_.find(k); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::lock_guard lock(mu_);
        return table_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, Value> table_;
};

/// Shapes nu with lambda/nu a horizontal strip of size k.
inline void horizontal_strips(const Partition& lambda, int k, std::vector<Partition>& out) {
    const int len = lambda.length();
    std::vector<int> nu(len);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == len) {
            if (left == 0) out.emplace_back(nu);
            return;
        }
        int lo = lambda[i + 1];
        for (int v = lambda[i]; v >= lo; --v) {
            int removed = lambda[i] - v;
            if (removed > left) break;
            nu[i] = v;
            self(self, i + 1, left - removed);
        }
    };
    rec(rec, 0, k);
}

inline MemoTable<std::pair<Partition, Partition>, std::int64_t>& kostka_memo() {
    static MemoTable<std::pair<Partition, Partition>, std::int64_t> t;
    return t;
}

}  // namespace detail

/// Number of semistandard tableaux of shape lambda and content mu.
inline std::int64_t kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw SizeMismatch("kostka: |lambda| != |mu|");
    if (mu.empty()) return 1;
    if (!dominates(lambda, mu)) return 0;
    return detail::kostka_memo().get({lambda, mu}, [&] {
        // Entries equal to the last letter form a horizontal strip.
        std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
        Partition mu_rest(rest);
        std::vector<Partition> shapes;
        detail::horizontal_strips(lambda, mu.parts().back(), shapes);
        std::int64_t total = 0;
        for (const auto& nu : shapes) total += kostka(nu, mu_rest);
        return total;
    });
}

namespace detail {

inline MemoTable<std::pair<Partition, Partition>, std::int64_t>& character_memo() {
    static MemoTable<std::pair<Partition, Partition>, std::int64_t> t;
    return t;
}

}  // namespace detail

/// chi^lambda(mu) by Murnaghan-Nakayama, removing rim hooks on beta-numbers.
inline std::int64_t sn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw SizeMismatch("sn_character: |lambda| != |mu|");
    if (mu.empty()) return 1;
    return detail::character_memo().get({lambda, mu}, [&] {
        const int k = mu.parts().front();
        std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
        Partition mu_rest(rest);
        const int len = lambda.length();
        std::vector<int> beta(len);
        for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
        std::int64_t total = 0;
        for (int i = 0; i < len; ++i) {
            int target = beta[i] - k;
            if (target < 0) continue;
            bool clash = false;
            int between = 0;
            for (int j = 0; j < len; ++j) {
                if (beta[j] == target) clash = true;
                if (beta[j] > target && beta[j] < beta[i]) ++between;
            }
            if (clash) continue;
            std::vector<int> nb = beta;
            nb[i] = target;
            std::sort(nb.begin(), nb.end(), std::greater<>());
            std::vector<int> parts(len);
            for (int j = 0; j < len; ++j) parts[j] = nb[j] - (len - 1 - j);
            std::int64_t sign = between % 2 ? -1 : 1;
            total += sign * sn_character(Partition(parts), mu_rest);
        }
        return total;
    });
}

/// Number of standard tableaux of shape lambda (hook length formula).
inline std::int64_t standard_tableaux_count(const Partition& lambda) {
    std::int64_t num = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    Partition conj = lambda.conjugate();
    std::int64_t den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return num / den;
}

}  // namespace heckesym
