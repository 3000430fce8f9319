#pragma once

#include <algorithm>
#include <vector>

#include "heckesym/permutation.hpp"
#include "heckesym/simple_subset.hpp"

namespace heckesym {

/// w in ^J W, i.e. w is the shortest element of W_J w.
inline bool is_min_left(const SimpleSubset& J, const Permutation& w) {
    for (int j : J.members())
        if (w.has_left_descent(j)) return false;
    return true;
}

/// w in W^J, i.e. w is the shortest element of w W_J.
inline bool is_min_right(const SimpleSubset& J, const Permutation& w) {
    for (int j : J.members())
        if (w.has_right_descent(j)) return false;
    return true;
}

inline bool is_min_double(const SimpleSubset& J, const Permutation& w) {
    return is_min_left(J, w) && is_min_right(J, w);
}

inline bool is_max_left(const SimpleSubset& J, const Permutation& w) {
    for (int j : J.members())
        if (!w.has_left_descent(j)) return false;
    return true;
}

inline bool is_max_right(const SimpleSubset& J, const Permutation& w) {
    for (int j : J.members())
        if (!w.has_right_descent(j)) return false;
    return true;
}

/// Longest element of W_J w W_J.
inline bool is_max_double(const SimpleSubset& J, const Permutation& w) {
    return is_max_left(J, w) && is_max_right(J, w);
}

namespace detail {

template <class Step, class Want>
Permutation greedy_walk(Permutation w, const SimpleSubset& J, Step step, Want want) {
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : J.members()) {
            if (want(w, j)) {
                w = step(w, j);
                moved = true;
            }
        }
    }
    return w;
}

}  // namespace detail

/// Shortest element of W_J w.
inline Permutation min_left_rep(const SimpleSubset& J, const Permutation& w) {
    return detail::greedy_walk(
        w, J, [](const Permutation& u, int j) { return u.left_mul_simple(j); },
        [](const Permutation& u, int j) { return u.has_left_descent(j); });
}

inline Permutation max_left_rep(const SimpleSubset& J, const Permutation& w) {
    return detail::greedy_walk(
        w, J, [](const Permutation& u, int j) { return u.left_mul_simple(j); },
        [](const Permutation& u, int j) { return !u.has_left_descent(j); });
}

/// Shortest element of w W_J.
inline Permutation min_right_rep(const SimpleSubset& J, const Permutation& w) {
    return detail::greedy_walk(
        w, J, [](const Permutation& u, int j) { return u.right_mul_simple(j); },
        [](const Permutation& u, int j) { return u.has_right_descent(j); });
}

inline Permutation max_right_rep(const SimpleSubset& J, const Permutation& w) {
    return detail::greedy_walk(
        w, J, [](const Permutation& u, int j) { return u.right_mul_simple(j); },
        [](const Permutation& u, int j) { return !u.has_right_descent(j); });
}

/// Shortest element of W_J w W_J.
inline Permutation min_double_rep(const SimpleSubset& J, Permutation w) {
    while (!is_min_double(J, w)) w = min_right_rep(J, min_left_rep(J, w));
    return w;
}

/// Longest element of W_J w W_J.
inline Permutation max_double_rep(const SimpleSubset& J, Permutation w) {
    while (!is_max_double(J, w)) w = max_right_rep(J, max_left_rep(J, w));
    return w;
}

/// The longest element w_J of the parabolic subgroup W_J.
inline Permutation longest_of(const SimpleSubset& J) {
    std::vector<int> img;
    int start = 1;
    for (int b : J.blocks()) {
        for (int k = b - 1; k >= 0; --k) img.push_back(start + k);
        start += b;
    }
    return Permutation(img);
}

inline bool in_parabolic_subgroup(const SimpleSubset& J, const Permutation& u) {
    int start = 1;
    for (int b : J.blocks()) {
        for (int i = start; i < start + b; ++i)
            if (u(i) < start || u(i) >= start + b) return false;
        start += b;
    }
    return true;
}

/// Elements of W_J in lexicographic order.
inline std::vector<Permutation> parabolic_subgroup(const SimpleSubset& J) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(J.rank()))
        if (in_parabolic_subgroup(J, w)) out.push_back(w);
    return out;
}

/// ^J W in lexicographic order.
inline std::vector<Permutation> min_left_quotient(const SimpleSubset& J) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(J.rank()))
        if (is_min_left(J, w)) out.push_back(w);
    return out;
}

/// W^J in lexicographic order.
inline std::vector<Permutation> min_right_quotient(const SimpleSubset& J) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(J.rank()))
        if (is_min_right(J, w)) out.push_back(w);
    return out;
}

/// ^J W^J in lexicographic order.
inline std::vector<Permutation> min_double_quotient(const SimpleSubset& J) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(J.rank()))
        if (is_min_double(J, w)) out.push_back(w);
    return out;
}

}  // namespace heckesym
