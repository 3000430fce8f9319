#pragma once

#include <set>
#include <string>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/parabolic_quotient.hpp"
#include "heckesym/permutation.hpp"
#include "heckesym/simple_subset.hpp"

namespace heckesym {

/// W_J^w = {u in W_J : uw = wu} for w in ^JW^J with wJw^{-1} = J, described
/// through the permutation sigma that w induces on the blocks of J.
struct CentralizerDecomposition {
    SimpleSubset J;
    Permutation w;
    std::vector<int> blocks;                // sizes lambda_1, ..., lambda_k
    std::vector<int> block_starts;          // first index of each block
    std::vector<int> sigma;                 // sigma[i-1] = block containing w(B_i), 1-based
    std::vector<std::vector<int>> cycles;   // cycles of sigma, fixed points included
    std::vector<int> factor_sizes;          // common block size along each cycle
    std::vector<Permutation> generators;    // generate W_J^w
    std::uint64_t order = 0;                // prod over cycles of factor_size!
};

/// Closure of a set of permutations under composition.
inline std::set<Permutation> generated_group(int n, const std::vector<Permutation>& gens) {
    std::set<Permutation> group{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                Permutation h = g * s;
                if (group.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return group;
}

inline CentralizerDecomposition centralizer(const SimpleSubset& J, const Permutation& w) {
    if (J.rank() != w.size()) throw SizeMismatch("centralizer: rank mismatch");
    if (!is_min_double(J, w)) throw DomainError("centralizer: " + w.to_string() + " is not in ^JW^J for J = " + J.to_string());
    if (!J.stable_under(w)) throw DomainError("centralizer: w J w^{-1} != J");
    CentralizerDecomposition d{J, w, J.blocks(), J.block_starts(), {}, {}, {}, {}, 0};
    const int k = static_cast<int>(d.blocks.size());
    auto block_of = [&](int pos) {
        int b = 0;
        while (b + 1 < k && d.block_starts[b + 1] <= pos) ++b;
        return b;
    };
    for (int b = 0; b < k; ++b) {
        const int target = block_of(w(d.block_starts[b]));
        detail::ensure(d.blocks[target] == d.blocks[b], "centralizer: w maps a block onto one of different size");
        d.sigma.push_back(target + 1);
    }
    std::vector<bool> seen(k, false);
    for (int b = 0; b < k; ++b) {
        if (seen[b]) continue;
        std::vector<int> cyc;
        for (int c = b; !seen[c]; c = d.sigma[c] - 1) {
            seen[c] = true;
            cyc.push_back(c + 1);
        }
        d.factor_sizes.push_back(d.blocks[b]);
        d.cycles.push_back(std::move(cyc));
    }
    const int n = w.size();
    d.order = 1;
    for (std::size_t c = 0; c < d.cycles.size(); ++c) {
        const int lambda = d.factor_sizes[c];
        d.order *= factorial(lambda);
        for (int a = 0; a + 1 < lambda; ++a) {
            Permutation g = Permutation::identity(n);
            for (int b : d.cycles[c]) g = g.right_mul_simple(d.block_starts[b - 1] + a);
            d.generators.push_back(g);
        }
    }
    for (const auto& g : d.generators) {
        detail::ensure(in_parabolic_subgroup(J, g), "centralizer generator outside W_J");
        detail::ensure(g * w == w * g, "centralizer generator does not commute with w");
    }
    detail::ensure(generated_group(n, d.generators).size() == d.order, "centralizer generators produce a group of the wrong order");
    return d;
}

/// Sigma in cycle notation over block indices, e.g. "(1 2)(3)".
inline std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
    std::string s;
    for (const auto& c : cycles) {
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c[i]);
        }
        s += ')';
    }
    return s;
}

}  // namespace heckesym
