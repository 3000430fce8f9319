#include <gtest/gtest.h>

#include <functional>

#include "heckesym/heckesym.hpp"

using namespace heckesym;

namespace {

const LaurentScalar q = LaurentScalar::q();
const LaurentScalar one(1);

// Brute force over every map [n] -> [n]: a colouring with colour multiplicities
// forming a partition (non-increasing, no gaps) contributes to the m_lambda coefficient.
SymmetricFunction brute_force(int n, const std::function<bool(const std::vector<int>&)>& admissible,
                              const std::function<int(const std::vector<int>&)>& stat) {
    std::map<Partition, LaurentScalar> acc;
    std::vector<int> k(n, 1);
    while (true) {
        std::vector<int> content(n, 0);
        for (int c : k) ++content[c - 1];
        bool is_partition = true;
        for (int i = 1; i < n; ++i)
            if (content[i] > content[i - 1]) is_partition = false;
        if (is_partition && admissible(k)) acc[Partition(content)] += LaurentScalar::q(stat(k));
        int i = 0;
        while (i < n && k[i] == n) k[i++] = 1;
        if (i == n) break;
        ++k[i];
    }
    SymmetricFunction f(Basis::m, n);
    for (const auto& [l, c] : acc) f.add_term(l, c);
    return f;
}

SymmetricFunction brute_csf(const Graph& g) {
    const int n = g.size();
    auto proper = [&](const std::vector<int>& k) {
        for (const auto& [a, b] : g.edges())
            if (k[a - 1] == k[b - 1]) return false;
        return true;
    };
    auto asc = [&](const std::vector<int>& k) {
        int c = 0;
        for (const auto& [a, b] : g.edges()) c += k[a - 1] < k[b - 1];
        return c;
    };
    return brute_force(n, proper, asc);
}

SymmetricFunction brute_weighted(const WeightedGraphMap& gf) {
    const int n = gf.size();
    auto ok = [&](const std::vector<int>& k) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int a = gf.f[i - 1], b = gf.f[j - 1];
                if (a == b && k[i - 1] >= k[j - 1]) return false;
                if (a != b && gf.base.adjacent(a, b) && k[i - 1] == k[j - 1]) return false;
            }
        return true;
    };
    auto asc = [&](const std::vector<int>& k) {
        int c = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int a = gf.f[i - 1], b = gf.f[j - 1];
                c += a < b && gf.base.adjacent(a, b) && k[i - 1] < k[j - 1];
            }
        return c;
    };
    return brute_force(n, ok, asc);
}

// All weakly increasing surjections [n] -> [m].
std::vector<std::vector<int>> fibre_maps(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> f;
    auto rec = [&](auto&& self, int i, int cur) -> void {
        if (i == n) {
            if (cur == m) out.push_back(f);
            return;
        }
        for (int next : {cur, cur + 1}) {
            if (next < 1 || next > m || (i == 0 && next != 1)) continue;
            f.push_back(next);
            self(self, i + 1, next);
            f.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST(Graph, IndifferenceGraphs) {
    const Graph g = Graph::indifference(HessenbergFunction({2, 3, 4, 4}));
    EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}));
    for (int n = 1; n <= 6; ++n)
        for (const auto& m : all_hessenberg_functions(n)) {
            const Graph h = Graph::indifference(m);
            EXPECT_TRUE(h.is_indifference());
            EXPECT_EQ(h.hessenberg(), m);
        }
}

TEST(Chromatic, Examples) {
    EXPECT_EQ(csf_q(HessenbergFunction({2, 2})), (one + q) * e({2}));
    EXPECT_EQ(csf_q(HessenbergFunction({2, 2})).to_string(), "(1+q)m[1,1]");
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i + 1;
        SymmetricFunction pow = h({1});
        for (int i = 1; i < n; ++i) pow = pow * h({1});
        EXPECT_EQ(csf_q(HessenbergFunction(id)), pow);
    }
    EXPECT_EQ(omega(csf_q(HessenbergFunction({2, 3, 4, 4}))), frobenius_char(kl_basis(Permutation::parse("2341"))));
}

TEST(Chromatic, MatchesBruteForceColourings) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& m : all_hessenberg_functions(n)) {
            const Graph g = Graph::indifference(m);
            EXPECT_EQ(csf_q(g).terms(), brute_csf(g).terms()) << m.to_string();
        }
}

TEST(Chromatic, AtQEqualsOneCountsProperColourings) {
    // Stanley: the m_{1^n} coefficient at q = 1 is the number of proper colourings
    // with n distinct colours, i.e. n!, for any graph on n vertices.
    for (int n = 1; n <= 5; ++n)
        for (const auto& m : all_hessenberg_functions(n)) {
            const SymmetricFunction f = csf_q(m).at_q1();
            EXPECT_EQ(f.coeff(Partition(std::vector<int>(n, 1))), RationalLaurent(static_cast<std::int64_t>(factorial(n))));
        }
}

TEST(Chromatic, CliqueExpansion) {
    const Graph k1(1);
    EXPECT_EQ(clique_expand(WeightedGraphMap(k1, {1, 1})), Graph::complete(2));
    EXPECT_EQ(clique_expand(WeightedGraphMap(Graph::complete(2), {1, 1, 2})), Graph::complete(3));
    const Graph path = Graph::indifference(HessenbergFunction({2, 3, 3}));
    EXPECT_EQ(clique_expand(WeightedGraphMap(path, {1, 2, 3})), path);
    for (int n = 1; n <= 5; ++n)
        for (int mm = 1; mm <= n; ++mm)
            for (const auto& m : all_hessenberg_functions(mm))
                for (const auto& f : fibre_maps(n, mm)) EXPECT_TRUE(clique_expand(WeightedGraphMap(Graph::indifference(m), f)).is_indifference());
}

TEST(Chromatic, WeightedExamples) {
    EXPECT_EQ(weighted_csf_q(WeightedGraphMap(Graph(1), {1, 1})), e({2}));
    const HessenbergFunction m{2, 3, 4, 4};
    EXPECT_EQ(weighted_csf_q(WeightedGraphMap(Graph::indifference(m), {1, 2, 3, 4})), csf_q(m));
    const SymmetricFunction k3 = weighted_csf_q(WeightedGraphMap(Graph::complete(2), {1, 1, 2}));
    EXPECT_EQ(k3, (one + q + q * q) * e({3}));
    EXPECT_EQ(q_factorial(2) * k3, csf_q(Graph::complete(3)));
    EXPECT_EQ(WeightedGraphMap::parse("G=2,3,4,4;f=1,1,2,3,4").fiber_sizes(), (std::vector<int>{2, 1, 1, 1}));
    EXPECT_THROW(WeightedGraphMap::parse("G=2,3,4,4;f=1,3"), ParseError);
}

TEST(Chromatic, WeightedMatchesBruteForceAndCliqueIdentity) {
    for (int n = 1; n <= 5; ++n)
        for (int mm = 1; mm <= n; ++mm)
            for (const auto& m : all_hessenberg_functions(mm))
                for (const auto& f : fibre_maps(n, mm)) {
                    const WeightedGraphMap gf(Graph::indifference(m), f);
                    const SymmetricFunction w = weighted_csf_q(gf);
                    EXPECT_EQ(w.terms(), brute_weighted(gf).terms());
                    EXPECT_EQ(q_multinomial_denominator(gf.fiber_sizes()) * w, csf_q(clique_expand(gf)));
                    EXPECT_EQ(gasharov_quotient(gf), w);
                }
}

TEST(Chromatic, OmegaDualMatchesKLCharacterSmallRanks) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& m : all_hessenberg_functions(n))
            EXPECT_EQ(omega(csf_q(m)), frobenius_char(kl_basis(codominant_permutation(m)))) << m.to_string();
}
