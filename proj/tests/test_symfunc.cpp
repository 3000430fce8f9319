#include <gtest/gtest.h>

#include <random>

#include "heckesym/heckesym.hpp"

using namespace heckesym;

namespace {

const Basis kBases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

SymmetricFunction sf(const char* text) { return parse_symfunc(text); }

SymmetricFunction random_symfunc(std::mt19937_64& rng, Basis b, int n) {
    std::uniform_int_distribution<int> coef(-2, 2);
    SymmetricFunction f(b, n);
    for (const auto& l : partitions_of(n)) f.add_term(l, LaurentScalar::from_map({{0, coef(rng)}, {2, coef(rng)}}));
    return f;
}

// Number of nonnegative integer matrices with row sums lambda and column sums mu.
std::int64_t contingency_count(std::vector<int> rows, std::vector<int> cols, std::size_t i = 0) {
    if (i == rows.size()) {
        for (int c : cols)
            if (c != 0) return 0;
        return 1;
    }
    std::int64_t total = 0;
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j == cols.size()) {
            if (left == 0) total += contingency_count(rows, cols, i + 1);
            return;
        }
        for (int x = 0; x <= std::min(left, cols[j]); ++x) {
            cols[j] -= x;
            self(self, j + 1, left - x);
            cols[j] += x;
        }
    };
    rec(rec, 0, rows[i]);
    return total;
}

// Semistandard tableaux of shape lambda and content mu, filled cell by cell.
std::int64_t ssyt_count(const Partition& lambda, const Partition& mu) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> t(lambda.length(), std::vector<int>(lambda.empty() ? 0 : lambda[0], 0));
    std::vector<int> left(mu.parts());
    std::int64_t count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (left[v - 1] == 0) continue;
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && t[r - 1][c] >= v) continue;
            t[r][c] = v;
            --left[v - 1];
            self(self, k + 1);
            ++left[v - 1];
        }
    };
    rec(rec, 0);
    return count;
}

std::int64_t hook_length_count(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::int64_t num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) den *= (lambda[r] - c) + (conj[c] - r) - 1;
    return num / den;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), expanded over permutations.
SymmetricFunction jacobi_trudi(const Partition& lambda) {
    const int l = lambda.length();
    SymmetricFunction out(Basis::h, lambda.size());
    if (l == 0) return SymmetricFunction::one();
    for (const auto& w : all_permutations(l)) {
        std::vector<int> parts;
        bool zero = false;
        for (int i = 1; i <= l; ++i) {
            const int k = lambda[i - 1] - i + w(i);
            if (k < 0) zero = true;
            parts.push_back(k);
        }
        if (zero) continue;
        const int sign = w.length() % 2 == 0 ? 1 : -1;
        out.add_term(Partition(parts), LaurentScalar(sign));
    }
    return out;
}

}  // namespace

TEST(Partition, Basics) {
    const Partition l{3, 1};
    EXPECT_EQ(l.conjugate(), Partition({2, 1, 1}));
    EXPECT_EQ(l.to_string(), "[3,1]");
    EXPECT_EQ(Partition::parse("[2,2]"), Partition({2, 2}));
    EXPECT_EQ(Partition({1, 2, 2}).z(), 8);
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
    EXPECT_EQ(partitions_of(7).size(), 15u);
}

TEST(Symfunc, ConversionExamples) {
    EXPECT_EQ(s({2, 1}).to_basis(Basis::h).to_string(), "h[2,1]-h[3]");
    EXPECT_EQ(h({2}).to_basis(Basis::p).to_string(), "(p[1,1]+p[2])/2");
    EXPECT_EQ(p({3}).to_basis(Basis::p), p({3}));
    EXPECT_EQ(h({1, 1}).to_basis(Basis::m), sf("2m[1,1]+m[2]"));
}

TEST(Symfunc, SchurMatchesJacobiTrudi) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n)) EXPECT_EQ(s(l).to_basis(Basis::h), jacobi_trudi(l)) << l.to_string();
}

TEST(Symfunc, CompleteToMonomialCountsContingencyTables) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitions_of(n)) {
            const SymmetricFunction hm = h(l).to_basis(Basis::m);
            for (const auto& mu : partitions_of(n))
                EXPECT_EQ(hm.coeff(mu), RationalLaurent(contingency_count(l.parts(), mu.parts())));
        }
}

TEST(Symfunc, CompletePowerSumCoefficientsAreInverseZ) {
    for (int n = 1; n <= 6; ++n) {
        const SymmetricFunction hp = h({n}).to_basis(Basis::p);
        for (const auto& mu : partitions_of(n)) EXPECT_EQ(hp.coeff(mu), RationalLaurent(Rational(1, mu.z()), 0));
    }
}

TEST(Symfunc, ConversionRoundTrips) {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 7; ++n)
        for (Basis a : kBases) {
            const SymmetricFunction f = random_symfunc(rng, a, n);
            for (Basis b : kBases) {
                const SymmetricFunction g = f.to_basis(b);
                EXPECT_EQ(g.to_basis(a).terms(), f.terms());
                if (a != Basis::p && b != Basis::p) { EXPECT_TRUE(g.is_integral()); }
            }
        }
}

TEST(Symfunc, MultiplyExamples) {
    EXPECT_EQ(h({2}) * h({2}), h({2, 2}));
    EXPECT_EQ(h({1}) * h({1}), sf("m[2]+2m[1,1]"));
    EXPECT_EQ((s({1}) * s({1})).to_basis(Basis::s), sf("s[1,1]+s[2]"));
}

TEST(Symfunc, PieriRuleForOneBox) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitions_of(n)) {
            SymmetricFunction expected(Basis::s, n + 1);
            for (int r = 0; r <= l.length(); ++r) {
                std::vector<int> parts = l.parts();
                if (r == l.length())
                    parts.push_back(1);
                else
                    ++parts[r];
                if (r > 0 && parts[r] > parts[r - 1]) continue;
                expected.add_term(Partition(parts), LaurentScalar(1));
            }
            EXPECT_EQ((s(l) * s({1})).to_basis(Basis::s).terms(), expected.terms()) << l.to_string();
        }
}

TEST(Symfunc, MultiplyIsCommutativeAndAssociative) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_symfunc(rng, Basis::s, 2), g = random_symfunc(rng, Basis::m, 2), k = random_symfunc(rng, Basis::e, 1);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ((f * g) * k, f * (g * k));
    }
}

TEST(Symfunc, OmegaExamplesAndProperties) {
    EXPECT_EQ(omega(h({2, 1})), e({2, 1}));
    EXPECT_EQ(omega(s({2, 2})), s({2, 2}));
    EXPECT_EQ(omega(p({2})), sf("-p[2]"));
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n)) EXPECT_EQ(omega(s(l)), s(l.conjugate()));
    std::mt19937_64 rng(29);
    for (Basis b : kBases) {
        const auto f = random_symfunc(rng, b, 4), g = random_symfunc(rng, b, 2);
        EXPECT_EQ(omega(omega(f)), f);
        EXPECT_EQ(omega(f * g), omega(f) * omega(g));
    }
}

TEST(Symfunc, PlethysmExamplesAndMultiplicativity) {
    EXPECT_EQ(plethysm_power(1, s({2, 1})), s({2, 1}));
    EXPECT_EQ(plethysm_power(2, h({2})).to_string(), "(p[2,2]+p[4])/2");
    EXPECT_EQ(plethysm_power(2, p({3})), p({6}));
    std::mt19937_64 rng(31);
    for (int k = 1; k <= 3; ++k) {
        const auto f = random_symfunc(rng, Basis::h, 2), g = random_symfunc(rng, Basis::s, 1);
        EXPECT_EQ(plethysm_power(k, f * g), plethysm_power(k, f) * plethysm_power(k, g));
    }
    // q-coefficients are inert under p_k[-].
    const SymmetricFunction f = LaurentScalar::q() * h({2});
    EXPECT_EQ(plethysm_power(2, f), LaurentScalar::q() * plethysm_power(2, h({2})));
}

TEST(Symfunc, TextRoundTrip) {
    std::mt19937_64 rng(37);
    for (Basis b : kBases) {
        const auto f = random_symfunc(rng, b, 4);
        EXPECT_EQ(parse_symfunc(f.to_string()).terms(), f.terms()) << f.to_string();
    }
    EXPECT_EQ(parse_symfunc("h[]").degree(), 0);
    EXPECT_THROW(parse_symfunc("h[2]+s[2]"), ParseError);
    EXPECT_THROW(parse_symfunc("x[2]"), ParseError);
}

TEST(Kostka, Examples) {
    for (const auto& mu : partitions_of(5)) EXPECT_EQ(kostka({5}, mu), 1);
    EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(kostka({1, 1}, {2}), 0);
    EXPECT_THROW(kostka({2}, {1}), DomainError);
}

TEST(Kostka, MatchesTableauEnumeration) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n)) EXPECT_EQ(kostka(l, mu), ssyt_count(l, mu)) << l.to_string() << mu.to_string();
}

TEST(Kostka, UnitriangularInDominanceOrder) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                if (l == mu) {
                    EXPECT_EQ(kostka(l, mu), 1);
                } else if (!dominates(l, mu)) {
                    EXPECT_EQ(kostka(l, mu), 0);
                }
            }
}

TEST(SnCharacter, Examples) {
    for (const auto& mu : partitions_of(4)) EXPECT_EQ(sn_character({4}, mu), 1);
    EXPECT_EQ(sn_character({2, 2}, {1, 1, 1, 1}), 2);
    EXPECT_EQ(sn_character({1, 1}, {2}), -1);
}

TEST(SnCharacter, OrthogonalityAndDimensions) {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        const auto nfact = static_cast<std::int64_t>(factorial(n));
        for (const auto& l : parts) {
            EXPECT_EQ(sn_character(l, Partition(std::vector<int>(n, 1))), hook_length_count(l));
            EXPECT_EQ(standard_tableaux_count(l), hook_length_count(l));
            for (const auto& k : parts) {
                std::int64_t sum = 0;
                for (const auto& mu : parts) sum += nfact / mu.z() * sn_character(l, mu) * sn_character(k, mu);
                EXPECT_EQ(sum, l == k ? nfact : 0);
            }
        }
    }
}

TEST(SnCharacter, PowerSumExpansionInSchurBasis) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            const SymmetricFunction ps = p(mu).to_basis(Basis::s);
            for (const auto& l : partitions_of(n)) EXPECT_EQ(ps.coeff(l), RationalLaurent(sn_character(l, mu)));
        }
}
