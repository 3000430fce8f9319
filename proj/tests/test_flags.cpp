#include <gtest/gtest.h>

#include <random>

#include "heckesym/heckesym.hpp"

using namespace heckesym;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
SimpleSubset S(int n, const char* s) { return SimpleSubset::parse(n, s); }

RationalVector vec(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) v.push_back(x);
    return v;
}

const RationalMatrix kDiagX = RationalMatrix::diagonal(vec({1, 2, -1, -2}));

PartialFlag grassmannian_point(const RationalVector& a, const RationalVector& b) {
    return PartialFlag(S(4, "1,3"), {Subspace(4, {a, b})});
}

RationalMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    for (;;) {
        std::vector<RationalVector> rows(n, RationalVector(n));
        for (auto& r : rows)
            for (auto& x : r) x = entry(rng);
        RationalMatrix X = RationalMatrix::from_rows(rows);
        if (X.is_invertible()) return X;
    }
}

// Full flags: the permutation whose rank matrix is dim(XV_i ∩ V_j), by search.
Permutation brute_relative_position(const PartialFlag& V, const RationalMatrix& X) {
    const int n = V.rank();
    for (const auto& w : all_permutations(n)) {
        const RankMatrix r = rank_matrix(w);
        bool ok = true;
        for (int i = 1; i < n && ok; ++i)
            for (int j = 1; j < n && ok; ++j) ok = r(i, j) == V.at(i).image(X).intersect(V.at(j)).dim();
        if (ok) return w;
    }
    throw std::logic_error("no permutation matches");
}

// Krylov flag V_i = <u, Xu, ..., X^{i-1}u>, which satisfies XV_i ⊆ V_{i+1}.
PartialFlag krylov_flag(const RationalMatrix& X, RationalVector u) {
    const int n = X.rows();
    std::vector<RationalVector> cols;
    for (int i = 0; i < n; ++i) {
        cols.push_back(u);
        u = X.apply(u);
    }
    return PartialFlag::from_basis(SimpleSubset::empty(n), cols);
}

}  // namespace

TEST(RationalMatrix, ArithmeticAndText) {
    const RationalMatrix A = RationalMatrix::from_rows({vec({1, 2}), vec({3, 4})});
    EXPECT_EQ(A.rank(), 2);
    EXPECT_EQ((A * RationalMatrix::identity(2)), A);
    EXPECT_EQ(A.transpose()(0, 1), Rational(3));
    EXPECT_EQ(A.apply(vec({1, 1})), vec({3, 7}));
    const RationalMatrix B = RationalMatrix::from_rows({vec({1, 2}), vec({2, 4})});
    EXPECT_FALSE(B.is_invertible());
    const RationalMatrix C = RationalMatrix::parse("# comment\n1/2 0\n\n0 -3\n");
    EXPECT_EQ(C(0, 0), Rational(1, 2));
    EXPECT_EQ(RationalMatrix::parse(C.to_string()), C);
    EXPECT_THROW(RationalMatrix::parse("1 2\n3\n"), ParseError);
    EXPECT_THROW(RationalMatrix::parse("1 x\n"), ParseError);
}

TEST(Subspace, Examples) {
    const Subspace A(4, {vec({1, 1, 1, 1}), vec({1, -1, 0, 0})});
    EXPECT_EQ(A.intersect(A), A);
    const Subspace e1(4, {vec({1, 0, 0, 0})});
    EXPECT_EQ(e1.image(kDiagX), e1);
    EXPECT_EQ(A.intersect(A.image(kDiagX)).dim(), 0);
    EXPECT_TRUE(A.contains(vec({2, 0, 1, 1})));
    EXPECT_FALSE(A.contains(vec({1, 0, 0, 0})));
    EXPECT_EQ(Subspace(4, {vec({2, 2, 2, 2}), vec({0, 2, 1, 1})}), A);
    EXPECT_THROW(A + Subspace::zero(3), SizeMismatch);
}

TEST(Subspace, DimensionFormulaOnRandomPairs) {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> entry(-1, 1), count(0, 4);
    for (int t = 0; t < 200; ++t) {
        std::vector<RationalVector> a(count(rng), RationalVector(4)), b(count(rng), RationalVector(4));
        for (auto* side : {&a, &b})
            for (auto& v : *side)
                for (auto& x : v) x = entry(rng);
        const Subspace A(4, a), B(4, b);
        const Subspace I = A.intersect(B);
        EXPECT_EQ(I.dim(), A.dim() + B.dim() - (A + B).dim());
        EXPECT_TRUE(I.subset_of(A));
        EXPECT_TRUE(I.subset_of(B));
        EXPECT_TRUE(A.subset_of(A + B));
    }
}

TEST(PartialFlagText, RoundTrip) {
    std::mt19937_64 rng(59);
    for (const auto& J : all_simple_subsets(4)) {
        if (J == SimpleSubset::full(4)) continue;
        const PartialFlag V = random_flag(J, rng);
        EXPECT_EQ(PartialFlag::parse(V.to_string()), V);
    }
    EXPECT_THROW(PartialFlag::parse("1 0\n\n1 0 0\n"), ParseError);
    EXPECT_THROW(PartialFlag::parse("1 0 0\n\n2 0 0\n"), ParseError);
}

TEST(RelativePosition, Examples) {
    const PartialFlag V = grassmannian_point(vec({1, 1, 1, 1}), vec({1, -1, 0, 0}));
    EXPECT_EQ(relative_position(S(4, "1,3"), V, kDiagX), P("3412"));
    EXPECT_TRUE(cell_membership(P("3412"), S(4, "1,3"), V, kDiagX));
    EXPECT_FALSE(cell_membership(P("1234"), S(4, "1,3"), V, kDiagX));
    EXPECT_EQ(relative_position(S(4, "1,3"), V, RationalMatrix::identity(4)), Permutation::identity(4));
    const PartialFlag W = grassmannian_point(vec({1, 0, 0, 0}), vec({0, 1, 0, 0}));
    EXPECT_EQ(relative_position(S(4, "1,3"), W, kDiagX), Permutation::identity(4));
    EXPECT_THROW(relative_position(S(4, "1"), V, kDiagX), DomainError);
    EXPECT_THROW(relative_position(S(4, "1,3"), V, RationalMatrix::diagonal(vec({1, 0, 1, 1}))), DomainError);
    EXPECT_THROW(cell_membership(P("2134"), S(4, "1,3"), V, kDiagX), DomainError);
}

TEST(RelativePosition, FullFlagsMatchBruteForce) {
    std::mt19937_64 rng(61);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 60; ++t) {
            const RationalMatrix X = t % 2 ? random_regular_semisimple(n, rng) : random_matrix(n, rng);
            const PartialFlag V = random_flag(SimpleSubset::empty(n), rng, t % 3 == 0 ? 0.7 : 0.3);
            EXPECT_EQ(relative_position(SimpleSubset::empty(n), V, X), brute_relative_position(V, X));
        }
}

TEST(CoalesceRefine, GrassmannianOneDimensionalIntersection) {
    const RationalMatrix X = RationalMatrix::diagonal(vec({1, 2, 3, 4}));
    const RationalVector u = vec({1, 1, 1, 1});
    const RationalVector Xu = X.apply(u), X2u = X.apply(Xu);
    const PartialFlag V = grassmannian_point(u, Xu);
    const Refinement r = coalesce_refine(S(4, "1,3"), V, X);
    EXPECT_TRUE(r.J.is_empty());
    EXPECT_EQ(r.flag.at(1), Subspace(4, {Xu}));
    EXPECT_EQ(r.flag.at(1), V.at(2).intersect(V.at(2).image(X)));
    EXPECT_EQ(r.flag.at(2), V.at(2));
    EXPECT_EQ(r.flag.at(3), V.at(2) + V.at(2).image(X));
    EXPECT_EQ(r.flag.at(3), Subspace(4, {u, Xu, X2u}));
    EXPECT_EQ(r.w, P("1324"));
    EXPECT_EQ(to_string(type_sequence(S(4, "1,3"), V, X)), "(({1,3},1324),(∅,3142))");
    EXPECT_TRUE(cell_membership(P("3142"), S(4, "1,3"), V, X));
}

TEST(CoalesceRefine, StableAndFullFlagCases) {
    std::mt19937_64 rng(67);
    const RationalMatrix X = random_regular_semisimple(4, rng);
    const PartialFlag full = random_flag(SimpleSubset::empty(4), rng);
    const Refinement a = coalesce_refine(SimpleSubset::empty(4), full, X);
    EXPECT_EQ(a.flag, full);
    EXPECT_TRUE(a.J.is_empty());
    const PartialFlag V = random_flag(S(4, "1,3"), rng);
    const Refinement b = coalesce_refine(S(4, "1,3"), V, RationalMatrix::identity(4));
    EXPECT_EQ(b.flag, V);
    EXPECT_EQ(b.J, S(4, "1,3"));
    EXPECT_EQ(to_string(type_sequence(S(4, "1,3"), V, RationalMatrix::identity(4))), "(({1,3},1234))");
}

TEST(TypeSequence, RandomSamplesAreAdmissible) {
    std::mt19937_64 rng(71);
    for (int n = 2; n <= 4; ++n)
        for (const auto& J : all_simple_subsets(n)) {
            if (J == SimpleSubset::full(n)) continue;
            for (int t = 0; t < 30; ++t) {
                const RationalMatrix X = t % 2 ? random_regular_semisimple(n, rng) : random_matrix(n, rng);
                const PartialFlag V = random_flag(J, rng, 0.2 + 0.1 * (t % 5));
                const AdmissibleSequence seq = type_sequence(J, V, X);
                ASSERT_TRUE(check_admissible(seq).ok) << to_string(seq);
                const Permutation z = gamma(seq);
                EXPECT_TRUE(is_min_left(J, z));
                EXPECT_EQ(gamma_inverse(z, J), seq);
                const Refinement r = coalesce_refine(J, V, X);
                EXPECT_EQ(r.J, J & J.conjugate_by(r.w));
            }
        }
}

TEST(Hessenberg, FlagConditionsMatchBruhatClosure) {
    // XV_i ⊆ V_{m(i)} for all i iff the relative position lies below w_m.
    std::mt19937_64 rng(73);
    for (int n = 2; n <= 4; ++n) {
        const auto ms = all_hessenberg_functions(n);
        for (int t = 0; t < 40; ++t) {
            const RationalMatrix X = random_regular_semisimple(n, rng);
            PartialFlag V;
            if (t % 2 == 0) {
                RationalVector u(n);
                std::uniform_int_distribution<int> entry(-2, 2);
                for (auto& x : u) x = entry(rng);
                try {
                    V = krylov_flag(X, u);
                } catch (const DomainError&) {
                    continue;
                }
            } else {
                V = random_flag(SimpleSubset::empty(n), rng, 0.6);
            }
            const Permutation w = relative_position(SimpleSubset::empty(n), V, X);
            for (const auto& m : ms) {
                bool hess = true;
                for (int i = 1; i < n; ++i) hess = hess && V.at(i).image(X).subset_of(V.at(m(i)));
                EXPECT_EQ(hess, bruhat_leq(w, codominant_permutation(m))) << m.to_string() << " " << w.to_string();
            }
        }
    }
}
