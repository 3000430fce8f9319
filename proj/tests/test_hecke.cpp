#include <gtest/gtest.h>

#include <map>
#include <random>

#include "heckesym/heckesym.hpp"

using namespace heckesym;

namespace {

using Matrix = std::vector<std::vector<LaurentScalar>>;

const LaurentScalar q = LaurentScalar::q();
const LaurentScalar one(1);

Permutation P(const char* s) { return Permutation::parse(s); }
HeckeElement T(const Permutation& w) { return HeckeElement::basis(w); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const std::size_t d = a.size();
    Matrix c(d, std::vector<LaurentScalar>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Matrix mat_lin(const LaurentScalar& x, const Matrix& a, const LaurentScalar& y, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = x * a[i][j] + y * b[i][j];
    return c;
}

Matrix identity_matrix(std::size_t d) {
    Matrix m(d, std::vector<LaurentScalar>(d));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = one;
    return m;
}

HeckeElement random_element(std::mt19937_64& rng, int n, int terms) {
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    HeckeElement a(n);
    for (int t = 0; t < terms; ++t) a.add(perms[pick(rng)], LaurentScalar::from_map({{0, coef(rng)}, {2, coef(rng)}}));
    return a;
}

// Kazhdan-Lusztig recursion on polynomials with s a left descent of w:
// P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
// v = sw, c = 1 if sx < x else 0.
class ClassicalKL {
public:
    explicit ClassicalKL(int n) : n_(n) {}

    LaurentScalar P(const Permutation& x, const Permutation& w) {
        if (!bruhat_leq(x, w)) return {};
        if (x == w) return one;
        auto key = std::make_pair(x, w);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int s = w.left_descents().front();
        const Permutation v = w.left_mul_simple(s);
        const Permutation sx = x.left_mul_simple(s);
        const int c = x.has_left_descent(s) ? 1 : 0;
        LaurentScalar r = LaurentScalar::q(1 - c) * P(sx, v) + LaurentScalar::q(c) * P(x, v);
        for (const auto& z : all_permutations(n_)) {
            if (!z.has_left_descent(s) || !bruhat_leq(z, v) || z == v) continue;
            const int d = v.length() - z.length();
            if (d % 2 == 0) continue;
            const std::int64_t m = P(z, v).coeff(d - 1);
            if (m != 0) r -= LaurentScalar(m) * LaurentScalar::q((w.length() - z.length()) / 2) * P(x, z);
        }
        memo_.emplace(key, r);
        return r;
    }

private:
    int n_;
    std::map<std::pair<Permutation, Permutation>, LaurentScalar> memo_;
};

}  // namespace

TEST(HeckeAlgebra, QuadraticRelationAndLengthAdditivity) {
    const Permutation s1 = Permutation::simple(3, 1), s2 = Permutation::simple(3, 2), e = Permutation::identity(3);
    EXPECT_EQ(T(s1) * T(s1), (q - one) * T(s1) + q * T(e));
    for (const auto& w : all_permutations(3)) EXPECT_EQ(T(e) * T(w), T(w));
    EXPECT_EQ(s1 * s2, P("231"));
    EXPECT_EQ(T(s1) * T(s2), T(P("231")));
}

TEST(HeckeAlgebra, BraidRelationsAndAssociativity) {
    for (int n = 3; n <= 5; ++n)
        for (int i = 1; i + 1 < n; ++i) {
            const auto a = T(Permutation::simple(n, i)), b = T(Permutation::simple(n, i + 1));
            EXPECT_EQ(a * b * a, b * a * b);
        }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_element(rng, 4, 3), b = random_element(rng, 4, 3), c = random_element(rng, 4, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
    EXPECT_THROW(T(P("12")) * T(P("123")), SizeMismatch);
}

TEST(HeckeAlgebra, ProductOfBasisElementsIsLengthAdditiveWhenReduced) {
    for (const auto& w : all_permutations(4))
        for (const auto& z : all_permutations(4))
            if ((w * z).length() == w.length() + z.length()) { EXPECT_EQ(T(w) * T(z), T(w * z)); }
}

TEST(Iota, Examples) {
    const Permutation e = Permutation::identity(2), s = Permutation::simple(2, 1);
    EXPECT_EQ(iota(T(e)), T(e));
    EXPECT_EQ(iota(T(s)), LaurentScalar::q(-1) * T(s) - (one - LaurentScalar::q(-1)) * T(e));
    for (const auto& w : all_permutations(4)) EXPECT_EQ(iota(iota(T(w))), T(w));
}

TEST(Iota, IsRingInvolution) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_element(rng, 4, 3), b = random_element(rng, 4, 3);
        EXPECT_EQ(iota(a * b), iota(a) * iota(b));
        EXPECT_EQ(iota(iota(a)), a);
    }
}

TEST(KazhdanLusztig, SmallExamples) {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            const Permutation s = Permutation::simple(n, i);
            EXPECT_EQ(kl_basis(s), T(Permutation::identity(n)) + T(s));
        }
    HeckeElement all(3);
    for (const auto& z : all_permutations(3)) all += T(z);
    EXPECT_EQ(kl_basis(P("321")), all);
    EXPECT_EQ(kl_poly(P("1234"), P("3412")), one + q);
    EXPECT_EQ(kl_poly(P("1324"), P("3412")), one + q);
    EXPECT_EQ(kl_poly(P("1234"), P("4231")), one + q);
    EXPECT_EQ(kl_poly(P("2143"), P("4231")), one + q);
    EXPECT_EQ(kl_mu(P("1324"), P("3412")), 1);
}

TEST(KazhdanLusztig, AxiomsExhaustive) {
    for (int n = 1; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& w : perms) {
            const HeckeElement c = kl_basis_normalized(w);
            EXPECT_EQ(iota(c), c) << w.to_string();
            for (const auto& z : perms) {
                const LaurentScalar p = kl_poly(z, w);
                if (!bruhat_leq(z, w)) {
                    EXPECT_TRUE(p.is_zero());
                    continue;
                }
                EXPECT_TRUE(p.is_q_polynomial());
                EXPECT_EQ(p.coeff(0), 1);
                if (z != w) { EXPECT_LE(p.hi(), w.length() - z.length() - 1); }
            }
            EXPECT_EQ(kl_poly(w, w), one);
        }
    }
}

TEST(KazhdanLusztig, AgreesWithClassicalRecursion) {
    for (int n = 2; n <= 5; ++n) {
        ClassicalKL oracle(n);
        const auto perms = all_permutations(n);
        for (const auto& w : perms) {
            if (n == 5 && w.length() < 6) continue;
            for (const auto& x : perms) EXPECT_EQ(kl_poly(x, w), oracle.P(x, w)) << x.to_string() << " " << w.to_string();
        }
    }
}

TEST(KazhdanLusztig, DataMatchesPolynomials) {
    const KLData d = kl_data(P("3412"));
    EXPECT_EQ(d.polys.size(), 14u);
    EXPECT_EQ(d.polys.at(P("1234")), one + q);
    EXPECT_EQ(d.mu.at(P("1324")), 1);
    for (const auto& [z, m] : d.mu) EXPECT_EQ(kl_mu(z, P("3412")), m);
}

TEST(InducedModule, ExamplesAndDimensions) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            const InducedModule M(mu);
            std::int64_t dim = static_cast<std::int64_t>(factorial(n));
            for (int b : mu.parts()) dim /= static_cast<std::int64_t>(factorial(b));
            EXPECT_EQ(M.dimension(), dim);
            EXPECT_EQ(induced_trace(mu, HeckeElement::one(n)), LaurentScalar(dim));
        }
    for (const auto& w : all_permutations(4)) EXPECT_EQ(induced_trace({4}, T(w)), LaurentScalar::q(w.length()));
    EXPECT_EQ(induced_trace({1, 1}, T(Permutation::simple(2, 1))), q - one);
}

TEST(InducedModule, GeneratorMatricesSatisfyHeckeRelations) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) {
            const InducedModule M(mu);
            const Matrix I = identity_matrix(M.dimension());
            std::vector<Matrix> g(n);
            for (int i = 1; i < n; ++i) g[i] = M.generator_matrix(i);
            for (int i = 1; i < n; ++i) {
                EXPECT_EQ(mat_mul(g[i], g[i]), mat_lin(q - one, g[i], q, I));
                if (i + 1 < n) { EXPECT_EQ(mat_mul(mat_mul(g[i], g[i + 1]), g[i]), mat_mul(mat_mul(g[i + 1], g[i]), g[i + 1])); }
                for (int j = i + 2; j < n; ++j) EXPECT_EQ(mat_mul(g[i], g[j]), mat_mul(g[j], g[i]));
            }
        }
}

TEST(InducedModule, TraceShortcutMatchesDirectTrace) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) {
            const InducedModule M(mu);
            for (const auto& w : all_permutations(n)) EXPECT_EQ(induced_trace(mu, T(w)), M.direct_trace(w));
        }
}

TEST(InducedModule, TraceProperty) {
    std::mt19937_64 rng(47);
    for (int n = 3; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            for (int t = 0; t < 3; ++t) {
                const auto a = random_element(rng, n, 3), b = random_element(rng, n, 3);
                EXPECT_EQ(induced_trace(mu, a * b), induced_trace(mu, b * a));
            }
}

TEST(HeckeCharacter, Examples) {
    for (const auto& w : all_permutations(4)) {
        EXPECT_EQ(irreducible_character({4}, T(w)), LaurentScalar::q(w.length()));
        EXPECT_EQ(irreducible_character({1, 1, 1, 1}, T(w)), LaurentScalar(w.length() % 2 == 0 ? 1 : -1));
    }
    EXPECT_EQ(irreducible_character({1, 1}, T(Permutation::simple(2, 1))), LaurentScalar(-1));
    EXPECT_EQ(irreducible_character({1, 1}, HeckeElement::one(2)), one);
    EXPECT_EQ(frobenius_char(kl_basis(Permutation::simple(2, 1))), (one + q) * h({2}));
    EXPECT_EQ(frobenius_char(kl_basis(P("2341"))).to_basis(Basis::h).to_string(), "(q+q^2)h[2,2]+(q+q^2)h[3,1]+(1+q+q^2+q^3)h[4]");
}

TEST(HeckeCharacter, SpecializesToClassicalCharacters) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            for (const auto& l : partitions_of(n)) {
                const LaurentScalar chi = irreducible_character(l, T(w));
                EXPECT_TRUE(chi.is_q_polynomial());
                EXPECT_EQ(chi.at_one(), sn_character(l, w.cycle_type()));
            }
            EXPECT_EQ(frobenius_char(T(w)).at_q1(), p(w.cycle_type()));
        }
}

TEST(HeckeCharacter, CompleteExpansionOfKLCharactersIsPositive) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            const SymmetricFunction f = frobenius_char(kl_basis(w)).to_basis(Basis::h);
            for (const auto& [l, c] : f.terms())
                for (const auto& [e, x] : c.terms()) EXPECT_GT(x, 0) << w.to_string() << " " << f.to_string();
        }
}
