#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckesym/admissible.hpp"
#include "heckesym/centralizer.hpp"
#include "heckesym/errors.hpp"
#include "heckesym/hecke_algebra.hpp"
#include "heckesym/hecke_character.hpp"
#include "heckesym/kazhdan_lusztig.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/parabolic_quotient.hpp"
#include "heckesym/symfunc.hpp"

namespace heckesym {

/// |W_J|_q = sum over W_J of q^{l(z)}.
inline LaurentScalar parabolic_poincare(const SimpleSubset& J) { return q_multinomial_denominator(J.blocks()); }

/// Normalization of the C'_{w_J'} factor in the hybrid character:
/// half = q^{l(w_J')/2} (default), full = q^{l(w_J')}.
enum class HybridPrefactor { half, full };

namespace detail {

/// Divide every coefficient of f exactly by d.
inline SymmetricFunction divide_coefficients(const SymmetricFunction& f, const LaurentScalar& d, const std::string& what) {
    SymmetricFunction out(f.basis(), f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        try {
            out.add_term(lambda, exact_div(f.integral_coeff(lambda), d));
        } catch (const NotDivisible& e) {
            throw NotDivisible(what + ": coefficient of " + std::string(1, basis_letter(f.basis())) + lambda.to_string() +
                                   " is not divisible by " + d.to_string(),
                               e.remainder());
        }
    }
    return out;
}

inline void require_hybrid_input(const SimpleSubset& Jp, const Permutation& w) {
    if (Jp.rank() != w.size()) throw SizeMismatch("rank mismatch between J' and w");
    if (!Jp.stable_under(w)) throw DomainError("w J' w^{-1} != J' for w = " + w.to_string() + ", J' = " + Jp.to_string());
    if (!is_min_left(Jp, w)) throw DomainError(w.to_string() + " is not minimal in W_{J'} w");
}

}  // namespace detail

/// ch(q^{l(w_J')/2} C'_{w_J'} T_w) / |W_J'|_q, in the s basis.
inline SymmetricFunction hybrid_char(const SimpleSubset& Jp, const Permutation& w,
                                     HybridPrefactor pre = HybridPrefactor::half) {
    detail::require_hybrid_input(Jp, w);
    const Permutation wJ = longest_of(Jp);
    HeckeElement a = kl_basis(wJ) * HeckeElement::basis(w);
    if (pre == HybridPrefactor::full) a = LaurentScalar(1, wJ.length()) * a;
    return detail::divide_coefficients(frobenius_char(a), parabolic_poincare(Jp), "hybrid_char");
}

/// prod over cycles tau of sigma of p_{|tau|}[h_{lambda_tau}], in the p basis.
inline SymmetricFunction plethysm_rhs(const SimpleSubset& Jp, const Permutation& w) {
    detail::require_hybrid_input(Jp, w);
    const auto d = centralizer(Jp, w);
    SymmetricFunction out = SymmetricFunction::one(Basis::p);
    for (std::size_t c = 0; c < d.cycles.size(); ++c) {
        const int len = static_cast<int>(d.cycles[c].size());
        out = multiply(out, plethysm_power(len, h(Partition{d.factor_sizes[c]})));
    }
    return out;
}

/// f / |W_J|_q coefficientwise, for w maximal in W_J w W_J.
inline SymmetricFunction bundle_divide(const Permutation& w, const SimpleSubset& J, const SymmetricFunction& f) {
    if (J.rank() != w.size()) throw SizeMismatch("bundle_divide: rank mismatch");
    if (!is_max_double(J, w)) throw DomainError("bundle_divide: " + w.to_string() + " is not maximal in W_J w W_J");
    if (f.degree() != w.size()) throw SizeMismatch("bundle_divide: character degree differs from n");
    return detail::divide_coefficients(f, parabolic_poincare(J), "bundle_divide");
}

/// [n-i]_q h_{n-i} * rho, with rho of degree i, in the h basis.
inline SymmetricFunction hi_char(int n, int i, const SymmetricFunction& rho) {
    if (i < 0 || i > n - 1) throw DomainError("hi_char: need 0 <= i <= n-1");
    if (rho.degree() != i) throw SizeMismatch("hi_char: rho must have degree i");
    SymmetricFunction lead = q_int(n - i) * h(Partition{n - i});
    return multiply(lead, rho.to_basis(Basis::h));
}

struct TailResult {
    int k = 0;
    int k_prime = 0;
    SimpleSubset J_z;
};

/// For J = {n-k+1, ..., n-1}: k' = largest k'' <= k with z fixing n-k''+1..n,
/// and J_z = {n-k'+1, ..., n-1}.
inline TailResult tail_kprime(const SimpleSubset& J, const Permutation& z) {
    const int n = J.rank();
    if (z.size() != n) throw SizeMismatch("tail_kprime: rank mismatch");
    const int k = J.count() + 1;
    if (!(J == SimpleSubset::interval(n, n - k + 1, n - 1))) throw DomainError("tail_kprime: J is not of the form {n-k+1,...,n-1}");
    if (!is_min_left(J, z)) throw DomainError("tail_kprime: z is not in ^JW");
    int kp = 0;
    while (kp < k && z(n - kp) == n - kp) ++kp;
    return {k, kp, SimpleSubset::interval(n, n - kp + 1, n - 1)};
}

}  // namespace heckesym
