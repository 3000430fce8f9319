#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/hecke_algebra.hpp"
#include "heckesym/kostka.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/parabolic_quotient.hpp"
#include "heckesym/partition.hpp"
#include "heckesym/symfunc.hpp"

namespace heckesym {

/// H_n tensored over H_J with the character T_s -> q, where W_J is the Young
/// subgroup with block sizes mu. Basis m_x for x in W^J (shortest in x W_J);
/// H_n acts on the left.
class InducedModule {
public:
    using SparseVector = std::map<int, LaurentScalar>;

    explicit InducedModule(const std::vector<int>& blocks)
        : J_(SimpleSubset::from_blocks(blocks)), n_(J_.rank()) {
        basis_ = min_right_quotient(J_);
        for (int k = 0; k < static_cast<int>(basis_.size()); ++k) index_.emplace(basis_[k], k);
        const LaurentScalar q = LaurentScalar::q(), qm1 = q - LaurentScalar(1);
        action_.assign(n_, std::vector<std::vector<std::pair<int, LaurentScalar>>>(basis_.size()));
        for (int i = 1; i < n_; ++i) {
            for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
                const Permutation& x = basis_[k];
                const Permutation sx = x.left_mul_simple(i);
                auto& out = action_[i][k];
                if (!x.has_left_descent(i)) {
                    auto it = index_.find(sx);
                    if (it != index_.end())
                        out.emplace_back(it->second, LaurentScalar(1));
                    else
                        out.emplace_back(k, q);  // sx = x t with t in W_J
                } else {
                    out.emplace_back(k, qm1);
                    out.emplace_back(index_.at(sx), q);
                }
            }
        }
    }

    explicit InducedModule(const Partition& mu) : InducedModule(mu.parts().empty() ? std::vector<int>{} : mu.parts()) {}

    int rank() const noexcept { return n_; }
    const SimpleSubset& parabolic() const noexcept { return J_; }
    int dimension() const noexcept { return static_cast<int>(basis_.size()); }
    const std::vector<Permutation>& basis() const noexcept { return basis_; }

    /// T_{s_i} applied to a vector.
    SparseVector apply_generator(int i, const SparseVector& v) const {
        SparseVector out;
        for (const auto& [k, c] : v)
            for (const auto& [t, a] : action_[i][k]) {
                auto& slot = out[t];
                slot += a * c;
                if (slot.is_zero()) out.erase(t);
            }
        return out;
    }

    /// T_w applied to a vector (rightmost generator of a reduced word first).
    SparseVector apply_basis(const Permutation& w, SparseVector v) const {
        auto word = w.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(*it, v);
        return v;
    }

    SparseVector apply(const HeckeElement& a, const SparseVector& v) const {
        SparseVector out;
        for (const auto& [w, c] : a.terms())
            for (const auto& [k, x] : apply_basis(w, v)) {
                auto& slot = out[k];
                slot += c * x;
                if (slot.is_zero()) out.erase(k);
            }
        return out;
    }

    /// Dense matrix of T_{s_i}: column k is T_{s_i} m_{basis[k]}.
    std::vector<std::vector<LaurentScalar>> generator_matrix(int i) const {
        const int d = dimension();
        std::vector<std::vector<LaurentScalar>> m(d, std::vector<LaurentScalar>(d));
        for (int k = 0; k < d; ++k)
            for (const auto& [t, a] : action_[i][k]) m[t][k] += a;
        return m;
    }

    /// Trace of T_w computed from the matrices.
    LaurentScalar direct_trace(const Permutation& w) const {
        LaurentScalar tr;
        for (int k = 0; k < dimension(); ++k) {
            auto img = apply_basis(w, SparseVector{{k, LaurentScalar(1)}});
            if (auto it = img.find(k); it != img.end()) tr += it->second;
        }
        return tr;
    }

    LaurentScalar direct_trace(const HeckeElement& a) const {
        LaurentScalar tr;
        for (const auto& [w, c] : a.terms()) tr += c * direct_trace(w);
        return tr;
    }

private:
    SimpleSubset J_;
    int n_;
    std::vector<Permutation> basis_;
    std::unordered_map<Permutation, int> index_;
    std::vector<std::vector<std::vector<std::pair<int, LaurentScalar>>>> action_;
};

namespace detail {

/// Memoized trace of T_w on one induced module. Uses
/// phi(T_u) = (q-1) phi(T_{su}) + q phi(T_{sus}) when l(sus) = l(u) - 2, and
/// constancy on length-preserving cyclic shifts; only elements of minimal
/// length in their class are traced directly.
class TraceEngine {
public:
    explicit TraceEngine(const Partition& mu) : module_(mu) {}

    const InducedModule& module() const noexcept { return module_; }

    LaurentScalar trace(const Permutation& w) {
        std::lock_guard lock(mu_);
        return trace_locked(w);
    }

private:
    LaurentScalar trace_locked(const Permutation& w) {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        const int n = w.size();
        const int lw = w.length();
        std::vector<Permutation> cls{w};
        std::set<Permutation> seen{w};
        std::optional<LaurentScalar> value;
        for (std::size_t k = 0; k < cls.size() && !value; ++k) {
            const Permutation u = cls[k];
            for (int s = 1; s < n && !value; ++s) {
                const Permutation su = u.left_mul_simple(s);
                const Permutation sus = su.right_mul_simple(s);
                const int l = sus.length();
                if (l == lw - 2) {
                    const LaurentScalar q = LaurentScalar::q();
                    value = (q - LaurentScalar(1)) * trace_locked(su) + q * trace_locked(sus);
                } else if (l == lw && seen.insert(sus).second) {
                    cls.push_back(sus);
                }
            }
        }
        if (!value) value = module_.direct_trace(w);
        for (const auto& u : cls) memo_.emplace(u, *value);
        return *value;
    }

    InducedModule module_;
    std::recursive_mutex mu_;
    std::unordered_map<Permutation, LaurentScalar> memo_;
};

inline TraceEngine& trace_engine(const Partition& mu) {
    static std::mutex m;
    static std::map<Partition, std::unique_ptr<TraceEngine>> engines;
    std::lock_guard lock(m);
    auto& e = engines[mu];
    if (!e) e = std::make_unique<TraceEngine>(mu);
    return *e;
}

}  // namespace detail

/// Trace of the left action of a on the module induced from H_{J(mu)}.
inline LaurentScalar induced_trace(const Partition& mu, const HeckeElement& a) {
    if (mu.size() != a.rank()) throw SizeMismatch("induced_trace: |mu| differs from the Hecke rank");
    auto& engine = detail::trace_engine(mu);
    LaurentScalar tr;
    for (const auto& [w, c] : a.terms()) tr += c * engine.trace(w);
    return tr;
}

namespace detail {

/// chi^lambda(T_x) for every lambda in partitions_of(n) order.
inline const std::vector<LaurentScalar>& character_column(const Permutation& x) {
    static std::mutex m;
    static std::unordered_map<Permutation, std::vector<LaurentScalar>> memo;
    {
        std::lock_guard lock(m);
        if (auto it = memo.find(x); it != memo.end()) return it->second;
    }
    const int n = x.size();
    const auto parts = partitions_of(n);
    std::vector<LaurentScalar> chi(parts.size());
    // partitions_of is decreasing lexicographic, which refines dominance, so
    // every lambda strictly dominating mu is already solved.
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const Partition& mu = parts[j];
        LaurentScalar val = detail::trace_engine(mu).trace(x);
        for (std::size_t i = 0; i < j; ++i) {
            std::int64_t k = kostka(parts[i], mu);
            if (k != 0) val -= LaurentScalar(k) * chi[i];
        }
        chi[j] = std::move(val);
    }
    for (const auto& c : chi)
        ensure(c.is_q_polynomial(), "Hecke character value has odd powers of v");
    std::lock_guard lock(m);
    return memo.emplace(x, std::move(chi)).first->second;
}

}  // namespace detail

/// chi^lambda(a), the irreducible Hecke character, via Kostka inversion of
/// induced traces.
inline LaurentScalar irreducible_character(const Partition& lambda, const HeckeElement& a) {
    if (lambda.size() != a.rank()) throw SizeMismatch("irreducible_character: |lambda| differs from the Hecke rank");
    const int idx = partition_index(lambda);
    LaurentScalar r;
    for (const auto& [w, c] : a.terms()) r += c * detail::character_column(w)[idx];
    return r;
}

/// ch(a) = sum_lambda chi^lambda(a) s_lambda.
inline SymmetricFunction frobenius_char(const HeckeElement& a) {
    const int n = a.rank();
    const auto parts = partitions_of(n);
    std::vector<LaurentScalar> acc(parts.size());
    for (const auto& [w, c] : a.terms()) {
        const auto& col = detail::character_column(w);
        for (std::size_t i = 0; i < parts.size(); ++i) acc[i] += c * col[i];
    }
    SymmetricFunction f(Basis::s, n);
    for (std::size_t i = 0; i < parts.size(); ++i) f.add_term(parts[i], acc[i]);
    return f;
}

}  // namespace heckesym
