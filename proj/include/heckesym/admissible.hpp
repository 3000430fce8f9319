#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/parabolic_quotient.hpp"
#include "heckesym/permutation.hpp"
#include "heckesym/simple_subset.hpp"

namespace heckesym {

/// Largest K inside J with w K w^{-1} = K.
inline SimpleSubset j_infinity(const SimpleSubset& J, const Permutation& w) {
    if (J.rank() != w.size()) throw SizeMismatch("j_infinity: rank mismatch");
    const Permutation winv = w.inverse();
    SimpleSubset K = J;
    for (;;) {
        SimpleSubset next = K & K.conjugate_by(w) & K.conjugate_by(winv);
        if (next == K) return K;
        K = next;
    }
}

struct AdmissiblePair {
    SimpleSubset J;
    Permutation w;
    friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
    friend auto operator<=>(const AdmissiblePair& a, const AdmissiblePair& b) {
        if (auto c = a.J <=> b.J; c != 0) return c;
        return a.w <=> b.w;
    }
};

/// (J_0, w_0), ..., (J_N, w_N), ending at the first pair with w_N J_N w_N^{-1} = J_N.
using AdmissibleSequence = std::vector<AdmissiblePair>;

/// Result of checking a candidate sequence; `ok` or a description of the
/// first violated condition and where.
struct AdmissibilityReport {
    bool ok = true;
    int index = -1;
    std::string reason;
};

inline AdmissibilityReport check_admissible(const AdmissibleSequence& seq) {
    auto fail = [](int i, std::string why) { return AdmissibilityReport{false, i, std::move(why)}; };
    if (seq.empty()) return fail(0, "empty sequence");
    const int n = seq.front().w.size();
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        const auto& [J, w] = seq[i];
        if (J.rank() != n || w.size() != n) return fail(i, "pairs of different rank");
        if (!is_min_double(J, w)) return fail(i, "w_n is not in ^{J_n}W^{J_n}");
        const bool stable = J.stable_under(w);
        const bool last = i + 1 == static_cast<int>(seq.size());
        if (last && !stable) return fail(i, "last pair is not stabilized (w_N J_N w_N^{-1} != J_N)");
        if (!last && stable)
            return fail(i, "pair is already stabilized but the sequence continues (the stabilization lemma forces the next pair to repeat it)");
        if (!last) {
            const auto& [J1, w1] = seq[i + 1];
            if (!(J1 == (J & J.conjugate_by(w)))) return fail(i + 1, "J_{n+1} != J_n cap w_n J_n w_n^{-1}");
            if (!(min_double_rep(J, w1) == w)) return fail(i + 1, "w_{n+1} is not in W_{J_n} w_n W_{J_n}");
            if (!is_min_left(J, w1)) return fail(i + 1, "w_{n+1} is not minimal in W_{J_n} w_{n+1}");
        }
    }
    return {};
}

/// Gamma_J: the stabilized permutation w_N of an admissible sequence.
inline Permutation gamma(const AdmissibleSequence& seq) {
    auto r = check_admissible(seq);
    if (!r.ok) throw DomainError("not admissible at index " + std::to_string(r.index) + ": " + r.reason);
    return seq.back().w;
}

/// Gamma_J^{-1}(z) by the minimal-double-coset iteration.
inline AdmissibleSequence gamma_inverse(const Permutation& z, const SimpleSubset& J) {
    if (J.rank() != z.size()) throw SizeMismatch("gamma_inverse: rank mismatch");
    if (!is_min_left(J, z)) throw DomainError("gamma_inverse: " + z.to_string() + " is not in ^JW for J = " + J.to_string());
    AdmissibleSequence seq;
    SimpleSubset K = J;
    for (int guard = 0; guard <= J.rank(); ++guard) {
        Permutation w = min_double_rep(K, z);
        seq.push_back({K, w});
        if (K.stable_under(w)) {
            if (!(w == z)) throw InternalError("gamma_inverse: stabilized at " + w.to_string() + " instead of " + z.to_string());
            return seq;
        }
        K = K & K.conjugate_by(w);
    }
    throw InternalError("gamma_inverse: no stabilization");
}

/// Every admissible sequence starting at J, by depth-first search over the
/// conditions of check_admissible (independent of gamma_inverse).
inline std::vector<AdmissibleSequence> enumerate_admissible(const SimpleSubset& J) {
    std::vector<AdmissibleSequence> out;
    const auto all = all_permutations(J.rank());
    AdmissibleSequence cur;
    std::function<void(const SimpleSubset&, const std::optional<AdmissiblePair>&)> rec =
        [&](const SimpleSubset& K, const std::optional<AdmissiblePair>& prev) {
            for (const auto& w : all) {
                if (!is_min_double(K, w)) continue;
                if (prev && !(min_double_rep(prev->J, w) == prev->w)) continue;
                if (prev && !is_min_left(prev->J, w)) continue;
                cur.push_back({K, w});
                if (K.stable_under(w))
                    out.push_back(cur);
                else
                    rec(K & K.conjugate_by(w), cur.back());
                cur.pop_back();
            }
        };
    rec(J, std::nullopt);
    return out;
}

/// Tuple notation, e.g. "(({1,3},1324),(∅,3142))".
inline std::string to_string(const AdmissibleSequence& seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ',';
        s += "(" + (seq[i].J.is_empty() ? std::string("∅") : seq[i].J.to_string()) + "," + seq[i].w.to_string() + ")";
    }
    return s + ")";
}

/// Parses the tuple notation; "∅", "{}" and "emptyset" all denote the empty set.
inline AdmissibleSequence parse_admissible(int n, std::string_view text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 3) == "∅") {
            s += "{}";
            i += 2;
        } else if (text.substr(i, 8) == "emptyset") {
            s += "{}";
            i += 7;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s += text[i];
        }
    }
    int depth = 0;
    for (char c : s) {
        depth += c == '(' ? 1 : c == ')' ? -1 : 0;
        if (depth < 0) break;
    }
    if (depth != 0 || s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("unbalanced parentheses in admissible sequence");
    AdmissibleSequence seq;
    std::size_t pos = 0;
    while ((pos = s.find('{', pos)) != std::string::npos) {
        auto close = s.find('}', pos);
        if (close == std::string::npos) throw ParseError("unbalanced braces in admissible sequence");
        SimpleSubset J = SimpleSubset::parse(n, s.substr(pos, close - pos + 1));
        auto comma = s.find(',', close);
        auto end = s.find(')', close);
        if (comma == std::string::npos || end == std::string::npos || comma > end)
            throw ParseError("expected ',w)' after subset in admissible sequence");
        seq.push_back({J, Permutation::parse(s.substr(comma + 1, end - comma - 1))});
        pos = end;
    }
    if (seq.empty()) throw ParseError("no pairs found in admissible sequence");
    return seq;
}

}  // namespace heckesym
