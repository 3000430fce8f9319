#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/hessenberg.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/partition.hpp"
#include "heckesym/symfunc.hpp"

namespace heckesym {

/// Simple graph on vertices 1..n; the vertex order matters for ascents.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n + 1, 0) {
        if (n < 1 || n > 31) throw DomainError("graph size out of range");
    }

    /// Indifference graph of m: {i,j} with i < j <= m(i).
    static Graph indifference(const HessenbergFunction& m) {
        Graph g(m.size());
        for (int i = 1; i <= m.size(); ++i)
            for (int j = i + 1; j <= m(i); ++j) g.add_edge(i, j);
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
        return g;
    }

    int size() const noexcept { return n_; }

    void add_edge(int i, int j) {
        if (i == j || i < 1 || j < 1 || i > n_ || j > n_) throw DomainError("bad edge");
        adj_[i] |= 1u << j;
        adj_[j] |= 1u << i;
    }

    bool adjacent(int i, int j) const noexcept { return (adj_[i] >> j) & 1u; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (adjacent(i, j)) e.emplace_back(i, j);
        return e;
    }

    /// Edges are closed under shrinking intervals: {i,k} in E, i <= j < l <= k
    /// implies {j,l} in E.
    bool is_indifference() const {
        for (int i = 1; i <= n_; ++i)
            for (int k = i + 1; k <= n_; ++k)
                if (adjacent(i, k) && ((k > i + 1 && !adjacent(i, k - 1)) || (k > i + 1 && !adjacent(i + 1, k))))
                    return false;
        return true;
    }

    /// m(i) = largest j >= i joined to i (or i itself); requires is_indifference().
    HessenbergFunction hessenberg() const {
        if (!is_indifference()) throw DomainError("graph is not an indifference graph in its vertex order");
        std::vector<int> m(n_);
        for (int i = 1; i <= n_; ++i) {
            int top = i;
            for (int j = i + 1; j <= n_; ++j)
                if (adjacent(i, j)) top = j;
            m[i - 1] = std::max(top, i > 1 ? m[i - 2] : 0);
        }
        return HessenbergFunction(m);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint32_t> adj_;
};

/// A base graph on [m] together with a weakly increasing surjection f: [n] -> [m].
struct WeightedGraphMap {
    Graph base;
    std::vector<int> f;  // f[i-1] = f(i)

    WeightedGraphMap(Graph g, std::vector<int> fibers) : base(std::move(g)), f(std::move(fibers)) {
        if (f.empty()) throw DomainError("weighted graph map needs n >= 1");
        if (f.front() != 1 || f.back() != base.size()) throw DomainError("f must be surjective onto the base vertices");
        for (std::size_t i = 1; i < f.size(); ++i)
            if (f[i] < f[i - 1] || f[i] > f[i - 1] + 1) throw DomainError("f must be weakly increasing and surjective");
    }

    int size() const noexcept { return static_cast<int>(f.size()); }

    std::vector<int> fiber_sizes() const {
        std::vector<int> s(base.size(), 0);
        for (int x : f) ++s[x - 1];
        return s;
    }

    /// "G=2,3,4,4;f=1,1,2,3"
    static WeightedGraphMap parse(std::string_view text) {
        std::string s(text);
        auto semi = s.find(';');
        if (semi == std::string::npos || s.rfind("G=", 0) != 0 || s.compare(semi + 1, 2, "f=") != 0)
            throw ParseError("weighted map must look like 'G=2,3,4,4;f=1,1,2,3'");
        HessenbergFunction m = HessenbergFunction::parse(s.substr(2, semi - 2));
        std::vector<int> f;
        std::string cur;
        for (char c : s.substr(semi + 3) + ",") {
            if (c == ',') {
                if (cur.empty()) throw ParseError("empty entry in f");
                f.push_back(std::stoi(cur));
                cur.clear();
            } else if (c >= '0' && c <= '9') {
                cur += c;
            } else {
                throw ParseError("bad character in f");
            }
        }
        try {
            return WeightedGraphMap(Graph::indifference(m), f);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
};

/// Substitute each base vertex j by a clique on f^{-1}(j); vertices in
/// different fibres are joined when their base vertices are.
inline Graph clique_expand(const WeightedGraphMap& gf) {
    const int n = gf.size();
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int a = gf.f[i - 1], b = gf.f[j - 1];
            if (a == b || gf.base.adjacent(a, b)) g.add_edge(i, j);
        }
    return g;
}

namespace detail {

/// Sum of q^{stat} over colourings with colour content `content` (colour c+1
/// used content[c] times). For vertices u < v: conflict(u,v) forbids equal
/// colours, ordered(u,v) forces colour(u) < colour(v), and counts_ascent(u,v)
/// adds one to the statistic when colour(u) < colour(v).
template <class Conflict, class Ascent, class Order>
LaurentScalar coloring_sum(int n, const std::vector<int>& content, Conflict conflict, Ascent counts_ascent, Order ordered) {
    std::vector<int> colour(n + 1, 0), left = content;
    const int k = static_cast<int>(content.size());
    std::vector<std::int64_t> by_asc;
    auto rec = [&](auto&& self, int v, int asc) -> void {
        if (v > n) {
            if (static_cast<int>(by_asc.size()) <= asc) by_asc.resize(asc + 1, 0);
            ++by_asc[asc];
            return;
        }
        for (int c = 1; c <= k; ++c) {
            if (left[c - 1] == 0) continue;
            bool ok = true;
            int add = 0;
            for (int u = 1; u < v && ok; ++u) {
                if (conflict(u, v) && colour[u] == c) ok = false;
                if (ordered(u, v) && colour[u] >= c) ok = false;
                if (ok && counts_ascent(u, v) && colour[u] < c) ++add;
            }
            if (!ok) continue;
            colour[v] = c;
            --left[c - 1];
            self(self, v + 1, asc + add);
            ++left[c - 1];
        }
    };
    rec(rec, 1, 0);
    return LaurentScalar::from_q_coeffs(by_asc);
}

/// Expand a quasisymmetric generating function over all compositions, check
/// that it is symmetric and return its m-expansion.
template <class Coeff>
SymmetricFunction symmetric_from_compositions(int n, Coeff coeff_of) {
    std::map<Partition, LaurentScalar> by_partition;
    SymmetricFunction out(Basis::m, n);
    for (const auto& alpha : compositions_of(n)) {
        LaurentScalar c = coeff_of(alpha);
        Partition lambda(alpha);
        auto [it, inserted] = by_partition.emplace(lambda, c);
        if (!inserted && !(it->second == c))
            throw InternalError("generating function is not symmetric: coefficient of x^" + lambda.to_string() +
                                " depends on the order of the exponents");
    }
    for (const auto& [lambda, c] : by_partition) out.add_term(lambda, c);
    return out;
}

}  // namespace detail

/// csf_q(G) = sum over proper colourings of q^{asc} x^kappa, in the m basis.
inline SymmetricFunction csf_q(const Graph& g) {
    const int n = g.size();
    return detail::symmetric_from_compositions(n, [&](const std::vector<int>& alpha) {
        return detail::coloring_sum(
            n, alpha, [&](int u, int v) { return g.adjacent(u, v); }, [&](int u, int v) { return g.adjacent(u, v); },
            [](int, int) { return false; });
    });
}

inline SymmetricFunction csf_q(const HessenbergFunction& m) { return csf_q(Graph::indifference(m)); }

/// Colourings strictly increasing along each fibre, proper across adjacent
/// fibres, weighted by q^{#{i<j : kappa(i) < kappa(j), f(i) < f(j) adjacent}}.
inline SymmetricFunction weighted_csf_q(const WeightedGraphMap& gf) {
    const int n = gf.size();
    auto across = [&](int u, int v) {
        int a = gf.f[u - 1], b = gf.f[v - 1];
        return a != b && gf.base.adjacent(a, b);
    };
    auto same_fibre = [&](int u, int v) { return gf.f[u - 1] == gf.f[v - 1]; };
    return detail::symmetric_from_compositions(n, [&](const std::vector<int>& alpha) {
        return detail::coloring_sum(n, alpha, across, across, same_fibre);
    });
}

/// Checks weighted_csf_q(G,f) * prod_j [|f^{-1}(j)|]_q! = csf_q(G^f) and
/// returns the quotient csf_q(G^f) / prod_j [|f^{-1}(j)|]_q! computed by exact
/// division.
inline SymmetricFunction gasharov_quotient(const WeightedGraphMap& gf) {
    SymmetricFunction full = csf_q(clique_expand(gf));
    LaurentScalar den = q_multinomial_denominator(gf.fiber_sizes());
    SymmetricFunction out(Basis::m, full.degree());
    for (const auto& [lambda, c] : full.terms()) {
        try {
            out.add_term(lambda, exact_div(full.integral_coeff(lambda), den));
        } catch (const NotDivisible& e) {
            throw InternalError(std::string("clique-expansion identity failed: ") + e.what());
        }
    }
    return out;
}

}  // namespace heckesym
