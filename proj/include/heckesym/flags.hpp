#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckesym/admissible.hpp"
#include "heckesym/errors.hpp"
#include "heckesym/parabolic_quotient.hpp"
#include "heckesym/permutation.hpp"
#include "heckesym/rational.hpp"
#include "heckesym/simple_subset.hpp"

namespace heckesym {

using RationalVector = std::vector<Rational>;

namespace detail {

/// Reduced row echelon form; zero rows are dropped and pivots are 1.
inline std::vector<RationalVector> rref(std::vector<RationalVector> rows, int cols) {
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (int k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline int pivot_of(const RationalVector& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return static_cast<int>(c);
    return -1;
}

/// Basis of {x : row . x = 0 for every row}, for rows already in rref.
inline std::vector<RationalVector> null_space(const std::vector<RationalVector>& rrows, int cols) {
    std::vector<int> pivots;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& row : rrows) {
        int p = pivot_of(row);
        pivots.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<RationalVector> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < rrows.size(); ++i) x[pivots[i]] = -rrows[i][f];
        out.push_back(std::move(x));
    }
    return out;
}

inline RationalVector parse_vector(std::string_view line) {
    RationalVector v;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) v.push_back(parse_rational(tok));
    return v;
}

inline std::string vector_to_string(const RationalVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

inline bool is_comment_or_blank(std::string_view line) {
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string_view::npos || line[p] == '#';
}

}  // namespace detail

/// Dense matrix over Q, acting on column vectors.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix diagonal(const RationalVector& d) {
        const int n = static_cast<int>(d.size());
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = d[i];
        return m;
    }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
        if (rows.empty()) throw DomainError("matrix needs at least one row");
        RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols_) throw SizeMismatch("ragged matrix rows");
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static RationalMatrix from_columns(const std::vector<RationalVector>& cols) {
        RationalMatrix t = from_rows(cols);
        return t.transpose();
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    RationalVector row(int i) const { return {a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_}; }
    RationalVector column(int j) const {
        RationalVector c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RationalVector apply(const RationalVector& x) const {
        if (static_cast<int>(x.size()) != cols_) throw SizeMismatch("matrix-vector size mismatch");
        RationalVector y(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw SizeMismatch("matrix product size mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    int rank() const {
        std::vector<RationalVector> rs;
        for (int i = 0; i < rows_; ++i) rs.push_back(row(i));
        return static_cast<int>(detail::rref(std::move(rs), cols_).size());
    }

    bool is_invertible() const { return is_square() && rank() == rows_; }

    /// One row per line, entries "p/q" separated by spaces.
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) s += detail::vector_to_string(row(i)) + "\n";
        return s;
    }

    /// Inverse of to_string; blank lines and '#' comments are skipped.
    static RationalMatrix parse(std::string_view text) {
        std::vector<RationalVector> rows;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line))
            if (!detail::is_comment_or_blank(line)) rows.push_back(detail::parse_vector(line));
        if (rows.empty()) throw ParseError("matrix text has no rows");
        for (const auto& r : rows)
            if (r.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
        return from_rows(rows);
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// A subspace of Q^n stored by its canonical reduced echelon basis, so equal
/// subspaces have equal representations.
class Subspace {
public:
    Subspace() = default;
    Subspace(int n, std::vector<RationalVector> spanning) : n_(n) {
        for (const auto& v : spanning)
            if (static_cast<int>(v.size()) != n) throw SizeMismatch("vector length differs from the ambient dimension");
        basis_ = detail::rref(std::move(spanning), n);
    }

    static Subspace zero(int n) { return Subspace(n, {}); }
    static Subspace whole(int n) { return Subspace(n, rows_of_identity(n)); }

    int ambient() const noexcept { return n_; }
    int dim() const noexcept { return static_cast<int>(basis_.size()); }
    const std::vector<RationalVector>& basis() const noexcept { return basis_; }

    bool contains(const RationalVector& v) const { return (*this + Subspace(n_, {v})).dim() == dim(); }
    bool subset_of(const Subspace& o) const { return (*this + o).dim() == o.dim(); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        a.same(b);
        auto rows = a.basis_;
        rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
        return Subspace(a.n_, std::move(rows));
    }

    /// Vectors orthogonal to the subspace under the standard pairing.
    Subspace annihilator() const { return Subspace(n_, detail::null_space(basis_, n_)); }

    Subspace intersect(const Subspace& o) const {
        same(o);
        return (annihilator() + o.annihilator()).annihilator();
    }

    Subspace image(const RationalMatrix& X) const {
        if (X.cols() != n_ || X.rows() != n_) throw SizeMismatch("matrix size differs from the ambient dimension");
        std::vector<RationalVector> img;
        for (const auto& v : basis_) img.push_back(X.apply(v));
        return Subspace(n_, std::move(img));
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

    std::string to_string() const {
        std::string s = "<";
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (i) s += "; ";
            s += detail::vector_to_string(basis_[i]);
        }
        return s + ">";
    }

private:
    static std::vector<RationalVector> rows_of_identity(int n) {
        std::vector<RationalVector> r(n, RationalVector(n, Rational(0)));
        for (int i = 0; i < n; ++i) r[i][i] = 1;
        return r;
    }
    void same(const Subspace& o) const {
        if (o.n_ != n_) throw SizeMismatch("subspaces of different ambient dimension");
    }

    int n_ = 0;
    std::vector<RationalVector> basis_;
};

/// 0 = V_0 ⊂ V_{i_1} ⊂ ... ⊂ V_{i_k} ⊂ V_n = Q^n with {i_1, ..., i_k} the
/// complement of J in [n-1].
class PartialFlag {
public:
    PartialFlag() = default;
    PartialFlag(const SimpleSubset& J, std::vector<Subspace> chain) : J_(J), chain_(std::move(chain)) {
        const int n = J.rank();
        const auto d = dims();
        if (chain_.size() != d.size())
            throw DomainError("flag has " + std::to_string(chain_.size()) + " subspaces, type " + J.to_string() + " needs " + std::to_string(d.size()));
        for (std::size_t k = 0; k < chain_.size(); ++k) {
            if (chain_[k].ambient() != n) throw SizeMismatch("flag subspace in the wrong ambient dimension");
            if (chain_[k].dim() != d[k]) throw DomainError("flag subspace " + std::to_string(k + 1) + " has dimension " + std::to_string(chain_[k].dim()) + ", expected " + std::to_string(d[k]));
            if (k && !chain_[k - 1].subset_of(chain_[k])) throw DomainError("flag subspaces are not nested");
        }
    }

    /// V_i = span of the first i columns, for i outside J.
    static PartialFlag from_basis(const SimpleSubset& J, const std::vector<RationalVector>& vectors) {
        const int n = J.rank();
        if (static_cast<int>(vectors.size()) != n) throw SizeMismatch("from_basis needs n vectors");
        if (!RationalMatrix::from_columns(vectors).is_invertible()) throw DomainError("flag basis vectors are linearly dependent");
        std::vector<Subspace> chain;
        for (int i = 1; i < n; ++i)
            if (!J.contains(i)) chain.emplace_back(n, std::vector<RationalVector>(vectors.begin(), vectors.begin() + i));
        return PartialFlag(J, std::move(chain));
    }

    /// Type read off from the dimensions; the zero space and Q^n are dropped.
    static PartialFlag from_chain(int n, std::vector<Subspace> chain) {
        std::vector<Subspace> kept;
        std::uint32_t mask = SimpleSubset::full(n).mask();
        for (auto& s : chain) {
            if (s.dim() == 0 || s.dim() == n) continue;
            if (!kept.empty() && kept.back().dim() >= s.dim()) throw DomainError("flag dimensions must increase strictly");
            mask &= ~(1u << s.dim());
            kept.push_back(std::move(s));
        }
        return PartialFlag(SimpleSubset(n, mask), std::move(kept));
    }

    int rank() const noexcept { return J_.rank(); }
    const SimpleSubset& type() const noexcept { return J_; }
    const std::vector<Subspace>& subspaces() const noexcept { return chain_; }

    /// i_1 < ... < i_k.
    std::vector<int> dims() const {
        std::vector<int> d;
        for (int i = 1; i < J_.rank(); ++i)
            if (!J_.contains(i)) d.push_back(i);
        return d;
    }

    /// V_i for i in {0, n} or outside J.
    Subspace at(int i) const {
        const int n = J_.rank();
        if (i == 0) return Subspace::zero(n);
        if (i == n) return Subspace::whole(n);
        const auto d = dims();
        auto it = std::find(d.begin(), d.end(), i);
        if (it == d.end()) throw DomainError("flag has no subspace of dimension " + std::to_string(i));
        return chain_[it - d.begin()];
    }

    friend bool operator==(const PartialFlag&, const PartialFlag&) = default;

    /// Flag file format: each subspace as its basis, one vector per line,
    /// blank line between subspaces.
    std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < chain_.size(); ++k) {
            if (k) s += "\n";
            for (const auto& v : chain_[k].basis()) s += detail::vector_to_string(v) + "\n";
        }
        return s;
    }

    /// Each block spans, together with the earlier blocks, the next subspace.
    static PartialFlag parse(std::string_view text) {
        std::vector<std::vector<RationalVector>> blocks(1);
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                if (!blocks.back().empty()) blocks.emplace_back();
                continue;
            }
            if (detail::is_comment_or_blank(line)) continue;
            blocks.back().push_back(detail::parse_vector(line));
        }
        if (blocks.back().empty()) blocks.pop_back();
        if (blocks.empty()) throw ParseError("flag text has no vectors");
        const int n = static_cast<int>(blocks.front().front().size());
        std::vector<RationalVector> acc;
        std::vector<Subspace> chain;
        try {
            for (const auto& b : blocks) {
                for (const auto& v : b)
                    if (static_cast<int>(v.size()) != n) throw ParseError("flag vectors have different lengths");
                acc.insert(acc.end(), b.begin(), b.end());
                chain.emplace_back(n, acc);
            }
            return from_chain(n, std::move(chain));
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad flag: ") + e.what());
        }
    }

private:
    SimpleSubset J_;
    std::vector<Subspace> chain_;
};

namespace detail {

inline void require_flag_input(const SimpleSubset& J, const PartialFlag& V, const RationalMatrix& X) {
    const int n = J.rank();
    if (V.rank() != n || X.rows() != n || X.cols() != n) throw SizeMismatch("J, flag and matrix must share the rank n");
    if (!(V.type() == J)) throw DomainError("flag type " + V.type().to_string() + " differs from J = " + J.to_string());
    if (!X.is_invertible()) throw DomainError("X is not invertible");
}

/// {0} ∪ J^c ∪ {n}.
inline std::vector<int> boundary_dims(const PartialFlag& V) {
    std::vector<int> idx{0};
    for (int d : V.dims()) idx.push_back(d);
    idx.push_back(V.rank());
    return idx;
}

}  // namespace detail

/// The w in ^JW^J with r_{i,j}(w) = dim(X V_i ∩ V_j) for all i, j outside J.
inline Permutation relative_position(const SimpleSubset& J, const PartialFlag& V, const RationalMatrix& X) {
    detail::require_flag_input(J, V, X);
    const int n = J.rank();
    const auto idx = detail::boundary_dims(V);
    const int k = static_cast<int>(idx.size());
    std::vector<Subspace> XV(k), VV(k);
    for (int a = 0; a < k; ++a) {
        VV[a] = V.at(idx[a]);
        XV[a] = VV[a].image(X);
    }
    std::vector<std::vector<int>> d(k, std::vector<int>(k, 0));
    for (int a = 1; a < k; ++a)
        for (int b = 1; b < k; ++b) d[a][b] = XV[a].intersect(VV[b]).dim();

    // Position block a sends count[a][b] entries into value block b; inside
    // blocks everything is increasing because w is minimal on both sides.
    std::vector<int> images(n, 0), next_value(k);
    for (int b = 1; b < k; ++b) next_value[b] = idx[b - 1] + 1;
    for (int a = 1; a < k; ++a) {
        int pos = idx[a - 1];
        for (int b = 1; b < k; ++b) {
            const int c = d[a][b] - d[a - 1][b] - d[a][b - 1] + d[a - 1][b - 1];
            if (c < 0 || next_value[b] + c - 1 > idx[b]) throw InternalError("relative_position: inconsistent intersection dimensions");
            for (int t = 0; t < c; ++t) images[pos++] = next_value[b]++;
        }
        if (pos != idx[a]) throw InternalError("relative_position: block counts do not add up");
    }
    const Permutation w{std::span<const int>(images)};
    const RankMatrix r(w);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            detail::ensure(r(idx[a], idx[b]) == d[a][b], "relative_position: rank matrix mismatch");
    detail::ensure(is_min_double(J, w), "relative_position: result not in ^JW^J");
    return w;
}

/// The refined flag V' of the coalescing construction and its type J'.
struct Refinement {
    SimpleSubset J;
    PartialFlag flag;
    Permutation w;  // relative position of (J, V, X)
};

inline Refinement coalesce_refine(const SimpleSubset& J, const PartialFlag& V, const RationalMatrix& X) {
    const Permutation w = relative_position(J, V, X);
    const int n = J.rank();
    const auto idx = detail::boundary_dims(V);
    const int k = static_cast<int>(idx.size()) - 2;
    std::vector<Subspace> XV;
    for (int l = 1; l <= k; ++l) XV.push_back(V.at(idx[l]).image(X));
    std::vector<Subspace> chain;
    for (int j = 0; j <= k; ++j) {
        const Subspace lo = V.at(idx[j]), hi = V.at(idx[j + 1]);
        for (int l = 0; l < k; ++l) chain.push_back(lo + hi.intersect(XV[l]));
        chain.push_back(hi);
    }
    std::vector<Subspace> distinct;
    for (auto& s : chain) {
        if (!distinct.empty()) {
            detail::ensure(distinct.back().subset_of(s), "coalesce_refine: displayed chain is not nested");
            if (distinct.back().dim() == s.dim()) continue;
        }
        distinct.push_back(std::move(s));
    }
    PartialFlag refined = PartialFlag::from_chain(n, std::move(distinct));
    SimpleSubset Jp = refined.type();
    detail::ensure(Jp == (J & J.conjugate_by(w)), "coalesce_refine: J' differs from J ∩ wJw^{-1}");
    return {Jp, std::move(refined), w};
}

/// t(X, V): relative positions of the iterated refinements, up to the first
/// stabilized pair.
inline AdmissibleSequence type_sequence(const SimpleSubset& J, const PartialFlag& V, const RationalMatrix& X) {
    detail::require_flag_input(J, V, X);
    AdmissibleSequence seq;
    SimpleSubset K = J;
    PartialFlag F = V;
    for (int guard = 0; guard <= J.count() + 1; ++guard) {
        Refinement r = coalesce_refine(K, F, X);
        seq.push_back({K, r.w});
        if (K.stable_under(r.w)) return seq;
        K = r.J;
        F = std::move(r.flag);
    }
    throw InternalError("type_sequence: no stabilization");
}

/// (X, V) lies in the open parabolic cell of w.
inline bool cell_membership(const Permutation& w, const SimpleSubset& J, const PartialFlag& V, const RationalMatrix& X) {
    if (w.size() != J.rank()) throw SizeMismatch("cell_membership: rank mismatch");
    if (!is_min_left(J, w)) throw DomainError("cell_membership: " + w.to_string() + " is not in ^JW");
    return type_sequence(J, V, X).back().w == w;
}

/// Diagonal matrix with distinct nonzero integer entries in [-2n, 2n].
inline RationalMatrix random_regular_semisimple(int n, std::mt19937_64& rng) {
    std::vector<int> pool;
    for (int x = -2 * n; x <= 2 * n; ++x)
        if (x) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng);
    RationalVector d;
    for (int i = 0; i < n; ++i) d.push_back(pool[i]);
    return RationalMatrix::diagonal(d);
}

/// Flag of type J spanned by random small-integer columns; each entry is zero
/// with probability `sparsity`, which makes degenerate positions likely.
inline PartialFlag random_flag(const SimpleSubset& J, std::mt19937_64& rng, double sparsity = 0.5) {
    const int n = J.rank();
    std::bernoulli_distribution zero(sparsity);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        std::vector<RationalVector> cols(n, RationalVector(n));
        for (auto& c : cols)
            for (auto& x : c) x = zero(rng) ? 0 : entry(rng);
        if (RationalMatrix::from_columns(cols).is_invertible()) return PartialFlag::from_basis(J, cols);
    }
}

}  // namespace heckesym
