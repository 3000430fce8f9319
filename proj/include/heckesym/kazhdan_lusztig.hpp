#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heckesym/errors.hpp"
#include "heckesym/hecke_algebra.hpp"
#include "heckesym/laurent.hpp"
#include "heckesym/permutation.hpp"

namespace heckesym {

/// P_{z,w} and mu(z,w) for a fixed w.
struct KLData {
    Permutation w;
    std::map<Permutation, LaurentScalar> polys;  // nonzero P_{z,w}, in v (even exponents)
    std::map<Permutation, std::int64_t> mu;      // nonzero mu(z,w), z != w
};

/// Largest rank for which full KL tables are built (n! columns of n! entries).
inline constexpr int kMaxKLRank = 7;

namespace detail {

/// Per-rank table of KL columns, indexed by Permutation::rank(). Columns are
/// computed on demand and then immutable.
class KLTable {
public:
    explicit KLTable(int n) : n_(n), size_(factorial(n)), columns_(size_) {
        for (std::uint64_t r = 0; r < size_; ++r) {
            perms_.push_back(Permutation::unrank(n, r));
            lengths_.push_back(perms_.back().length());
        }
        load_persisted();
    }

    int rank() const noexcept { return n_; }
    const Permutation& perm(std::uint64_t r) const { return perms_[r]; }
    int length(std::uint64_t r) const { return lengths_[r]; }

    const std::vector<LaurentScalar>& column(const Permutation& w) {
        std::lock_guard lock(mu_);
        return column_locked(w.rank());
    }

private:
    const std::vector<LaurentScalar>& column_locked(std::uint64_t wr) {
        if (columns_[wr]) return *columns_[wr];
        const Permutation& w = perms_[wr];
        std::vector<LaurentScalar> col(size_);
        if (w.is_identity()) {
            col[wr] = LaurentScalar(1);
        } else {
            // w = s v with s the smallest left descent.
            int s = 1;
            while (!w.has_left_descent(s)) ++s;
            const Permutation v = w.left_mul_simple(s);
            const std::uint64_t vr = v.rank();
            const auto& pv = column_locked(vr);
            const int lw = lengths_[wr], lv = lengths_[vr];
            for (std::uint64_t xr = 0; xr < size_; ++xr) {
                const Permutation& x = perms_[xr];
                const Permutation sx = x.left_mul_simple(s);
                const bool down = x.has_left_descent(s);
                const LaurentScalar& p_sx = pv[sx.rank()];
                const LaurentScalar& p_x = pv[xr];
                LaurentScalar val;
                if (down)
                    val = p_sx + p_x.shift(2);
                else
                    val = p_sx.shift(2) + p_x;
                col[xr] = std::move(val);
            }
            // Subtract mu(z,v) q^{(l(w)-l(z))/2} P_{x,z} over z < v with s z < z.
            for (std::uint64_t zr = 0; zr < size_; ++zr) {
                if (zr == vr || pv[zr].is_zero()) continue;
                const int lz = lengths_[zr];
                if ((lv - lz) % 2 == 0) continue;
                if (!perms_[zr].has_left_descent(s)) continue;
                const std::int64_t mu = pv[zr].coeff(lv - lz - 1);
                if (mu == 0) continue;
                const auto& pz = column_locked(zr);
                const LaurentScalar factor(mu, lw - lz);
                for (std::uint64_t xr = 0; xr < size_; ++xr)
                    if (!pz[xr].is_zero()) col[xr] -= factor * pz[xr];
            }
        }
        columns_[wr] = std::move(col);
        persist(wr);
        return *columns_[wr];
    }

    static std::optional<std::filesystem::path> cache_file(int n) {
        const char* dir = std::getenv("HECKE_CACHE_DIR");
        if (!dir || !*dir) return std::nullopt;
        return std::filesystem::path(dir) / ("kl_" + std::to_string(n) + ".txt");
    }

    static std::string q_coeff_list(const LaurentScalar& p) {
        std::string s;
        bool first = true;
        for (auto c : p.q_coeffs()) {
            if (!first) s += ',';
            s += std::to_string(c);
            first = false;
        }
        return s;
    }

    /// One "n:w:z:c0,c1,..." line per nonzero P_{z,w}; the diagonal entry is
    /// written last so a truncated column is never trusted on reload.
    void persist(std::uint64_t wr) const {
        auto path = cache_file(n_);
        if (!path) return;
        std::error_code ec;
        std::filesystem::create_directories(path->parent_path(), ec);
        std::ofstream out(*path, std::ios::app);
        if (!out) return;
        const auto& col = *columns_[wr];
        const std::string ws = perms_[wr].to_string();
        std::ostringstream buf;
        for (std::uint64_t zr = 0; zr < size_; ++zr)
            if (zr != wr && !col[zr].is_zero())
                buf << n_ << ':' << ws << ':' << perms_[zr].to_string() << ':' << q_coeff_list(col[zr]) << '\n';
        buf << n_ << ':' << ws << ':' << ws << ":1\n";
        out << buf.str();
    }

    void load_persisted() {
        auto path = cache_file(n_);
        if (!path) return;
        std::ifstream in(*path);
        if (!in) return;
        std::map<std::uint64_t, std::vector<LaurentScalar>> pending;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            std::vector<std::string> fields;
            std::stringstream ss(line);
            for (std::string f; std::getline(ss, f, ':');) fields.push_back(f);
            auto bad = [&] {
                return ParseError(path->string() + ":" + std::to_string(lineno) + ": malformed KL cache line");
            };
            if (fields.size() != 4 || fields[0] != std::to_string(n_)) throw bad();
            Permutation w, z;
            std::vector<std::int64_t> cs;
            try {
                w = Permutation::parse(fields[1]);
                z = Permutation::parse(fields[2]);
                std::stringstream cl(fields[3]);
                for (std::string c; std::getline(cl, c, ',');) cs.push_back(std::stoll(c));
            } catch (const std::exception&) {
                throw bad();
            }
            if (w.size() != n_ || z.size() != n_) throw bad();
            auto& col = pending[w.rank()];
            if (col.empty()) col.resize(size_);
            col[z.rank()] = LaurentScalar::from_q_coeffs(cs);
            if (w == z) {
                columns_[w.rank()] = std::move(col);
                pending.erase(w.rank());
            }
        }
    }

    int n_;
    std::uint64_t size_;
    std::vector<Permutation> perms_;
    std::vector<int> lengths_;
    std::vector<std::optional<std::vector<LaurentScalar>>> columns_;
    std::recursive_mutex mu_;
};

inline KLTable& kl_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<KLTable>> tables;
    if (n < 1 || n > kMaxKLRank) throw DomainError("KL polynomials are supported for 1 <= n <= " + std::to_string(kMaxKLRank));
    std::lock_guard lock(mu);
    auto& t = tables[n];
    if (!t) t = std::make_unique<KLTable>(n);
    return *t;
}

}  // namespace detail

/// P_{z,w} as a polynomial in q (stored in v with even exponents).
inline LaurentScalar kl_poly(const Permutation& z, const Permutation& w) {
    if (z.size() != w.size()) throw SizeMismatch("kl_poly: permutations of different sizes");
    return detail::kl_table(w.size()).column(w)[z.rank()];
}

/// mu(z,w): coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w}, zero when the
/// length difference is even.
inline std::int64_t kl_mu(const Permutation& z, const Permutation& w) {
    const int d = w.length() - z.length();
    if (d <= 0 || d % 2 == 0) return 0;
    return kl_poly(z, w).coeff(d - 1);
}

inline KLData kl_data(const Permutation& w) {
    KLData d{w, {}, {}};
    auto& table = detail::kl_table(w.size());
    const auto& col = table.column(w);
    const int lw = w.length();
    for (std::uint64_t r = 0; r < col.size(); ++r) {
        if (col[r].is_zero()) continue;
        const Permutation& z = table.perm(r);
        d.polys.emplace(z, col[r]);
        const int diff = lw - table.length(r);
        if (diff > 0 && diff % 2 == 1)
            if (auto m = col[r].coeff(diff - 1); m != 0) d.mu.emplace(z, m);
    }
    return d;
}

/// q^{l(w)/2} C'_w = sum_{z <= w} P_{z,w} T_z.
inline HeckeElement kl_basis(const Permutation& w) {
    HeckeElement a(w.size());
    auto& table = detail::kl_table(w.size());
    const auto& col = table.column(w);
    for (std::uint64_t r = 0; r < col.size(); ++r)
        if (!col[r].is_zero()) a.add(table.perm(r), col[r]);
    return a;
}

/// C'_w itself, i.e. v^{-l(w)} times kl_basis(w).
inline HeckeElement kl_basis_normalized(const Permutation& w) {
    return LaurentScalar(1, -w.length()) * kl_basis(w);
}

}  // namespace heckesym
