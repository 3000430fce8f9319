#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heckesym/admissible.hpp"
#include "heckesym/centralizer.hpp"
#include "heckesym/chromatic.hpp"
#include "heckesym/errors.hpp"
#include "heckesym/flags.hpp"
#include "heckesym/hecke_character.hpp"
#include "heckesym/hessenberg.hpp"
#include "heckesym/hybrid.hpp"
#include "heckesym/json_io.hpp"
#include "heckesym/kazhdan_lusztig.hpp"
#include "heckesym/symfunc.hpp"

namespace heckesym {

/// One line of a verification report.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    bool informational = false;  // reported, never counted as a failure
};

using Report = std::vector<CheckResult>;

inline bool all_pass(const Report& r) {
    for (const auto& c : r)
        if (!c.pass && !c.informational) return false;
    return true;
}

/// Fixture files shipped in fixtures/; located via HECKESYM_FIXTURES, then the
/// build-time default.
class FixtureSet {
public:
    static std::filesystem::path default_dir() {
        if (const char* env = std::getenv("HECKESYM_FIXTURES"); env && *env) return env;
#ifdef HECKESYM_FIXTURE_DIR
        return HECKESYM_FIXTURE_DIR;
#else
        return "fixtures";
#endif
    }

    static FixtureSet load(const std::filesystem::path& dir = default_dir()) {
        FixtureSet f;
        f.examples_ = read(dir / "examples.json");
        f.regression_ = read(dir / "regression.json");
        return f;
    }

    const Json& example(const std::string& name) const { return get(examples_, name); }
    const Json& regression(const std::string& name) const { return get(regression_, name); }

private:
    static Json read(const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) throw ParseError("cannot open fixture file " + p.string());
        try {
            return Json::parse(in);
        } catch (const Json::exception& e) {
            throw ParseError("fixture file " + p.string() + ": " + e.what());
        }
    }
    static const Json& get(const Json& j, const std::string& name) {
        if (!j.contains(name)) throw ParseError("no fixture named '" + name + "'");
        return j.at(name);
    }

    Json examples_, regression_;
};

namespace detail {

inline SymmetricFunction fx(const Json& j, const char* key) { return parse_symfunc(j.at(key).get<std::string>()); }

inline CheckResult compare(std::string name, const SymmetricFunction& got, const SymmetricFunction& want, const std::string& source) {
    const bool ok = got == want;
    std::string detail = ok ? got.to_string() : "expected " + want.to_basis(got.basis()).to_string() + ", got " + got.to_string();
    if (!ok) detail += "  [fixture source: " + source + "]";
    return {std::move(name), ok, std::move(detail)};
}

inline CheckResult compare(std::string name, const LaurentScalar& got, const LaurentScalar& want, const std::string& source) {
    const bool ok = got == want;
    std::string detail = ok ? got.to_string() : "expected " + want.to_string() + ", got " + got.to_string() + "  [fixture source: " + source + "]";
    return {std::move(name), ok, std::move(detail)};
}

/// Sum of the coefficients in the h basis.
inline LaurentScalar h_coefficient_sum(const SymmetricFunction& f) {
    LaurentScalar s;
    const SymmetricFunction fh = f.to_basis(Basis::h);
    for (const auto& [l, c] : fh.terms()) s += fh.integral_coeff(l);
    return s;
}

inline std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace detail

/// ch(q^{3/2} C'_{2341}) and its three Hi_i pieces.
inline Report verify_path_example(const FixtureSet& fs) {
    const Json& fx = fs.example("path-example");
    const std::string src = fx.at("source");
    const Permutation w = Permutation::parse(fx.at("w").get<std::string>());
    const SymmetricFunction want = detail::fx(fx, "ch_h");
    Report r;
    r.push_back(detail::compare("path-example: ch(q^{l(w)/2}C'_w) in h", frobenius_char(kl_basis(w)).to_basis(Basis::h), want, src));
    HessenbergFunction m(detail::ints(fx.at("hessenberg")));
    r.push_back(detail::compare("path-example: omega csf_q(G_m)", omega(csf_q(m)).to_basis(Basis::h), want, src));
    const int n = fx.at("n");
    SymmetricFunction assembled(Basis::h, n);
    for (const auto& piece : fx.at("pieces")) {
        const int i = piece.at("i");
        SymmetricFunction got = hi_char(n, i, detail::fx(piece, "rho"));
        r.push_back(detail::compare("path-example: hi_char i=" + std::to_string(i) + " (" + piece.at("label").get<std::string>() + ")", got,
                                    detail::fx(piece, "ch_h"), src));
        assembled += parse_scalar(piece.at("weight").get<std::string>()) * got;
    }
    r.push_back(detail::compare("path-example: sum of weighted pieces", assembled, want, src));
    return r;
}

/// Six h-expansions; the h-coefficient sums are the Poincare polynomials.
inline Report verify_gr24_table(const FixtureSet& fs) {
    const Json& fx = fs.example("gr24-table");
    const std::string src = fx.at("source");
    Report r;
    for (const auto& row : fx.at("rows")) {
        const std::string label = "gr24-table " + Partition(detail::ints(row.at("partition"))).to_string();
        const LaurentScalar poincare = parse_scalar(row.at("poincare").get<std::string>());
        r.push_back(detail::compare(label + ": sum of h-coefficients", detail::h_coefficient_sum(detail::fx(row, "ch_h")), poincare, src));
        if (row.contains("poincare_is_binomial")) {
            auto nk = detail::ints(row.at("poincare_is_binomial"));
            r.push_back(detail::compare(label + ": Poincare polynomial is a q-binomial", q_binomial(nk[0], nk[1]), poincare, src));
        }
    }
    return r;
}

/// Pure fixture arithmetic for the IC(L) example.
inline Report verify_local_systems(const FixtureSet& fs) {
    const Json& fx = fs.example("local-systems");
    const std::string src = fx.at("source");
    const LaurentScalar q = LaurentScalar::q(), one(1);
    const SymmetricFunction A = detail::fx(fx, "A");
    SymmetricFunction lhs = (one + q) * A;
    lhs += -(LaurentScalar(2) * q * q_int(3)) * h(Partition{3, 1});
    lhs += -(q * q) * h(Partition{2, 2});
    const SymmetricFunction chL = detail::fx(fx, "ch_L_h");
    Report r;
    r.push_back(detail::compare("local-systems: (1+q)A - 2q[3]_q h31 - q^2 h22 = ch(IC(L))", lhs.to_basis(Basis::h), chL, src));
    r.push_back(detail::compare("local-systems: ch(IC(L)) in s", chL.to_basis(Basis::s), detail::fx(fx, "ch_L_s"), src));
    SymmetricFunction lprime = chL;
    lprime += -detail::fx(fx, "binom_char");
    r.push_back(detail::compare("local-systems: ch(IC(L)) - ch(IC(C)) = ch(IC(L'))", lprime, detail::fx(fx, "ch_Lprime_h"), src));
    r.push_back(detail::compare("local-systems: ch(IC(L')) in s", detail::fx(fx, "ch_Lprime_h").to_basis(Basis::s), detail::fx(fx, "ch_Lprime_s"), src));
    return r;
}

/// ^JS_4 and the six admissible sequences for J = {1,3}, verbatim.
inline Report verify_admissible_list(const FixtureSet& fs) {
    const Json& fx = fs.example("admissible-list");
    const std::string src = fx.at("source");
    const int n = fx.at("n");
    const SimpleSubset J(n, detail::ints(fx.at("J")));
    Report r;
    std::vector<std::string> quotient;
    for (const auto& w : min_left_quotient(J)) quotient.push_back(w.to_string());
    const auto want_q = fx.at("quotient").get<std::vector<std::string>>();
    r.push_back({"admissible-list: ^JS_4", quotient == want_q, quotient == want_q ? "6 permutations" : "mismatch [fixture source: " + src + "]"});
    std::vector<std::string> seqs;
    for (const auto& s : enumerate_admissible(J)) seqs.push_back(to_string(s));
    const auto want_s = fx.at("sequences").get<std::vector<std::string>>();
    std::string detail = std::to_string(seqs.size()) + " sequences";
    if (seqs != want_s) {
        detail += ":";
        for (const auto& s : seqs) detail += " " + s;
        detail += "  [fixture source: " + src + "]";
    }
    r.push_back({"admissible-list: enumerated sequences", seqs == want_s, detail});
    bool inverse_ok = true;
    for (const auto& text : want_s) {
        auto seq = parse_admissible(n, text);
        if (!(gamma_inverse(gamma(seq), J) == seq)) inverse_ok = false;
    }
    r.push_back({"admissible-list: gamma_inverse(gamma(seq)) = seq", inverse_ok, ""});
    return r;
}

inline Report verify_centralizer_example(const FixtureSet& fs) {
    const Json& fx = fs.example("centralizer-example");
    const std::string src = fx.at("source");
    const int n = fx.at("n");
    const auto d = centralizer(SimpleSubset(n, detail::ints(fx.at("J"))), Permutation::parse(fx.at("w").get<std::string>()));
    std::vector<std::string> gens;
    for (const auto& g : d.generators) gens.push_back(g.to_string());
    const bool ok = d.blocks == detail::ints(fx.at("blocks")) && cycles_to_string(d.cycles) == fx.at("cycles").get<std::string>() &&
                    gens == fx.at("generators").get<std::vector<std::string>>() && d.order == fx.at("order").get<std::uint64_t>();
    std::string detail = "cycles " + cycles_to_string(d.cycles) + ", order " + std::to_string(d.order) + ", generators";
    for (const auto& g : gens) detail += " " + g;
    if (!ok) detail += "  [fixture source: " + src + "]";
    return {{"centralizer-example: W_J^w for J={1,3}, w=3412", ok, detail}};
}

/// omega csf_q(G_m) = ch(q^{l(w)/2} C'_w) for every codominant w in S_n.
inline Report verify_sw_identity(int n) {
    if (n < 1 || n > kMaxKLRank) throw DomainError("sw-identity needs 1 <= n <= " + std::to_string(kMaxKLRank));
    int count = 0;
    Report r;
    for (const auto& m : all_hessenberg_functions(n)) {
        const Permutation w = codominant_permutation(m);
        const SymmetricFunction lhs = omega(csf_q(m)).to_basis(Basis::s);
        const SymmetricFunction rhs = frobenius_char(kl_basis(w));
        ++count;
        if (!(lhs == rhs))
            r.push_back({"sw-identity: m=" + m.to_string() + ", w=" + w.to_string(), false,
                         "omega csf_q = " + lhs.to_string() + ", ch(C') = " + rhs.to_string()});
    }
    if (r.empty()) r.push_back({"sw-identity n=" + std::to_string(n), true, std::to_string(count) + " codominant permutations"});
    return r;
}

/// Recorded engine value of ch(q^2 C'_{3412}).
inline Report verify_regression(const FixtureSet& fs) {
    const Json& fx = fs.regression("cprime-3412");
    const SymmetricFunction got = frobenius_char(kl_basis(Permutation::parse(fx.at("w").get<std::string>()))).to_basis(Basis::h);
    return {detail::compare("regression: ch(q^2 C'_3412)", got, detail::fx(fx, "ch_h"), fx.at("source"))};
}

/// ch(q^2 C'_{3412}) minus the displayed direct sum, reported only.
inline Report report_gr24_residual(const FixtureSet& fs) {
    const Json& fx = fs.regression("gr24-decomposition");
    const Json& table = fs.example("gr24-table");
    const Permutation w = Permutation::parse(fx.at("w").get<std::string>());
    SymmetricFunction residual = frobenius_char(kl_basis(w)).to_basis(Basis::h);
    for (const auto& t : fx.at("terms")) {
        SymmetricFunction piece;
        if (t.contains("ch_h")) {
            piece = detail::fx(t, "ch_h");
        } else {
            for (const auto& row : table.at("rows"))
                if (row.at("w") == t.at("table_w")) piece = detail::fx(row, "ch_h");
        }
        residual += -(LaurentScalar::q(t.at("shift").get<int>()) * piece);
    }
    return {{"gr24-residual (informational)", residual.is_zero(), "ch(q^2C'_3412) - displayed sum = " + (residual.is_zero() ? std::string("0") : residual.to_string()), true}};
}

/// |sequences starting at J| = |^JW|, Gamma injective, gamma_inverse a two-sided inverse.
inline Report sample_gamma_bijection(int n) {
    if (n < 1 || n > 6) throw DomainError("gamma-bijection needs 1 <= n <= 6");
    Report r;
    int subsets = 0;
    for (const auto& J : all_simple_subsets(n)) {
        ++subsets;
        const auto seqs = enumerate_admissible(J);
        const auto quotient = min_left_quotient(J);
        std::set<Permutation> image;
        bool inverse_ok = true;
        for (const auto& s : seqs) {
            image.insert(gamma(s));
            if (!(gamma_inverse(gamma(s), J) == s)) inverse_ok = false;
        }
        for (const auto& z : quotient)
            if (!(gamma(gamma_inverse(z, J)) == z)) inverse_ok = false;
        const std::set<Permutation> qset(quotient.begin(), quotient.end());
        if (seqs.size() != quotient.size() || image != qset || !inverse_ok)
            r.push_back({"gamma-bijection J=" + J.to_string(), false,
                         std::to_string(seqs.size()) + " sequences, |^JW| = " + std::to_string(quotient.size()) +
                             (inverse_ok ? "" : ", gamma_inverse disagrees")});
    }
    if (r.empty())
        r.push_back({"gamma-bijection n=" + std::to_string(n), true, "|sequences| = |^JW| for all " + std::to_string(subsets) + " subsets J"});
    return r;
}

/// Every (J', w) with w minimal in W_{J'}w and wJ'w^{-1} = J'.
inline std::vector<std::pair<SimpleSubset, Permutation>> hybrid_pairs(int n) {
    std::vector<std::pair<SimpleSubset, Permutation>> out;
    for (const auto& J : all_simple_subsets(n))
        for (const auto& w : min_left_quotient(J))
            if (J.stable_under(w)) out.emplace_back(J, w);
    return out;
}

/// hybrid_char at v=1 equals plethysm_rhs for every valid pair.
inline Report sample_plethysm_sweep(int n) {
    if (n < 1 || n > 6) throw DomainError("plethysm-sweep needs 1 <= n <= 6");
    Report r;
    int count = 0;
    for (const auto& [J, w] : hybrid_pairs(n)) {
        ++count;
        const SymmetricFunction lhs = hybrid_char(J, w).at_q1();
        const SymmetricFunction rhs = plethysm_rhs(J, w);
        if (!(lhs == rhs))
            r.push_back({"plethysm J'=" + J.to_string() + " w=" + w.to_string(), false,
                         "hybrid at q=1: " + lhs.to_p().to_string() + ", plethysm: " + rhs.to_string()});
    }
    if (r.empty()) r.push_back({"plethysm-sweep n=" + std::to_string(n), true, std::to_string(count) + " pairs (J', w)"});
    return r;
}

/// Random regular semisimple X and random flags: the type sequence is
/// admissible, lands in ^JW, and gamma_inverse reproduces it.
inline Report sample_typeseq_crosscheck(int n, std::uint64_t seed, int count) {
    if (n < 1 || n > 6) throw DomainError("typeseq-crosscheck needs 1 <= n <= 6");
    if (count < 0) throw DomainError("count must be nonnegative");
    std::mt19937_64 rng(seed);
    Report r;
    int total = 0;
    for (const auto& J : all_simple_subsets(n))
        for (int t = 0; t < count; ++t) {
            const RationalMatrix X = random_regular_semisimple(n, rng);
            const PartialFlag V = random_flag(J, rng);
            ++total;
            std::string why;
            try {
                const auto seq = type_sequence(J, V, X);
                if (auto rep = check_admissible(seq); !rep.ok)
                    why = "not admissible: " + rep.reason;
                else if (!is_min_left(J, gamma(seq)))
                    why = "gamma value outside ^JW";
                else if (!(gamma_inverse(gamma(seq), J) == seq))
                    why = "gamma_inverse gives " + to_string(gamma_inverse(gamma(seq), J)) + ", type sequence " + to_string(seq);
            } catch (const std::exception& e) {
                why = e.what();
            }
            if (!why.empty()) {
                r.push_back({"typeseq J=" + J.to_string() + " sample " + std::to_string(t), false,
                             why + "\n  reproducer: seed " + std::to_string(seed) + "\n  X:\n" + X.to_string() + "  flag:\n" + V.to_string()});
                return r;
            }
        }
    r.push_back({"typeseq-crosscheck n=" + std::to_string(n), true, std::to_string(total) + " samples, seed " + std::to_string(seed)});
    return r;
}

}  // namespace heckesym
