// heckesym: command-line front end for the heckesym library.
//
// Exit codes: 0 success, 1 verification/sample failure, 2 parse error,
// 3 precondition violation, 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heckesym/heckesym.hpp"
#include "heckesym/verification.hpp"

namespace {

using namespace heckesym;

bool g_json = false;

int emit(const std::string& text, const Json& j) {
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Permutation perm_arg(const std::string& text, int n) {
    Permutation w = Permutation::parse(text);
    if (n > 0 && w.size() != n) throw SizeMismatch("permutation " + text + " is not in S_" + std::to_string(n));
    return w;
}

SymmetricFunction in_basis(const SymmetricFunction& f, const std::string& basis, bool at_q1) {
    SymmetricFunction g = at_q1 ? f.at_q1() : f;
    return g.to_basis(parse_basis(basis));
}

int emit_symfunc(const SymmetricFunction& f) { return emit(f.to_string(), to_json(f)); }

int print_report(const Report& report) {
    const bool ok = all_pass(report);
    if (g_json) {
        Json results = Json::array();
        for (const auto& c : report)
            results.push_back({{"name", c.name}, {"status", c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL")}, {"detail", c.detail}});
        std::cout << Json{{"pass", ok}, {"results", results}}.dump(2) << "\n";
    } else {
        for (const auto& c : report) {
            const char* tag = c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL");
            std::cout << tag << "  " << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

struct FlagInputs {
    std::string J, matrix, flag;
};

struct FlagArgs {
    SimpleSubset J;
    PartialFlag V;
    RationalMatrix X;
};

FlagArgs load_flag_args(const FlagInputs& in) {
    RationalMatrix X = RationalMatrix::parse(read_file(in.matrix));
    if (!X.is_square()) throw ParseError("matrix file is not square");
    PartialFlag V = PartialFlag::parse(read_file(in.flag));
    if (V.rank() != X.rows()) throw SizeMismatch("flag and matrix have different sizes");
    SimpleSubset J = in.J.empty() ? V.type() : SimpleSubset::parse(X.rows(), in.J);
    return {J, V, X};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke algebra, symmetric function and parabolic quotient computations"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "JSON output");
    app.fallthrough();

    int n = 0;
    std::string w_arg, z_arg, J_arg, basis = "s";
    bool at_q1 = false;

    auto* klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{z,w}");
    klpoly->add_option("--z", z_arg, "lower permutation")->required();
    klpoly->add_option("--w", w_arg, "upper permutation")->required();

    bool normalized = false;
    auto* cprime = app.add_subcommand("cprime", "q^{l(w)/2} C'_w in the T basis");
    cprime->add_option("--w", w_arg)->required();
    cprime->add_flag("--normalized", normalized, "print C'_w itself (half-integer powers of q)");

    std::string cprime_w, t_w, element_file;
    auto* chr = app.add_subcommand("char", "Frobenius character of a Hecke element");
    chr->add_option("--n", n);
    auto* chr_cp = chr->add_option("--cprime", cprime_w, "ch(q^{l(w)/2} C'_w)");
    auto* chr_t = chr->add_option("--t", t_w, "ch(T_w)");
    auto* chr_el = chr->add_option("--element", element_file, "Hecke element JSON file");
    chr_cp->excludes(chr_t)->excludes(chr_el);
    chr_t->excludes(chr_el);
    chr->add_option("--basis", basis, "m, e, h, p or s")->capture_default_str();
    chr->add_flag("--at-q1", at_q1);

    std::string m_arg;
    bool apply_omega = false;
    auto* csf = app.add_subcommand("csf", "chromatic quasisymmetric function of an indifference graph");
    csf->add_option("--m", m_arg, "Hessenberg function, e.g. 2,3,4,4");
    csf->add_option("--w", w_arg, "codominant permutation instead of --m");
    csf->add_option("--basis", basis)->capture_default_str();
    csf->add_flag("--omega", apply_omega, "apply omega");
    csf->add_flag("--at-q1", at_q1);

    std::string map_arg;
    bool wcsf_check = false;
    auto* wcsf = app.add_subcommand("wcsf", "chromatic function of a weighted indifference graph");
    wcsf->add_option("--map", map_arg, "e.g. 'G=2,3,3;f=1,1,2,3'")->required();
    wcsf->add_option("--basis", basis)->capture_default_str();
    wcsf->add_flag("--check", wcsf_check, "also verify the clique-expansion identity");

    std::string prefactor = "half";
    auto* hybrid = app.add_subcommand("hybrid", "ch(q^{l(w_J')/2} C'_{w_J'} T_w) / |W_J'|_q");
    hybrid->add_option("--n", n);
    hybrid->add_option("--J", J_arg)->required();
    hybrid->add_option("--w", w_arg)->required();
    hybrid->add_option("--prefactor", prefactor, "half or full")->check(CLI::IsMember({"half", "full"}))->capture_default_str();
    hybrid->add_option("--basis", basis)->capture_default_str();
    hybrid->add_flag("--at-q1", at_q1);

    auto* pleth = app.add_subcommand("plethysm-rhs", "prod over cycles of p_{|tau|}[h_lambda]");
    pleth->add_option("--n", n);
    pleth->add_option("--J", J_arg)->required();
    pleth->add_option("--w", w_arg)->required();
    pleth->add_flag("--at-q1", at_q1, "accepted for symmetry with hybrid; the result has no q");

    std::string side = "left";
    auto* quotient = app.add_subcommand("quotient", "minimal coset representatives");
    quotient->add_option("--n", n)->required();
    quotient->add_option("--J", J_arg)->required();
    quotient->add_option("--side", side, "left (^JW), right (W^J) or double")->check(CLI::IsMember({"left", "right", "double"}))->capture_default_str();

    std::string check_seq;
    auto* adm = app.add_subcommand("admissible", "admissible sequences starting at J");
    adm->add_option("--n", n)->required();
    adm->add_option("--J", J_arg)->required();
    auto* adm_z = adm->add_option("--z", z_arg, "only Gamma_J^{-1}(z)");
    adm->add_option("--check", check_seq, "validate a sequence in tuple notation and print Gamma_J")->excludes(adm_z);

    auto* jinf = app.add_subcommand("jinf", "largest K inside J with wKw^{-1} = K");
    jinf->add_option("--n", n);
    jinf->add_option("--J", J_arg)->required();
    jinf->add_option("--w", w_arg)->required();

    auto* cent = app.add_subcommand("centralizer", "W_J^w and its product decomposition");
    cent->add_option("--n", n);
    cent->add_option("--J", J_arg)->required();
    cent->add_option("--w", w_arg)->required();

    FlagInputs flag_in;
    auto* relpos = app.add_subcommand("relpos", "relative position of (X V, V) in ^JW^J");
    auto* typeseq = app.add_subcommand("typeseq", "type sequence t(X, V) of a partial flag");
    for (auto* sub : {relpos, typeseq}) {
        sub->add_option("--J", J_arg, "defaults to the type of the flag");
        sub->add_option("--matrix", flag_in.matrix, "matrix file")->required()->check(CLI::ExistingFile);
        sub->add_option("--flag", flag_in.flag, "flag file")->required()->check(CLI::ExistingFile);
    }
    std::string cell_w;
    typeseq->add_option("--cell", cell_w, "also report membership in the open cell of this w");

    int i_arg = 0;
    std::string rho_arg, hichar_basis = "h";
    auto* hichar = app.add_subcommand("hichar", "[n-i]_q h_{n-i} * rho");
    hichar->add_option("--n", n)->required();
    hichar->add_option("--i", i_arg)->required();
    hichar->add_option("--rho", rho_arg, "character of degree i (default h[i])");
    hichar->add_option("--basis", hichar_basis)->capture_default_str();

    std::string f_arg;
    auto* bundle = app.add_subcommand("bundlediv", "f / |W_J|_q for w maximal in W_J w W_J");
    bundle->add_option("--n", n);
    bundle->add_option("--J", J_arg)->required();
    bundle->add_option("--w", w_arg)->required();
    bundle->add_option("--f", f_arg, "character to divide (default ch(q^{l(w)/2}C'_w))");
    bundle->add_option("--basis", basis)->capture_default_str();

    std::string fixture_name, fixture_dir;
    int verify_n = 4;
    auto* verify = app.add_subcommand("verify", "check bundled fixtures");
    verify->add_option("name", fixture_name,
                       "path-example, gr24-table, local-systems, admissible-list, centralizer-example, sw-identity, regression, gr24-residual or all")
        ->required()
        ->check(CLI::IsMember({"path-example", "gr24-table", "local-systems", "admissible-list", "centralizer-example", "sw-identity", "regression",
                               "gr24-residual", "all"}));
    verify->add_option("--n", verify_n, "rank for sw-identity")->capture_default_str();
    verify->add_option("--fixtures", fixture_dir, "fixture directory");

    std::string kind;
    int sample_n = 4, count = 100;
    std::uint64_t seed = 1;
    auto* sample = app.add_subcommand("sample", "randomized and exhaustive property sweeps");
    sample->add_option("kind", kind, "typeseq-crosscheck, gamma-bijection or plethysm-sweep")
        ->required()
        ->check(CLI::IsMember({"typeseq-crosscheck", "gamma-bijection", "plethysm-sweep"}));
    sample->add_option("--n", sample_n)->capture_default_str();
    sample->add_option("--seed", seed)->capture_default_str();
    sample->add_option("--count", count, "samples per subset J")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*klpoly) {
            const Permutation w = perm_arg(w_arg, 0), z = perm_arg(z_arg, w.size());
            const LaurentScalar P = kl_poly(z, w);
            const std::int64_t mu = kl_mu(z, w);
            return emit(P.to_string() + (g_json ? "" : "\nmu = " + std::to_string(mu)),
                        {{"z", z.to_string()}, {"w", w.to_string()}, {"P", to_json(P)}, {"P_text", P.to_string()}, {"mu", mu}});
        }
        if (*cprime) {
            const Permutation w = perm_arg(w_arg, 0);
            const HeckeElement a = normalized ? kl_basis_normalized(w) : kl_basis(w);
            return emit(a.to_string(), to_json(a));
        }
        if (*chr) {
            HeckeElement a;
            if (!cprime_w.empty())
                a = kl_basis(perm_arg(cprime_w, n));
            else if (!t_w.empty())
                a = HeckeElement::basis(perm_arg(t_w, n));
            else if (!element_file.empty())
                a = hecke_from_json(Json::parse(read_file(element_file)));
            else
                throw ParseError("char needs one of --cprime, --t or --element");
            if (n > 0 && a.rank() != n) throw SizeMismatch("element is not in H_" + std::to_string(n));
            return emit_symfunc(in_basis(frobenius_char(a), basis, at_q1));
        }
        if (*csf) {
            if (m_arg.empty() == w_arg.empty()) throw ParseError("csf needs exactly one of --m and --w");
            const HessenbergFunction m = m_arg.empty() ? hessenberg_of(perm_arg(w_arg, 0)) : HessenbergFunction::parse(m_arg);
            SymmetricFunction f = csf_q(m);
            if (apply_omega) f = omega(f);
            return emit_symfunc(in_basis(f, basis, at_q1));
        }
        if (*wcsf) {
            const WeightedGraphMap gf = WeightedGraphMap::parse(map_arg);
            const SymmetricFunction f = weighted_csf_q(gf);
            if (wcsf_check) {
                const bool ok = gasharov_quotient(gf) == f;
                if (!ok) throw InternalError("weighted_csf_q differs from csf_q(G^f) / prod [|f^{-1}(j)|]_q!");
            }
            return emit_symfunc(in_basis(f, basis, false));
        }
        if (*hybrid) {
            const Permutation w = perm_arg(w_arg, n);
            const SimpleSubset J = SimpleSubset::parse(w.size(), J_arg);
            const auto pre = prefactor == "full" ? HybridPrefactor::full : HybridPrefactor::half;
            return emit_symfunc(in_basis(hybrid_char(J, w, pre), basis, at_q1));
        }
        if (*pleth) {
            const Permutation w = perm_arg(w_arg, n);
            return emit_symfunc(plethysm_rhs(SimpleSubset::parse(w.size(), J_arg), w));
        }
        if (*quotient) {
            const SimpleSubset J = SimpleSubset::parse(n, J_arg);
            const auto reps = side == "left" ? min_left_quotient(J) : side == "right" ? min_right_quotient(J) : min_double_quotient(J);
            std::string text;
            Json j = Json::array();
            for (const auto& w : reps) {
                text += (text.empty() ? "" : "\n") + w.to_string();
                j.push_back(w.to_string());
            }
            return emit(text, j);
        }
        if (*adm) {
            const SimpleSubset J = SimpleSubset::parse(n, J_arg);
            if (!check_seq.empty()) {
                const AdmissibleSequence seq = parse_admissible(n, check_seq);
                if (!(seq.front().J == J)) throw DomainError("sequence does not start at J = " + J.to_string());
                const Permutation g = gamma(seq);
                return emit(g.to_string(), {{"sequence", to_json(seq)}, {"gamma", g.to_string()}});
            }
            std::vector<AdmissibleSequence> seqs;
            if (!z_arg.empty())
                seqs.push_back(gamma_inverse(perm_arg(z_arg, n), J));
            else
                seqs = enumerate_admissible(J);
            std::string text;
            Json j = Json::array();
            for (const auto& s : seqs) {
                text += (text.empty() ? "" : "\n") + to_string(s);
                j.push_back(to_json(s));
            }
            return emit(text, z_arg.empty() ? j : j.front());
        }
        if (*jinf) {
            const Permutation w = perm_arg(w_arg, n);
            const SimpleSubset K = j_infinity(SimpleSubset::parse(w.size(), J_arg), w);
            return emit(K.to_string(), to_json(K));
        }
        if (*cent) {
            const Permutation w = perm_arg(w_arg, n);
            const auto d = centralizer(SimpleSubset::parse(w.size(), J_arg), w);
            std::string blocks, sigma, gens, sizes;
            for (int b : d.blocks) blocks += (blocks.empty() ? "" : ",") + std::to_string(b);
            for (int s : d.sigma) sigma += std::to_string(s);
            Json jg = Json::array();
            for (const auto& g : d.generators) {
                gens += (gens.empty() ? "" : " ") + g.to_string();
                jg.push_back(g.to_string());
            }
            for (int s : d.factor_sizes) sizes += (sizes.empty() ? "S_" : " x S_") + std::to_string(s);
            std::string text = "blocks " + blocks + "\nsigma " + sigma + "\ncycles " + cycles_to_string(d.cycles) +
                               "\nW_J^w = " + sizes + "\norder " + std::to_string(d.order) + "\ngenerators " + (gens.empty() ? "(none)" : gens);
            return emit(text, {{"blocks", d.blocks},
                               {"sigma", d.sigma},
                               {"cycles", d.cycles},
                               {"factor_sizes", d.factor_sizes},
                               {"order", d.order},
                               {"generators", jg}});
        }
        if (*relpos) {
            flag_in.J = J_arg;
            const auto a = load_flag_args(flag_in);
            const Permutation w = relative_position(a.J, a.V, a.X);
            return emit(w.to_string(), {{"J", to_json(a.J)}, {"w", w.to_string()}});
        }
        if (*typeseq) {
            flag_in.J = J_arg;
            const auto a = load_flag_args(flag_in);
            const AdmissibleSequence seq = type_sequence(a.J, a.V, a.X);
            std::string text = to_string(seq);
            Json j = {{"sequence", to_json(seq)}, {"gamma", gamma(seq).to_string()}};
            if (!cell_w.empty()) {
                const bool in = cell_membership(perm_arg(cell_w, a.J.rank()), a.J, a.V, a.X);
                text += std::string("\n") + (in ? "in" : "not in") + " the open cell of " + cell_w;
                j["in_cell"] = in;
            }
            return emit(text, j);
        }
        if (*hichar) {
            const SymmetricFunction rho = rho_arg.empty() ? h(i_arg > 0 ? Partition{i_arg} : Partition()) : parse_symfunc(rho_arg, Basis::h, i_arg);
            return emit_symfunc(in_basis(hi_char(n, i_arg, rho), hichar_basis, false));
        }
        if (*bundle) {
            const Permutation w = perm_arg(w_arg, n);
            const SimpleSubset J = SimpleSubset::parse(w.size(), J_arg);
            const SymmetricFunction f = f_arg.empty() ? frobenius_char(kl_basis(w)) : parse_symfunc(f_arg, Basis::s, w.size());
            return emit_symfunc(in_basis(bundle_divide(w, J, f), basis, false));
        }
        if (*verify) {
            const FixtureSet fs = FixtureSet::load(fixture_dir.empty() ? FixtureSet::default_dir() : std::filesystem::path(fixture_dir));
            Report r;
            auto add = [&](const std::string& name, const Report& part) {
                if (fixture_name == name || fixture_name == "all") r.insert(r.end(), part.begin(), part.end());
            };
            auto want = [&](const std::string& name) { return fixture_name == name || fixture_name == "all"; };
            if (want("path-example")) add("path-example", verify_path_example(fs));
            if (want("gr24-table")) add("gr24-table", verify_gr24_table(fs));
            if (want("local-systems")) add("local-systems", verify_local_systems(fs));
            if (want("admissible-list")) add("admissible-list", verify_admissible_list(fs));
            if (want("centralizer-example")) add("centralizer-example", verify_centralizer_example(fs));
            if (want("sw-identity")) add("sw-identity", verify_sw_identity(verify_n));
            if (want("regression")) add("regression", verify_regression(fs));
            if (want("gr24-residual")) add("gr24-residual", report_gr24_residual(fs));
            return print_report(r);
        }
        if (*sample) {
            if (kind == "gamma-bijection") return print_report(sample_gamma_bijection(sample_n));
            if (kind == "plethysm-sweep") return print_report(sample_plethysm_sweep(sample_n));
            return print_report(sample_typeseq_crosscheck(sample_n, seed, count));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
