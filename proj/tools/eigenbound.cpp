// Command-line surface for the eigenbound library. Every subcommand
// prints a bare value in plain mode and a structured document with
// --format json; experiment tables emit CSV.

#include "eigenbound/experiments.hpp"
#include "eigenbound/modforms.hpp"
#include "eigenbound/nhat.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace eb = eigenbound;
using json = nlohmann::ordered_json;

namespace {

enum class Format { Plain, Json, Csv };

std::string str(const eb::Int& z) { return z.get_str(); }
std::string str(const eb::Rat& q) { return q.get_str(); }

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

eb::Int parse_int(const std::string& s, const char* what) {
    eb::Int z;
    if (s.empty() || mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
    return z;
}

eb::QExpansion load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return eb::load_qexpansion(in);
}

json breakdown_json(const eb::BoundBreakdown& bd) {
    return json{{"p", str(bd.p)},
                {"level", str(bd.level)},
                {"adjusted_level", str(bd.adjusted_level)},
                {"table_case", eb::to_string(bd.table_case)},
                {"gstar_value", str(bd.gstar_value)},
                {"gstar_term", str(bd.gstar_term)},
                {"sturm_term", str(bd.sturm_term)},
                {"selected", str(bd.selected)}};
}

json nhat_json(const eb::NhatReport& rep) {
    return json{{"p", str(rep.p)},
                {"nhat", str(rep.nhat)},
                {"largest_failing_N", str(rep.largest_failing_N)},
                {"candidates_tested", rep.candidates_tested},
                {"ceiling_used", str(rep.ceiling_used)}};
}

json distinguish_json(const eb::DistinguishReport& rep) {
    json j{{"outcome", eb::to_string(rep.outcome)},
           {"bound", str(rep.bound)},
           {"fast_path_used", rep.fast_path_used}};
    if (rep.outcome == eb::DistinguishOutcome::Witness) {
        j["witness_n"] = str(rep.witness_n);
        j["value_f"] = str(rep.value_f);
        j["value_g"] = str(rep.value_g);
    }
    if (rep.breakdown) j["breakdown"] = breakdown_json(*rep.breakdown);
    return j;
}

void emit(Format fmt, const std::string& plain, const json& j) {
    if (fmt == Format::Json)
        std::cout << j.dump() << "\n";
    else
        std::cout << plain << "\n";
}

void print_distinguish(Format fmt, const eb::DistinguishReport& rep) {
    std::string plain;
    switch (rep.outcome) {
        case eb::DistinguishOutcome::Witness:
            plain = "witness n=" + str(rep.witness_n) + " f=" + str(rep.value_f) +
                    " g=" + str(rep.value_g) +
                    (rep.fast_path_used ? " (fast path)" : "");
            break;
        case eb::DistinguishOutcome::CongruentUpToBound:
            plain = "congruent_up_to_bound bound=" + str(rep.bound);
            break;
        case eb::DistinguishOutcome::InsufficientCoeffs:
            plain = "insufficient_coeffs bound=" + str(rep.bound);
            break;
    }
    emit(fmt, plain, distinguish_json(rep));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenform-distinguishing bounds toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand name

    std::string fmt_name = "plain";
    app.add_option("--format", fmt_name, "Output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string p_s, level_s = "1", weight_s, a_s, q_s, x_s, cap_s, ell_s;
    std::string f_path, g_path;
    std::uint64_t t = 1, below = 0, terms = 10, tmax = 10, count = 10;
    std::uint64_t rmin = 45, rmax = 60;
    unsigned jobs = 1;
    bool refined = false, full_scan = false;
    std::string table_name, check_name;

    auto* c_gstar = app.add_subcommand("gstar", "Least prime primitive root mod p not dividing the level");
    c_gstar->add_option("--p", p_s)->required();
    c_gstar->add_option("--level", level_s)->required();

    auto* c_seq = app.add_subcommand("sequence", "Worst-case sequence x_t, N_t");
    c_seq->add_option("--p", p_s)->required();
    c_seq->add_option("--t", t)->required();

    auto* c_index = app.add_subcommand("index", "[SL2(Z):Gamma_0(N)]");
    c_index->add_option("--level", level_s)->required();

    auto* c_sturm = app.add_subcommand("sturm", "Sturm bound k*index/12 (exact rational + floor)");
    c_sturm->add_option("--weight", weight_s)->required();
    c_sturm->add_option("--level", level_s)->required();

    auto* c_murty = app.add_subcommand("murty", "Murty bound l^2, l least prime not dividing N");
    c_murty->add_option("--level", level_s)->required();

    auto* c_bound = app.add_subcommand("bound", "Main two-term bound with level adjustment");
    c_bound->add_option("--p", p_s)->required();
    c_bound->add_option("--level", level_s)->required();
    c_bound->add_option("--weight", weight_s)->required();

    auto* c_comp = app.add_subcommand("comp", "Does 12 g*(p,N)^2 <= index(N) hold?");
    c_comp->add_option("--p", p_s)->required();
    c_comp->add_option("--level", level_s)->required();

    auto* c_nhat = app.add_subcommand("nhat", "Exact threshold N-hat(p)");
    c_nhat->add_option("--p", p_s)->required();
    c_nhat->add_option("--jobs", jobs);

    auto* c_range = app.add_subcommand("nhat-range", "Max N-hat over primes in [5, below)");
    c_range->add_option("--below", below)->required();
    c_range->add_option("--jobs", jobs);

    auto* c_apl = app.add_subcommand("ap-least", "Least prime = a mod q below a cap");
    c_apl->add_option("--a", a_s)->required();
    c_apl->add_option("--q", q_s)->required();
    c_apl->add_option("--cap", cap_s, "Default: ceil of the 2(q ln q)^2 bound");

    auto* c_apc = app.add_subcommand("ap-count", "pi_{a,q}(x)");
    c_apc->add_option("--a", a_s)->required();
    c_apc->add_option("--q", q_s)->required();
    c_apc->add_option("--x", x_s)->required();

    auto* c_bs = app.add_subcommand("bs-bound", "Explicit least-prime bound 2(q ln q)^2 (or 1.56 with --refined)");
    c_bs->add_option("--q", q_s)->required();
    c_bs->add_flag("--refined", refined);
    c_bs->add_option("--t", t, "Also report the distribution corollary for this t");

    auto* c_eis = app.add_subcommand("eisenstein", "q-expansion of E_{p-1} (exact rationals)");
    c_eis->add_option("--p", p_s)->required();
    c_eis->add_option("--terms", terms);

    auto* c_hecke = app.add_subcommand("hecke", "Check a_l^2 - a_{l^2} = l^{k-1} for a stored eigenform");
    c_hecke->add_option("--f", f_path)->required();
    c_hecke->add_option("--ell", ell_s)->required();

    auto* c_dist = app.add_subcommand("distinguish", "Distinguish two eigenforms modulo p");
    c_dist->add_option("--f", f_path)->required();
    c_dist->add_option("--g", g_path)->required();
    c_dist->add_option("--p", p_s)->required();
    c_dist->add_flag("--full-scan", full_scan, "Skip the fast path and scan every index");

    auto* c_diste = app.add_subcommand("distinguish-exact", "Distinguish in characteristic zero (Murty bound)");
    c_diste->add_option("--f", f_path)->required();
    c_diste->add_option("--g", g_path)->required();

    auto* c_exp = app.add_subcommand("experiment", "Convergence tables (CSV) and exact proof-device checks");
    c_exp->add_option("--table", table_name)->check(CLI::IsMember({"xt", "gstar", "index"}));
    c_exp->add_option("--check", check_name)->check(CLI::IsMember({"induction", "n10x44"}));
    c_exp->add_option("--p", p_s);
    c_exp->add_option("--tmax", tmax);
    c_exp->add_option("--count", count);
    c_exp->add_option("--rmin", rmin);
    c_exp->add_option("--rmax", rmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Format fmt = fmt_name == "json" ? Format::Json : Format::Plain;

    try {
        if (*c_gstar) {
            eb::Int g = eb::gstar(parse_int(p_s, "--p"), parse_int(level_s, "--level"));
            emit(fmt, str(g), json{{"gstar", str(g)}});
        } else if (*c_seq) {
            auto seq = eb::worst_case_sequence(parse_int(p_s, "--p"), t);
            if (fmt == Format::Json) {
                json xs = json::array(), ns = json::array();
                for (const auto& x : seq.xs) xs.push_back(str(x));
                for (const auto& n : seq.Ns) ns.push_back(str(n));
                emit(fmt, "", json{{"p", str(seq.p)}, {"xs", xs}, {"Ns", ns}});
            } else {
                for (std::size_t i = 0; i < seq.xs.size(); ++i)
                    std::cout << i + 1 << " " << str(seq.xs[i]) << " " << str(seq.Ns[i]) << "\n";
            }
        } else if (*c_index) {
            eb::Int idx = eb::gamma0_index(parse_int(level_s, "--level"));
            emit(fmt, str(idx), json{{"index", str(idx)}});
        } else if (*c_sturm) {
            eb::Int k = parse_int(weight_s, "--weight"), N = parse_int(level_s, "--level");
            eb::Rat b = eb::sturm_bound(k, N);
            eb::Int fl = eb::sturm_floor(k, N);
            emit(fmt, str(b) + " (floor " + str(fl) + ")",
                 json{{"bound", str(b)}, {"floor", str(fl)}});
        } else if (*c_murty) {
            eb::Int m = eb::murty_bound(parse_int(level_s, "--level"));
            emit(fmt, str(m), json{{"murty_bound", str(m)}});
        } else if (*c_bound) {
            auto bd = eb::main_bound(parse_int(p_s, "--p"), parse_int(level_s, "--level"),
                                     parse_int(weight_s, "--weight"));
            std::string plain = "selected " + str(bd.selected) + " (gstar_term " +
                                str(bd.gstar_term) + ", sturm_term " + str(bd.sturm_term) +
                                ", adjusted_level " + str(bd.adjusted_level) + ")";
            emit(fmt, plain, breakdown_json(bd));
        } else if (*c_comp) {
            bool ok = eb::comp_holds(parse_int(p_s, "--p"), parse_int(level_s, "--level"));
            emit(fmt, ok ? "true" : "false", json{{"holds", ok}});
        } else if (*c_nhat) {
            auto rep = eb::compute_nhat(parse_int(p_s, "--p"), jobs);
            emit(fmt, str(rep.nhat), nhat_json(rep));
        } else if (*c_range) {
            auto rep = eb::nhat_range(5, eb::Int(below), jobs);
            emit(fmt, str(rep.max_nhat),
                 json{{"below", below},
                      {"max_nhat", str(rep.max_nhat)},
                      {"argmax_p", str(rep.argmax_p)}});
        } else if (*c_apl) {
            eb::Int q = parse_int(q_s, "--q");
            std::uint64_t cap = cap_s.empty()
                                    ? static_cast<std::uint64_t>(std::ceil(eb::bs_bound(q)))
                                    : parse_int(cap_s, "--cap").get_ui();
            auto l = eb::least_prime_in_ap(parse_int(a_s, "--a").get_ui(), q.get_ui(), cap);
            if (l)
                emit(fmt, std::to_string(*l), json{{"prime", *l}});
            else
                emit(fmt, "NOT_FOUND", json{{"prime", nullptr}});
        } else if (*c_apc) {
            std::uint64_t n = eb::count_primes_in_ap(parse_int(a_s, "--a").get_ui(),
                                                     parse_int(q_s, "--q").get_ui(),
                                                     parse_int(x_s, "--x").get_ui());
            emit(fmt, std::to_string(n), json{{"count", n}});
        } else if (*c_bs) {
            eb::Int q = parse_int(q_s, "--q");
            double b = refined ? eb::bs_refined_bound(q) : eb::bs_bound(q);
            json j{{"q", str(q)}, {"refined", refined}, {"bound", b}};
            std::string plain = fmt_real(b);
            if (c_bs->count("--t")) {
                auto d = eb::dist_lower_bound(q, static_cast<unsigned>(t));
                j["dist_threshold"] = d.threshold;
                j["guaranteed_count"] = str(d.guaranteed_count);
                plain += " dist_threshold=" + fmt_real(d.threshold) +
                         " guaranteed_count=" + str(d.guaranteed_count);
            }
            emit(fmt, plain, j);
        } else if (*c_eis) {
            auto s = eb::eisenstein_qexp(parse_int(p_s, "--p"), terms);
            if (fmt == Format::Json) {
                json coeffs = json::array();
                for (const auto& c : s.coeffs) coeffs.push_back(str(c));
                emit(fmt, "", json{{"weight", str(s.weight)}, {"coeffs", coeffs}});
            } else {
                for (const auto& c : s.coeffs) std::cout << str(c) << "\n";
            }
        } else if (*c_hecke) {
            auto f = load_file(f_path);
            auto c = eb::hecke_identity_check(f, parse_int(ell_s, "--ell"));
            emit(fmt,
                 "lhs " + str(c.lhs) + " rhs " + str(c.rhs) + " ok " + (c.ok ? "true" : "false"),
                 json{{"lhs", str(c.lhs)}, {"rhs", str(c.rhs)}, {"ok", c.ok}});
        } else if (*c_dist) {
            auto f = load_file(f_path);
            auto g = load_file(g_path);
            auto rep = eb::distinguish_mod_p(f, g, parse_int(p_s, "--p"), full_scan);
            print_distinguish(fmt, rep);
        } else if (*c_diste) {
            auto f = load_file(f_path);
            auto g = load_file(g_path);
            auto rep = eb::distinguish_exact(f, g);
            if (rep.outcome == eb::DistinguishOutcome::CongruentUpToBound)
                std::cerr << "warning: no witness below the Murty bound; "
                             "inputs are unlikely to be distinct eigenforms\n";
            print_distinguish(fmt, rep);
        } else if (*c_exp) {
            if (!table_name.empty()) {
                eb::RatioTable table;
                if (table_name == "xt")
                    table = eb::asymp_xt_table(parse_int(p_s.empty() ? "5" : p_s, "--p"), tmax);
                else if (table_name == "gstar")
                    table = eb::asymp_gstar_table(parse_int(p_s.empty() ? "5" : p_s, "--p"), tmax);
                else
                    table = eb::index_ratio_table(count);
                std::cout << eb::to_csv(table);
            } else if (check_name == "induction") {
                bool ok = eb::induction_check(rmin, rmax);
                emit(fmt, ok ? "true" : "false", json{{"holds", ok}});
            } else if (check_name == "n10x44") {
                bool ok = eb::n10_x44_check(parse_int(p_s, "--p"));
                emit(fmt, ok ? "true" : "false", json{{"holds", ok}});
            } else {
                std::cerr << "experiment: pass --table or --check\n";
                return 2;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
