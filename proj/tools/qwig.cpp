// qwig: command-line front end for the closed forms and the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qwig/invariants.hpp"
#include "qwig/io.hpp"
#include "qwig/verify.hpp"

using namespace qwig;
using io::json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Kind parse_kind(const std::string& s) { return s == "lower" ? Kind::lower : Kind::raise; }

Weight dominant_weight(const std::string& text)
{
    Weight w = parse_weight(text);
    if (!w.integral()) throw Usage("weight " + text + " is not integral");
    if (!w.dominant()) throw Usage("weight " + text + " is not dominant");
    return w;
}

json roots_cmd(const Weight& L, const std::string& variant)
{
    json out{{"weight", to_string(L)}};
    json rs = json::object();
    for (auto v : {RootVariant::adjoint, RootVariant::dual})
        if (variant.empty() || variant == to_string(v)) rs[to_string(v)] = io::to_json(char_roots(L, v));
    out["roots"] = rs;
    auto g = check_generic(L);
    out["generic"] = g.generic();
    return out;
}

json branch_cmd(const Weight& L, const std::string& lower)
{
    if (!lower.empty()) return io::to_json(index_sets(L, parse_weight(lower)));
    json all = json::array();
    for (const auto& L0 : branch_candidates(L)) all.push_back(io::to_json(index_sets(L, L0)));
    return all;
}

json verify_json(const Signature& s, const std::string& suite, const std::vector<VerifyCase>& cases, bool& all_pass)
{
    json arr = json::array();
    all_pass = true;
    std::map<std::string, int> tally;
    for (const auto& c : cases) {
        json in(c.inputs);
        arr.push_back(json{{"suite", c.suite}, {"inputs", in}, {"status", c.status}, {"residual", c.residual}, {"detail", c.detail}});
        all_pass = all_pass && !c.failed();
        tally[c.status]++;
    }
    return json{{"suite", suite}, {"signature", to_string(s)}, {"cases", arr}, {"summary", tally}, {"pass", all_pass}};
}

int env_jobs()
{
    if (const char* v = std::getenv("QWIG_JOBS")) {
        int j = std::atoi(v);
        if (j > 0) return j;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants, Wigner coefficients and reduced matrix elements of U_q[gl(m|n)]"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file");

    std::string weight, lower, kind = "lower", variant, form = "root_product", suite = "all";
    bool coupled = false, csv = false;
    int m = 1, n = 1, jobs = env_jobs();
    std::optional<double> numeric;

    auto* roots = app.add_subcommand("roots", "characteristic roots of a highest weight");
    roots->add_option("--weight", weight)->required();
    roots->add_option("--variant", variant)->check(CLI::IsMember({"adjoint", "dual"}));

    auto* branch = app.add_subcommand("branch", "gl(m|n) -> gl(m|n-1) branchings and index sets");
    branch->add_option("--weight", weight)->required();
    branch->add_option("--lower", lower);

    auto* wig = app.add_subcommand("wigner", "squared reduced Wigner coefficients");
    wig->add_option("--weight", weight)->required();
    wig->add_option("--lower", lower)->required();
    wig->add_option("--kind", kind)->check(CLI::IsMember({"lower", "raise"}));
    wig->add_flag("--coupled", coupled, "omega_kr table plus mu_r");
    wig->add_option("--form", form)->check(CLI::IsMember({"root_product", "qnumber_phase", "both"}));
    wig->add_flag("--csv", csv, "CSV instead of JSON");

    auto* inv = app.add_subcommand("invariants", "eigenvalues of v, v~, C1, C1~");
    inv->add_option("--weight", weight)->required();

    auto* ver = app.add_subcommand("verify", "oracle verification suites");
    ver->add_option("--m", m)->required()->check(CLI::Range(1, 8));
    ver->add_option("--n", n)->required()->check(CLI::Range(1, 8));
    ver->add_option("--suite", suite)->check(CLI::IsMember({"qybe", "coproduct", "charid", "projectors", "wigner", "coupled", "invariants", "all"}));
    ver->add_option("--numeric", numeric, "evaluate the R-matrix suites at this q instead of exactly");
    ver->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    json out;
    int status = 0;
    std::string text;
    try {
        if (csv && (form == "both" || coupled)) throw Usage("--csv takes a single table: drop --form both / --coupled");
        if (*roots) {
            out = roots_cmd(dominant_weight(weight), variant);
        } else if (*branch) {
            out = branch_cmd(dominant_weight(weight), lower);
        } else if (*wig) {
            const BranchingData b = index_sets(dominant_weight(weight), parse_weight(lower));
            const Kind k = parse_kind(kind);
            if (csv) {
                text = io::to_csv(omega(b, k, form == "qnumber_phase" ? Form::qnumber_phase : Form::root_product));
            } else if (coupled) {
                out = json{{"coupled", io::tables_json([&](Form f) { return omega_coupled_table(b, k, f); }, form)},
                           {"mu", io::tables_json([&](Form f) { return mu_table(b, k, f); }, form)}};
            } else {
                out = io::tables_json([&](Form f) { return omega(b, k, f); }, form);
            }
        } else if (*inv) {
            const Weight L = dominant_weight(weight);
            out = json{{"weight", to_string(L)},
                       {"v", io::to_json(chi_v(L, false))},
                       {"v_tilde", io::to_json(chi_v(L, true))},
                       {"C1", io::to_json(chi_C1(L, false))},
                       {"C1_tilde", io::to_json(chi_C1(L, true))}};
        } else if (*ver) {
            VerifyOptions opt;
            opt.numeric = numeric;
            opt.jobs = jobs;
            const Signature sig{m, n};
            bool ok = true;
            out = verify_json(sig, suite, run_verify(sig, {suite}, opt), ok);
            status = ok ? 0 : 1;
        }
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) {
            std::cerr << "usage error: " << e.what() << "\n";
            out = io::error_json(e);
            status = 2;
        } else {
            out = io::error_json(e);
            status = 1;
        }
    }

    if (text.empty()) text = out.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return status;
}
