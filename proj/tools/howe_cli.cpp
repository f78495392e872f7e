// Command-line driver: runs verification jobs and writes JSON/Markdown reports.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "howe/dual_pairs.hpp"
#include "howe/stringy.hpp"
#include "howe/verify.hpp"

namespace fs = std::filesystem;
using namespace howe;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected a rational a/b, got '" + text + "'");
    }
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, sep);)
        if (auto t = trim(item); !t.empty()) out.push_back(t);
    return out;
}

/// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::map<std::string, std::string> kv;
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

/// Grid from `points = l m; l m; ...` or the product of `lambda` and `mu` lists.
std::vector<std::pair<Rational, Rational>> grid_from(const std::map<std::string, std::string>& kv,
                                                     const std::string& source) {
    std::vector<std::pair<Rational, Rational>> grid;
    if (auto it = kv.find("points"); it != kv.end()) {
        for (const auto& p : split(it->second, ';')) {
            auto xy = split(p, ' ');
            if (xy.size() != 2) throw UsageError(source + ": point '" + p + "' needs two values");
            grid.emplace_back(parse_rational("points", xy[0]), parse_rational("points", xy[1]));
        }
    }
    auto l = kv.find("lambda"), m = kv.find("mu");
    if (l != kv.end() || m != kv.end()) {
        if (l == kv.end() || m == kv.end()) throw UsageError(source + ": lambda and mu must be given together");
        for (const auto& a : split(l->second, ','))
            for (const auto& b : split(m->second, ','))
                grid.emplace_back(parse_rational("lambda", a), parse_rational("mu", b));
    }
    return grid;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

int emit(const std::vector<JobResult>& results, const std::string& out_dir, bool verbose) {
    for (const auto& r : results) {
        std::cout << std::left << std::setw(9) << status_name(r.status()) << r.id << "\n";
        if (verbose)
            for (const auto& c : r.checks) std::cout << "  " << c.name << ": " << c.measured << "\n";
    }
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "report.json", report_json(results));
        write_file(fs::path(out_dir) / "report.md", report_markdown(results));
        for (const auto& r : results)
            for (const auto& [name, text] : r.artifacts) write_file(fs::path(out_dir) / name, text);
    }
    auto diff = report_diff(results);
    if (diff.empty()) return 0;
    std::cerr << diff;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of super Howe duality computations"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir, config_path;
    long window = 0;
    unsigned jobs = 1;
    app.add_option("--out", out_dir, "Directory for report.json, report.md and tables");
    app.add_option("--window", window, "Semi-infinite truncation M (default 12)")->check(CLI::Range(4L, 200L));
    app.add_option("--jobs", jobs, "Worker threads for independent jobs")->check(CLI::Range(1u, 256u));
    app.add_option("--config", config_path, "Key-value file presetting window, jobs and the table grid")
        ->check(CLI::ExistingFile);

    // raw option values; rationals are parsed after CLI11 is done
    int n = 1, m = 0, k = 0, N = 0, d = 0, imax = 6, r = 1, s = 0;
    std::string coords = "xieta", f, g, expect, hbar = "1", theta_rule = "balanced", algebra = "o", row, lambda, mu,
                stat, construction, grid_path;
    bool odd = false;

    auto* bracket = app.add_subcommand("bracket", "Evaluate a Poisson bracket {f, g} in po(2n|m)");
    bracket->add_option("--n", n, "Even pairs")->check(CLI::Range(0, 6));
    bracket->add_option("--m", m, "Odd generators")->check(CLI::Range(0, 12));
    bracket->add_option("--coords", coords)->check(CLI::IsMember({"theta", "xieta"}));
    bracket->add_option("--f", f)->required();
    bracket->add_option("--g", g)->required();
    bracket->add_option("--expect", expect, "Expected result (exit 1 on mismatch)");

    auto* quant = app.add_subcommand("quantize", "QP-quantize f on the Fock space");
    quant->add_option("--n", n)->check(CLI::Range(0, 6));
    quant->add_option("--m", m)->check(CLI::Range(0, 12));
    quant->add_option("--f", f)->required();
    quant->add_option("--hbar", hbar);
    quant->add_option("--theta-rule", theta_rule)->check(CLI::IsMember({"balanced", "printed"}));
    quant->add_option("--expect", expect, "Expected operator text (exit 1 on mismatch)");

    auto* spinor = app.add_subcommand("spinor", "Vacuum highest weight of the spinor representation");
    spinor->add_option("--algebra", algebra)->check(CLI::IsMember({"o"}));
    spinor->add_option("--k", k)->required()->check(CLI::Range(1, 6));
    spinor->add_flag("--odd", odd, "o(2k+1) instead of o(2k)");

    auto* principal = app.add_subcommand("principal", "Vacuum weight of the principal sl(2)");
    principal->add_option("--N", N)->required()->check(CLI::Range(1, 8));

    auto* lefschetz = app.add_subcommand("lefschetz", "Primitive forms and the Lefschetz decomposition");
    lefschetz->add_option("--n", n)->required()->check(CLI::Range(1, 5));

    auto* harmonics = app.add_subcommand("harmonics", "Spherical harmonics and the harmonic decomposition");
    harmonics->add_option("--d", d)->required()->check(CLI::Range(1, 8));
    harmonics->add_option("--imax", imax)->check(CLI::Range(0, 10));

    auto* bern = app.add_subcommand("bernstein", "Closure of Bernstein's osp(1|2)");
    bern->add_option("--n", n)->required()->check(CLI::Range(1, 3));
    bern->add_option("--hbar", hbar);

    auto* hk = app.add_subcommand("hyperkahler", "Hyper-Kahler sl(2) closures");
    hk->add_option("--n", n)->required()->check(CLI::Range(1, 1));

    auto* dual = app.add_subcommand("dualpair", "Mutual and double centralizer certificate");
    dual->add_option("--row", row)->required()->check(CLI::IsMember(dual_pair_row_ids()));

    auto* serg = app.add_subcommand("sergeev", "Sergeev's representation T_lambda of as");
    serg->add_option("--lambda", lambda)->required();

    auto* rho = app.add_subcommand("rho", "rho on V1 (x) Lambda(n)");
    rho->add_option("--r", r)->required()->check(CLI::Range(0, 3));
    rho->add_option("--s", s)->required()->check(CLI::Range(0, 3));
    rho->add_option("--n", n)->required()->check(CLI::Range(1, 3));

    auto* vir = app.add_subcommand("vir-weights", "(c, h) of a Fock realization of vir");
    vir->add_option("--lambda", lambda)->required();
    vir->add_option("--mu", mu)->required();
    vir->add_option("--stat", stat)->required()->check(CLI::IsMember({"fermi", "bose"}));
    vir->add_option("--construction", construction)->required()->check(CLI::IsMember({"half", "doubled"}));

    auto* table = app.add_subcommand("table43", "n = 0 column of the central charge table");
    table->add_option("--grid", grid_path, "Key-value grid file (lambda, mu lists or points)")->check(CLI::ExistingFile);

    auto* all = app.add_subcommand("verify-all", "Run every verification job");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        VerifyOptions opt;
        if (!config_path.empty()) {
            auto kv = read_config(config_path);
            if (auto it = kv.find("window"); it != kv.end() && window == 0) window = std::stol(it->second);
            if (auto it = kv.find("jobs"); it != kv.end() && jobs == 1) jobs = static_cast<unsigned>(std::stoul(it->second));
            opt.table_grid = grid_from(kv, config_path);
        }
        if (window == 0) window = 12;
        opt.window = window;

        std::vector<VerificationJob> todo;
        if (*bracket) todo.push_back(bracket_job(n, m, coords == "theta", f, g, expect));
        else if (*quant) todo.push_back(quantize_job(n, m, f, parse_rational("--hbar", hbar), theta_rule == "printed", expect));
        else if (*spinor) {
            if (!odd && k < 2) throw UsageError("spinor: o(2k) needs k >= 2");
            todo.push_back(spinor_job(k, odd));
        } else if (*principal) todo.push_back(principal_job(N));
        else if (*lefschetz) todo.push_back(lefschetz_job(n));
        else if (*harmonics) todo.push_back(harmonics_job(d, imax));
        else if (*bern) todo.push_back(bernstein_job(n, parse_rational("--hbar", hbar)));
        else if (*hk) todo.push_back(hyperkahler_job(n));
        else if (*dual) todo.push_back(dualpair_job(row));
        else if (*serg) todo.push_back(sergeev_job(parse_rational("--lambda", lambda)));
        else if (*rho) {
            if (r + s == 0) throw UsageError("rho: V1 = (r|s) must be nonzero");
            todo.push_back(rho_job(r, s, n));
        } else if (*vir)
            todo.push_back(vir_weights_job(parse_rational("--lambda", lambda), parse_rational("--mu", mu),
                                           stat == "fermi", construction == "doubled", window));
        else if (*table) {
            auto grid = opt.table_grid;
            if (!grid_path.empty()) grid = grid_from(read_config(grid_path), grid_path);
            if (grid.empty()) grid = table_grid();
            todo.push_back(table43_job(grid, window));
        } else if (*all)
            todo = verification_jobs(opt);

        return emit(run_jobs(todo, jobs), out_dir, !*all);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
