#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "genergy/charpoly.hpp"
#include "genergy/energy.hpp"
#include "genergy/errors.hpp"
#include "genergy/harness.hpp"

using namespace genergy;

namespace {

// exit codes: 0 ok, 1 mathematical violation, 2 usage/parameter error,
// 3 convergence failure
constexpr int kOk = 0, kViolation = 1, kUsage = 2, kConvergence = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct InputOpts {
    std::string family;
    int n = 0, l = 6, a = 0, b = 0;
    std::string file;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--family", in.family, "graph family: path|cycle|tadpole|p66|r");
    cmd->add_option("--n", in.n, "vertex count");
    cmd->add_option("--l", in.l, "tadpole cycle length (default 6)");
    cmd->add_option("--a", in.a, "first cycle length of r");
    cmd->add_option("--b", in.b, "second cycle length of r");
    cmd->add_option("--file", in.file, "edge-list file ('n m' header, then 'u v' lines)");
}

Graph input_graph(const InputOpts& in) {
    if (!in.file.empty()) return parse_edge_list(read_file(in.file));
    if (in.family.empty()) throw ParameterError("either --family or --file is required");
    return build(harness::parse_family(in.family, in.n, in.l, in.a, in.b));
}

// method: "recursion" | "direct" | "auto" (recursion for families, direct for files)
IntPoly input_charpoly(const InputOpts& in, const std::string& method) {
    if (method != "recursion" && method != "direct" && method != "auto")
        throw ParameterError("--method must be recursion or direct, got '" + method + "'");
    if (!in.file.empty()) {
        if (method == "recursion")
            throw ParameterError("--method recursion requires --family input");
        return charpoly_direct(parse_edge_list(read_file(in.file)));
    }
    if (in.family.empty()) throw ParameterError("either --family or --file is required");
    FamilySpec spec = harness::parse_family(in.family, in.n, in.l, in.a, in.b);
    if (method == "direct") return charpoly_direct(build(spec));
    return charpoly_by_recursion(spec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph spectral energy toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned precision_digits = 150;
    int grid_density = 60;
    int max_n = 13;
    int jobs = 0;
    bool json = false;
    app.add_option("--precision-digits", precision_digits, "closed-form working precision");
    app.add_option("--grid-density", grid_density, "sign-grid points per decade");
    app.add_option("--max-n", max_n, "extremal enumeration ceiling (<= 13 without --allow-large)");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)");
    app.add_flag("--json", json, "emit JSON instead of CSV");

    // charpoly
    auto* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
    InputOpts cp_in;
    std::string cp_method = "auto";
    add_input_flags(cmd_charpoly, cp_in);
    cmd_charpoly->add_option("--method", cp_method,
                             "recursion|direct (default: recursion for families, direct for files)");

    // energy
    auto* cmd_energy = app.add_subcommand("energy", "graph energy");
    InputOpts en_in;
    std::string en_method = "eigen";
    add_input_flags(cmd_energy, en_in);
    cmd_energy->add_option("--method", en_method, "eigen|coulson");

    // compare
    auto* cmd_compare = app.add_subcommand("compare", "E(P66_n) vs E(R_{n-t,t})");
    long cmp_n = 0, cmp_t = 0;
    cmd_compare->add_option("--n", cmp_n, "total order n")->required();
    cmd_compare->add_option("--t", cmp_t, "smaller cycle length t")->required();

    // scan
    auto* cmd_scan_app = app.add_subcommand("scan", "all valid (a,b) pairs with a+b <= max-sum");
    int scan_max_sum = 50;
    cmd_scan_app->add_option("--max-sum", scan_max_sum, "maximum a+b (default 50)");

    // signgrid
    auto* cmd_grid = app.add_subcommand("signgrid", "sign checks of K, f, f10, chain");
    std::string grid_quantity = "chain";
    std::vector<long> grid_t, grid_n;
    cmd_grid->add_option("--quantity", grid_quantity, "K|f|f10|chain");
    cmd_grid->add_option("--t-list", grid_t, "t values (default 10 14 18 22)");
    cmd_grid->add_option("--n-list", grid_n, "n values (default 20 24 ... 60)");

    // extremal
    auto* cmd_ext = app.add_subcommand("extremal", "maximal-energy bipartite bicyclic ranking");
    int ext_n = 12;
    bool allow_large = false;
    cmd_ext->add_option("--n", ext_n, "order (12..14)")->required();
    cmd_ext->add_flag("--allow-large", allow_large, "permit n = 14");

    // verify
    app.add_subcommand("verify", "run every module identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cmd_charpoly->parsed()) {
            std::cout << input_charpoly(cp_in, cp_method).to_text() << "\n";
            return kOk;
        }
        if (cmd_energy->parsed()) {
            IntPoly p = input_charpoly(en_in, "auto");
            EnergyResult r =
                en_method == "coulson" ? energy_coulson_explicit(p) : energy_eigen(p);
            std::cout << harness::format_energy(r.value) << "\n";
            return kOk;
        }
        if (cmd_compare->parsed()) {
            ComparisonRecord rec = compare_families(cmp_n, cmp_t);
            std::cout << (json ? harness::comparison_json({rec}) : harness::comparison_csv({rec}));
            if (rec.difference <= 0 || !rec.methods_agree) return kViolation;
            return kOk;
        }
        if (cmd_scan_app->parsed()) {
            harness::ScanResult res = harness::cmd_scan(scan_max_sum, jobs);
            std::cout << (json ? harness::comparison_json(res.records)
                               : harness::comparison_csv(res.records));
            if (!res.all_positive || !res.all_agree) return kViolation;
            return kOk;
        }
        if (cmd_grid->parsed()) {
            harness::SignGridReport rep = harness::cmd_signgrid(grid_quantity, grid_t, grid_n,
                                                                precision_digits, grid_density, jobs);
            std::cout << (json ? harness::signgrid_json(rep) : harness::signgrid_csv(rep));
            return rep.pass() ? kOk : kViolation;
        }
        if (cmd_ext->parsed()) {
            harness::ExtremalReport rep = harness::cmd_extremal(ext_n, allow_large, jobs, max_n);
            std::cout << (json ? harness::extremal_json(rep) : harness::extremal_csv(rep));
            return rep.winner_is_p66 ? kOk : kViolation;
        }
        // verify
        harness::VerifyReport rep = harness::cmd_verify(precision_digits, grid_density, jobs);
        std::cout << (json ? harness::verify_json(rep) : harness::verify_csv(rep));
        return rep.all_pass() ? kOk : kViolation;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << " (achieved " << e.achieved_bound
                  << ")\n";
        return kConvergence;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }
}
