#pragma once

#include <string>
#include <vector>

#include "genergy/energy.hpp"
#include "genergy/graph.hpp"

namespace genergy::harness {

// ---- scan -------------------------------------------------------------------

struct ScanResult {
    std::vector<ComparisonRecord> records;  // sorted by (n, t)
    bool all_positive = true;
    bool all_agree = true;
};

// One record per pair (a, b), a <= b, a, b >= 10, a = b = 2 (mod 4),
// a + b <= max_sum (t = a, n = a + b).
ScanResult cmd_scan(int max_sum, int jobs = 0, int cap = 100);

// ---- sign grid ----------------------------------------------------------------

struct SignGridViolation {
    std::string quantity;
    long t = 0, n = 0;  // 0 when not applicable
    double x = 0.0;
    double value = 0.0;
};

struct SignGridReport {
    std::string quantity;
    long points_evaluated = 0;
    std::vector<SignGridViolation> violations;
    bool pass() const { return violations.empty(); }
};

// quantity: "K" | "f" | "f10" | "chain". Empty lists pick the defaults
// t = {10,14,18,22}, n = {20,24,...,60}.
SignGridReport cmd_signgrid(const std::string& quantity, std::vector<long> t_list = {},
                            std::vector<long> n_list = {}, unsigned digits = 150,
                            int grid_density = 60, int jobs = 0);

// ---- extremal enumeration -------------------------------------------------------

struct ExtremalRow {
    int rank = 0;
    double energy = 0.0;
    std::string canonical;  // canonical edge list, "u-v u-v ..."
    bool is_p66 = false;
};

struct ExtremalReport {
    int n = 0;
    long class_count = 0;
    std::vector<ExtremalRow> top;  // up to 10, energy-descending
    bool winner_is_p66 = false;
    double winner_margin = 0.0;  // E(1st) - E(2nd)
};

ExtremalReport cmd_extremal(int n, bool allow_large = false, int jobs = 0, int default_cap = 13);

// ---- identity verification -------------------------------------------------------

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs every module invariant suite; see the README for the check list.
VerifyReport cmd_verify(unsigned digits = 150, int grid_density = 60, int jobs = 0);

// ---- formatting -----------------------------------------------------------------

// 12 significant digits, the CLI-wide energy format.
std::string format_energy(double v);

std::string comparison_csv(const std::vector<ComparisonRecord>& records);
std::string comparison_json(const std::vector<ComparisonRecord>& records);
std::string signgrid_csv(const SignGridReport& report);
std::string signgrid_json(const SignGridReport& report);
std::string extremal_csv(const ExtremalReport& report);
std::string extremal_json(const ExtremalReport& report);
std::string verify_csv(const VerifyReport& report);
std::string verify_json(const VerifyReport& report);

std::string edge_list_compact(const std::vector<Edge>& edges);

// Deterministic helper shared by the CLI and tests: graph from family flags.
FamilySpec parse_family(const std::string& family, int n, int l, int a, int b);

}  // namespace genergy::harness
