#include "genergy/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "genergy/charpoly.hpp"
#include "genergy/closedform.hpp"
#include "genergy/errors.hpp"
#include "genergy/parallel.hpp"
#include "genergy/rootisolation.hpp"

namespace genergy::harness {

using nlohmann::json;

std::string format_energy(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

FamilySpec parse_family(const std::string& family, int n, int l, int a, int b) {
    if (family == "path") return PathSpec{n};
    if (family == "cycle") return CycleSpec{n};
    if (family == "tadpole") return TadpoleSpec{n, l};
    if (family == "p66") return P66Spec{n};
    if (family == "r") return RSpec{a, b};
    throw ParameterError("unknown family '" + family +
                         "' (expected path|cycle|tadpole|p66|r)");
}

std::string edge_list_compact(const std::vector<Edge>& edges) {
    std::ostringstream os;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ' ';
        os << edges[i].first << '-' << edges[i].second;
    }
    return os.str();
}

// ---- scan -------------------------------------------------------------------

ScanResult cmd_scan(int max_sum, int jobs, int cap) {
    if (max_sum < 20) throw ParameterError("scan requires max_sum >= 20");
    if (max_sum > cap)
        throw CapacityError("scan capped at max_sum = " + std::to_string(cap) + ", got " +
                            std::to_string(max_sum));
    std::vector<std::pair<long, long>> pairs;  // (a, b), a <= b
    for (long a = 10; 2 * a <= max_sum; a += 4)
        for (long b = a; a + b <= max_sum; b += 4) pairs.push_back({a, b});
    ScanResult out;
    out.records.resize(pairs.size());
    // cache P66 energies by n (several pairs share a + b)
    std::map<long, double> p66_energy;
    std::mutex cache_mutex;
    auto p66_for = [&](long n) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = p66_energy.find(n);
            if (it != p66_energy.end()) return it->second;
        }
        double e = energy_eigen(phi_p66_poly(static_cast<int>(n))).value;
        std::lock_guard<std::mutex> lock(cache_mutex);
        p66_energy[n] = e;
        return e;
    };
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        auto [a, b] = pairs[i];
        long n = a + b, t = a;
        IntPoly p66 = phi_p66_poly(static_cast<int>(n));
        IntPoly pr = phi_r_poly(static_cast<int>(b), static_cast<int>(a));
        ComparisonRecord rec;
        rec.n = n;
        rec.t = t;
        rec.e_p66 = p66_for(n);
        rec.e_r = energy_eigen(pr).value;
        rec.difference = rec.e_p66 - rec.e_r;
        double cross = energy_difference(p66, pr);
        rec.methods_agree = std::abs(rec.difference - cross) < 1e-6;
        out.records[i] = rec;
    });
    std::sort(out.records.begin(), out.records.end(),
              [](const ComparisonRecord& x, const ComparisonRecord& y) {
                  return std::tie(x.n, x.t) < std::tie(y.n, y.t);
              });
    for (const auto& r : out.records) {
        if (r.difference <= 0) out.all_positive = false;
        if (!r.methods_agree) out.all_agree = false;
    }
    return out;
}

// ---- sign grid ----------------------------------------------------------------

namespace {

std::vector<long> default_t_list() { return {10, 14, 18, 22}; }
std::vector<long> default_n_list() {
    std::vector<long> out;
    for (long n = 20; n <= 60; n += 4) out.push_back(n);
    return out;
}

}  // namespace

SignGridReport cmd_signgrid(const std::string& quantity, std::vector<long> t_list,
                            std::vector<long> n_list, unsigned digits, int grid_density,
                            int jobs) {
    if (quantity != "K" && quantity != "f" && quantity != "f10" && quantity != "chain")
        throw ParameterError("signgrid quantity must be one of K|f|f10|chain, got '" + quantity +
                             "'");
    if (t_list.empty()) t_list = default_t_list();
    if (n_list.empty()) n_list = default_n_list();
    std::sort(t_list.begin(), t_list.end());
    for (long t : t_list)
        if (t < 10 || t % 4 != 2)
            throw ParameterError("t must be >= 10 and = 2 (mod 4), got " + std::to_string(t));
    for (long n : n_list)
        if (n % 4 != 0) throw ParameterError("n must be = 0 (mod 4), got " + std::to_string(n));

    std::vector<Real> grid = default_grid(digits, grid_density);
    SignGridReport report;
    report.quantity = quantity;
    std::vector<std::vector<SignGridViolation>> found(grid.size());
    std::atomic<long> points{0};

    parallel_for(grid.size(), jobs, [&](std::size_t gi) {
        const Real& x = grid[gi];
        double xd = x.convert_to<double>();
        auto add = [&](long t, long n, const Real& v) {
            found[gi].push_back({quantity, t, n, xd, v.convert_to<double>()});
        };
        if (quantity == "f10") {
            Real v = f10_explicit(x);
            ++points;
            if (!(v < 0)) add(10, 0, v);
            return;
        }
        if (quantity == "f") {
            ClosedFormContext ctx(x, std::nullopt, digits);
            Real prev(0L, digits);
            bool have_prev = false;
            for (long t : t_list) {
                Real v = f_value(t, ctx);
                ++points;
                if (!(v < 0)) add(t, 0, v);
                // Claim-1 monotonicity between consecutive listed t values
                if (have_prev && !(v < prev)) add(t, -1, v - prev);
                prev = v;
                have_prev = true;
            }
            return;
        }
        for (long t : t_list) {
            ClosedFormContext ctx(x, t, digits);
            Real ft(0, digits), f10(0, digits);
            if (quantity == "chain") {
                ft = f_value(t, ctx);
                f10 = f_value(10, ctx);
            }
            for (long n : n_list) {
                if (n < 2 * t) continue;
                Real k = k_value(n, t, ctx);
                ++points;
                if (quantity == "K") {
                    if (!(k < 0)) add(t, n, k);
                } else {
                    // chain: K <= f(t,.) <= f(10,.) < 0. The first two hold
                    // with equality at n = 2t resp. t = 10, so allow rounding
                    // slack relative to the magnitudes involved.
                    Real slack = (abs(k) + abs(ft) + abs(f10)) *
                                 pow(Real(10, digits), -static_cast<int>(digits) + 30);
                    if (!(k <= ft + slack)) add(t, n, k - ft);
                    if (!(ft <= f10 + slack)) add(t, n, ft - f10);
                    if (!(f10 < 0)) add(t, n, f10);
                }
            }
        }
    });
    for (auto& v : found)
        for (auto& viol : v) report.violations.push_back(std::move(viol));
    report.points_evaluated = points.load();
    return report;
}

// ---- extremal -----------------------------------------------------------------

ExtremalReport cmd_extremal(int n, bool allow_large, int jobs, int default_cap) {
    if (n < 12) throw ParameterError("extremal check requires n >= 12 (Theorem 3 domain)");
    int cap = allow_large ? 14 : default_cap;
    if (n > cap)
        throw CapacityError("extremal enumeration capped at n = " + std::to_string(cap) +
                            (allow_large ? "" : " (use --allow-large for n = 14)"));
    std::vector<Graph> classes = enumerate_bipartite_bicyclic(n, cap);
    ExtremalReport report;
    report.n = n;
    report.class_count = static_cast<long>(classes.size());

    std::vector<double> energy(classes.size());
    parallel_for(classes.size(), jobs, [&](std::size_t i) {
        energy[i] = energy_eigen(charpoly_direct(classes[i])).value;
    });
    std::vector<std::size_t> order(classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (energy[a] != energy[b]) return energy[a] > energy[b];
        return a < b;  // canonical-key order tie-break (classes are key-sorted)
    });

    std::string p66_key = canonical_key(build(P66Spec{n}));
    for (std::size_t r = 0; r < order.size() && r < 10; ++r) {
        const Graph& g = classes[order[r]];
        ExtremalRow row;
        row.rank = static_cast<int>(r + 1);
        row.energy = energy[order[r]];
        row.canonical = edge_list_compact(canonical_form(g));
        row.is_p66 = canonical_key(g) == p66_key;
        report.top.push_back(std::move(row));
    }
    report.winner_is_p66 = !report.top.empty() && report.top[0].is_p66;
    if (order.size() >= 2) report.winner_margin = energy[order[0]] - energy[order[1]];
    return report;
}

// ---- verify -------------------------------------------------------------------

namespace {

struct CheckRunner {
    VerifyReport& report;
    void operator()(const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
    }
};

// family corpus for polynomial/energy invariants
std::vector<FamilySpec> family_corpus(int max_n, bool skip_r_above = false, int r_cap = 1000) {
    std::vector<FamilySpec> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(PathSpec{n});
    for (int n = 3; n <= max_n; ++n) out.push_back(CycleSpec{n});
    for (int n = 6; n <= max_n; ++n) out.push_back(TadpoleSpec{n, 6});
    for (int n = 12; n <= max_n; ++n) out.push_back(P66Spec{n});
    for (int a = 3; 2 * a <= max_n; ++a)
        for (int b = a; a + b <= max_n; ++b)
            if (!skip_r_above || a + b <= r_cap) out.push_back(RSpec{a, b});
    return out;
}

double rel_gap(const Real& a, const Real& b) {
    Real scale = abs(a) + abs(b);
    if (scale == 0) return 0.0;
    return (abs(a - b) / scale).convert_to<double>();
}

}  // namespace

VerifyReport cmd_verify(unsigned digits, int grid_density, int jobs) {
    VerifyReport report;
    CheckRunner check{report};

    // --- graphs: family predicates -------------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        for (int n = 12; n <= 20; ++n) {
            if (!is_bipartite(build(P66Spec{n}))) {
                ok = false;
                detail << "P66(" << n << ") not bipartite; ";
            }
            if (!is_bicyclic(build(P66Spec{n}))) {
                ok = false;
                detail << "P66(" << n << ") not bicyclic; ";
            }
        }
        for (int a = 3; a <= 8; ++a)
            for (int b = a; b <= 8; ++b) {
                bool expect = (a % 2 == 0) && (b % 2 == 0);
                if (is_bipartite(build(RSpec{a, b})) != expect) {
                    ok = false;
                    detail << "R(" << a << "," << b << ") bipartite != " << expect << "; ";
                }
            }
        check("graphs.family_predicates", ok, detail.str());
    }

    // --- graphs: enumeration determinism and dedup ----------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        for (int n = 5; n <= 9; ++n) {
            auto a = enumerate_bipartite_bicyclic(n);
            auto b = enumerate_bipartite_bicyclic(n, 14, /*shuffle_seed=*/0xfeedface + n);
            std::set<std::string> ka, kb;
            for (const auto& g : a) ka.insert(canonical_key(g));
            for (const auto& g : b) kb.insert(canonical_key(g));
            if (ka.size() != a.size()) {
                ok = false;
                detail << "n=" << n << " duplicate canonical forms; ";
            }
            if (ka != kb) {
                ok = false;
                detail << "n=" << n << " shuffle changed the class set; ";
            }
            for (const auto& g : a)
                if (!is_bipartite(g) || !is_bicyclic(g)) {
                    ok = false;
                    detail << "n=" << n << " emitted a non-(bipartite bicyclic) graph; ";
                    break;
                }
        }
        // P66(n) must appear at n >= 12
        auto classes12 = enumerate_bipartite_bicyclic(12);
        std::string key12 = canonical_key(build(P66Spec{12}));
        bool found = false;
        for (const auto& g : classes12) found = found || canonical_key(g) == key12;
        if (!found) {
            ok = false;
            detail << "P66(12) missing from enumeration; ";
        }
        check("graphs.enumeration_dedup_determinism", ok, detail.str());
    }

    // --- polynomial: four-route equality --------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        auto corpus = family_corpus(30);
        std::vector<std::string> failures(corpus.size());
        parallel_for(corpus.size(), jobs, [&](std::size_t i) {
            const FamilySpec& spec = corpus[i];
            Graph g = build(spec);
            IntPoly direct = charpoly_direct(g);
            IntPoly recur = charpoly_by_recursion(spec);
            IntPoly edgey = g.num_edges() > 0 ? edge_deletion_recursion(g, g.edges().front())
                                              : direct;
            IntPoly comp = component_product(g);
            if (!(direct == recur && direct == edgey && direct == comp)) {
                std::ostringstream os;
                os << family_name(spec) << " n=" << g.num_vertices() << " route mismatch; ";
                failures[i] = os.str();
            }
        });
        for (const auto& f : failures)
            if (!f.empty()) {
                ok = false;
                detail << f;
            }
        for (int n = 5; n <= 10; ++n) {
            for (const Graph& g : enumerate_bipartite_bicyclic(n)) {
                IntPoly direct = charpoly_direct(g);
                if (direct != edge_deletion_recursion(g, g.edges().front()) ||
                    direct != component_product(g)) {
                    ok = false;
                    detail << "enumerated n=" << n << " route mismatch; ";
                }
            }
        }
        check("polynomial.four_route_equality", ok, detail.str());
    }

    // --- polynomial: bipartite coefficient structure ----------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        std::vector<IntPoly> polys;
        for (const auto& spec : family_corpus(12)) {
            Graph g = build(spec);
            if (!is_bipartite(g)) continue;
            polys.push_back(charpoly_by_recursion(spec));
        }
        for (int n = 5; n <= 10; ++n)
            for (const Graph& g : enumerate_bipartite_bicyclic(n))
                polys.push_back(charpoly_direct(g));
        for (const auto& p : polys) {
            int n = p.degree();
            for (int i = 0; i <= n; ++i) {
                Int ai = p.coeff_from_top(i);
                if (i % 2 == 1 && ai != 0) {
                    ok = false;
                    detail << "odd coefficient a_" << i << " nonzero; ";
                }
                if (i % 2 == 0) {
                    Int b2k = (i / 2) % 2 == 0 ? ai : -ai;  // (-1)^k a_2k
                    if (b2k < 0) {
                        ok = false;
                        detail << "b_" << i << " negative; ";
                    }
                }
            }
        }
        check("polynomial.bipartite_coefficients", ok, detail.str());
    }

    // --- polynomial: tree matching identity -------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        for (int n = 2; n <= 10; ++n) {
            for (const Graph& t : enumerate_trees(n)) {
                IntPoly p = charpoly_direct(t);
                for (int k = 0; 2 * k <= n; ++k) {
                    Int expect = (k % 2 == 0 ? Int(1) : Int(-1)) * matching_count(t, k);
                    if (p.coeff_from_top(2 * k) != expect) {
                        ok = false;
                        detail << "tree n=" << n << " k=" << k << " mismatch; ";
                    }
                }
            }
        }
        check("polynomial.tree_matching_identity", ok, detail.str());
    }

    // --- polynomial: trace coefficients -----------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& spec : family_corpus(20)) {
            Graph g = build(spec);
            IntPoly p = charpoly_by_recursion(spec);
            if (p.coeff_from_top(0) != 1 || p.coeff_from_top(1) != 0 ||
                p.coeff_from_top(2) != -Int(g.num_edges())) {
                ok = false;
                detail << family_name(spec) << " trace coefficients wrong; ";
            }
        }
        check("polynomial.trace_coefficients", ok, detail.str());
    }

    // --- closedform: Z identities on the grid ------------------------------------
    std::vector<Real> grid = default_grid(digits, grid_density);
    {
        bool ok = true;
        std::ostringstream detail;
        Real tol = pow(Real(10, digits), -static_cast<int>(digits) + 10);
        for (const Real& x : grid) {
            ClosedFormContext ctx(x, std::nullopt, digits);
            if (abs(ctx.z1() * ctx.z2() + 1) > tol || abs(ctx.z1() + ctx.z2() - ctx.x()) > tol) {
                ok = false;
                detail << "Z identity fails at x=" << x.convert_to<double>() << "; ";
            }
            bool pos = x > 0;
            if (pos && !(ctx.z1() > 1 && ctx.z2() > -1 && ctx.z2() < 0)) ok = false;
            if (!pos && !(ctx.z1() > 0 && ctx.z1() < 1 && ctx.z2() < -1)) ok = false;
        }
        check("closedform.z_identities", ok, detail.str());
    }

    // --- closedform: A positivity and the product identity -----------------------
    {
        bool ok = true;
        std::ostringstream detail;
        double worst = 0;
        for (const Real& x : grid) {
            ClosedFormContext ctx(x, std::nullopt, digits);
            if (!(ctx.a1() > 0) || !(ctx.a2() > 0)) {
                ok = false;
                detail << "A_j <= 0 at x=" << x.convert_to<double>() << "; ";
            }
            Real x2 = x * x;
            Real obs = pow(pow(x2, 3) + 8 * x2 * x2 + 19 * x2 + 16, 2) * pow(x2 + 1, 4) / (x2 + 4);
            worst = std::max(worst, rel_gap(ctx.a1() * ctx.a2(), obs));
        }
        if (worst > 1e-40) {
            ok = false;
            detail << "A1*A2 identity worst rel gap " << worst << "; ";
        }
        check("closedform.observation_identity", ok, detail.str());
    }

    // --- closedform: Lemma 4/5/6 consistency against exact polynomials ------------
    {
        bool ok = true;
        std::ostringstream detail;
        double worst = 0;
        std::vector<double> worst_per(grid.size(), 0.0);
        parallel_for(grid.size(), jobs, [&](std::size_t gi) {
            const Real& x = grid[gi];
            ClosedFormContext ctx(x, std::nullopt, digits);
            double w = 0;
            for (int n = 4; n <= 40; ++n) {
                Real cf = phi_path_ix(n, ctx);
                Real ex = eval_at_ix(phi_path_poly(n), x).first;
                w = std::max(w, rel_gap(cf, ex));
                if (n % 2 == 0) {
                    cf = phi_cycle_ix(n, ctx);
                    ex = eval_at_ix(phi_cycle_poly(n), x).first;
                    w = std::max(w, rel_gap(cf, ex));
                }
            }
            for (int n = 12; n <= 40; ++n) {
                Real cf = phi_p66_ix(n, ctx);
                Real ex = eval_at_ix(phi_p66_poly(n), x).first;
                w = std::max(w, rel_gap(cf, ex));
            }
            for (long t = 6; t <= 18; t += 4) {
                for (long n = (t + 3 + 3) / 4 * 4; n <= 40; n += 4) {
                    Real cf = phi_r_ix(static_cast<int>(n), t, ctx);
                    Real ex =
                        eval_at_ix(phi_r_poly(static_cast<int>(n - t), static_cast<int>(t)), x)
                            .first;
                    w = std::max(w, rel_gap(cf, ex));
                }
            }
            worst_per[gi] = w;
        });
        for (double w : worst_per) worst = std::max(worst, w);
        if (worst > 1e-30) {
            ok = false;
            detail << "closed form vs exact worst rel gap " << worst << "; ";
        }
        check("closedform.lemma456_consistency", ok, detail.str());
    }

    // --- closedform: f monotonicity and the K <= f <= f(10) < 0 chain -------------
    {
        SignGridReport k = cmd_signgrid("K", {}, {}, digits, grid_density, jobs);
        check("closedform.k_negative", k.pass(),
              k.pass() ? "" : std::to_string(k.violations.size()) + " violations");
        SignGridReport f = cmd_signgrid("f", {}, {}, digits, grid_density, jobs);
        check("closedform.f_negative_monotone", f.pass(),
              f.pass() ? "" : std::to_string(f.violations.size()) + " violations");
        SignGridReport chain = cmd_signgrid("chain", {}, {}, digits, grid_density, jobs);
        check("closedform.chain", chain.pass(),
              chain.pass() ? "" : std::to_string(chain.violations.size()) + " violations");
    }

    // --- closedform: log bounds (Lemma 1) ------------------------------------------
    {
        bool ok = true;
        for (double xv : {-0.9, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0, 3.0, 10.0, 1e4}) {
            Real X(xv, digits);
            Real lhs = X / (1 + X), mid = log(1 + X);
            if (!(lhs <= mid && mid <= X)) ok = false;
            if ((mid < 0) != (xv < 0)) ok = false;
        }
        check("closedform.log_bounds", ok);
    }

    // --- energy: cross-method agreement ---------------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        auto corpus = family_corpus(40);
        std::vector<double> gaps(corpus.size(), 0.0);
        parallel_for(corpus.size(), jobs, [&](std::size_t i) {
            IntPoly p = charpoly_by_recursion(corpus[i]);
            double a = energy_eigen(p).value;
            double b = energy_coulson_explicit(p).value;
            gaps[i] = std::abs(a - b);
        });
        double worst = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            worst = std::max(worst, gaps[i]);
            if (gaps[i] >= 1e-8) {
                ok = false;
                detail << family_name(corpus[i]) << " gap " << gaps[i] << "; ";
            }
        }
        std::ostringstream ds;
        ds << "worst gap " << worst << (detail.str().empty() ? "" : "; " + detail.str());
        check("energy.cross_method", ok, ds.str());
    }

    // --- energy: difference consistency ------------------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        IntPoly a = phi_p66_poly(16);
        IntPoly b = phi_r_poly(10, 6);
        IntPoly c = charpoly_direct(build(TadpoleSpec{16, 6}));
        double dab = energy_difference(a, b), dba = energy_difference(b, a);
        double dac = energy_difference(a, c), dbc = energy_difference(b, c);
        if (std::abs(dab + dba) > 2e-6) {
            ok = false;
            detail << "antisymmetry gap " << std::abs(dab + dba) << "; ";
        }
        if (std::abs(dac - (dab + dbc)) > 3e-6) {
            ok = false;
            detail << "additivity gap " << std::abs(dac - (dab + dbc)) << "; ";
        }
        if (energy_difference(a, a) != 0.0) {
            ok = false;
            detail << "identical-input shortcut failed; ";
        }
        check("energy.difference_consistency", ok, detail.str());
    }

    // --- energy: eigenvalue trace identities ---------------------------------------------
    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& spec : family_corpus(24)) {
            Graph g = build(spec);
            EnergyResult r = energy_eigen(charpoly_by_recursion(spec));
            double sum = 0, sq = 0, amax = 0;
            for (double ev : r.eigenvalues) {
                sum += ev;
                sq += ev * ev;
                amax = std::max(amax, std::abs(ev));
            }
            double sum_tol = r.error_bound + 1e-12;
            double sq_tol = 2 * amax * r.error_bound + 1e-10;
            if (std::abs(sum) > sum_tol || std::abs(sq - 2.0 * g.num_edges()) > sq_tol) {
                ok = false;
                detail << family_name(spec) << " n=" << g.num_vertices() << " trace gap; ";
            }
        }
        check("energy.trace_identities", ok, detail.str());
    }

    // --- energy: Theorem 2 base cases (both candidate readings) ---------------------------
    {
        double e_r1010 = energy_eigen(phi_r_poly(10, 10)).value;
        double e_p66_20 = energy_eigen(phi_p66_poly(20)).value;
        double e_p66_12 = energy_eigen(phi_p66_poly(12)).value;
        std::ostringstream detail;
        detail << "E(R_10,10)=" << format_energy(e_r1010) << " E(P66_20)=" << format_energy(e_p66_20)
               << " E(P66_12)=" << format_energy(e_p66_12)
               << " | E(R)-E(P66_20)=" << format_energy(e_r1010 - e_p66_20)
               << " E(R)-E(P66_12)=" << format_energy(e_r1010 - e_p66_12);
        check("energy.base_case", e_r1010 < e_p66_20, detail.str());
    }

    return report;
}

// ---- formatting ---------------------------------------------------------------

std::string comparison_csv(const std::vector<ComparisonRecord>& records) {
    std::ostringstream os;
    os << "n,t,E_p66,E_R,difference,methods_agree\n";
    for (const auto& r : records) {
        os << r.n << ',' << r.t << ',' << format_energy(r.e_p66) << ',' << format_energy(r.e_r)
           << ',' << format_energy(r.difference) << ',' << (r.methods_agree ? "true" : "false")
           << '\n';
    }
    return os.str();
}

std::string comparison_json(const std::vector<ComparisonRecord>& records) {
    json out;
    out["records"] = json::array();
    for (const auto& r : records) {
        out["records"].push_back({{"n", r.n},
                                  {"t", r.t},
                                  {"E_p66", r.e_p66},
                                  {"E_R", r.e_r},
                                  {"difference", r.difference},
                                  {"methods_agree", r.methods_agree}});
    }
    return out.dump(2) + "\n";
}

std::string signgrid_csv(const SignGridReport& report) {
    std::ostringstream os;
    os << "quantity,points_evaluated,violations\n";
    os << report.quantity << ',' << report.points_evaluated << ',' << report.violations.size()
       << '\n';
    if (!report.violations.empty()) {
        os << "quantity,t,n,x,value\n";
        for (const auto& v : report.violations)
            os << v.quantity << ',' << v.t << ',' << v.n << ',' << format_energy(v.x) << ','
               << format_energy(v.value) << '\n';
    }
    return os.str();
}

std::string signgrid_json(const SignGridReport& report) {
    json out;
    out["quantity"] = report.quantity;
    out["points_evaluated"] = report.points_evaluated;
    out["records"] = json::array();
    for (const auto& v : report.violations)
        out["records"].push_back(
            {{"quantity", v.quantity}, {"t", v.t}, {"n", v.n}, {"x", v.x}, {"value", v.value}});
    return out.dump(2) + "\n";
}

std::string extremal_csv(const ExtremalReport& report) {
    std::ostringstream os;
    os << "rank,energy,is_p66,canonical_edges\n";
    for (const auto& row : report.top)
        os << row.rank << ',' << format_energy(row.energy) << ',' << (row.is_p66 ? "true" : "false")
           << ',' << '"' << row.canonical << '"' << '\n';
    return os.str();
}

std::string extremal_json(const ExtremalReport& report) {
    json out;
    out["n"] = report.n;
    out["class_count"] = report.class_count;
    out["winner_is_p66"] = report.winner_is_p66;
    out["winner_margin"] = report.winner_margin;
    out["records"] = json::array();
    for (const auto& row : report.top)
        out["records"].push_back({{"rank", row.rank},
                                  {"energy", row.energy},
                                  {"is_p66", row.is_p66},
                                  {"canonical_edges", row.canonical}});
    return out.dump(2) + "\n";
}

std::string verify_csv(const VerifyReport& report) {
    std::ostringstream os;
    os << "check,pass,detail\n";
    for (const auto& c : report.checks) {
        std::string detail = c.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        os << c.name << ',' << (c.pass ? "pass" : "FAIL") << ',' << '"' << detail << '"' << '\n';
    }
    return os.str();
}

std::string verify_json(const VerifyReport& report) {
    json out;
    out["records"] = json::array();
    for (const auto& c : report.checks)
        out["records"].push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return out.dump(2) + "\n";
}

}  // namespace genergy::harness
