// Acceptance suite: one function per criterion, one PASS/FAIL line per check.
// Run as `acceptance <n>` for a single criterion or `acceptance all`.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "euleredit/editors.hpp"
#include "euleredit/experiments.hpp"
#include "euleredit/graph.hpp"
#include "euleredit/io.hpp"
#include "euleredit/oracle.hpp"
#include "euleredit/sampler.hpp"
#include "support.hpp"

using namespace euleredit;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    if (!ok) ++g_failures;
}

void note(const std::string& what) { std::cout << "[NOTE] " << what << "\n"; }

std::string fmt(double x) { return detail::fmt12(x); }

// ---------------------------------------------------------------------------
// 1. Exhaustive oracle equivalence over all 1024 graphs on 5 vertices.
// ---------------------------------------------------------------------------
void criterion_1() {
    const int n = 5;
    std::uint64_t graphs = 0;
    std::uint64_t lower_bound_violations = 0;
    std::uint64_t edit_mismatch = 0;
    std::uint64_t eulerize_defects = 0;
    std::uint64_t witnessed_connected = 0;
    std::uint64_t reduce_conservative = 0;
    std::uint64_t reduce_feasible = 0;

    for_each_graph(n, [&](const Graph& g) {
        ++graphs;
        const int lb = parity_lower_bound(g);
        for (EditMode mode : {EditMode::Edit, EditMode::Extend, EditMode::Reduce}) {
            const OracleResult exact = exact_edit_number(g, mode);
            if (exact.value && *exact.value < lb) ++lower_bound_violations;
            if (mode == EditMode::Reduce && exact.value) ++reduce_feasible;

            try {
                const auto [result, plan] = eulerize(g, mode);
                const bool sound = is_eulerian(result) &&
                                   testsupport::check_euler_circuit(result,
                                                                    euler_circuit(result).walk);
                if (!sound) ++eulerize_defects;
            } catch (const PlanningError&) {
                if (mode == EditMode::Reduce && exact.value) ++reduce_conservative;
            }

            if (mode == EditMode::Edit && is_connected(g)) {
                const EditPlan plan = plan_edit(g);
                const Graph modified = apply_plan(g, plan);
                bool witnessed = true;
                for (const auto& [u, v] : plan.pairing) {
                    if (common_neighbors(modified, u, v).empty()) witnessed = false;
                }
                if (witnessed) {
                    ++witnessed_connected;
                    if (!exact.value || plan.achieved() != *exact.value) ++edit_mismatch;
                    // On that event eulerize needs no repair and meets T/2.
                    const auto [result, full] = eulerize(g, EditMode::Edit);
                    if (full.repair_ops != 0 || full.achieved() != lb) ++edit_mismatch;
                }
            }
        }
    });
    check(graphs == 1024, "1: enumerated all 2^10 graphs on 5 vertices");
    check(lower_bound_violations == 0,
          "1a: parity lower bound <= exact edit number for every mode on every graph");
    check(edit_mismatch == 0,
          "1b: plan_edit achieved == exact N_edit on every connected, fully witnessed graph (" +
              std::to_string(witnessed_connected) + " graphs)");
    check(eulerize_defects == 0,
          "1c: every eulerize success is Eulerian and yields a checked circuit");
    note("1: reduce planner declined " + std::to_string(reduce_conservative) + " of " +
         std::to_string(reduce_feasible) +
         " oracle-reducible graphs (the triangle rule is deliberately conservative)");
}

// ---------------------------------------------------------------------------
// 2. Closed-form odd-degree probability vs enumeration and Monte Carlo.
// ---------------------------------------------------------------------------
void criterion_2() {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            const double diff =
                std::abs(exact_parity_stats(n, p, 1).joint - odd_degree_prob(n, p));
            worst = std::max(worst, diff);
        }
    }
    check(worst <= 1e-12,
          "2: enumeration matches the closed form to 1e-12 (worst |diff| = " + fmt(worst) + ")");

    const ExperimentReport mc = run_independence(4, 0.25, 1, 100000, Seed{20250}, 2);
    const double err = std::abs(mc.joint_hat - 0.4375);
    check(err <= 0.005, "2: Monte Carlo odd-fraction of vertex 0 at (n=4, p=0.25) within 0.005 "
                        "of 0.4375 (got " +
                            fmt(mc.joint_hat) + ")");
}

// ---------------------------------------------------------------------------
// 3. Moments of T at p = 1/2.
// ---------------------------------------------------------------------------
void criterion_3() {
    const std::vector<int> sizes{100, 200, 400};
    const std::uint64_t trials = 5000;
    const ExperimentReport q2 = run_moments(sizes, 0.5, 2, trials, Seed{333}, 2);
    const ExperimentReport q4 = run_moments(sizes, 0.5, 4, trials, Seed{333}, 2);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const MomentReport& m2 = q2.moments[i];
        const MomentReport& m4 = q4.moments[i];
        const int n = sizes[i];
        check(0.20 <= m2.ratio && m2.ratio <= 0.30,
              "3: q=2 ratio in [0.20, 0.30] at n=" + std::to_string(n) + " (got " +
                  fmt(m2.ratio) + ", truth 0.25)");
        check(0.13 <= m4.ratio && m4.ratio <= 0.25,
              "3: q=4 ratio in [0.13, 0.25] at n=" + std::to_string(n) + " (got " +
                  fmt(m4.ratio) + ", truth ~0.1875)");
        const double sd = std::sqrt(n / 4.0);  // exact at p = 1/2
        const double tol = 3.0 * sd / std::sqrt(static_cast<double>(trials));
        check(std::abs(m2.mu_hat - n / 2.0) <= tol,
              "3: mu_hat within 3 sd(T)/sqrt(trials) of n/2 at n=" + std::to_string(n) +
                  " (|" + fmt(m2.mu_hat) + " - " + fmt(n / 2.0) + "| <= " + fmt(tol) + ")");
    }
}

// ---------------------------------------------------------------------------
// 4. Concentration of all three achieved counts around n/4.
// ---------------------------------------------------------------------------
void criterion_4() {
    const ExperimentReport r = run_concentration(400, 0.5, 300, 0.1, Seed{444}, 2);
    note("4: strong window empty at n=400 (lower bound " + fmt(r.window->strong_lower) +
         " > 1); conclusion-level check at p=1/2, weak_ok=" +
         std::to_string(r.window->weak_ok ? 1 : 0));
    check(r.in_window_fraction >= 0.99,
          "4: >= 99% of trials have edit, ext, red within n/4 +- n^0.6 (got " +
              fmt(r.in_window_fraction) + ")");
    check(r.tight_edit_fraction >= 0.99,
          "4: >= 99% of trials achieve edit == T/2 with repair_ops == 0 (got " +
              fmt(r.tight_edit_fraction) + ")");
    check(r.coupling_ok, "4: mean T couples to n * odd_degree_prob (mean " + fmt(r.mean_odd) +
                             ", expected " + fmt(r.expected_odd) + ")");
}

// ---------------------------------------------------------------------------
// 5. Event frequencies.
// ---------------------------------------------------------------------------
void criterion_5() {
    const ExperimentReport r = run_events(200, 0.5, 500, 0.1, Seed{555}, false, 2);
    check(r.freq_con == 1.0, "5: freq(E_con) == 1.0 (got " + fmt(r.freq_con) + ")");
    check(r.freq_good_h == 1.0, "5: freq(E_good(H)) == 1.0 (got " + fmt(r.freq_good_h) + ")");
    check(r.freq_good_hc == 1.0,
          "5: freq(E_good(H^c)) == 1.0 (got " + fmt(r.freq_good_hc) + ")");
    check(r.freq_odd >= 0.99,
          "5: freq(E_odd, eps=0.1) >= 0.99 (got " + fmt(r.freq_odd) + ")");

    const ExperimentReport cl = run_events(40, 0.5, 100, 0.1, Seed{556}, true, 2);
    check(cl.freq_cliq == 1.0, "5: freq(E_cliq on H and H^c) == 1.0 at n=40 (got " +
                                   fmt(cl.freq_cliq) + ")");
    check(cl.cliq_trivial && std::abs(cl.cliq_bound - 46.65) < 0.1,
          "5: clique bound 2 sqrt(40) ln 40 = " + fmt(cl.cliq_bound) +
              " exceeds n=40, flagged trivially satisfied in the report");
}

// ---------------------------------------------------------------------------
// 6. Near-independence of the parity indicators.
// ---------------------------------------------------------------------------
void criterion_6() {
    const ExperimentReport big = run_independence(60, 0.5, 2, 100000, Seed{666}, 2);
    check(big.deviation <= 0.01, "6: |joint - product| <= 0.01 at (n=60, p=0.5, b=2) (got " +
                                     fmt(big.deviation) + ")");

    const ExperimentReport small = run_independence(5, 0.3, 2, 100000, Seed{667}, 2);
    const double gap = std::abs(small.deviation - *small.exact_deviation);
    check(gap <= 3.0 * small.stderr_est,
          "6: Monte Carlo deviation within 3 standard errors of the enumerated truth "
          "(|" + fmt(small.deviation) + " - " + fmt(*small.exact_deviation) + "| <= " +
              fmt(3.0 * small.stderr_est) + ")");
}

// ---------------------------------------------------------------------------
// 7. Feasibility edge cases.
// ---------------------------------------------------------------------------
void criterion_7() {
    bool not_extendable = false;
    try {
        plan_extend(Graph::complete(4));
    } catch (const NotExtendableError&) {
        not_extendable = true;
    }
    check(not_extendable, "7: plan_extend(K4) raises NotExtendable");

    bool not_reducible = false;
    try {
        plan_reduce(Graph(3, {Edge(0, 1), Edge(1, 2)}));
    } catch (const NotReducibleError&) {
        not_reducible = true;
    }
    check(not_reducible, "7: plan_reduce(path 0-1-2) raises NotReducible");

    {
        const Graph tri_iso(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
        const auto [result, plan] = eulerize(tri_iso, EditMode::Edit);
        const OracleResult exact = exact_edit_number(tri_iso, EditMode::Edit);
        check(is_eulerian(result), "7: eulerize(triangle + isolated vertex, Edit) is Eulerian");
        check(exact.value && plan.achieved() == *exact.value,
              "7: eulerize(triangle + isolated vertex, Edit) achieves the oracle-exact value (" +
                  std::to_string(plan.achieved()) + " == " + std::to_string(*exact.value) + ")");
        check(plan.achieved() == 2,
              "7: eulerize(triangle + isolated vertex, Edit) achieves the stated value 2");
        if (plan.achieved() != 2) {
            note("7: the stated value 2 is unattainable: vertex 3 needs two incident additions "
                 "for even positive degree, and with exactly two edits both land on vertex 3, "
                 "leaving its two neighbors odd. The exhaustive oracle over all edit sequences "
                 "gives N_edit = " +
                 std::to_string(*exact.value) +
                 " (witness: DEL 0 1 / ADD 0 3 / ADD 1 3), and the subset-enumeration "
                 "cross-check agrees.");
            const auto independent = testsupport::subset_edit_number(tri_iso, EditMode::Edit, 6);
            note("7: independent subset-deepening search returns " +
                 std::to_string(independent ? *independent : -1) + " for the same instance.");
        }
    }

    {
        const auto [result, plan] = eulerize(Graph(5, {}), EditMode::Edit);
        const OracleResult exact = exact_edit_number(Graph(5, {}), EditMode::Edit);
        check(result == Graph::cycle(5) && exact.value && plan.achieved() == *exact.value &&
                  plan.achieved() == 5,
              "7: eulerize(empty graph n=5, Edit) builds the spanning cycle, achieved 5 "
              "(oracle-exact)");
    }
}

// ---------------------------------------------------------------------------
// 8. Determinism across worker counts, library and CLI.
// ---------------------------------------------------------------------------
std::string csv_body(const ExperimentReport& r) {
    std::ostringstream out;
    write_report(r, out);
    std::istringstream in(out.str());
    std::string line, body;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        body += line;
        body += '\n';
    }
    return body;
}

std::string file_body(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::string line, body;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        body += line;
        body += '\n';
    }
    return body;
}

void criterion_8() {
    const Seed seed{888};
    check(csv_body(run_concentration(50, 0.5, 100, 0.1, seed, 1)) ==
              csv_body(run_concentration(50, 0.5, 100, 0.1, seed, 4)),
          "8: concentration CSV body identical for workers 1 and 4");
    check(csv_body(run_moments({40, 60}, 0.5, 2, 400, seed, 1)) ==
              csv_body(run_moments({40, 60}, 0.5, 2, 400, seed, 4)),
          "8: moments CSV body identical for workers 1 and 4");
    check(csv_body(run_events(40, 0.5, 150, 0.1, seed, true, 1)) ==
              csv_body(run_events(40, 0.5, 150, 0.1, seed, true, 4)),
          "8: events CSV body identical for workers 1 and 4");
    check(csv_body(run_independence(30, 0.5, 2, 5000, seed, 1)) ==
              csv_body(run_independence(30, 0.5, 2, 5000, seed, 4)),
          "8: independence CSV body identical for workers 1 and 4");

    const char* bin = std::getenv("EULEREDIT_BIN");
    if (bin == nullptr) {
        note("8: EULEREDIT_BIN not set; CLI determinism covered via the library path only");
        return;
    }
    const auto dir = std::filesystem::temp_directory_path() /
                     ("euleredit_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto c1 = dir / "w1.csv";
    const auto c4 = dir / "w4.csv";
    const std::string base = std::string(bin) +
                             " experiment concentration --n 60 --p 0.5 --trials 50 --eta 0.1 "
                             "--seed 888";
    const int rc1 = std::system((base + " --workers 1 --csv " + c1.string() + " >/dev/null").c_str());
    const int rc4 = std::system((base + " --workers 4 --csv " + c4.string() + " >/dev/null").c_str());
    const bool ran = WIFEXITED(rc1) && WEXITSTATUS(rc1) == 0 && WIFEXITED(rc4) &&
                     WEXITSTATUS(rc4) == 0;
    check(ran && file_body(c1) == file_body(c4),
          "8: CLI experiment rerun with --workers 1 and --workers 4 gives byte-identical CSV "
          "bodies");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    struct Entry {
        int id;
        void (*fn)();
    };
    const std::vector<Entry> entries{{1, criterion_1}, {2, criterion_2}, {3, criterion_3},
                                     {4, criterion_4}, {5, criterion_5}, {6, criterion_6},
                                     {7, criterion_7}, {8, criterion_8}};
    bool ran_any = false;
    for (const Entry& e : entries) {
        if (which == "all" || which == std::to_string(e.id)) {
            e.fn();
            ran_any = true;
        }
    }
    if (!ran_any) {
        std::cerr << "usage: acceptance [1-8|all]\n";
        return 2;
    }
    if (g_failures) {
        std::cout << g_failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}
