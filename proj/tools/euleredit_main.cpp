// Command-line front end: sampling, planning, verification, circuit
// extraction, exact oracles, and the Monte Carlo experiments.
//
// Exit codes: 0 success, 1 infeasibility or a negative verification result,
// 2 usage or I/O errors.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "euleredit/editors.hpp"
#include "euleredit/experiments.hpp"
#include "euleredit/graph.hpp"
#include "euleredit/io.hpp"
#include "euleredit/oracle.hpp"
#include "euleredit/sampler.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;  // fixed so undocumented runs reproduce

std::uint64_t parse_seed(const std::string& text) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos, 0);  // decimal or 0x-prefixed hex
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seed", "not a 64-bit integer: " + text);
    }
    if (pos != text.size()) {
        throw CLI::ValidationError("--seed", "trailing characters in: " + text);
    }
    return value;
}

euleredit::EditMode parse_mode(const std::string& text) {
    if (text == "edit") return euleredit::EditMode::Edit;
    if (text == "extend") return euleredit::EditMode::Extend;
    if (text == "reduce") return euleredit::EditMode::Reduce;
    throw CLI::ValidationError("--mode", "must be one of edit, extend, reduce");
}

void print_summary(const euleredit::ExperimentReport& r) {
    using euleredit::detail::fmt12;
    std::ostringstream header;
    euleredit::detail::write_param_header(header, r);
    std::cout << header.str();
    const auto& kind = r.params.kind;
    if (kind == "concentration") {
        std::cout << "in_window_fraction=" << fmt12(r.in_window_fraction)
                  << " tight_edit_fraction=" << fmt12(r.tight_edit_fraction) << "\n"
                  << "window=[" << fmt12(r.window_lo) << "," << fmt12(r.window_hi) << "]"
                  << " mean_repair edit=" << fmt12(r.mean_repair_edit)
                  << " extend=" << fmt12(r.mean_repair_ext)
                  << " reduce=" << fmt12(r.mean_repair_red) << "\n"
                  << "planner_failures edit=" << r.edit_failures << " extend=" << r.ext_failures
                  << " reduce=" << r.red_failures << "\n";
    } else if (kind == "moments") {
        for (const auto& mr : r.moments) {
            std::cout << "n=" << mr.n << " mu_hat=" << fmt12(mr.mu_hat)
                      << " moment_q=" << fmt12(mr.moment_q) << " ratio=" << fmt12(mr.ratio)
                      << " nu=" << fmt12(mr.nu) << " coupling_ok=" << (mr.coupling_ok ? 1 : 0)
                      << "\n";
        }
    } else if (kind == "events") {
        std::cout << "freq e_con=" << fmt12(r.freq_con) << " e_odd=" << fmt12(r.freq_odd)
                  << " e_good_h=" << fmt12(r.freq_good_h)
                  << " e_good_hc=" << fmt12(r.freq_good_hc);
        if (r.params.exact_clique) {
            std::cout << " e_cliq=" << fmt12(r.freq_cliq) << " (bound=" << fmt12(r.cliq_bound)
                      << (r.cliq_trivial ? ", trivially satisfied: bound >= n" : "") << ")";
        }
        std::cout << "\nmean_residual x=" << fmt12(r.mean_residual_x)
                  << " y=" << fmt12(r.mean_residual_y) << " planner_failures extend="
                  << r.ext_failures << " reduce=" << r.red_failures << "\n";
    } else if (kind == "independence") {
        std::cout << "joint_hat=" << fmt12(r.joint_hat)
                  << " product_hat=" << fmt12(r.product_hat)
                  << " deviation=" << fmt12(r.deviation) << " stderr=" << fmt12(r.stderr_est);
        if (r.exact_deviation) std::cout << " exact_deviation=" << fmt12(*r.exact_deviation);
        std::cout << "\n";
    }
    std::cout << "mean_T=" << fmt12(r.mean_odd) << " expected_T=" << fmt12(r.expected_odd)
              << " coupling_ok=" << (r.coupling_ok ? 1 : 0) << "\n"
              << "duration_seconds=" << fmt12(r.duration_seconds) << "\n";
}

struct ExperimentArgs {
    std::vector<int> n_values{};
    double p = 0.0;
    std::uint64_t trials = 0;
    std::string seed_text = std::to_string(kDefaultSeed);
    int workers = 1;
    double eta = 0.1;
    int q = 2;
    double eps = 0.1;
    int b = 2;
    bool exact_clique = false;
    std::string csv_path;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eulerian graph editing toolkit: convert graphs into Eulerian "
                 "graphs by near-minimal edge edits, sample G(n,p), run exact "
                 "small-graph oracles, and reproduce the concentration experiments."};
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "Sample a seeded G(n,p) graph");
    int sample_n = 0;
    double sample_p = 0.0;
    std::string sample_seed = std::to_string(kDefaultSeed);
    std::string sample_out;
    sample->add_option("--n", sample_n, "vertex count")->required();
    sample->add_option("--p", sample_p, "edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    sample->add_option("--seed", sample_seed, "64-bit master seed (decimal or 0x hex)");
    sample->add_option("--out", sample_out, "output edge-list path (stdout when omitted)");

    // eulerize
    auto* eul = app.add_subcommand("eulerize", "Plan and apply edits that make a graph Eulerian");
    std::string eul_in, eul_mode, eul_plan_out, eul_graph_out;
    eul->add_option("--in", eul_in, "input edge-list path")->required();
    eul->add_option("--mode", eul_mode, "edit | extend | reduce")->required();
    eul->add_option("--plan-out", eul_plan_out, "write the plan to this path");
    eul->add_option("--graph-out", eul_graph_out, "write the resulting graph to this path");

    // verify
    auto* verify = app.add_subcommand("verify", "Apply a plan file and test the result");
    std::string verify_in, verify_plan_path;
    verify->add_option("--in", verify_in, "input edge-list path")->required();
    verify->add_option("--plan", verify_plan_path, "plan file to apply")->required();

    // circuit
    auto* circuit = app.add_subcommand("circuit", "Print an Eulerian circuit");
    std::string circuit_in;
    circuit->add_option("--in", circuit_in, "input edge-list path")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact minimum edit count by exhaustive search");
    std::string oracle_in, oracle_mode;
    int oracle_budget = -1;
    oracle->add_option("--in", oracle_in, "input edge-list path")->required();
    oracle->add_option("--mode", oracle_mode, "edit | extend | reduce")->required();
    oracle->add_option("--budget", oracle_budget, "maximum search depth (-1 = unbounded)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
    experiment->require_subcommand(1);
    std::map<std::string, ExperimentArgs> eargs{{"concentration", {}},
                                                {"moments", {}},
                                                {"events", {}},
                                                {"independence", {}}};
    auto add_common = [&](CLI::App* sub, ExperimentArgs& a) {
        sub->add_option("--n", a.n_values, "vertex count (comma list for moments)")
            ->required()
            ->delimiter(',');
        sub->add_option("--p", a.p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
        sub->add_option("--trials", a.trials, "number of Monte Carlo trials")->required();
        sub->add_option("--seed", a.seed_text, "64-bit master seed (decimal or 0x hex)");
        sub->add_option("--workers", a.workers, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--csv", a.csv_path, "write the per-trial CSV report here");
    };
    auto* conc = experiment->add_subcommand("concentration",
                                            "achieved edit counts vs the n/4 window");
    add_common(conc, eargs["concentration"]);
    conc->add_option("--eta", eargs["concentration"].eta, "window exponent offset (> 0)");
    auto* moms = experiment->add_subcommand("moments", "mean and central moments of T");
    add_common(moms, eargs["moments"]);
    moms->add_option("--q", eargs["moments"].q, "moment order (even, >= 2)");
    auto* evts = experiment->add_subcommand("events", "frequencies of the structural events");
    add_common(evts, eargs["events"]);
    evts->add_option("--eps", eargs["events"].eps, "odd-count window exponent offset (> 0)");
    evts->add_flag("--exact-clique", eargs["events"].exact_clique,
                   "check the clique bound exactly (n <= 64)");
    auto* inde = experiment->add_subcommand("independence",
                                            "joint vs product of odd-degree indicators");
    add_common(inde, eargs["independence"]);
    inde->add_option("--b", eargs["independence"].b, "number of tracked vertices");

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

    using namespace euleredit;
    try {
        if (sample->parsed()) {
            const Seed seed{parse_seed(sample_seed)};
            const Graph g = sample_gnp(sample_n, sample_p, seed);
            std::ostringstream header;
            header << "# sample n=" << sample_n << " p=" << detail::fmt12(sample_p)
                   << " seed=" << seed.master << "\n";
            if (sample_out.empty()) {
                std::cout << header.str();
                write_edge_list(std::cout, g);
            } else {
                std::ofstream out(sample_out);
                if (!out) throw IoError("cannot open for writing: " + sample_out);
                out << header.str();
                write_edge_list(out, g);
                std::cout << "wrote " << g.vertex_count() << " vertices, " << g.edge_count()
                          << " edges to " << sample_out << "\n";
            }
            return 0;
        }

        if (eul->parsed()) {
            const Graph g = load_edge_list(eul_in);
            const EditMode mode = parse_mode(eul_mode);
            try {
                const EulerizeResult result = eulerize(g, mode);
                std::cout << "# eulerize in=" << eul_in << " mode=" << eul_mode << "\n";
                write_plan(std::cout, result.plan);
                if (!eul_plan_out.empty()) save_plan(eul_plan_out, result.plan);
                if (!eul_graph_out.empty()) save_edge_list(eul_graph_out, result.graph);
                return 0;
            } catch (const PlanningError& e) {
                std::cout << "INFEASIBLE: " << e.what() << "\n";
                return 1;
            }
        }

        if (verify->parsed()) {
            const Graph g = load_edge_list(verify_in);
            EditPlan plan;
            plan.ops = load_plan(verify_plan_path);
            std::cout << "# verify in=" << verify_in << " plan=" << verify_plan_path << "\n";
            const VerifyReport report = verify_plan(g, plan);
            std::cout << "eulerian: " << (report.eulerian ? "true" : "false");
            if (report.failed_condition) {
                std::cout << " (failed: " << to_string(*report.failed_condition) << ")";
            }
            std::cout << " final_T=" << report.final_odd_count << "\n";
            return report.eulerian ? 0 : 1;
        }

        if (circuit->parsed()) {
            const Graph g = load_edge_list(circuit_in);
            try {
                const EulerCircuit c = euler_circuit(g);
                for (std::size_t i = 0; i < c.walk.size(); ++i) {
                    if (i) std::cout << ' ';
                    std::cout << c.walk[i];
                }
                std::cout << "\n";
                return 0;
            } catch (const NotEulerianError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }

        if (oracle->parsed()) {
            const Graph g = load_edge_list(oracle_in);
            const EditMode mode = parse_mode(oracle_mode);
            std::cout << "# oracle in=" << oracle_in << " mode=" << oracle_mode
                      << " budget=" << oracle_budget << "\n";
            const OracleResult result = exact_edit_number(g, mode, oracle_budget);
            if (result.value) {
                std::cout << "value " << *result.value << "\n";
                if (result.witness) write_plan(std::cout, *result.witness);
                std::cout << "# explored=" << result.explored << "\n";
                return 0;
            }
            std::cout << (result.space_exhausted ? "INFEASIBLE" : "INFEASIBLE (budget reached)")
                      << "\n# explored=" << result.explored
                      << " space_exhausted=" << (result.space_exhausted ? 1 : 0)
                      << " budget_hit=" << (result.budget_hit ? 1 : 0) << "\n";
            return 1;
        }

        if (experiment->parsed()) {
            for (auto& [name, a] : eargs) {
                CLI::App* sub = experiment->get_subcommand(name);
                if (!sub->parsed()) continue;
                const Seed seed{parse_seed(a.seed_text)};
                ExperimentReport report;
                if (name == "concentration") {
                    report = run_concentration(a.n_values.at(0), a.p, a.trials, a.eta, seed,
                                               a.workers);
                } else if (name == "moments") {
                    report = run_moments(a.n_values, a.p, a.q, a.trials, seed, a.workers);
                } else if (name == "events") {
                    report = run_events(a.n_values.at(0), a.p, a.trials, a.eps, seed,
                                        a.exact_clique, a.workers);
                } else {
                    report = run_independence(a.n_values.at(0), a.p, a.b, a.trials, seed,
                                              a.workers);
                }
                print_summary(report);
                if (!a.csv_path.empty()) {
                    write_report(report, a.csv_path);
                    std::cout << "csv written: " << a.csv_path << "\n";
                }
                return 0;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
