#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "euleredit/editors.hpp"
#include "euleredit/graph.hpp"
#include "euleredit/oracle.hpp"
#include "euleredit/sampler.hpp"

namespace euleredit {

/// One Monte Carlo sample. Fields are filled per experiment kind; achieved
/// counts are empty when the corresponding planner declared infeasibility.
struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    double p = 0.0;
    int odd_count = 0;  // T

    std::optional<int> edit;
    std::optional<int> ext;
    std::optional<int> red;
    int repair_edit = 0;
    int repair_ext = 0;
    int repair_red = 0;
    bool in_window = false;

    bool e_con = false;
    bool e_odd = false;
    bool e_good_h = false;
    bool e_good_hc = false;
    std::optional<bool> e_cliq;
    std::optional<int> residual_x;
    std::optional<int> residual_y;

    std::uint64_t parity_mask = 0;  // independence runs: bit i = vertex i odd
};

/// Moment summary for one n: mu_hat estimates ET, moment_q the q-th central
/// moment, ratio normalizes by n^(q/2).
struct MomentReport {
    int n = 0;
    double p = 0.0;
    int q = 0;
    std::uint64_t trials = 0;
    double mu_hat = 0.0;
    double paper_mean = 0.0;  // n/2
    double moment_q = 0.0;
    double ratio = 0.0;
    double nu = 0.0;  // mu_hat / n
    double mu_expected = 0.0;  // n * odd_degree_prob(n, p)
    bool coupling_ok = true;
};

struct ExperimentParams {
    std::string kind;
    std::vector<int> n_values;
    double p = 0.0;
    std::uint64_t trials = 0;
    Seed seed;
    int workers = 1;
    std::optional<double> eta;
    std::optional<double> eps;
    std::optional<int> q;
    std::optional<int> b;
    bool exact_clique = false;
};

/// Aggregated outcome of one experiment. Identical parameters and master seed
/// give identical trial records and aggregates regardless of worker count.
struct ExperimentReport {
    ExperimentParams params;
    std::optional<ProbabilityWindow> window;
    std::vector<TrialRecord> trials;
    std::vector<MomentReport> moments;

    // concentration
    double window_lo = 0.0;
    double window_hi = 0.0;
    double in_window_fraction = 0.0;
    double tight_edit_fraction = 0.0;  // achieved_edit == T/2 and repair_ops == 0
    double mean_repair_edit = 0.0;
    double mean_repair_ext = 0.0;
    double mean_repair_red = 0.0;
    std::uint64_t edit_failures = 0;
    std::uint64_t ext_failures = 0;
    std::uint64_t red_failures = 0;

    // events
    double freq_con = 0.0;
    double freq_odd = 0.0;
    double freq_good_h = 0.0;
    double freq_good_hc = 0.0;
    double freq_cliq = 0.0;
    double cliq_bound = 0.0;
    bool cliq_trivial = false;  // bound >= n, so the event cannot fail
    double mean_residual_x = 0.0;
    double mean_residual_y = 0.0;

    // independence
    double joint_hat = 0.0;
    double product_hat = 0.0;
    double deviation = 0.0;
    double stderr_est = 0.0;
    std::optional<double> exact_deviation;

    // sanity coupling against the closed-form mean of T
    double mean_odd = 0.0;
    double expected_odd = 0.0;
    double sd_odd = 0.0;
    bool coupling_ok = true;

    double duration_seconds = 0.0;
};

namespace detail {

inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Runs body(t) for t in [0, trials). Trials are independent; records land in
/// pre-sized slots, so results do not depend on the worker count.
inline void parallel_trials(std::uint64_t trials, int workers,
                            const std::function<void(std::uint64_t)>& body) {
    if (workers < 1) workers = 1;
    if (workers == 1 || trials <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::uint64_t t = next.fetch_add(1);
                if (t >= trials) break;
                try {
                    body(t);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct OddCoupling {
    double mean = 0.0;
    double sd = 0.0;
    double expected = 0.0;
    bool ok = true;
};

inline OddCoupling odd_coupling(const std::vector<int>& odd_counts, int n, double p) {
    OddCoupling c;
    const double trials = static_cast<double>(odd_counts.size());
    if (trials == 0.0) return c;
    long double sum = 0.0L;
    for (int t : odd_counts) sum += t;
    c.mean = static_cast<double>(sum / trials);
    long double var = 0.0L;
    for (int t : odd_counts) {
        const long double d = t - c.mean;
        var += d * d;
    }
    c.sd = static_cast<double>(std::sqrt(static_cast<double>(var / trials)));
    c.expected = n * odd_degree_prob(n, p);
    c.ok = std::abs(c.mean - c.expected) <= 4.0 * c.sd / std::sqrt(trials) + 1e-12;
    return c;
}

}  // namespace detail

/// Concentration run: per trial, sample H, eulerize in all
/// three modes, and test whether every achieved count lies in
/// [n/4 - n^(1/2+eta), n/4 + n^(1/2+eta)].
inline ExperimentReport run_concentration(int n, double p, std::uint64_t trials, double eta,
                                          Seed seed, int workers = 1) {
    if (trials == 0) throw std::invalid_argument("run_concentration: need trials >= 1");
    if (!(eta > 0.0)) throw std::invalid_argument("run_concentration: need eta > 0");
    if (n < 2) throw std::invalid_argument("run_concentration: need n >= 2");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.params = {"concentration", {n}, p, trials, seed, workers, eta,
                     std::nullopt,    std::nullopt, std::nullopt, false};
    report.window = classify_p(n, p);
    report.window_lo = n / 4.0 - std::pow(n, 0.5 + eta);
    report.window_hi = n / 4.0 + std::pow(n, 0.5 + eta);
    report.trials.resize(trials);

    detail::parallel_trials(trials, workers, [&](std::uint64_t t) {
        TrialRecord& rec = report.trials[t];
        const Seed st = seed.stream(t);
        rec.trial = t;
        rec.seed = st.master;
        rec.n = n;
        rec.p = p;
        const Graph h = sample_gnp(n, p, st);
        rec.odd_count = static_cast<int>(odd_vertices(h).size());
        auto attempt = [&](EditMode mode, std::optional<int>& achieved, int& repair) {
            try {
                const EulerizeResult res = eulerize(h, mode);
                achieved = res.plan.achieved();
                repair = res.plan.repair_ops;
            } catch (const PlanningError&) {
                achieved = std::nullopt;
                repair = 0;
            }
        };
        attempt(EditMode::Edit, rec.edit, rec.repair_edit);
        attempt(EditMode::Extend, rec.ext, rec.repair_ext);
        attempt(EditMode::Reduce, rec.red, rec.repair_red);
        auto inside = [&](const std::optional<int>& v) {
            return v && report.window_lo <= *v && *v <= report.window_hi;
        };
        rec.in_window = inside(rec.edit) && inside(rec.ext) && inside(rec.red);
    });

    std::uint64_t in_window = 0, tight = 0;
    long double rep_edit = 0.0L, rep_ext = 0.0L, rep_red = 0.0L;
    std::vector<int> odd_counts;
    odd_counts.reserve(trials);
    for (const TrialRecord& rec : report.trials) {
        odd_counts.push_back(rec.odd_count);
        if (rec.in_window) ++in_window;
        if (rec.edit && *rec.edit == rec.odd_count / 2 && rec.repair_edit == 0) ++tight;
        if (!rec.edit) ++report.edit_failures;
        if (!rec.ext) ++report.ext_failures;
        if (!rec.red) ++report.red_failures;
        rep_edit += rec.repair_edit;
        rep_ext += rec.repair_ext;
        rep_red += rec.repair_red;
    }
    const double tn = static_cast<double>(trials);
    report.in_window_fraction = static_cast<double>(in_window) / tn;
    report.tight_edit_fraction = static_cast<double>(tight) / tn;
    report.mean_repair_edit = static_cast<double>(rep_edit / tn);
    report.mean_repair_ext = static_cast<double>(rep_ext / tn);
    report.mean_repair_red = static_cast<double>(rep_red / tn);
    const auto coupling = detail::odd_coupling(odd_counts, n, p);
    report.mean_odd = coupling.mean;
    report.sd_odd = coupling.sd;
    report.expected_odd = coupling.expected;
    report.coupling_ok = coupling.ok;
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// Mean and q-th central moment of T (the odd-degree vertex count) per n.
/// q must be an even integer >= 2; that hypothesis is part of the bound being
/// exercised, so odd or small q is rejected outright.
inline ExperimentReport run_moments(const std::vector<int>& n_list, double p, int q,
                                    std::uint64_t trials, Seed seed, int workers = 1) {
    if (q < 2 || q % 2 != 0) {
        throw std::invalid_argument(
            "run_moments: q must be an even integer >= 2 (the moment bound assumes it)");
    }
    if (trials == 0) throw std::invalid_argument("run_moments: need trials >= 1");
    for (int n : n_list) {
        if (n < 2) throw std::invalid_argument("run_moments: need n >= 2");
    }
    const auto t0 = std::chrono::steady_clock::now();

    // An empty sweep is allowed and yields a header-only report.
    ExperimentReport report;
    report.params = {"moments", n_list, p,        trials, seed, workers,
                     std::nullopt, std::nullopt, q, std::nullopt, false};
    if (!n_list.empty()) report.window = classify_p(n_list.front(), p);

    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        const int n = n_list[ni];
        const Seed seed_n = seed.stream(ni);
        std::vector<int> odd_counts(trials, 0);
        detail::parallel_trials(trials, workers, [&](std::uint64_t t) {
            const Graph h = sample_gnp(n, p, seed_n.stream(t));
            odd_counts[t] = static_cast<int>(odd_vertices(h).size());
        });
        MomentReport mr;
        mr.n = n;
        mr.p = p;
        mr.q = q;
        mr.trials = trials;
        mr.paper_mean = n / 2.0;
        long double sum = 0.0L;
        for (int t : odd_counts) sum += t;
        mr.mu_hat = static_cast<double>(sum / static_cast<long double>(trials));
        long double mom = 0.0L;
        for (int t : odd_counts) {
            mom += std::pow(static_cast<long double>(t) - mr.mu_hat, q);
        }
        mr.moment_q = static_cast<double>(mom / static_cast<long double>(trials));
        mr.ratio = mr.moment_q / std::pow(static_cast<double>(n), q / 2.0);
        mr.nu = mr.mu_hat / n;
        const auto coupling = detail::odd_coupling(odd_counts, n, p);
        mr.mu_expected = coupling.expected;
        mr.coupling_ok = coupling.ok;
        report.moments.push_back(mr);
        if (ni == 0) {
            report.mean_odd = coupling.mean;
            report.sd_odd = coupling.sd;
            report.expected_odd = coupling.expected;
            report.coupling_ok = coupling.ok;
        } else {
            report.coupling_ok = report.coupling_ok && coupling.ok;
        }
    }
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// Frequencies of the structural events the estimates lean on: connectivity,
/// the odd-count window, universal common neighbors in H and its complement,
/// and (optionally, n <= 64) the exact clique bound 2 sqrt(n) ln n on both H
/// and its complement. Also records the planners' residual sizes.
inline ExperimentReport run_events(int n, double p, std::uint64_t trials, double eps, Seed seed,
                                   bool exact_clique = false, int workers = 1) {
    if (trials == 0) throw std::invalid_argument("run_events: need trials >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("run_events: need eps > 0");
    if (n < 2) throw std::invalid_argument("run_events: need n >= 2");
    if (exact_clique && n > 64) {
        throw std::invalid_argument("run_events: exact clique check requires n <= 64");
    }
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.params = {"events",     {n},          p,           trials, seed, workers,
                     std::nullopt, eps, std::nullopt, std::nullopt, exact_clique};
    report.window = classify_p(n, p);
    report.cliq_bound = 2.0 * std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n));
    report.cliq_trivial = report.cliq_bound >= n;
    report.trials.resize(trials);

    const double odd_halfwidth = std::pow(n, 0.5 + eps);
    detail::parallel_trials(trials, workers, [&](std::uint64_t t) {
        TrialRecord& rec = report.trials[t];
        const Seed st = seed.stream(t);
        rec.trial = t;
        rec.seed = st.master;
        rec.n = n;
        rec.p = p;
        const Graph h = sample_gnp(n, p, st);
        rec.odd_count = static_cast<int>(odd_vertices(h).size());
        rec.e_con = is_connected(h);
        rec.e_odd = std::abs(rec.odd_count - n / 2.0) <= odd_halfwidth;
        const detail::AdjacencyMatrix adj(h);
        bool good_h = true, good_hc = true;
        for (int u = 0; u < n && (good_h || good_hc); ++u) {
            for (int v = u + 1; v < n && (good_h || good_hc); ++v) {
                if (good_h && adj.smallest_common_neighbor(u, v) < 0) good_h = false;
                if (good_hc && adj.smallest_common_nonneighbor(u, v) < 0) good_hc = false;
            }
        }
        rec.e_good_h = good_h;
        rec.e_good_hc = good_hc;
        if (exact_clique) {
            const bool cliq_h = max_clique_exact(h) <= report.cliq_bound;
            const bool cliq_hc = max_clique_exact(complement(h)) <= report.cliq_bound;
            rec.e_cliq = cliq_h && cliq_hc;
        }
        try {
            rec.residual_x = static_cast<int>(plan_extend(h).residual.size());
        } catch (const PlanningError&) {
        }
        try {
            rec.residual_y = static_cast<int>(plan_reduce(h).residual.size());
        } catch (const PlanningError&) {
        }
    });

    std::uint64_t con = 0, odd = 0, gh = 0, ghc = 0, cliq = 0, cliq_runs = 0;
    long double res_x = 0.0L, res_y = 0.0L;
    std::uint64_t res_x_count = 0, res_y_count = 0;
    std::vector<int> odd_counts;
    odd_counts.reserve(trials);
    for (const TrialRecord& rec : report.trials) {
        odd_counts.push_back(rec.odd_count);
        con += rec.e_con;
        odd += rec.e_odd;
        gh += rec.e_good_h;
        ghc += rec.e_good_hc;
        if (rec.e_cliq) {
            ++cliq_runs;
            cliq += *rec.e_cliq;
        }
        if (rec.residual_x) {
            res_x += *rec.residual_x;
            ++res_x_count;
        } else {
            ++report.ext_failures;
        }
        if (rec.residual_y) {
            res_y += *rec.residual_y;
            ++res_y_count;
        } else {
            ++report.red_failures;
        }
    }
    const double tn = static_cast<double>(trials);
    report.freq_con = static_cast<double>(con) / tn;
    report.freq_odd = static_cast<double>(odd) / tn;
    report.freq_good_h = static_cast<double>(gh) / tn;
    report.freq_good_hc = static_cast<double>(ghc) / tn;
    report.freq_cliq = cliq_runs ? static_cast<double>(cliq) / static_cast<double>(cliq_runs) : 0.0;
    report.mean_residual_x =
        res_x_count ? static_cast<double>(res_x / static_cast<long double>(res_x_count)) : 0.0;
    report.mean_residual_y =
        res_y_count ? static_cast<double>(res_y / static_cast<long double>(res_y_count)) : 0.0;
    const auto coupling = detail::odd_coupling(odd_counts, n, p);
    report.mean_odd = coupling.mean;
    report.sd_odd = coupling.sd;
    report.expected_odd = coupling.expected;
    report.coupling_ok = coupling.ok;
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

/// Near-independence of the odd-degree indicators of vertices 0..b-1:
/// empirical joint odd-frequency vs the product of the marginals quantifies
/// the dependence. For n <= 6 the exact deviation from full enumeration is
/// attached as ground truth.
inline ExperimentReport run_independence(int n, double p, int b, std::uint64_t trials, Seed seed,
                                         int workers = 1) {
    if (trials == 0) throw std::invalid_argument("run_independence: need trials >= 1");
    if (n < 2) throw std::invalid_argument("run_independence: need n >= 2");
    if (b < 1 || b > n) throw std::invalid_argument("run_independence: need 1 <= b <= n");
    if (b > 64) throw std::invalid_argument("run_independence: need b <= 64");
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.params = {"independence", {n},          p,           trials, seed, workers,
                     std::nullopt,   std::nullopt, std::nullopt, b,     false};
    report.window = classify_p(n, p);
    report.trials.resize(trials);

    detail::parallel_trials(trials, workers, [&](std::uint64_t t) {
        TrialRecord& rec = report.trials[t];
        const Seed st = seed.stream(t);
        rec.trial = t;
        rec.seed = st.master;
        rec.n = n;
        rec.p = p;
        const Graph h = sample_gnp(n, p, st);
        rec.odd_count = static_cast<int>(odd_vertices(h).size());
        std::uint64_t mask = 0;
        for (int i = 0; i < b; ++i) {
            if (h.degree(i) % 2 != 0) mask |= 1ULL << i;
        }
        rec.parity_mask = mask;
    });

    const std::uint64_t all = b == 64 ? ~0ULL : (1ULL << b) - 1;
    std::uint64_t joint_count = 0;
    std::vector<std::uint64_t> marginal_count(static_cast<std::size_t>(b), 0);
    std::vector<int> odd_counts;
    odd_counts.reserve(trials);
    for (const TrialRecord& rec : report.trials) {
        odd_counts.push_back(rec.odd_count);
        if (rec.parity_mask == all) ++joint_count;
        for (int i = 0; i < b; ++i) {
            if (rec.parity_mask & (1ULL << i)) ++marginal_count[static_cast<std::size_t>(i)];
        }
    }
    const double tn = static_cast<double>(trials);
    report.joint_hat = static_cast<double>(joint_count) / tn;
    double product = 1.0;
    for (int i = 0; i < b; ++i) {
        product *= static_cast<double>(marginal_count[static_cast<std::size_t>(i)]) / tn;
    }
    report.product_hat = product;
    report.deviation = std::abs(report.joint_hat - report.product_hat);

    // Conservative standard error: binomial se of the joint frequency plus
    // the first-order propagation of each marginal's se through the product.
    auto se_of = [&](double f) { return std::sqrt(f * (1.0 - f) / tn); };
    double se = se_of(report.joint_hat);
    for (int i = 0; i < b; ++i) {
        const double mi = static_cast<double>(marginal_count[static_cast<std::size_t>(i)]) / tn;
        double others = 1.0;
        for (int j = 0; j < b; ++j) {
            if (j != i) others *= static_cast<double>(marginal_count[static_cast<std::size_t>(j)]) / tn;
        }
        se += others * se_of(mi);
    }
    report.stderr_est = se;

    if (n <= 6) {
        report.exact_deviation = exact_parity_stats(n, p, b).deviation;
    }
    const auto coupling = detail::odd_coupling(odd_counts, n, p);
    report.mean_odd = coupling.mean;
    report.sd_odd = coupling.sd;
    report.expected_odd = coupling.expected;
    report.coupling_ok = coupling.ok;
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace detail {

inline void write_param_header(std::ostream& out, const ExperimentReport& r) {
    out << "# experiment=" << r.params.kind << " n=";
    for (std::size_t i = 0; i < r.params.n_values.size(); ++i) {
        if (i) out << ',';
        out << r.params.n_values[i];
    }
    out << " p=" << fmt12(r.params.p) << " trials=" << r.params.trials;
    if (r.params.eta) out << " eta=" << fmt12(*r.params.eta);
    if (r.params.q) out << " q=" << *r.params.q;
    if (r.params.eps) out << " eps=" << fmt12(*r.params.eps);
    if (r.params.b) out << " b=" << *r.params.b;
    if (r.params.exact_clique) out << " exact_clique=1";
    out << " seed=" << r.params.seed.master << " workers=" << r.params.workers << '\n';
    if (r.window) {
        out << "# window strong_ok=" << (r.window->strong_ok ? 1 : 0)
            << " weak_ok=" << (r.window->weak_ok ? 1 : 0) << " strong=["
            << fmt12(r.window->strong_lower) << ',' << fmt12(r.window->strong_upper) << "] weak=["
            << fmt12(r.window->weak_lower) << ',' << fmt12(r.window->weak_upper) << "]\n";
    }
}

inline std::string opt_int(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-1");
}

}  // namespace detail

/// CSV emission. Deterministic: rows in trial order, doubles with 12
/// significant digits, '#' metadata header; no timestamps. An aggregate row
/// with trial = -1 closes the per-trial schemas.
inline void write_report(const ExperimentReport& r, std::ostream& out) {
    detail::write_param_header(out, r);
    const auto& kind = r.params.kind;
    if (kind == "concentration") {
        out << "trial,seed,n,p,T,edit,ext,red,repair_edit,repair_ext,repair_red,in_window\n";
        for (const TrialRecord& rec : r.trials) {
            out << rec.trial << ',' << rec.seed << ',' << rec.n << ',' << detail::fmt12(rec.p)
                << ',' << rec.odd_count << ',' << detail::opt_int(rec.edit) << ','
                << detail::opt_int(rec.ext) << ',' << detail::opt_int(rec.red) << ','
                << rec.repair_edit << ',' << rec.repair_ext << ',' << rec.repair_red << ','
                << (rec.in_window ? 1 : 0) << '\n';
        }
        out << "-1," << r.params.seed.master << ',' << r.params.n_values.front() << ','
            << detail::fmt12(r.params.p) << ',' << detail::fmt12(r.mean_odd) << ",,,,"
            << detail::fmt12(r.mean_repair_edit) << ',' << detail::fmt12(r.mean_repair_ext) << ','
            << detail::fmt12(r.mean_repair_red) << ',' << detail::fmt12(r.in_window_fraction)
            << '\n';
    } else if (kind == "moments") {
        out << "n,p,q,trials,mu_hat,moment_q,ratio\n";
        for (const MomentReport& mr : r.moments) {
            out << mr.n << ',' << detail::fmt12(mr.p) << ',' << mr.q << ',' << mr.trials << ','
                << detail::fmt12(mr.mu_hat) << ',' << detail::fmt12(mr.moment_q) << ','
                << detail::fmt12(mr.ratio) << '\n';
        }
    } else if (kind == "events") {
        if (r.params.exact_clique) {
            out << "# cliq_bound=" << detail::fmt12(r.cliq_bound)
                << " trivially_satisfied=" << (r.cliq_trivial ? 1 : 0) << '\n';
        }
        out << "trial,e_con,e_odd,e_good_h,e_good_hc,e_cliq,residual_x,residual_y\n";
        for (const TrialRecord& rec : r.trials) {
            out << rec.trial << ',' << (rec.e_con ? 1 : 0) << ',' << (rec.e_odd ? 1 : 0) << ','
                << (rec.e_good_h ? 1 : 0) << ',' << (rec.e_good_hc ? 1 : 0) << ','
                << (rec.e_cliq ? (*rec.e_cliq ? "1" : "0") : "-1") << ','
                << detail::opt_int(rec.residual_x) << ',' << detail::opt_int(rec.residual_y)
                << '\n';
        }
        out << "-1," << detail::fmt12(r.freq_con) << ',' << detail::fmt12(r.freq_odd) << ','
            << detail::fmt12(r.freq_good_h) << ',' << detail::fmt12(r.freq_good_hc) << ','
            << (r.params.exact_clique ? detail::fmt12(r.freq_cliq) : std::string("-1")) << ','
            << detail::fmt12(r.mean_residual_x) << ',' << detail::fmt12(r.mean_residual_y) << '\n';
    } else if (kind == "independence") {
        out << "n,p,b,trials,joint_hat,product_hat,deviation,stderr,exact_deviation\n";
        out << r.params.n_values.front() << ',' << detail::fmt12(r.params.p) << ','
            << *r.params.b << ',' << r.params.trials << ',' << detail::fmt12(r.joint_hat) << ','
            << detail::fmt12(r.product_hat) << ',' << detail::fmt12(r.deviation) << ','
            << detail::fmt12(r.stderr_est) << ','
            << (r.exact_deviation ? detail::fmt12(*r.exact_deviation) : std::string()) << '\n';
    } else {
        throw std::logic_error("write_report: unknown experiment kind " + kind);
    }
}

inline void write_report(const ExperimentReport& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_report(r, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace euleredit
