#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "euleredit/editors.hpp"
#include "euleredit/graph.hpp"

namespace euleredit {

namespace detail {

/// Edges of K_n in lexicographic (u,v) order, u < v. Bit i of an edge mask
/// corresponds to all_edges(n)[i].
inline std::vector<Edge> all_edges(int n) {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return es;
}

inline std::uint64_t edge_mask_of(const Graph& g, const std::vector<Edge>& universe) {
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) {
        const auto it = std::lower_bound(universe.begin(), universe.end(), e);
        mask |= 1ULL << static_cast<std::uint64_t>(it - universe.begin());
    }
    return mask;
}

inline Graph graph_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& universe) {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        es.push_back(universe[static_cast<std::size_t>(std::countr_zero(mask))]);
        mask &= mask - 1;
    }
    return Graph(n, std::move(es));
}

}  // namespace detail

/// All 2^C(n,2) labeled graphs on n vertices, in edge-mask order.
/// Refuses n > 6 (32768 graphs at n = 6 is the intended ceiling).
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n) : n_(n), universe_(detail::all_edges(n)) {
        if (n < 0 || n > 6) {
            throw std::invalid_argument("GraphEnumerator: n must lie in [0,6]");
        }
        total_ = 1ULL << universe_.size();
    }

    std::uint64_t total() const noexcept { return total_; }

    std::optional<Graph> next() {
        if (next_mask_ >= total_) return std::nullopt;
        return detail::graph_from_mask(n_, next_mask_++, universe_);
    }

private:
    int n_;
    std::vector<Edge> universe_;
    std::uint64_t total_ = 0;
    std::uint64_t next_mask_ = 0;
};

inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    GraphEnumerator en(n);
    while (auto g = en.next()) fn(*g);
}

/// Exact search outcome. value is empty when no Eulerian graph is reachable:
/// space_exhausted tells a proven-infeasible apart from a budget stop.
struct OracleResult {
    std::optional<int> value;
    std::optional<EditPlan> witness;
    std::uint64_t explored = 0;
    bool space_exhausted = false;
    bool budget_hit = false;

    bool infeasible() const noexcept { return !value.has_value() && space_exhausted; }
};

/// Minimum number of toggles of the given mode reaching an Eulerian graph,
/// by breadth-first search over edge-subset states (deduplicated by mask).
/// Edit toggles any pair; Extend only adds absent edges; Reduce only removes
/// present ones. budget < 0 means unbounded. Exact but exponential; intended
/// for n <= 7.
inline OracleResult exact_edit_number(const Graph& g, EditMode mode, int budget = -1) {
    const int n = g.vertex_count();
    if (n > 11) {
        throw std::invalid_argument("exact_edit_number: state masks need n <= 11");
    }
    const std::vector<Edge> universe = detail::all_edges(n);
    const int bits = static_cast<int>(universe.size());
    const std::uint64_t start = detail::edge_mask_of(g, universe);
    const int max_depth = budget < 0 ? bits + n + 1 : budget;

    struct Visit {
        std::uint64_t parent;
        int depth;
        std::int8_t via_bit;  // -1 for the root
    };
    std::unordered_map<std::uint64_t, Visit> visited;
    visited.reserve(1024);
    visited.emplace(start, Visit{start, 0, -1});

    std::deque<std::uint64_t> queue{start};
    OracleResult result;
    bool skipped_by_budget = false;

    while (!queue.empty()) {
        const std::uint64_t state = queue.front();
        queue.pop_front();
        const int depth = visited.at(state).depth;
        ++result.explored;

        if (is_eulerian(detail::graph_from_mask(n, state, universe))) {
            result.value = depth;
            // Reconstruct the toggle sequence root -> state.
            std::vector<EditOp> ops;
            std::uint64_t cur = state;
            while (true) {
                const Visit& v = visited.at(cur);
                if (v.via_bit < 0) break;
                const std::uint64_t bit = 1ULL << v.via_bit;
                const Edge& e = universe[static_cast<std::size_t>(v.via_bit)];
                ops.push_back((cur & bit) ? add_op(e.u, e.v) : remove_op(e.u, e.v));
                cur = v.parent;
            }
            std::reverse(ops.begin(), ops.end());
            EditPlan plan;
            plan.mode = mode;
            plan.lower_bound = parity_lower_bound(g);
            plan.ops = std::move(ops);
            result.witness = std::move(plan);
            return result;
        }

        if (depth >= max_depth) {
            skipped_by_budget = true;
            continue;
        }
        for (int b = 0; b < bits; ++b) {
            const std::uint64_t bit = 1ULL << b;
            const bool present = (state & bit) != 0;
            if (mode == EditMode::Extend && present) continue;
            if (mode == EditMode::Reduce && !present) continue;
            const std::uint64_t child = state ^ bit;
            if (visited.emplace(child, Visit{state, depth + 1, static_cast<std::int8_t>(b)})
                    .second) {
                queue.push_back(child);
            }
        }
    }
    result.budget_hit = skipped_by_budget;
    result.space_exhausted = !skipped_by_budget;
    return result;
}

/// Exact clique number by branch and bound with a greedy-coloring bound.
/// Bitset rows, so n <= 64.
inline int max_clique_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 64) throw std::invalid_argument("max_clique_exact: n must be <= 64");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        rows[static_cast<std::size_t>(e.u)] |= 1ULL << e.v;
        rows[static_cast<std::size_t>(e.v)] |= 1ULL << e.u;
    }

    int best = 0;
    // expand(P): candidates still adjacent to the whole current clique.
    std::function<void(std::uint64_t, int)> expand = [&](std::uint64_t cands, int size) {
        if (size > best) best = size;
        if (!cands) return;
        // Greedy coloring: vertices in the same color class are pairwise
        // non-adjacent, so at most one per class can extend the clique.
        std::vector<int> order;
        std::vector<int> color;
        order.reserve(static_cast<std::size_t>(std::popcount(cands)));
        color.reserve(order.capacity());
        std::uint64_t uncolored = cands;
        int color_id = 0;
        while (uncolored) {
            ++color_id;
            std::uint64_t candidates_for_class = uncolored;
            while (candidates_for_class) {
                const int v = std::countr_zero(candidates_for_class);
                candidates_for_class &= candidates_for_class - 1;
                candidates_for_class &= ~rows[static_cast<std::size_t>(v)];
                uncolored &= ~(1ULL << v);
                order.push_back(v);
                color.push_back(color_id);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + color[static_cast<std::size_t>(i)] <= best) return;
            const int v = order[static_cast<std::size_t>(i)];
            expand(cands & rows[static_cast<std::size_t>(v)], size + 1);
            cands &= ~(1ULL << v);
        }
    };
    const std::uint64_t everyone = n == 64 ? ~0ULL : (1ULL << n) - 1;
    expand(everyone, 0);
    return best;
}

/// Exact joint and marginal odd-degree probabilities for vertices 0..b-1 of
/// G(n,p), by summing p^m (1-p)^(C(n,2)-m) over all 2^C(n,2) graphs.
struct ParityStats {
    double joint = 0.0;
    double product = 0.0;
    double deviation = 0.0;
};

inline ParityStats exact_parity_stats(int n, double p, int b) {
    if (n < 1 || n > 6) throw std::invalid_argument("exact_parity_stats: need 1 <= n <= 6");
    if (b < 1 || b > n) throw std::invalid_argument("exact_parity_stats: need 1 <= b <= n");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("exact_parity_stats: p must lie in [0,1]");
    }
    const std::vector<Edge> universe = detail::all_edges(n);
    const int bits = static_cast<int>(universe.size());

    std::vector<long double> pow_p(static_cast<std::size_t>(bits) + 1, 1.0L);
    std::vector<long double> pow_q(static_cast<std::size_t>(bits) + 1, 1.0L);
    for (int k = 1; k <= bits; ++k) {
        pow_p[static_cast<std::size_t>(k)] = pow_p[static_cast<std::size_t>(k - 1)] * p;
        pow_q[static_cast<std::size_t>(k)] = pow_q[static_cast<std::size_t>(k - 1)] * (1.0L - p);
    }

    long double joint = 0.0L;
    std::vector<long double> marginal(static_cast<std::size_t>(b), 0.0L);
    std::vector<int> parity(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        std::fill(parity.begin(), parity.end(), 0);
        std::uint64_t rest = mask;
        while (rest) {
            const Edge& e = universe[static_cast<std::size_t>(std::countr_zero(rest))];
            rest &= rest - 1;
            parity[static_cast<std::size_t>(e.u)] ^= 1;
            parity[static_cast<std::size_t>(e.v)] ^= 1;
        }
        const int m = std::popcount(mask);
        const long double weight =
            pow_p[static_cast<std::size_t>(m)] * pow_q[static_cast<std::size_t>(bits - m)];
        bool all_odd = true;
        for (int i = 0; i < b; ++i) {
            if (parity[static_cast<std::size_t>(i)]) {
                marginal[static_cast<std::size_t>(i)] += weight;
            } else {
                all_odd = false;
            }
        }
        if (all_odd) joint += weight;
    }
    long double product = 1.0L;
    for (int i = 0; i < b; ++i) product *= marginal[static_cast<std::size_t>(i)];

    ParityStats stats;
    stats.joint = static_cast<double>(joint);
    stats.product = static_cast<double>(product);
    stats.deviation = static_cast<double>(joint > product ? joint - product : product - joint);
    return stats;
}

}  // namespace euleredit
