#pragma once

// Test-side oracles, kept independent of the library implementations they
// cross-check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "euleredit/editors.hpp"
#include "euleredit/graph.hpp"

namespace testsupport {

// Independent Euler-circuit checker: cyclic adjacency plus exact edge
// coverage, straight from the definition.
inline bool check_euler_circuit(const euleredit::Graph& g, const std::vector<int>& walk) {
    const int m = g.edge_count();
    if (static_cast<int>(walk.size()) != m || m < 3) return false;
    std::map<std::pair<int, int>, int> remaining;
    for (const euleredit::Edge& e : g.edges()) remaining[{e.u, e.v}] = 1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i];
        int b = walk[(i + 1) % walk.size()];
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        auto it = remaining.find({a, b});
        if (it == remaining.end() || it->second == 0) return false;
        it->second = 0;
    }
    for (const auto& [edge, count] : remaining) {
        if (count != 0) return false;
    }
    return true;
}

// Connectivity by boolean transitive closure (Floyd–Warshall style).
inline bool connected_by_transitive_closure(const euleredit::Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    for (const euleredit::Edge& e : g.edges()) reach[e.u][e.v] = reach[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    for (int v = 1; v < n; ++v)
        if (!reach[0][v]) return false;
    return true;
}

// Independent minimum-edit search: toggles commute, so a k-edit outcome is a
// k-subset of the allowed edge universe XORed onto the graph. Deepen over k
// and enumerate subsets directly (no BFS, no visited set).
inline std::optional<int> subset_edit_number(const euleredit::Graph& g, euleredit::EditMode mode,
                                             int max_depth) {
    using euleredit::Edge;
    const int n = g.vertex_count();
    std::vector<Edge> universe;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool present = g.has_edge(u, v);
            if (mode == euleredit::EditMode::Extend && present) continue;
            if (mode == euleredit::EditMode::Reduce && !present) continue;
            universe.emplace_back(u, v);
        }
    }
    const int total = static_cast<int>(universe.size());

    std::vector<Edge> base = g.edges();
    auto eulerian_after = [&](const std::vector<int>& chosen) {
        std::map<std::pair<int, int>, int> edges;
        for (const Edge& e : base) edges[{e.u, e.v}] = 1;
        for (int idx : chosen) {
            const Edge& e = universe[idx];
            auto [it, inserted] = edges.try_emplace({e.u, e.v}, 1);
            if (!inserted) edges.erase(it);
        }
        std::vector<Edge> final_edges;
        for (const auto& [pair, one] : edges) final_edges.emplace_back(pair.first, pair.second);
        return euleredit::is_eulerian(euleredit::Graph(n, std::move(final_edges)));
    };

    for (int k = 0; k <= std::min(max_depth, total); ++k) {
        std::vector<int> chosen(k);
        for (int i = 0; i < k; ++i) chosen[i] = i;
        while (true) {
            if (eulerian_after(chosen)) return k;
            // next lexicographic k-combination of 0..total-1
            int i = k - 1;
            while (i >= 0 && chosen[i] == total - k + i) --i;
            if (i < 0) break;
            ++chosen[i];
            for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Exhaustive maximum clique by subset enumeration; fine up to n ~ 16.
inline int brute_max_clique(const euleredit::Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!(mask & (1u << u))) continue;
            for (int v = u + 1; v < n && clique; ++v) {
                if (!(mask & (1u << v))) continue;
                if (!g.has_edge(u, v)) clique = false;
            }
        }
        if (clique) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace testsupport
