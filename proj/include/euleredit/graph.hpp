#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace euleredit {

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) {
            throw std::invalid_argument("Edge: self-loop (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
        if (a < 0 || b < 0) {
            throw std::invalid_argument("Edge: negative vertex id");
        }
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction; safe to share across threads. Edits are
/// modeled by building a new Graph (see editors.hpp).
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (const Edge& e : edges_) {
            if (e.v >= n_) {
                throw std::invalid_argument("Graph: edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") out of range for n=" +
                                            std::to_string(n_));
            }
        }
        if (!std::is_sorted(edges_.begin(), edges_.end())) {
            std::sort(edges_.begin(), edges_.end());
        }
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw std::invalid_argument("Graph: duplicate edge");
        }
        adj_.resize(static_cast<std::size_t>(n_));
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nbrs : adj_) {
            if (!std::is_sorted(nbrs.begin(), nbrs.end())) std::sort(nbrs.begin(), nbrs.end());
        }
    }

    static Graph complete(int n) {
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
        return Graph(n, std::move(es));
    }

    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("Graph::cycle: need n >= 3");
        std::vector<Edge> es;
        es.reserve(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
        return Graph(n, std::move(es));
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& a = adj_[static_cast<std::size_t>(u)];
        const auto& b = adj_[static_cast<std::size_t>(v)];
        const auto& small = a.size() <= b.size() ? a : b;
        const int other = a.size() <= b.size() ? v : u;
        return std::binary_search(small.begin(), small.end(), other);
    }

    friend bool operator==(const Graph& lhs, const Graph& rhs) {
        return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n_));
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Per-vertex degrees, indexed by vertex id.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    return deg;
}

/// Vertices of odd degree, ascending. The count is always even.
inline std::vector<int> odd_vertices(const Graph& g) {
    std::vector<int> odd;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) odd.push_back(v);
    }
    return odd;
}

/// True iff every vertex is reachable from vertex 0 (n <= 1 counts as connected).
inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

/// Graph on the same vertices whose edges are exactly the non-edges of g.
inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> es;
    std::vector<char> row(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbors(u)) row[static_cast<std::size_t>(w)] = 1;
        for (int v = u + 1; v < n; ++v) {
            if (!row[static_cast<std::size_t>(v)]) es.emplace_back(u, v);
        }
        for (int w : g.neighbors(u)) row[static_cast<std::size_t>(w)] = 0;
    }
    return Graph(n, std::move(es));
}

/// Vertices adjacent to both u and v, ascending; u and v themselves excluded.
inline std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common_neighbors: endpoints must differ");
    const auto& a = g.neighbors(u);  // also validates range
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

enum class EulerianDefect { OddDegrees, Disconnected, TooFewEdges };

inline const char* to_string(EulerianDefect d) {
    switch (d) {
        case EulerianDefect::OddDegrees: return "parity";
        case EulerianDefect::Disconnected: return "connectivity";
        case EulerianDefect::TooFewEdges: return "too-few-edges";
    }
    return "?";
}

/// First failing Eulerian condition, or nullopt if g is Eulerian.
///
/// Eulerian here means: every degree even, connected on all n vertices, and
/// at least three edges. Checked in that order.
inline std::optional<EulerianDefect> eulerian_defect(const Graph& g) {
    if (!odd_vertices(g).empty()) return EulerianDefect::OddDegrees;
    if (!is_connected(g)) return EulerianDefect::Disconnected;
    if (g.edge_count() < 3) return EulerianDefect::TooFewEdges;
    return std::nullopt;
}

inline bool is_eulerian(const Graph& g) { return !eulerian_defect(g).has_value(); }

/// Closed walk (u_1, ..., u_t) interpreted cyclically; t equals the edge count
/// of the source graph and every edge is traversed exactly once.
struct EulerCircuit {
    std::vector<int> walk;
};

class NotEulerianError : public std::runtime_error {
public:
    NotEulerianError(EulerianDefect defect, std::vector<int> odd)
        : std::runtime_error(make_message(defect, odd)),
          defect_(defect),
          odd_(std::move(odd)) {}

    EulerianDefect defect() const noexcept { return defect_; }
    const std::vector<int>& odd_degree_vertices() const noexcept { return odd_; }

private:
    static std::string make_message(EulerianDefect defect, const std::vector<int>& odd) {
        std::string msg = "not Eulerian: ";
        if (defect == EulerianDefect::OddDegrees) {
            msg += "odd-degree vertices";
            for (int v : odd) msg += " " + std::to_string(v);
        } else if (defect == EulerianDefect::Disconnected) {
            msg += "graph is not connected on all vertices";
        } else {
            msg += "fewer than three edges";
        }
        return msg;
    }

    EulerianDefect defect_;
    std::vector<int> odd_;
};

/// Eulerian circuit via iterative Hierholzer.
///
/// Deterministic: from each vertex the smallest-labeled neighbor with an
/// unused edge is taken first. Throws NotEulerianError when no circuit exists.
inline EulerCircuit euler_circuit(const Graph& g) {
    if (auto defect = eulerian_defect(g)) {
        throw NotEulerianError(*defect, odd_vertices(g));
    }
    const int n = g.vertex_count();
    const int m = g.edge_count();

    struct HalfEdge {
        int to;
        int id;
    };
    std::vector<std::vector<HalfEdge>> adj(static_cast<std::size_t>(n));
    for (int id = 0; id < m; ++id) {
        const Edge& e = g.edges()[static_cast<std::size_t>(id)];
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end(),
                  [](const HalfEdge& a, const HalfEdge& b) { return a.to < b.to; });
    }

    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    std::vector<int> closed;
    closed.reserve(static_cast<std::size_t>(m) + 1);

    while (!stack.empty()) {
        const int u = stack.back();
        auto& cursor = next[static_cast<std::size_t>(u)];
        const auto& list = adj[static_cast<std::size_t>(u)];
        while (cursor < list.size() && used[static_cast<std::size_t>(list[cursor].id)]) ++cursor;
        if (cursor < list.size()) {
            const HalfEdge he = list[cursor];
            used[static_cast<std::size_t>(he.id)] = 1;
            stack.push_back(he.to);
        } else {
            closed.push_back(u);
            stack.pop_back();
        }
    }
    std::reverse(closed.begin(), closed.end());
    // closed = (v_0, ..., v_m) with v_0 == v_m; drop the repeated endpoint.
    closed.pop_back();
    return EulerCircuit{std::move(closed)};
}

}  // namespace euleredit
