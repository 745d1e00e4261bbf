#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "euleredit/graph.hpp"

namespace euleredit {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
inline constexpr std::uint64_t kEdgeSalt = 0xbf58476d1ce4e5b9ULL;

// splitmix64 finalizer (Stafford mix 13). Fixed for all time: sampled graphs
// must be bit-identical across platforms for a given seed.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Uniform in [0,1) with 53 random bits.
constexpr double to_unit(std::uint64_t x) noexcept {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Deterministic seed for the G(n,p) sampler.
///
/// Per-trial streams derive as stream(i); per-edge decisions are keyed by the
/// edge's position in lexicographic (u,v) order, u < v, so any subset of edges
/// can be re-derived independently. Same (master, n, p) always reproduces the
/// same edge set.
struct Seed {
    std::uint64_t master = 0;

    Seed stream(std::uint64_t index) const noexcept {
        return Seed{detail::mix64(master + detail::kGolden * (index + 1))};
    }

    double edge_uniform(std::uint64_t edge_index) const noexcept {
        return detail::to_unit(detail::mix64(master ^ (detail::kEdgeSalt * (edge_index + 1))));
    }

    friend bool operator==(const Seed&, const Seed&) = default;
};

/// Erdős–Rényi G(n,p): each of the C(n,2) vertex pairs is an edge
/// independently with probability p, decided in lexicographic pair order.
inline Graph sample_gnp(int n, double p, Seed seed) {
    if (n < 0) throw std::invalid_argument("sample_gnp: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("sample_gnp: p must lie in [0,1], got " + std::to_string(p));
    }
    std::vector<Edge> edges;
    if (p > 0.0) {
        edges.reserve(static_cast<std::size_t>(
            p * static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0 + 16.0));
        std::uint64_t e = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v, ++e) {
                if (seed.edge_uniform(e) < p) edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// Classification of (n, p) against the two p-windows used by the estimates:
/// strong: (ln n)^2 / sqrt(n) <= p <= 1 - (ln n)^2 / sqrt(n)
/// weak:   (ln n)^2 / n       <= p <= 1 - (ln n)^2 / n
/// Logs are natural. The strong window is empty below n ~ 5000.
struct ProbabilityWindow {
    int n = 0;
    double p = 0.0;
    bool strong_ok = false;
    bool weak_ok = false;
    double strong_lower = 0.0;
    double strong_upper = 0.0;
    double weak_lower = 0.0;
    double weak_upper = 0.0;
};

inline ProbabilityWindow classify_p(int n, double p) {
    if (n < 2) throw std::invalid_argument("classify_p: need n >= 2");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("classify_p: p must lie in [0,1]");
    }
    const double log_sq = std::log(static_cast<double>(n)) * std::log(static_cast<double>(n));
    ProbabilityWindow w;
    w.n = n;
    w.p = p;
    w.strong_lower = log_sq / std::sqrt(static_cast<double>(n));
    w.strong_upper = 1.0 - w.strong_lower;
    w.weak_lower = log_sq / static_cast<double>(n);
    w.weak_upper = 1.0 - w.weak_lower;
    w.strong_ok = w.strong_lower <= p && p <= w.strong_upper;
    w.weak_ok = w.weak_lower <= p && p <= w.weak_upper;
    return w;
}

/// epsilon_b = (1/2) (1-2p)^(n-b), sign preserved.
inline double epsilon_b(int n, double p, int b) {
    if (b < 1 || b > n) throw std::invalid_argument("epsilon_b: need 1 <= b <= n");
    return 0.5 * std::pow(1.0 - 2.0 * p, n - b);
}

/// P(a fixed vertex of G(n,p) has odd degree) = (1/2)(1 - (1-2p)^(n-1)).
inline double odd_degree_prob(int n, double p) {
    if (n < 1) throw std::invalid_argument("odd_degree_prob: need n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("odd_degree_prob: p must lie in [0,1]");
    }
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, n - 1));
}

}  // namespace euleredit
