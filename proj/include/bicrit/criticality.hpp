#pragma once

#include <stdexcept>
#include <vector>

#include "bicrit/graph.hpp"
#include "bicrit/matching.hpp"

namespace bicrit {

/// k-factor-criticality: the removal of any k vertices leaves a graph with a
/// perfect matching. Rejects immediately on parity mismatch or minimum degree
/// below k+1 (a k-factor-critical graph has minimum degree at least k+1).
inline bool is_k_factor_critical(const Graph& g, int k, MatchingEngine& eng) {
    const int n = g.order();
    if (k < 1 || k >= n) throw std::invalid_argument("is_k_factor_critical: k out of range");
    if ((n - k) % 2) return false;
    if (g.min_degree() < k + 1) return false;
    return for_each_subset(n, k, [&](const VertexSet& s) {
        return eng.has_perfect_matching_excluding(g, s);
    });
}

inline bool is_k_factor_critical(const Graph& g, int k) {
    return is_k_factor_critical(g, k, worker_engine());
}

/// Bicritical: at least four vertices, and removing any pair of distinct
/// vertices leaves a graph with a perfect matching.
inline bool is_bicritical(const Graph& g, MatchingEngine& eng) {
    return g.order() >= 4 && is_k_factor_critical(g, 2, eng);
}

inline bool is_bicritical(const Graph& g) { return is_bicritical(g, worker_engine()); }

/// DE(g): the edges whose deletion leaves the graph bicritical. Requires a
/// bicritical input.
inline std::vector<Edge> deletable_edges(const Graph& g, MatchingEngine& eng) {
    if (!is_bicritical(g, eng)) throw std::invalid_argument("deletable_edges: input not bicritical");
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (is_bicritical(g.minus_edge(e), eng)) out.push_back(e);
    return out;
}

inline std::vector<Edge> deletable_edges(const Graph& g) {
    return deletable_edges(g, worker_engine());
}

/// Minimal k-factor-criticality: k-factor-critical, and no single edge
/// deletion preserves that.
inline bool is_minimal_k_factor_critical(const Graph& g, int k, MatchingEngine& eng) {
    if (!is_k_factor_critical(g, k, eng)) return false;
    for (const Edge& e : g.edges())
        if (is_k_factor_critical(g.minus_edge(e), k, eng)) return false;
    return true;
}

inline bool is_minimal_k_factor_critical(const Graph& g, int k) {
    return is_minimal_k_factor_critical(g, k, worker_engine());
}

/// Barrier test: c_o(g - s) = |s|. Defined for graphs with a perfect
/// matching; the empty set is a barrier of every such graph.
inline bool is_barrier(const Graph& g, const VertexSet& s, MatchingEngine& eng) {
    if (!eng.has_perfect_matching(g))
        throw std::invalid_argument("is_barrier: input lacks perfect matching");
    return odd_component_count(g, s) == static_cast<int>(s.size());
}

inline bool is_barrier(const Graph& g, const VertexSet& s) {
    return is_barrier(g, s, worker_engine());
}

/// All 2-vertex cuts that are not barriers, ascending lexicographic.
/// Defined for graphs with a perfect matching.
inline std::vector<VertexSet> two_separations(const Graph& g, MatchingEngine& eng) {
    if (!eng.has_perfect_matching(g))
        throw std::invalid_argument("two_separations: input lacks perfect matching");
    std::vector<VertexSet> out;
    for (const VertexSet& cut : vertex_cuts(g, 2))
        if (odd_component_count(g, cut) != 2) out.push_back(cut);
    return out;
}

inline std::vector<VertexSet> two_separations(const Graph& g) {
    return two_separations(g, worker_engine());
}

enum class BrickKind {
    not_bicritical,
    bicritical_not_brick,
    brick_not_minimal,
    minimal_brick,
};

inline const char* to_string(BrickKind k) {
    switch (k) {
        case BrickKind::not_bicritical: return "not-bicritical";
        case BrickKind::bicritical_not_brick: return "bicritical-not-brick";
        case BrickKind::brick_not_minimal: return "brick-not-minimal";
        case BrickKind::minimal_brick: return "minimal-brick";
    }
    return "?";
}

inline bool is_brick(const Graph& g, MatchingEngine& eng) {
    return is_k_connected(g, 3) && is_bicritical(g, eng);
}

/// Brick classification. A minimal brick is a brick where every single-edge
/// deletion destroys brickness (3-connectivity or bicriticality).
inline BrickKind classify_brick(const Graph& g, MatchingEngine& eng) {
    if (!is_bicritical(g, eng)) return BrickKind::not_bicritical;
    if (!is_k_connected(g, 3)) return BrickKind::bicritical_not_brick;
    for (const Edge& e : g.edges())
        if (is_brick(g.minus_edge(e), eng)) return BrickKind::brick_not_minimal;
    return BrickKind::minimal_brick;
}

inline BrickKind classify_brick(const Graph& g) { return classify_brick(g, worker_engine()); }

}  // namespace bicrit
