#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bicrit/graph.hpp"

namespace bicrit {

/// A matching: pairwise vertex-disjoint edges of the owning graph,
/// ascending lexicographic.
using Matching = std::vector<Edge>;

/// Maximum matching in general graphs by blossom-contracting augmenting-path
/// search (O(V^3)). Deterministic: augmenting searches start from free
/// vertices in ascending order and scan neighbors in ascending order.
///
/// An engine instance owns its scratch buffers and must not be shared across
/// threads; use one engine per worker.
class MatchingEngine {
public:
    Matching maximum_matching(const Graph& g) {
        run(g, full_mask(g));
        Matching out;
        for (int v = 0; v < g.order(); ++v)
            if (match_[v] > v) out.emplace_back(v, match_[v]);
        return out;
    }

    bool has_perfect_matching(const Graph& g) {
        if (g.order() % 2) return false;
        return 2 * run(g, full_mask(g)) == g.order();
    }

    /// Perfect matching test for g - excluded (excluded sorted ascending).
    bool has_perfect_matching_excluding(const Graph& g, const VertexSet& excluded) {
        int alive_count = g.order() - static_cast<int>(excluded.size());
        if (alive_count % 2) return false;
        auto alive = full_mask(g);
        for (int v : excluded) alive[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        return 2 * run(g, alive) == alive_count;
    }

    /// Matching covered: connected, at least two vertices, and every edge
    /// lies in some perfect matching (force the edge, delete its endpoints,
    /// require a perfect matching on the rest).
    bool is_matching_covered(const Graph& g) {
        if (g.order() < 2 || g.order() % 2) return false;
        if (!is_connected(g)) return false;
        for (const Edge& e : g.edges())
            if (!has_perfect_matching_excluding(g, {e.u, e.v})) return false;
        return true;
    }

    /// Edges whose deletion leaves the graph matching covered. Requires a
    /// matching covered input.
    std::vector<Edge> removable_edges(const Graph& g) {
        if (!is_matching_covered(g))
            throw std::invalid_argument("removable_edges: input not matching covered");
        std::vector<Edge> out;
        for (const Edge& e : g.edges())
            if (is_matching_covered(g.minus_edge(e))) out.push_back(e);
        return out;
    }

private:
    static std::vector<std::uint64_t> full_mask(const Graph& g) {
        std::vector<std::uint64_t> m(g.words(), 0);
        for (int v = 0; v < g.order(); ++v) m[v >> 6] |= std::uint64_t{1} << (v & 63);
        return m;
    }

    bool alive(int v) const { return (alive_[v >> 6] >> (v & 63)) & 1; }

    template <class F>
    void for_alive_neighbors(int v, F&& fn) {
        const std::uint64_t* r = g_->row(v);
        for (std::size_t w = 0; w < alive_.size(); ++w) {
            std::uint64_t x = r[w] & alive_[w];
            while (x) {
                fn(static_cast<int>((w << 6) + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    // Rises alternately from both endpoints of the discovered edge to find
    // the least common ancestor of their blossom bases.
    int lca(int a, int b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
        int x = a;
        while (true) {
            x = base_[x];
            lca_mark_[x] = 1;
            if (match_[x] == -1) break;
            x = p_[match_[x]];
        }
        int y = b;
        while (true) {
            y = base_[y];
            if (lca_mark_[y]) return y;
            y = p_[match_[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    // BFS over the alternating forest from root; returns the free endpoint of
    // an augmenting path, or -1.
    int find_path(int root) {
        const int n = g_->order();
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        for (int v = 0; v < n; ++v) base_[v] = v;
        used_[root] = 1;
        queue_.clear();
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            int result = -1;
            for_alive_neighbors(v, [&](int to) {
                if (result != -1) return;
                if (base_[v] == base_[to] || match_[v] == to) return;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom up to the common base
                    int curbase = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = curbase;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(i);
                            }
                        }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) {
                        result = to;
                    } else {
                        used_[match_[to]] = 1;
                        queue_.push_back(match_[to]);
                    }
                }
            });
            if (result != -1) return result;
        }
        return -1;
    }

    // Returns the cardinality of a maximum matching of g restricted to the
    // alive vertex set; match_ holds the matching afterwards.
    int run(const Graph& g, std::vector<std::uint64_t> alive_mask) {
        g_ = &g;
        alive_ = std::move(alive_mask);
        const int n = g.order();
        match_.assign(n, -1);
        p_.assign(n, -1);
        base_.resize(n);
        used_.assign(n, 0);
        in_blossom_.assign(n, 0);
        lca_mark_.assign(n, 0);

        int cardinality = 0;
        // greedy seed, ascending
        for (int v = 0; v < n; ++v) {
            if (!alive(v) || match_[v] != -1) continue;
            for_alive_neighbors(v, [&](int u) {
                if (match_[v] == -1 && match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    ++cardinality;
                }
            });
        }
        for (int v = 0; v < n; ++v) {
            if (!alive(v) || match_[v] != -1) continue;
            int tail = find_path(v);
            if (tail == -1) continue;
            ++cardinality;
            while (tail != -1) {
                int pv = p_[tail];
                int ppv = match_[pv];
                match_[tail] = pv;
                match_[pv] = tail;
                tail = ppv;
            }
        }
        return cardinality;
    }

    const Graph* g_ = nullptr;
    std::vector<std::uint64_t> alive_;
    std::vector<int> match_, p_, base_, queue_;
    std::vector<char> used_, in_blossom_, lca_mark_;
};

/// Thread-local engine backing the free-function API; one per worker thread.
inline MatchingEngine& worker_engine() {
    thread_local MatchingEngine engine;
    return engine;
}

inline Matching maximum_matching(const Graph& g) { return worker_engine().maximum_matching(g); }

inline bool has_perfect_matching(const Graph& g) { return worker_engine().has_perfect_matching(g); }

inline bool is_matching_covered(const Graph& g) { return worker_engine().is_matching_covered(g); }

inline std::vector<Edge> removable_edges(const Graph& g) { return worker_engine().removable_edges(g); }

}  // namespace bicrit
