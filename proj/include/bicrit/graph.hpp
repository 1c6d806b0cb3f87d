#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicrit {

/// Subset of vertex indices of a specific graph, kept sorted ascending.
using VertexSet = std::vector<int>;

/// Unordered pair of distinct vertex indices, normalized to u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: self-loop " + std::to_string(a));
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on dense vertex indices 0..n-1.
///
/// Adjacency is one bitset row per vertex, so neighborhood intersections
/// and component sweeps work a machine word at a time. Vertex counts are
/// unbounded in principle (the graph6 long form needs n > 62), but all
/// analysis here runs on small graphs.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, std::span<const Edge> edges) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
        Graph g(n);
        for (const Edge& e : edges) {
            if (e.v >= n || e.u < 0)
                throw std::invalid_argument("Graph: endpoint out of range");
            g.set_edge(e.u, e.v);
        }
        g.recount();
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return m_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
        return d;
    }

    int min_degree() const {
        int best = n_ == 0 ? 0 : n_;
        for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
        return best;
    }

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    /// Calls fn(u) for every neighbor u of v in ascending order.
    template <class F>
    void for_neighbors(int v, F&& fn) const {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t x = r[w];
            while (x) {
                fn((w << 6) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    VertexSet neighbors(int v) const {
        VertexSet out;
        for_neighbors(v, [&](int u) { out.push_back(u); });
        return out;
    }

    /// All edges, ascending lexicographic.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for_neighbors(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    Graph minus_edge(Edge e) const {
        if (!has_edge(e.u, e.v)) throw std::invalid_argument("minus_edge: edge not present");
        Graph g = *this;
        g.clear_edge(e.u, e.v);
        g.m_ -= 1;
        return g;
    }

    Graph plus_edge(Edge e) const {
        if (e.v >= n_) throw std::invalid_argument("plus_edge: endpoint out of range");
        if (has_edge(e.u, e.v)) return *this;
        Graph g = *this;
        g.set_edge(e.u, e.v);
        g.m_ += 1;
        return g;
    }

    /// Graph extended by one fresh vertex (index n) adjacent to `attach`.
    Graph plus_vertex(const VertexSet& attach) const {
        Graph g(n_ + 1);
        for (int u = 0; u < n_; ++u)
            for_neighbors(u, [&](int v) {
                if (u < v) g.set_edge(u, v);
            });
        for (int u : attach) {
            if (u < 0 || u >= n_) throw std::invalid_argument("plus_vertex: endpoint out of range");
            g.set_edge(u, n_);
        }
        g.recount();
        return g;
    }

    /// Induced subgraph on `keep` (sorted ascending); vertex i of the result
    /// is keep[i].
    Graph induced(const VertexSet& keep) const {
        Graph g(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (has_edge(keep[i], keep[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
        g.recount();
        return g;
    }

    /// Induced subgraph after deleting `drop` (sorted ascending); surviving
    /// vertices are renumbered densely in ascending order.
    Graph minus_vertices(const VertexSet& drop) const {
        VertexSet keep;
        keep.reserve(n_);
        std::size_t k = 0;
        for (int v = 0; v < n_; ++v) {
            if (k < drop.size() && drop[k] == v) {
                ++k;
                continue;
            }
            keep.push_back(v);
        }
        return induced(keep);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    explicit Graph(int n)
        : n_(n), words_(n == 0 ? 1 : (n + 63) / 64), bits_(static_cast<std::size_t>(n) * (n == 0 ? 1 : (n + 63) / 64), 0) {}

    void set_edge(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    void clear_edge(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    }

    void recount() {
        int total = 0;
        for (std::uint64_t w : bits_) total += std::popcount(w);
        m_ = total / 2;
    }

    int n_ = 0;
    int m_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> bits_;
};

namespace detail {

/// Word-mask view of a vertex subset.
inline std::vector<std::uint64_t> mask_of(const VertexSet& s, int words) {
    std::vector<std::uint64_t> m(words, 0);
    for (int v : s) m[v >> 6] |= std::uint64_t{1} << (v & 63);
    return m;
}

inline std::vector<int> mask_vertices(const std::vector<std::uint64_t>& m) {
    std::vector<int> out;
    for (std::size_t w = 0; w < m.size(); ++w) {
        std::uint64_t x = m[w];
        while (x) {
            out.push_back(static_cast<int>((w << 6) + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

}  // namespace detail

/// Connected components of g - excluded, each ascending, ordered by their
/// smallest vertex.
inline std::vector<VertexSet> components_excluding(const Graph& g, const VertexSet& excluded) {
    const int n = g.order();
    const int words = g.words();
    std::vector<std::uint64_t> visited = detail::mask_of(excluded, words);
    std::vector<VertexSet> comps;
    std::vector<std::uint64_t> frontier(words), comp(words), fresh(words);
    for (int v = 0; v < n; ++v) {
        if ((visited[v >> 6] >> (v & 63)) & 1) continue;
        std::fill(frontier.begin(), frontier.end(), 0);
        std::fill(comp.begin(), comp.end(), 0);
        frontier[v >> 6] |= std::uint64_t{1} << (v & 63);
        comp[v >> 6] |= std::uint64_t{1} << (v & 63);
        visited[v >> 6] |= std::uint64_t{1} << (v & 63);
        while (true) {
            std::fill(fresh.begin(), fresh.end(), 0);
            bool any = false;
            for (int w = 0; w < words; ++w) {
                std::uint64_t x = frontier[w];
                while (x) {
                    int u = (w << 6) + std::countr_zero(x);
                    x &= x - 1;
                    const std::uint64_t* r = g.row(u);
                    for (int w2 = 0; w2 < words; ++w2) fresh[w2] |= r[w2] & ~visited[w2];
                }
            }
            for (int w = 0; w < words; ++w) {
                visited[w] |= fresh[w];
                comp[w] |= fresh[w];
                any = any || fresh[w];
            }
            if (!any) break;
            frontier = fresh;
        }
        comps.push_back(detail::mask_vertices(comp));
    }
    return comps;
}

inline std::vector<VertexSet> components(const Graph& g) {
    return components_excluding(g, {});
}

inline bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

/// Number of odd-order components of g - s.
inline int odd_component_count(const Graph& g, const VertexSet& s) {
    int odd = 0;
    for (const VertexSet& c : components_excluding(g, s))
        if (c.size() % 2 == 1) ++odd;
    return odd;
}

/// Vertices of degree exactly 3.
inline VertexSet cubic_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 3) out.push_back(v);
    return out;
}

/// Calls fn(const VertexSet&) for every size-k subset of 0..n-1 in ascending
/// lexicographic order; fn returns false to stop early. Returns true when the
/// enumeration ran to completion.
template <class F>
bool for_each_subset(int n, int k, F&& fn) {
    if (k < 0 || k > n) return true;
    VertexSet idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(static_cast<const VertexSet&>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// All size-`size` vertex subsets whose removal disconnects g, ascending
/// lexicographic. Requires a connected input.
inline std::vector<VertexSet> vertex_cuts(const Graph& g, int size) {
    if (!is_connected(g)) throw std::invalid_argument("vertex_cuts: disconnected input");
    if (size >= g.order()) throw std::invalid_argument("vertex_cuts: size must be < order");
    std::vector<VertexSet> cuts;
    for_each_subset(g.order(), size, [&](const VertexSet& s) {
        if (components_excluding(g, s).size() > 1) cuts.push_back(s);
        return true;
    });
    return cuts;
}

/// k-connectivity test: |V| > k and no cut of size < k.
inline bool is_k_connected(const Graph& g, int k) {
    if (g.order() <= k) return false;
    if (!is_connected(g)) return false;
    for (int c = 1; c < k; ++c) {
        bool found_cut = !for_each_subset(g.order(), c, [&](const VertexSet& s) {
            return components_excluding(g, s).size() <= 1;
        });
        if (found_cut) return false;
    }
    return true;
}

/// True iff g contains K_{3,3} as a (not necessarily induced) subgraph:
/// two disjoint triples with all nine cross edges.
inline bool contains_k33(const Graph& g) {
    const int n = g.order();
    if (n < 6) return false;
    const int words = g.words();
    bool found = false;
    for_each_subset(n, 3, [&](const VertexSet& t) {
        int count = 0;
        for (int w = 0; w < words; ++w) {
            std::uint64_t common = g.row(t[0])[w] & g.row(t[1])[w] & g.row(t[2])[w];
            // the opposite triple must be disjoint from this one
            for (int v : t)
                if ((v >> 6) == w) common &= ~(std::uint64_t{1} << (v & 63));
            count += std::popcount(common);
        }
        if (count >= 3) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

struct WheelCheck {
    bool contains_wheel;  // some W_k, k >= 3, occurs as a subgraph
    bool is_wheel;        // g itself is exactly a wheel
};

/// A wheel subgraph exists iff some vertex's neighborhood induces a cycle,
/// i.e. the neighborhood-induced subgraph is not a forest.
inline WheelCheck contains_wheel(const Graph& g) {
    const int n = g.order();
    bool found = false;
    for (int v = 0; v < n && !found; ++v) {
        Graph h = g.induced(g.neighbors(v));
        // forest test: every component has edges = vertices - 1
        int comp_deficit = 0;
        for (const VertexSet& c : components(h)) comp_deficit += static_cast<int>(c.size()) - 1;
        if (h.size() > comp_deficit) found = true;
    }
    bool wheel = false;
    if (n >= 4) {
        for (int hub = 0; hub < n && !wheel; ++hub) {
            if (g.degree(hub) != n - 1) continue;
            Graph rim = g.minus_vertices({hub});
            bool cycle = rim.size() == rim.order() && is_connected(rim);
            for (int v = 0; v < rim.order(); ++v)
                if (rim.degree(v) != 2) cycle = false;
            if (cycle) wheel = true;
        }
    }
    return {found, wheel};
}

}  // namespace bicrit
