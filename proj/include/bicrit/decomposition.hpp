#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicrit/canonical.hpp"
#include "bicrit/criticality.hpp"
#include "bicrit/graph.hpp"
#include "bicrit/matching.hpp"

namespace bicrit {

/// A graph node inside a decomposition: local vertices map back to original
/// identities via `origin`, and marker edges are the cut edges added (or
/// retained) by splits above this node.
struct LabeledGraph {
    Graph graph;
    std::vector<int> origin;    // local index -> original vertex id
    std::vector<Edge> markers;  // sorted ascending, local indices

    bool is_marker(Edge e) const {
        return std::binary_search(markers.begin(), markers.end(), e);
    }

    Edge to_origin(Edge e) const { return Edge(origin[e.u], origin[e.v]); }
};

inline LabeledGraph root_labeled(const Graph& g) {
    LabeledGraph lg{g, std::vector<int>(g.order()), {}};
    std::iota(lg.origin.begin(), lg.origin.end(), 0);
    return lg;
}

/// Splits a node at a 2-separation {u,v} (local indices).
///
/// The components of g - {u,v} fall into two groups: the component holding
/// the lowest original vertex id forms the first child, everything else the
/// second. Each child keeps its group plus u and v with all induced edges,
/// gains the edge uv when missing, and flags uv as a marker in both children.
/// Markers of the parent carry over to the child containing both endpoints;
/// a parent marker equal to {u,v} itself ends up marked in both children.
inline std::pair<LabeledGraph, LabeledGraph> split_at(const LabeledGraph& node, int u, int v) {
    const Graph& g = node.graph;
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw std::invalid_argument("split_at: bad cut pair");
    if (u > v) std::swap(u, v);
    auto comps = components_excluding(g, {u, v});
    if (comps.size() < 2) throw std::invalid_argument("split_at: cut does not disconnect");
    if (odd_component_count(g, {u, v}) == 2)
        throw std::invalid_argument("split_at: cut is a barrier, not a 2-separation");

    // comps are ordered by smallest local vertex; map to smallest origin
    std::size_t first = 0;
    int best_origin = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        int lowest = node.origin[comps[i][0]];
        for (int x : comps[i]) lowest = std::min(lowest, node.origin[x]);
        if (best_origin == -1 || lowest < best_origin) {
            best_origin = lowest;
            first = i;
        }
    }

    auto build_child = [&](const std::vector<VertexSet>& group) {
        VertexSet verts = {u, v};
        for (const auto& comp : group) verts.insert(verts.end(), comp.begin(), comp.end());
        std::sort(verts.begin(), verts.end());
        if (verts.size() <= 2) throw std::invalid_argument("split_at: child would have <= 2 vertices");

        std::vector<int> local_of(g.order(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<int>(i);

        LabeledGraph child;
        child.origin.reserve(verts.size());
        for (int x : verts) child.origin.push_back(node.origin[x]);

        std::vector<Edge> edges;
        for (int x : verts)
            g.for_neighbors(x, [&](int y) {
                if (y > x && local_of[y] >= 0) edges.emplace_back(local_of[x], local_of[y]);
            });
        Edge cut_edge(local_of[u], local_of[v]);
        edges.push_back(cut_edge);
        child.graph = Graph::from_edge_list(static_cast<int>(verts.size()), edges);

        child.markers.push_back(cut_edge);
        for (const Edge& m : node.markers) {
            if (local_of[m.u] < 0 || local_of[m.v] < 0) continue;
            Edge local(local_of[m.u], local_of[m.v]);
            if (local != cut_edge) child.markers.push_back(local);
        }
        std::sort(child.markers.begin(), child.markers.end());
        return child;
    };

    std::vector<VertexSet> group_a = {comps[first]};
    std::vector<VertexSet> group_b;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != first) group_b.push_back(comps[i]);
    return {build_child(group_a), build_child(group_b)};
}

/// How the next 2-separation is chosen during a decomposition.
struct SeparationPolicy {
    enum class Kind { lexicographic, seeded_random };
    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;

    static SeparationPolicy lex() { return {Kind::lexicographic, 0}; }
    static SeparationPolicy random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

/// The binary tree T_G of a brick decomposition: the root is the input graph,
/// each internal node records the 2-separation it was split at (original
/// ids), and the leaves are bricks.
class DecompositionTree {
public:
    struct Node {
        LabeledGraph lg;
        int left = -1;
        int right = -1;
        std::array<int, 2> split_origin = {-1, -1};  // valid on internal nodes

        bool is_leaf() const { return left < 0; }
    };

    explicit DecompositionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& root() const { return nodes_.front(); }

    std::vector<int> leaves() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].is_leaf()) out.push_back(static_cast<int>(i));
        return out;
    }

    int leaf_count() const { return static_cast<int>(leaves().size()); }
    int internal_count() const { return static_cast<int>(nodes_.size()) - leaf_count(); }

private:
    std::vector<Node> nodes_;
};

/// Repeatedly splits non-3-connected nodes at policy-chosen 2-separations
/// until every leaf is 3-connected. Requires a bicritical root; every 2-cut
/// of a bicritical graph is a 2-separation, so splitting never stalls.
inline DecompositionTree brick_decomposition(const Graph& g, const SeparationPolicy& policy,
                                             MatchingEngine& eng) {
    if (!is_bicritical(g, eng))
        throw std::invalid_argument("brick_decomposition: input not bicritical");
    std::mt19937_64 rng(policy.seed);
    std::vector<DecompositionTree::Node> nodes;
    nodes.push_back({root_labeled(g), -1, -1, {-1, -1}});
    // nodes grow while we walk; index loop instead of iterators
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Graph& h = nodes[i].lg.graph;
        if (is_k_connected(h, 3)) continue;
        auto seps = two_separations(h, eng);
        if (seps.empty()) throw std::logic_error("brick_decomposition: no 2-separation found");

        std::size_t pick = 0;
        if (policy.kind == SeparationPolicy::Kind::seeded_random) {
            pick = static_cast<std::size_t>(rng() % seps.size());
        } else {
            auto origin_pair = [&](const VertexSet& s) {
                int a = nodes[i].lg.origin[s[0]], b = nodes[i].lg.origin[s[1]];
                return std::pair(std::min(a, b), std::max(a, b));
            };
            for (std::size_t j = 1; j < seps.size(); ++j)
                if (origin_pair(seps[j]) < origin_pair(seps[pick])) pick = j;
        }

        auto [a, b] = split_at(nodes[i].lg, seps[pick][0], seps[pick][1]);
        if (a.graph.order() >= h.order() || b.graph.order() >= h.order())
            throw std::logic_error("brick_decomposition: split did not shrink");
        nodes[i].split_origin = {nodes[i].lg.origin[seps[pick][0]], nodes[i].lg.origin[seps[pick][1]]};
        nodes[i].left = static_cast<int>(nodes.size());
        nodes[i].right = static_cast<int>(nodes.size()) + 1;
        nodes.push_back({std::move(a), -1, -1, {-1, -1}});
        nodes.push_back({std::move(b), -1, -1, {-1, -1}});
    }
    return DecompositionTree(std::move(nodes));
}

inline DecompositionTree brick_decomposition(const Graph& g, const SeparationPolicy& policy) {
    return brick_decomposition(g, policy, worker_engine());
}

struct TreeCounts {
    int splits;        // s(G): internal nodes
    int bricks;        // b(G): leaves
    int marker_total;  // sum of leaf marker counts
};

inline TreeCounts tree_counts(const DecompositionTree& t) {
    TreeCounts c{t.internal_count(), t.leaf_count(), 0};
    for (int i : t.leaves()) c.marker_total += static_cast<int>(t.nodes()[i].lg.markers.size());
    return c;
}

/// Multiset of leaf canonical codes (markers ignored), sorted.
inline std::vector<std::string> brick_multiset(const DecompositionTree& t) {
    std::vector<std::string> codes;
    for (int i : t.leaves()) codes.push_back(canonical_form(t.nodes()[i].lg.graph));
    std::sort(codes.begin(), codes.end());
    return codes;
}

/// Gluing on a shared pair: u1 and u2 become vertex 0, v1 and v2 become
/// vertex 1, the remaining vertices of h1 then h2 follow in ascending order,
/// and the edge sets are united. Inverse of a split when the marker edges
/// are removed first.
inline Graph glue(const Graph& h1, int u1, int v1, const Graph& h2, int u2, int v2) {
    if (u1 == v1 || u2 == v2) throw std::invalid_argument("glue: pair endpoints must be distinct");
    auto map_of = [](const Graph& h, int u, int v) {
        std::vector<int> m(h.order());
        int next = 2;
        for (int x = 0; x < h.order(); ++x) m[x] = x == u ? 0 : x == v ? 1 : next++;
        return m;
    };
    std::vector<int> m1 = map_of(h1, u1, v1);
    std::vector<int> m2 = map_of(h2, u2, v2);
    for (int& x : m2)
        if (x >= 2) x += h1.order() - 2;
    std::vector<Edge> edges;
    for (const Edge& e : h1.edges()) edges.emplace_back(m1[e.u], m1[e.v]);
    for (const Edge& e : h2.edges()) edges.emplace_back(m2[e.u], m2[e.v]);
    return Graph::from_edge_list(h1.order() + h2.order() - 2, edges);
}

/// DOT rendering of T_G: internal nodes labeled with their split pair
/// (original ids), leaves with canonical code and marker count, plus one
/// cluster per node dumping its graph with marker edges bold.
inline std::string to_dot(const DecompositionTree& t) {
    std::ostringstream out;
    out << "graph decomposition {\n  node [shape=box];\n";
    const auto& nodes = t.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& nd = nodes[i];
        if (nd.is_leaf()) {
            out << "  t" << i << " [label=\"brick " << canonical_form(nd.lg.graph)
                << "\\nmarkers=" << nd.lg.markers.size() << "\"];\n";
        } else {
            out << "  t" << i << " [label=\"split {" << nd.split_origin[0] << ","
                << nd.split_origin[1] << "}\"];\n";
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!nodes[i].is_leaf())
            out << "  t" << i << " -- t" << nodes[i].left << ";\n  t" << i << " -- t"
                << nodes[i].right << ";\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& lg = nodes[i].lg;
        out << "  subgraph cluster_t" << i << " {\n    label=\"t" << i << "\";\n";
        for (int v = 0; v < lg.graph.order(); ++v)
            out << "    t" << i << "_v" << v << " [shape=circle,label=\"" << lg.origin[v] << "\"];\n";
        for (const Edge& e : lg.graph.edges()) {
            out << "    t" << i << "_v" << e.u << " -- t" << i << "_v" << e.v;
            if (lg.is_marker(e)) out << " [style=bold]";
            out << ";\n";
        }
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace bicrit
