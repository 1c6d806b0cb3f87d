#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicrit/graph.hpp"
#include "bicrit/graph6.hpp"

namespace bicrit {

/// Canonical labeling works by equitable degree-partition refinement with
/// backtracking over individualized vertices; adequate for small orders.
inline constexpr int kCanonicalOrderLimit = 16;

struct CanonicalAnalysis {
    std::string code;                          // graph6 of the canonically relabeled graph
    std::vector<int> labeling;                 // labeling[v] = canonical position of v
    std::vector<int> orbit;                    // smallest vertex of v's automorphism orbit
    std::vector<std::vector<int>> generators;  // automorphisms discovered during the search
};

/// Relabeled copy: edge (u,v) becomes (lab[u], lab[v]).
inline Graph apply_labeling(const Graph& g, const std::vector<int>& lab) {
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) edges.emplace_back(lab[e.u], lab[e.v]);
    return Graph::from_edge_list(g.order(), edges);
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep smallest vertex as representative
        return true;
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), uf_(std::max(n_, 1)) {}

    void run() {
        Partition cells;
        if (n_ > 0) {
            std::vector<int> all(n_);
            std::iota(all.begin(), all.end(), 0);
            cells.push_back(std::move(all));
        }
        refine(cells);
        dfs(cells, 0);
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::vector<std::uint8_t> best_code_;
    std::vector<int> best_labeling_;
    std::vector<std::vector<int>> autos_;
    UnionFind uf_;

private:
    using Partition = std::vector<std::vector<int>>;

    static constexpr std::size_t kPruneWindow = 256;

    std::uint64_t row(int v) const { return g_.row(v)[0]; }

    static std::uint64_t cell_mask(const std::vector<int>& cell) {
        std::uint64_t m = 0;
        for (int v : cell) m |= std::uint64_t{1} << v;
        return m;
    }

    // Equitable refinement: split any cell whose members see a splitter cell
    // with differing edge counts; sub-cells ordered by ascending count.
    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
                std::uint64_t smask = cell_mask(cells[si]);
                for (std::size_t ti = 0; ti < cells.size() && !changed; ++ti) {
                    auto& target = cells[ti];
                    if (target.size() <= 1) continue;
                    std::vector<std::pair<int, int>> keyed;  // (count into splitter, vertex)
                    keyed.reserve(target.size());
                    bool uniform = true;
                    for (int v : target) {
                        int c = std::popcount(row(v) & smask);
                        if (!keyed.empty() && c != keyed.front().first) uniform = false;
                        keyed.emplace_back(c, v);
                    }
                    if (uniform) continue;
                    std::sort(keyed.begin(), keyed.end());
                    Partition next;
                    next.reserve(cells.size() + 2);
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i != ti) {
                            next.push_back(std::move(cells[i]));
                            continue;
                        }
                        std::vector<int> group;
                        for (std::size_t j = 0; j < keyed.size(); ++j) {
                            if (j > 0 && keyed[j].first != keyed[j - 1].first) {
                                next.push_back(std::move(group));
                                group.clear();
                            }
                            group.push_back(keyed[j].second);
                        }
                        next.push_back(std::move(group));
                    }
                    cells = std::move(next);
                    changed = true;
                }
            }
        }
    }

    // An equitable partition is a homogeneous tail when every non-singleton
    // cell induces a clique or an independent set and every pair of
    // non-singleton cells is fully joined or fully disjoint. Then every
    // completion of the ordering yields the same code, and the symmetric
    // groups of the cells are automorphisms: one representative leaf plus
    // in-cell transpositions stand in for the whole subtree.
    bool homogeneous_tail(const Partition& cells) const {
        for (const auto& c : cells) {
            if (c.size() <= 1) continue;
            std::uint64_t cm = cell_mask(c);
            std::uint64_t internal = row(c[0]) & cm;
            bool clique = internal == (cm & ~(std::uint64_t{1} << c[0]));
            bool empty = internal == 0;
            if (!clique && !empty) return false;
            for (int v : c) {
                std::uint64_t want = clique ? (cm & ~(std::uint64_t{1} << v)) : 0;
                if ((row(v) & cm) != want) return false;
            }
            for (const auto& d : cells) {
                if (&d == &c || d.size() <= 1) continue;
                std::uint64_t dm = cell_mask(d);
                std::uint64_t cross = row(c[0]) & dm;
                if (cross != 0 && cross != dm) return false;
                for (int v : c)
                    if ((row(v) & dm) != cross) return false;
            }
        }
        return true;
    }

    // Candidate v at a node is redundant when a discovered automorphism fixes
    // every vertex individualized so far and carries v to a sibling already
    // considered (explored or itself pruned; transitivity keeps this sound).
    // At the root the whole discovered group applies via the orbit test.
    bool pruned(int v, std::uint64_t seen, int depth) {
        if (depth == 0) {
            std::uint64_t s = seen;
            while (s) {
                int u = std::countr_zero(s);
                s &= s - 1;
                if (uf_.find(u) == uf_.find(v)) return true;
            }
            return false;
        }
        auto maps_to_seen = [&](const std::vector<int>& gen) {
            if (!((seen >> gen[v]) & 1)) return false;
            for (int i = 0; i < depth; ++i)
                if (gen[prefix_[i]] != prefix_[i]) return false;
            return true;
        };
        for (std::size_t idx : merge_gens_)
            if (maps_to_seen(autos_[idx])) return true;
        std::size_t window = autos_.size() > kPruneWindow ? autos_.size() - kPruneWindow : 0;
        for (std::size_t idx = autos_.size(); idx-- > window;)
            if (maps_to_seen(autos_[idx])) return true;
        return false;
    }

    void dfs(const Partition& cells, int depth) {
        std::size_t tci = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                tci = i;
                break;
            }
        if (tci == cells.size()) {
            leaf(cells);
            return;
        }
        if (homogeneous_tail(cells)) {
            homogeneous_leaf(cells);
            return;
        }
        std::uint64_t seen = 0;
        for (int v : cells[tci]) {
            if (pruned(v, seen, depth)) {
                seen |= std::uint64_t{1} << v;
                continue;
            }
            seen |= std::uint64_t{1} << v;
            prefix_.resize(depth);
            prefix_.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != tci) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[tci])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            refine(child);
            dfs(child, depth + 1);
        }
    }

    std::vector<std::uint8_t> encode(const std::vector<int>& inv) const {
        std::vector<std::uint8_t> code((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8, 0);
        std::size_t t = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (g_.has_edge(inv[i], inv[j])) code[t >> 3] |= std::uint8_t{1} << (7 - (t & 7));
        return code;
    }

    void record_auto(std::vector<int> alpha) {
        bool identity = true;
        for (int v = 0; v < n_; ++v) identity = identity && alpha[v] == v;
        if (identity) return;
        if (!recorded_.insert(alpha).second) return;
        bool merged = false;
        for (int v = 0; v < n_; ++v) merged = uf_.unite(v, alpha[v]) || merged;
        if (merged) merge_gens_.push_back(autos_.size());
        autos_.push_back(std::move(alpha));
    }

    // Compares the leaf labeling's code against the best; on a tie the two
    // labelings compose to an automorphism.
    void offer(const std::vector<int>& lab, const std::vector<int>& inv) {
        std::vector<std::uint8_t> code = n_ > 1 ? encode(inv) : std::vector<std::uint8_t>{};
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = std::move(code);
            best_labeling_ = lab;
            return;
        }
        if (code != best_code_) return;
        std::vector<int> inv_best(n_);
        for (int v = 0; v < n_; ++v) inv_best[best_labeling_[v]] = v;
        std::vector<int> alpha(n_);
        for (int v = 0; v < n_; ++v) alpha[v] = inv_best[lab[v]];
        record_auto(std::move(alpha));
    }

    void leaf(const Partition& cells) {
        std::vector<int> lab(n_), inv(n_);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            lab[cells[i][0]] = static_cast<int>(i);
            inv[i] = cells[i][0];
        }
        offer(lab, inv);
    }

    void homogeneous_leaf(const Partition& cells) {
        std::vector<int> lab(n_), inv(n_);
        int pos = 0;
        for (const auto& c : cells)
            for (int v : c) {
                lab[v] = pos;
                inv[pos] = v;
                ++pos;
            }
        offer(lab, inv);
        for (const auto& c : cells)
            for (std::size_t i = 0; i + 1 < c.size(); ++i) {
                std::vector<int> alpha(n_);
                std::iota(alpha.begin(), alpha.end(), 0);
                alpha[c[i]] = c[i + 1];
                alpha[c[i + 1]] = c[i];
                record_auto(std::move(alpha));
            }
    }

    std::vector<int> prefix_;
    std::vector<std::size_t> merge_gens_;
    std::set<std::vector<int>> recorded_;
};

}  // namespace detail

inline CanonicalAnalysis canonical_analysis(const Graph& g) {
    if (g.order() > kCanonicalOrderLimit)
        throw std::invalid_argument("canonical_analysis: order above limit");
    detail::CanonSearch search(g);
    search.run();
    CanonicalAnalysis out;
    out.labeling = std::move(search.best_labeling_);
    if (g.order() == 0) out.labeling.clear();
    out.code = emit_graph6(apply_labeling(g, out.labeling));
    out.generators = std::move(search.autos_);
    out.orbit.resize(g.order());
    for (int v = 0; v < g.order(); ++v) out.orbit[v] = search.uf_.find(v);
    return out;
}

/// Canonical code: equal strings iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) { return canonical_analysis(g).code; }

}  // namespace bicrit
