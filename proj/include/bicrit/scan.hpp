#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bicrit/canonical.hpp"
#include "bicrit/criticality.hpp"
#include "bicrit/decomposition.hpp"
#include "bicrit/graph.hpp"
#include "bicrit/graph6.hpp"
#include "bicrit/matching.hpp"
#include "bicrit/verify.hpp"

namespace bicrit {

/// Built-in generation limit; larger orders must come from an external
/// graph6 stream.
inline constexpr int kEnumerationOrderLimit = 10;

namespace detail {

/// Orbit representatives (smallest member) of the nonempty attachment masks
/// under the automorphism generators of the parent graph.
inline std::vector<std::uint32_t> mask_orbit_reps(int n, const std::vector<std::vector<int>>& gens) {
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<std::uint32_t> parent(total);
    for (std::uint32_t m = 0; m < total; ++m) parent[m] = m;
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& gen : gens) {
        for (std::uint32_t m = 1; m < total; ++m) {
            std::uint32_t image = 0;
            std::uint32_t rest = m;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                image |= std::uint32_t{1} << gen[v];
            }
            std::uint32_t a = find(m), b = find(image);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::uint32_t> reps;
    for (std::uint32_t m = 1; m < total; ++m)
        if (find(m) == m) reps.push_back(m);
    return reps;
}

/// Canonical-deletion acceptance: the freshly added last vertex must lie in
/// the automorphism orbit of the distinguished deletion vertex (the non-cut
/// vertex with the highest canonical position), so that each isomorphism
/// class is kept exactly once across all construction paths.
inline bool canonical_extension(const Graph& h) {
    CanonicalAnalysis a = canonical_analysis(h);
    int f = -1;
    for (int v = 0; v < h.order(); ++v) {
        if (components_excluding(h, {v}).size() > 1) continue;  // cut vertex
        if (f < 0 || a.labeling[v] > a.labeling[f]) f = v;
    }
    return a.orbit[h.order() - 1] == a.orbit[f];
}

template <class F>
void extend_connected(const Graph& g, int n_target, F& fn) {
    if (g.order() == n_target) {
        fn(g);
        return;
    }
    CanonicalAnalysis pa = canonical_analysis(g);
    for (std::uint32_t mask : mask_orbit_reps(g.order(), pa.generators)) {
        VertexSet attach;
        std::uint32_t rest = mask;
        while (rest) {
            attach.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        Graph h = g.plus_vertex(attach);
        if (canonical_extension(h)) extend_connected(h, n_target, fn);
    }
}

}  // namespace detail

/// Streams every connected simple graph on n vertices exactly once up to
/// isomorphism, by canonical augmentation: each graph is grown from its
/// canonical parent by one vertex, attachment sets taken up to the parent's
/// automorphism orbits.
template <class F>
void for_each_connected(int n, F&& fn) {
    if (n < 1 || n > kEnumerationOrderLimit)
        throw std::invalid_argument("for_each_connected: order outside built-in limit");
    Graph k1 = Graph::from_edge_list(1, {});
    detail::extend_connected(k1, n, fn);
}

inline std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

struct CheckTally {
    long long pass = 0;
    long long vacuous = 0;
    long long fail = 0;
};

/// Per-order aggregation. Witness lists hold canonical graph6 codes; all
/// merging is commutative so results never depend on worker scheduling.
struct OrderStats {
    long long connected = 0;
    long long bicritical = 0;
    long long bricks = 0;
    long long minimal_bricks = 0;
    long long minimal_bicritical = 0;
    long long no_removable = 0;  // minimal bicritical without removable edges
    int min_cubic = -1;          // minimum cubic count among minimal bicritical
    std::vector<std::string> sharpness;  // minimal bicritical with exactly 4 cubic vertices
    std::vector<std::string> fig1;       // removable edge present + a non-minimal split half
    std::map<std::string, CheckTally> tallies;
    std::vector<std::string> failure_lines;

    void merge(OrderStats&& o) {
        connected += o.connected;
        bicritical += o.bicritical;
        bricks += o.bricks;
        minimal_bricks += o.minimal_bricks;
        minimal_bicritical += o.minimal_bicritical;
        no_removable += o.no_removable;
        if (o.min_cubic >= 0 && (min_cubic < 0 || o.min_cubic < min_cubic)) min_cubic = o.min_cubic;
        sharpness.insert(sharpness.end(), o.sharpness.begin(), o.sharpness.end());
        fig1.insert(fig1.end(), o.fig1.begin(), o.fig1.end());
        for (auto& [name, t] : o.tallies) {
            CheckTally& mine = tallies[name];
            mine.pass += t.pass;
            mine.vacuous += t.vacuous;
            mine.fail += t.fail;
        }
        failure_lines.insert(failure_lines.end(), o.failure_lines.begin(), o.failure_lines.end());
    }

    void finalize() {
        std::sort(sharpness.begin(), sharpness.end());
        std::sort(fig1.begin(), fig1.end());
        std::sort(failure_lines.begin(), failure_lines.end());
    }
};

struct CensusReport {
    std::vector<std::string> checks;
    std::map<int, OrderStats> per_order;

    long long total_failures() const {
        long long f = 0;
        for (const auto& [n, s] : per_order)
            for (const auto& [name, t] : s.tallies) f += t.fail;
        return f;
    }

    const CheckTally tally(const std::string& check) const {
        CheckTally total;
        for (const auto& [n, s] : per_order) {
            auto it = s.tallies.find(check);
            if (it == s.tallies.end()) continue;
            total.pass += it->second.pass;
            total.vacuous += it->second.vacuous;
            total.fail += it->second.fail;
        }
        return total;
    }

    std::string render() const {
        std::ostringstream out;
        out << "bicrit census report\n";
        out << "checks:";
        for (const auto& c : checks) out << ' ' << c;
        out << '\n';
        for (const auto& [n, s] : per_order) {
            out << "\n[order " << n << "]\n";
            out << "connected: " << s.connected << '\n';
            out << "bicritical: " << s.bicritical << '\n';
            out << "bricks: " << s.bricks << '\n';
            out << "minimal_bricks: " << s.minimal_bricks << '\n';
            out << "minimal_bicritical: " << s.minimal_bicritical << '\n';
            out << "minimal_bicritical_no_removable: " << s.no_removable << '\n';
            out << "min_cubic_minimal_bicritical: ";
            if (s.min_cubic < 0)
                out << "-\n";
            else
                out << s.min_cubic << '\n';
            out << "sharpness_witnesses:";
            if (s.sharpness.empty()) out << " -";
            for (const auto& w : s.sharpness) out << ' ' << w;
            out << '\n';
            out << "fig1_witnesses:";
            if (s.fig1.empty()) out << " -";
            for (const auto& w : s.fig1) out << ' ' << w;
            out << '\n';
            for (const auto& [name, t] : s.tallies)
                out << "check " << name << ": pass=" << t.pass << " vacuous=" << t.vacuous
                    << " fail=" << t.fail << '\n';
            for (const auto& line : s.failure_lines) out << "failure: " << line << '\n';
        }
        out << "\n[total]\nfailures: " << total_failures() << '\n';
        return out.str();
    }

    /// Witness codes for the graph6 sidecar, deduplicated and sorted.
    std::vector<std::string> witness_codes() const {
        std::vector<std::string> out;
        for (const auto& [n, s] : per_order) {
            out.insert(out.end(), s.sharpness.begin(), s.sharpness.end());
            out.insert(out.end(), s.fig1.begin(), s.fig1.end());
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

struct ScanOptions {
    int workers = 1;
    int trials = 10;         // seeded-random decompositions per invariance check
    std::uint64_t seed = 0;  // base seed for all seeded randomness
};

namespace detail {

class WorkQueue {
public:
    explicit WorkQueue(std::size_t cap) : cap_(cap) {}

    void push(std::vector<Graph> batch) {
        std::unique_lock lk(m_);
        cv_push_.wait(lk, [&] { return q_.size() < cap_; });
        q_.push_back(std::move(batch));
        cv_pop_.notify_one();
    }

    bool pop(std::vector<Graph>& out) {
        std::unique_lock lk(m_);
        cv_pop_.wait(lk, [&] { return closed_ || !q_.empty(); });
        if (q_.empty()) return false;
        out = std::move(q_.front());
        q_.pop_front();
        cv_push_.notify_one();
        return true;
    }

    void close() {
        std::unique_lock lk(m_);
        closed_ = true;
        cv_pop_.notify_all();
    }

private:
    std::mutex m_;
    std::condition_variable cv_push_, cv_pop_;
    std::deque<std::vector<Graph>> q_;
    bool closed_ = false;
    std::size_t cap_;
};

/// Full analysis of one graph into its order's stats bucket.
inline void census_graph(const Graph& g, const std::vector<std::string>& checks,
                         const ScanOptions& opt, MatchingEngine& eng,
                         std::map<int, OrderStats>& acc) {
    OrderStats& s = acc[g.order()];
    s.connected += 1;
    GraphContext ctx(eng, g);
    CheckOptions copt{opt.trials, opt.seed};
    for (const auto& name : checks) {
        const CheckFn* fn = find_check(name);
        if (!fn) throw std::invalid_argument("census: unknown check " + name);
        VerdictReport r = (*fn)(ctx, copt);
        CheckTally& t = s.tallies[name];
        switch (r.verdict) {
            case Verdict::pass: ++t.pass; break;
            case Verdict::vacuous: ++t.vacuous; break;
            case Verdict::fail:
                ++t.fail;
                s.failure_lines.push_back(r.to_line());
                break;
        }
    }
    if (!ctx.bicritical()) return;
    s.bicritical += 1;
    BrickKind kind = ctx.brick_kind();
    if (kind == BrickKind::brick_not_minimal || kind == BrickKind::minimal_brick) s.bricks += 1;
    if (kind == BrickKind::minimal_brick) s.minimal_bricks += 1;
    if (!ctx.minimal_bicritical()) return;
    s.minimal_bicritical += 1;
    int cubic = ctx.cubic_count();
    if (s.min_cubic < 0 || cubic < s.min_cubic) s.min_cubic = cubic;
    std::string code = canonical_form(g);
    if (cubic == 4) s.sharpness.push_back(code);
    auto removable = eng.removable_edges(g);
    if (removable.empty()) {
        s.no_removable += 1;
    } else {
        // Fig. 1 shape: a removable edge plus some split half that is not
        // minimal bicritical
        for (const auto& sep : ctx.separations()) {
            auto [a, b] = split_at(root_labeled(g), sep[0], sep[1]);
            bool hit = false;
            for (const LabeledGraph* child : {&a, &b})
                if (is_bicritical(child->graph, eng) &&
                    !deletable_edges(child->graph, eng).empty())
                    hit = true;
            if (hit) {
                s.fig1.push_back(code);
                break;
            }
        }
    }
}

struct CensusSource {
    // exactly one of the two is used
    int n_min = 0, n_max = -1;       // built-in enumeration range
    std::istream* stream = nullptr;  // graph6 lines
};

inline CensusReport run_census(const CensusSource& src, const std::vector<std::string>& checks,
                               const ScanOptions& opt) {
    for (const auto& name : checks)
        if (!find_check(name)) throw std::invalid_argument("census: unknown check " + name);
    const int workers = std::max(1, opt.workers);

    WorkQueue queue(std::size_t{4} * workers);
    std::vector<std::map<int, OrderStats>> partials(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                MatchingEngine eng;
                std::vector<Graph> batch;
                while (queue.pop(batch))
                    for (const Graph& g : batch) census_graph(g, checks, opt, eng, partials[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }

    constexpr std::size_t kBatch = 64;
    std::exception_ptr producer_error;
    try {
        std::vector<Graph> batch;
        auto flush = [&] {
            if (!batch.empty()) {
                queue.push(std::move(batch));
                batch = {};
            }
        };
        if (src.stream) {
            std::string line;
            long long lineno = 0;
            while (std::getline(*src.stream, line)) {
                ++lineno;
                if (line.empty()) continue;
                try {
                    batch.push_back(parse_graph6(line));
                } catch (const std::exception& e) {
                    throw std::invalid_argument("census: malformed graph6 stream at line " +
                                                std::to_string(lineno) + ": " + e.what());
                }
                if (batch.size() >= kBatch) flush();
            }
        } else {
            for (int n = src.n_min; n <= src.n_max; ++n) {
                for_each_connected(n, [&](const Graph& g) {
                    batch.push_back(g);
                    if (batch.size() >= kBatch) flush();
                });
                flush();
            }
        }
        flush();
    } catch (...) {
        producer_error = std::current_exception();
    }
    queue.close();
    for (auto& t : pool) t.join();
    if (producer_error) std::rethrow_exception(producer_error);
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    CensusReport report;
    report.checks = checks;
    for (auto& partial : partials)
        for (auto& [n, s] : partial) report.per_order[n].merge(std::move(s));
    if (!src.stream)
        for (int n = src.n_min; n <= src.n_max; ++n) report.per_order[n];  // orders always present
    for (auto& [n, s] : report.per_order) {
        for (const auto& name : checks) s.tallies[name];  // stable tally listing
        s.finalize();
    }
    return report;
}

}  // namespace detail

/// Census over the built-in enumeration of connected graphs.
inline CensusReport census(int n_min, int n_max, const std::vector<std::string>& checks,
                           const ScanOptions& opt = {}) {
    if (n_min < 1 || n_max > kEnumerationOrderLimit || n_min > n_max)
        throw std::invalid_argument("census: order range outside built-in enumeration limit");
    detail::CensusSource src;
    src.n_min = n_min;
    src.n_max = n_max;
    return detail::run_census(src, checks, opt);
}

/// Census over an external graph6 stream, one graph per line.
inline CensusReport census_stream(std::istream& in, const std::vector<std::string>& checks,
                                  const ScanOptions& opt = {}) {
    detail::CensusSource src;
    src.stream = &in;
    return detail::run_census(src, checks, opt);
}

struct HuntResult {
    int order = 0;
    std::string code;  // canonical graph6 of the witness
    VerdictReport report;
};

/// First counterexample to a registered check, ordered by graph order and
/// then canonical code; nullopt when none exists up to n_max.
inline std::optional<HuntResult> hunt_counterexample(const std::string& check, int n_max,
                                                     const ScanOptions& opt = {}) {
    if (!find_check(check)) throw std::invalid_argument("hunt_counterexample: unknown check " + check);
    if (n_max < 1 || n_max > kEnumerationOrderLimit)
        throw std::invalid_argument("hunt_counterexample: order outside built-in enumeration limit");
    for (int n = 1; n <= n_max; ++n) {
        std::mutex m;
        std::optional<HuntResult> best;
        const int workers = std::max(1, opt.workers);
        detail::WorkQueue queue(std::size_t{4} * workers);
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    MatchingEngine eng;
                    CheckOptions copt{opt.trials, opt.seed};
                    const CheckFn* fn = find_check(check);
                    std::vector<Graph> batch;
                    while (queue.pop(batch)) {
                        for (const Graph& g : batch) {
                            GraphContext ctx(eng, g);
                            VerdictReport r = (*fn)(ctx, copt);
                            if (r.verdict != Verdict::fail) continue;
                            HuntResult hit{n, canonical_form(g), std::move(r)};
                            std::lock_guard lk(m);
                            if (!best || hit.code < best->code) best = std::move(hit);
                        }
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        std::vector<Graph> batch;
        for_each_connected(n, [&](const Graph& g) {
            batch.push_back(g);
            if (batch.size() >= 64) {
                queue.push(std::move(batch));
                batch = {};
            }
        });
        if (!batch.empty()) queue.push(std::move(batch));
        queue.close();
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace bicrit
