#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bicrit/graph.hpp"

namespace bicrit {

/// graph6 codec, bit-exact per the standard sparse-graph formats
/// specification. Short length form covers n <= 62; the '~'-prefixed long
/// forms cover larger orders. The optional ">>graph6<<" header is tolerated
/// on input and never emitted.

namespace g6 {

inline constexpr std::string_view kHeader = ">>graph6<<";

inline int value_of(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw std::invalid_argument("graph6: character out of printable range 63..126");
    return b - 63;
}

struct BitReader {
    std::string_view data;
    std::size_t pos = 0;
    int bit = 0;  // next bit within current char, msb first

    bool next() {
        if (pos >= data.size()) throw std::invalid_argument("graph6: truncated bit vector");
        int v = value_of(data[pos]);
        bool out = (v >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return out;
    }

    void finish() {
        // any partial char must be zero-padded; trailing chars are malformed
        if (bit != 0) {
            int v = value_of(data[pos]);
            if (v & ((1 << (6 - bit)) - 1))
                throw std::invalid_argument("graph6: trailing bits nonzero");
            ++pos;
        }
        if (pos != data.size()) throw std::invalid_argument("graph6: excess characters");
    }
};

struct BitWriter {
    std::string out;
    int acc = 0;
    int bit = 0;

    void push(bool b) {
        acc |= (b ? 1 : 0) << (5 - bit);
        if (++bit == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            bit = 0;
        }
    }

    void finish() {
        if (bit != 0) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            bit = 0;
        }
    }
};

inline long long read_order(std::string_view& s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty code");
    int v0 = value_of(s[0]);
    if (v0 < 63) {
        s.remove_prefix(1);
        return v0;
    }
    // '~': three chars of 18 bits; '~~': six chars of 36 bits
    if (s.size() >= 2 && value_of(s[1]) == 63) {
        if (s.size() < 8) throw std::invalid_argument("graph6: malformed length prefix");
        long long n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | value_of(s[i]);
        s.remove_prefix(8);
        return n;
    }
    if (s.size() < 4) throw std::invalid_argument("graph6: malformed length prefix");
    long long n = 0;
    for (int i = 1; i < 4; ++i) n = (n << 6) | value_of(s[i]);
    s.remove_prefix(4);
    return n;
}

inline void write_order(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

}  // namespace g6

inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(g6::kHeader)) text.remove_prefix(g6::kHeader.size());
    long long n = g6::read_order(text);
    if (n > 100000) throw std::invalid_argument("graph6: order larger than supported");
    std::vector<Edge> edges;
    g6::BitReader bits{text};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.next()) edges.emplace_back(i, j);
    bits.finish();
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    std::string out;
    g6::write_order(out, g.order());
    g6::BitWriter bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits.push(g.has_edge(i, j));
    bits.finish();
    return out + bits.out;
}

/// Plain edge-list text format: first line "n m", then m lines "u v" with
/// 0-based indices.
inline Graph parse_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (const Edge& e : es) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace bicrit
