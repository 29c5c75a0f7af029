#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace hhparam {

// graph6 stores n in one byte (n + 63) for n <= 62, then the upper triangle of the
// adjacency matrix column by column, six bits per byte, each byte offset by 63.
// Only the one-byte size form is supported.

inline constexpr int graph6_max_vertices = 62;

inline std::string encode_graph6(const Graph &g) {
    const int n = g.n();
    if (n > graph6_max_vertices)
        throw size_error("graph6 encoding", n, graph6_max_vertices);
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0;
    int nbits = 0;
    for (vertex_t j = 1; j < n; ++j) {
        for (vertex_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    using K = parse_error::kind;
    constexpr std::string_view marker = ">>graph6<<";
    if (text.substr(0, marker.size()) == marker) text.remove_prefix(marker.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw parse_error(K::bad_header, "graph6: empty input");

    const int head = static_cast<unsigned char>(text[0]);
    if (head == 126) throw parse_error(K::too_many_vertices, "graph6: graphs above 62 vertices are not supported");
    if (head < 63 || head > 125) throw parse_error(K::bad_header, "graph6: malformed header byte");
    const int n = head - 63;

    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - 1 < nbytes)
        throw parse_error(K::truncated, "graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                                            std::to_string(text.size() - 1));
    if (text.size() - 1 > nbytes) throw parse_error(K::trailing_garbage, "graph6: trailing characters after graph");

    std::vector<std::pair<vertex_t, vertex_t>> edges;
    int bit = 0;
    for (vertex_t j = 1; j < n; ++j) {
        for (vertex_t i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(text[1 + bit / 6]);
            if (byte < 63 || byte > 126) throw parse_error(K::bad_data_byte, "graph6: data byte out of range");
            if (((byte - 63) >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

/// DIMACS-style edge list: "p edge n m" followed by m lines "e u v" (1-based).
/// Lines starting with 'c' are comments. Duplicate edge lines count toward m but collapse.
inline Graph parse_edge_list(std::string_view text) {
    using K = parse_error::kind;
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    long declared_m = -1;
    long seen_m = 0;
    int lineno = 0;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        const std::string where = "edge list line " + std::to_string(lineno) + ": ";
        if (tag == "p") {
            std::string fmt;
            if (n >= 0) throw parse_error(K::syntax, where + "duplicate header");
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0 || declared_m < 0)
                throw parse_error(K::bad_header, where + "expected 'p edge <n> <m>'");
            if (n > max_vertices)
                throw parse_error(K::too_many_vertices, where + "at most " + std::to_string(max_vertices) + " vertices supported");
        } else if (tag == "e") {
            if (n < 0) throw parse_error(K::syntax, where + "edge before header");
            long u = 0, v = 0;
            if (!(ls >> u >> v)) throw parse_error(K::syntax, where + "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n) throw parse_error(K::endpoint_out_of_range, where + "endpoint out of range");
            if (u == v) throw parse_error(K::self_loop, where + "self-loop");
            edges.emplace_back(static_cast<vertex_t>(u - 1), static_cast<vertex_t>(v - 1));
            ++seen_m;
        } else {
            throw parse_error(K::syntax, where + "unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw parse_error(K::trailing_garbage, where + "unexpected trailing token");
    }
    if (n < 0) throw parse_error(K::bad_header, "edge list: missing 'p edge' header");
    if (seen_m != declared_m)
        throw parse_error(K::count_mismatch, "edge list: header declares " + std::to_string(declared_m) + " edges, found " +
                                                 std::to_string(seen_m));
    return Graph(n, edges);
}

/// Accepts either format: a "p edge" header selects the edge-list parser, otherwise
/// the first non-empty, non-comment line is read as graph6.
inline Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c' && (line.size() == start + 1 || line[start + 1] == ' ')) return parse_edge_list(text);
        if (line[start] == 'p') return parse_edge_list(text);
        if (line[start] == '#') continue;
        return parse_graph6(line.substr(start));
    }
    throw parse_error(parse_error::kind::bad_header, "no graph found in input");
}

}  // namespace hhparam
