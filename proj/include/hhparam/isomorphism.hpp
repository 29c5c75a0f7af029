#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace hhparam {

inline constexpr int canonical_form_max_vertices = 11;

namespace detail {

// Upper triangle of the relabeled adjacency matrix, row-major, first pair in the high bit.
inline std::uint64_t triangle_code(const Graph &g, const std::vector<vertex_t> &order) {
    std::uint64_t code = 0;
    const int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1U : 0U);
    return code;
}

}  // namespace detail

/// Canonical relabeling: among orders listing vertices by non-increasing degree, the one
/// with the largest triangle code. Isomorphic graphs map to identical graphs.
inline Graph canonical_form(const Graph &g) {
    const int n = g.n();
    if (n > canonical_form_max_vertices) throw size_error("canonical_form", n, canonical_form_max_vertices);
    std::vector<vertex_t> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); });

    // Blocks of equal degree are permuted independently, odometer style.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = 0;
    std::vector<vertex_t> best_order = order;
    bool first = true;
    while (true) {
        std::uint64_t code = detail::triangle_code(g, order);
        if (first || code > best) {
            best = code;
            best_order = order;
            first = false;
        }
        std::size_t b = 0;
        for (; b < blocks.size(); ++b)
            if (std::next_permutation(order.begin() + blocks[b].first, order.begin() + blocks[b].second)) break;
        if (b == blocks.size()) break;
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[best_order[i]] = i;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
    return Graph(n, edges);
}

inline bool isomorphic(const Graph &a, const Graph &b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

/// One representative (in canonical labeling) of every isomorphism class of graphs on n
/// vertices, ordered by edge count. Built by adding a vertex to each class on n-1 vertices.
inline std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
    if (n > 8) throw size_error("all_graphs_up_to_isomorphism", n, 8);
    std::vector<Graph> layer{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        std::set<std::pair<int, std::uint64_t>> seen;
        std::vector<std::pair<std::pair<int, std::uint64_t>, Graph>> next;
        for (const Graph &base : layer) {
            for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
                auto edges = base.edges();
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1U) edges.emplace_back(v, m - 1);
                Graph canon = canonical_form(Graph(m, edges));
                std::vector<vertex_t> id(m);
                for (int i = 0; i < m; ++i) id[i] = i;
                auto key = std::make_pair(canon.edge_count(), ~detail::triangle_code(canon, id));
                if (seen.insert(key).second) next.emplace_back(key, std::move(canon));
            }
        }
        std::sort(next.begin(), next.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        layer.clear();
        for (auto &[key, g] : next) layer.push_back(std::move(g));
    }
    return layer;
}

}  // namespace hhparam
