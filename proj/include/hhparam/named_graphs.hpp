#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"

namespace hhparam {

// Standard small graphs used as obstructions and in tests.
namespace named {

inline Graph complete(int n) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph path(int n) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

/// K_{1,leaves}: center 0, leaves 1..leaves.
inline Graph star(int leaves) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

/// Hub 0 adjacent to every vertex of the rim cycle 1..rim.
inline Graph wheel(int rim) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 0; i < rim; ++i) {
        e.emplace_back(0, 1 + i);
        e.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return Graph(rim + 1, e);
}

inline Graph grid(int rows, int cols) {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
        }
    return Graph(rows * cols, e);
}

inline Graph petersen() {
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

/// Vertex-disjoint union, second graph shifted by a.n().
inline Graph disjoint_union(const Graph &a, const Graph &b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), e);
}

}  // namespace named

}  // namespace hhparam
