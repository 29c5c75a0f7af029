#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace hhparam {

/// Simple undirected graph on vertices 0..n-1, immutable once built.
class Graph {
   public:
    Graph() = default;

    /// Builds from an edge list. Duplicate edges collapse; self-loops and out-of-range
    /// endpoints throw precondition_error.
    explicit Graph(int n, const std::vector<std::pair<vertex_t, vertex_t>> &edges = {}) : n_(n), adj_(n) {
        if (n < 0 || n > max_vertices)
            throw precondition_error(precondition_error::kind::invalid_graph,
                                     "graph must have between 0 and " + std::to_string(max_vertices) + " vertices");
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw precondition_error(precondition_error::kind::invalid_graph, "edge endpoint out of range");
            if (u == v) throw precondition_error(precondition_error::kind::invalid_graph, "self-loop");
            adj_[u].insert(v);
            adj_[v].insert(u);
        }
    }

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet adj(vertex_t v) const { return adj_[v]; }
    int degree(vertex_t v) const { return adj_[v].size(); }
    bool has_edge(vertex_t u, vertex_t v) const { return adj_[u].contains(v); }

    int edge_count() const {
        int twice = 0;
        for (const auto &a : adj_) twice += a.size();
        return twice / 2;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<vertex_t, vertex_t>> edges() const {
        std::vector<std::pair<vertex_t, vertex_t>> out;
        for (vertex_t u = 0; u < n_; ++u)
            for (vertex_t v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph &) const = default;

   private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// A graph derived from a parent graph, together with the parent id of each of its vertices.
struct MappedGraph {
    Graph graph;
    std::vector<vertex_t> to_parent;

    VertexSet lift(VertexSet local) const {
        VertexSet out;
        for (vertex_t v : local) out.insert(to_parent[v]);
        return out;
    }
};

/// Partition (x_side, separator, y_side) of V(G) with no edge between the two sides.
struct Separation {
    VertexSet x_side;
    VertexSet separator;
    VertexSet y_side;
};

inline VertexSet closed_neighborhood(const Graph &g, VertexSet s) {
    VertexSet out = s;
    for (vertex_t v : s) out |= g.adj(v);
    return out;
}

inline VertexSet open_neighborhood(const Graph &g, VertexSet s) { return closed_neighborhood(g, s) - s; }

enum class NeighborhoodMode { open, closed };

inline VertexSet neighborhood(const Graph &g, VertexSet s, NeighborhoodMode mode) {
    return mode == NeighborhoodMode::open ? open_neighborhood(g, s) : closed_neighborhood(g, s);
}

/// Vertices reachable from `start` inside G[within]; `start` must lie in `within`.
inline VertexSet reach_within(const Graph &g, vertex_t start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (vertex_t v : frontier) next |= g.adj(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Connected components of G[within], ordered by their minimum vertex.
inline std::vector<VertexSet> components_within(const Graph &g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet c = reach_within(g, rest.min(), within);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

inline std::vector<VertexSet> connected_components(const Graph &g) { return components_within(g, g.vertices()); }

inline bool is_connected_set(const Graph &g, VertexSet s) {
    return s.empty() || reach_within(g, s.min(), s) == s;
}

inline MappedGraph induced_subgraph(const Graph &g, VertexSet s) {
    std::vector<vertex_t> to_parent = s.to_vector();
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) local[to_parent[i]] = i;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
        for (vertex_t w : g.adj(to_parent[i]) & s)
            if (local[w] > i) edges.emplace_back(i, local[w]);
    return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

/// Torso of X: the neighborhood of every component of G - X becomes a clique,
/// then everything outside X is deleted. Vertices are re-indexed in increasing parent id.
inline MappedGraph torso(const Graph &g, VertexSet x) {
    std::vector<vertex_t> to_parent = x.to_vector();
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) local[to_parent[i]] = i;

    const int t = static_cast<int>(to_parent.size());
    std::vector<VertexSet> tadj(t);
    for (int i = 0; i < t; ++i)
        for (vertex_t w : g.adj(to_parent[i]) & x) tadj[i].insert(local[w]);
    for (VertexSet c : components_within(g, g.vertices() - x)) {
        VertexSet boundary = open_neighborhood(g, c);
        for (vertex_t u : boundary)
            for (vertex_t v : boundary)
                if (u != v) tadj[local[u]].insert(local[v]);
    }
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (int i = 0; i < t; ++i)
        for (vertex_t j : tadj[i])
            if (j > i) edges.emplace_back(i, j);
    return {Graph(t, edges), std::move(to_parent)};
}

}  // namespace hhparam
