#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace hhparam {

inline constexpr int default_width_cap = 20;

/// Tree decomposition with nodes 0..size-1. parent[root] == -1.
struct TreeDecomposition {
    std::vector<int> parent;
    std::vector<VertexSet> bags;
    int width = -1;

    int size() const { return static_cast<int>(bags.size()); }
};

/// Rooted forest on V(G); parent[v] == -1 for roots. depth counts vertices on the longest root-to-leaf path.
struct EliminationForest {
    std::vector<vertex_t> parent;
    int depth = 0;
};

namespace detail {

/// Higher neighbors of v when the vertices of `eliminated` are gone: vertices outside
/// eliminated + v reachable from v through eliminated vertices.
inline VertexSet elimination_neighbors(const Graph &g, VertexSet eliminated, vertex_t v) {
    return open_neighborhood(g, reach_within(g, v, eliminated | VertexSet::single(v)));
}

inline void check_cap(const char *what, const Graph &g, int cap) {
    if (g.n() > cap) throw size_error(what, g.n(), cap);
}

}  // namespace detail

/// Builds a decomposition from an elimination order: one node per vertex, bag = vertex plus
/// its higher neighbors, parent = earliest-eliminated higher neighbor. Roots are chained.
inline TreeDecomposition decomposition_from_order(const Graph &g, const std::vector<vertex_t> &order) {
    const int n = g.n();
    TreeDecomposition td;
    td.parent.assign(n, -1);
    td.bags.resize(n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    VertexSet eliminated;
    int last_root = -1;
    for (int i = 0; i < n; ++i) {
        vertex_t v = order[i];
        VertexSet higher = detail::elimination_neighbors(g, eliminated, v);
        td.bags[i] = higher | VertexSet::single(v);
        td.width = std::max(td.width, higher.size());
        if (!higher.empty()) {
            int best = n;
            for (vertex_t u : higher) best = std::min(best, pos[u]);
            td.parent[i] = best;
        } else {
            if (last_root >= 0) td.parent[last_root] = i;
            last_root = i;
        }
        eliminated.insert(v);
    }
    return td;
}

/// Exact treewidth by dynamic programming over eliminated-vertex sets. Returns the width
/// (-1 for the empty graph) and the decomposition of the lexicographically least optimal
/// elimination order.
inline std::pair<int, TreeDecomposition> treewidth_exact(const Graph &g, int cap = default_width_cap) {
    detail::check_cap("treewidth_exact", g, cap);
    const int n = g.n();
    if (n == 0) return {-1, TreeDecomposition{}};
    const std::uint64_t full = VertexSet::range(n).bits();
    // rest[P] = best width achievable for the vertices outside P once P is eliminated.
    std::vector<std::int8_t> rest(std::size_t{1} << n, 0);
    rest[full] = -1;
    for (std::uint64_t p = full; p-- > 0;) {
        VertexSet eliminated(p);
        int best = n;
        for (vertex_t v : VertexSet(full) - eliminated) {
            int here = detail::elimination_neighbors(g, eliminated, v).size();
            int cost = std::max<int>(here, rest[p | (std::uint64_t{1} << v)]);
            best = std::min(best, cost);
        }
        rest[p] = static_cast<std::int8_t>(best);
    }
    const int width = rest[0];
    std::vector<vertex_t> order;
    VertexSet eliminated;
    while (static_cast<int>(order.size()) < n) {
        for (vertex_t v : VertexSet(full) - eliminated) {
            int here = detail::elimination_neighbors(g, eliminated, v).size();
            if (std::max<int>(here, rest[(eliminated | VertexSet::single(v)).bits()]) <= width) {
                order.push_back(v);
                eliminated.insert(v);
                break;
            }
        }
    }
    TreeDecomposition td = decomposition_from_order(g, order);
    return {width, std::move(td)};
}

/// Decides tw(G) <= k by depth-first search over elimination prefixes with failure memo.
inline bool treewidth_atmost(const Graph &g, int k, int cap = default_width_cap) {
    detail::check_cap("treewidth_atmost", g, cap);
    const int n = g.n();
    if (n == 0) return k >= -1;
    if (k < 0) return false;
    if (k >= n - 1) return true;
    const VertexSet all = g.vertices();
    std::unordered_set<std::uint64_t> failed;
    auto search = [&](auto &&self, VertexSet eliminated) -> bool {
        // Once at most k+1 vertices remain, any order finishes within width k.
        if ((all - eliminated).size() <= k + 1) return true;
        if (failed.contains(eliminated.bits())) return false;
        for (vertex_t v : all - eliminated) {
            if (detail::elimination_neighbors(g, eliminated, v).size() > k) continue;
            if (self(self, eliminated | VertexSet::single(v))) return true;
        }
        failed.insert(eliminated.bits());
        return false;
    };
    return search(search, VertexSet{});
}

namespace detail {

class TreedepthSolver {
   public:
    explicit TreedepthSolver(const Graph &g) : g_(g) {}

    /// Exact treedepth of the connected set s.
    int connected(VertexSet s) {
        if (s.size() <= 1) return s.size();
        if (auto it = exact_.find(s.bits()); it != exact_.end()) return it->second;
        int best = s.size();
        for (vertex_t v : s) {
            int worst = 0;
            for (VertexSet c : components_within(g_, s - VertexSet::single(v))) {
                worst = std::max(worst, connected(c));
                if (1 + worst >= best) break;
            }
            best = std::min(best, 1 + worst);
        }
        exact_.emplace(s.bits(), best);
        return best;
    }

    /// Least root achieving the optimum for connected s.
    vertex_t best_root(VertexSet s) {
        const int target = connected(s);
        for (vertex_t v : s) {
            int worst = 0;
            for (VertexSet c : components_within(g_, s - VertexSet::single(v))) worst = std::max(worst, connected(c));
            if (1 + worst == target) return v;
        }
        return s.min();
    }

    /// td(G[s]) <= k for connected s, with lower/upper bound memo.
    bool atmost(VertexSet s, int k) {
        if (s.size() <= k) return true;
        if (k <= 0) return false;
        auto &b = bounds_[s.bits()];
        if (b.first == 0) b = {1, s.size()};
        if (k < b.first) return false;
        if (k >= b.second) return true;
        for (vertex_t v : s) {
            bool ok = true;
            for (VertexSet c : components_within(g_, s - VertexSet::single(v)))
                if (!atmost(c, k - 1)) {
                    ok = false;
                    break;
                }
            if (ok) {
                auto &bb = bounds_[s.bits()];
                bb.second = std::min(bb.second, k);
                return true;
            }
        }
        auto &bb = bounds_[s.bits()];
        bb.first = std::max(bb.first, k + 1);
        return false;
    }

   private:
    const Graph &g_;
    std::unordered_map<std::uint64_t, int> exact_;
    std::unordered_map<std::uint64_t, std::pair<int, int>> bounds_;
};

}  // namespace detail

/// Exact treedepth by memoized recursion over connected vertex sets (0 for the empty graph).
/// The forest roots each component at its least optimal vertex.
inline std::pair<int, EliminationForest> treedepth_exact(const Graph &g, int cap = default_width_cap) {
    detail::check_cap("treedepth_exact", g, cap);
    detail::TreedepthSolver solver(g);
    EliminationForest forest;
    forest.parent.assign(g.n(), -1);
    int depth = 0;
    auto build = [&](auto &&self, VertexSet s, vertex_t parent) -> void {
        vertex_t root = solver.best_root(s);
        forest.parent[root] = parent;
        for (VertexSet c : components_within(g, s - VertexSet::single(root))) self(self, c, root);
    };
    for (VertexSet c : connected_components(g)) {
        depth = std::max(depth, solver.connected(c));
        build(build, c, -1);
    }
    forest.depth = depth;
    return {depth, std::move(forest)};
}

inline bool treedepth_atmost(const Graph &g, int k, int cap = default_width_cap) {
    detail::check_cap("treedepth_atmost", g, cap);
    if (k < 0) return false;
    detail::TreedepthSolver solver(g);
    for (VertexSet c : connected_components(g))
        if (!solver.atmost(c, k)) return false;
    return true;
}

/// Checks the three tree decomposition conditions, that the node links form a single
/// tree, and that `width` matches the largest bag.
inline bool is_valid_tree_decomposition(const Graph &g, const TreeDecomposition &td) {
    const int m = td.size();
    if (static_cast<int>(td.parent.size()) != m) return false;
    if (m == 0) return g.n() == 0 && td.width == -1;
    int roots = 0;
    for (int t = 0; t < m; ++t) {
        if (td.parent[t] == -1) ++roots;
        else if (td.parent[t] < 0 || td.parent[t] >= m) return false;
        // Walking up must terminate.
        int cur = t, steps = 0;
        while (cur != -1 && steps <= m) cur = td.parent[cur], ++steps;
        if (cur != -1) return false;
    }
    if (roots != 1) return false;
    int width = -1;
    VertexSet covered;
    for (const VertexSet &b : td.bags) {
        if (!b.subset_of(g.vertices())) return false;
        width = std::max(width, b.size() - 1);
        covered |= b;
    }
    if (width != td.width || covered != g.vertices()) return false;
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const VertexSet &b : td.bags) found = found || (b.contains(u) && b.contains(v));
        if (!found) return false;
    }
    for (vertex_t v = 0; v < g.n(); ++v) {
        // Nodes holding v form a subtree iff exactly one of them has a parent lacking v.
        int tops = 0;
        for (int t = 0; t < m; ++t)
            if (td.bags[t].contains(v) && (td.parent[t] == -1 || !td.bags[td.parent[t]].contains(v))) ++tops;
        if (tops != 1) return false;
    }
    return true;
}

inline bool is_valid_elimination_forest(const Graph &g, const EliminationForest &f) {
    const int n = g.n();
    if (static_cast<int>(f.parent.size()) != n) return false;
    std::vector<int> level(n, 0);
    int roots = 0;
    for (vertex_t v = 0; v < n; ++v) {
        int cur = v, steps = 0;
        while (cur != -1 && steps <= n) {
            if (cur < -1 || cur >= n) return false;
            cur = f.parent[cur];
            ++steps;
        }
        if (cur != -1) return false;
        level[v] = steps;
        if (f.parent[v] == -1) ++roots;
    }
    auto ancestor = [&](vertex_t a, vertex_t d) {
        for (int cur = f.parent[d]; cur != -1; cur = f.parent[cur])
            if (cur == a) return true;
        return false;
    };
    for (auto [u, v] : g.edges())
        if (!ancestor(u, v) && !ancestor(v, u)) return false;
    const int depth = n == 0 ? 0 : *std::max_element(level.begin(), level.end());
    return depth == f.depth && roots == static_cast<int>(connected_components(g).size());
}

}  // namespace hhparam
