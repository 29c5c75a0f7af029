#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "class_oracle.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace hhparam {

/// An odd cycle transversal split into a part w_l that will be colored and a part w_i that stays deleted.
struct PartitionedOct {
    VertexSet w_l;
    VertexSet w_i;

    VertexSet all() const { return w_l | w_i; }
    bool operator==(const PartitionedOct &) const = default;
};

/// Terminal sets A and R living in the graph G[ambient].
struct SeparatorInstance {
    VertexSet a_side;
    VertexSet r_side;
    VertexSet ambient;
};

inline bool is_oct(const Graph &g, VertexSet w) { return two_coloring(g, g.vertices() - w).has_value(); }

inline bool is_independent(const Graph &g, VertexSet s) {
    for (vertex_t v : s)
        if (g.adj(v).intersects(s)) return false;
    return true;
}

/// Terminals of the OCT/separator correspondence. With W = w_l1 + w_l2 + w_i and c a proper
/// 2-coloring of G - W, a set X outside W separates A from R in G - W exactly when
/// (G - w_i) - X can be 2-colored with w_l1 in color 1 and w_l2 in color 2.
inline SeparatorInstance claim1_sets(const Graph &g, VertexSet w_l1, VertexSet w_l2, VertexSet w_i, const Coloring &c) {
    using K = precondition_error::kind;
    if (w_l1.intersects(w_l2) || w_l1.intersects(w_i) || w_l2.intersects(w_i))
        throw precondition_error(K::overlapping_sets, "w_l1, w_l2 and w_i must be disjoint");
    const VertexSet w = w_l1 | w_l2 | w_i;
    if (!is_oct(g, w)) throw precondition_error(K::not_an_oct, "w_l1 + w_l2 + w_i is not an odd cycle transversal");
    if (!is_independent(g, w_l1)) throw precondition_error(K::not_independent, "w_l1 is not an independent set");
    if (!is_independent(g, w_l2)) throw precondition_error(K::not_independent, "w_l2 is not an independent set");
    if (c.domain != g.vertices() - w || !c.is_proper(g))
        throw precondition_error(K::improper_coloring, "coloring is not a proper 2-coloring of G - W");
    const VertexSet n1 = open_neighborhood(g, w_l1);
    const VertexSet n2 = open_neighborhood(g, w_l2);
    return {(n1 & c.color_class(1)) | (n2 & c.color_class(2)), (n1 & c.color_class(2)) | (n2 & c.color_class(1)),
            g.vertices() - w};
}

/// Can (G - w_i) - X be properly 2-colored with w_l1 in color 1 and w_l2 in color 2?
inline bool check_recolorable(const Graph &g, VertexSet w_l1, VertexSet w_l2, VertexSet w_i, VertexSet x) {
    if (x.intersects(w_l1 | w_l2 | w_i))
        throw precondition_error(precondition_error::kind::overlapping_sets, "X must be disjoint from W");
    const VertexSet domain = g.vertices() - w_i - x;
    for (VertexSet comp : components_within(g, domain)) {
        auto base = two_coloring(g, comp);
        if (!base) return false;
        // The component admits exactly the base coloring and its swap.
        const VertexSet want1 = w_l1 & comp;
        const VertexSet want2 = w_l2 & comp;
        const bool keep = want1.subset_of(base->color_class(1)) && want2.subset_of(base->color_class(2));
        const bool flip = want1.subset_of(base->color_class(2)) && want2.subset_of(base->color_class(1));
        if (!keep && !flip) return false;
    }
    return true;
}

/// Does removing X leave no path from A - X to R - X inside G[ambient]?
inline bool separates(const Graph &g, VertexSet a, VertexSet r, VertexSet x, VertexSet ambient) {
    const VertexSet live = ambient - x;
    VertexSet targets = r & live;
    for (vertex_t v : a & live)
        if (reach_within(g, v, live).intersects(targets)) return false;
    return true;
}

namespace detail {

/// Vertex capacities via in/out splitting; terminals are split too, so they may be cut.
/// A vertex costs `unit`, plus one if it is a terminal: a minimum cut has minimum size and,
/// among those, fewest terminals.
class VertexFlow {
   public:
    VertexFlow(const Graph &g, VertexSet a, VertexSet r, VertexSet ambient) : n_(g.n()), head_(2 * g.n() + 2, -1) {
        const int source = 2 * n_, sink = 2 * n_ + 1;
        for (vertex_t v : ambient) {
            add(in(v), out(v), unit + ((a | r).contains(v) ? 1 : 0));
            for (vertex_t w : g.adj(v) & ambient) add(out(v), in(w), inf);
        }
        for (vertex_t v : a & ambient) add(source, in(v), inf);
        for (vertex_t v : r & ambient) add(out(v), sink, inf);
    }

    /// Size of a minimum cut, or -1 once it exceeds `limit`.
    int run(int limit) {
        const int source = 2 * n_, sink = 2 * n_ + 1;
        int flow = 0;
        while (true) {
            std::vector<int> via(head_.size(), -1);
            std::vector<char> seen(head_.size(), 0);
            std::deque<int> queue{source};
            seen[source] = 1;
            while (!queue.empty() && !seen[sink]) {
                int u = queue.front();
                queue.pop_front();
                for (int e = head_[u]; e != -1; e = next_[e])
                    if (cap_[e] > 0 && !seen[to_[e]]) {
                        seen[to_[e]] = 1;
                        via[to_[e]] = e;
                        queue.push_back(to_[e]);
                    }
            }
            if (!seen[sink]) return flow / unit;
            int push = inf;
            for (int v = sink; v != source; v = to_[via[v] ^ 1]) push = std::min(push, cap_[via[v]]);
            for (int v = sink; v != source; v = to_[via[v] ^ 1]) {
                cap_[via[v]] -= push;
                cap_[via[v] ^ 1] += push;
            }
            flow += push;
            if (flow / unit > limit) return -1;
        }
    }

    /// Source side of the residual graph after run(): the cut is every vertex whose in-node
    /// is reachable and out-node is not.
    VertexSet source_side_cut() const {
        const int source = 2 * n_;
        std::vector<char> seen(head_.size(), 0);
        std::deque<int> queue{source};
        seen[source] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int e = head_[u]; e != -1; e = next_[e])
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    queue.push_back(to_[e]);
                }
        }
        VertexSet cut;
        for (vertex_t v = 0; v < n_; ++v)
            if (seen[in(v)] && !seen[out(v)]) cut.insert(v);
        return cut;
    }

   private:
    static constexpr int inf = std::numeric_limits<int>::max() / 4;
    static constexpr int unit = max_vertices + 1;
    int in(vertex_t v) const { return 2 * v; }
    int out(vertex_t v) const { return 2 * v + 1; }
    void add(int u, int v, int c) {
        to_.push_back(v), cap_.push_back(c), next_.push_back(head_[u]), head_[u] = static_cast<int>(to_.size()) - 1;
        to_.push_back(u), cap_.push_back(0), next_.push_back(head_[v]), head_[v] = static_cast<int>(to_.size()) - 1;
    }

    int n_;
    std::vector<int> head_, to_, cap_, next_;
};

}  // namespace detail

/// Minimum vertex set (terminals allowed) whose removal disconnects A from R in G[ambient],
/// if its size is at most cap. Ties resolve to the cut closest to A.
inline std::optional<VertexSet> min_vertex_separator(const Graph &g, VertexSet a, VertexSet r, int cap, VertexSet ambient) {
    if (cap < 0) return std::nullopt;
    detail::VertexFlow flow(g, a, r, ambient);
    if (flow.run(cap) < 0) return std::nullopt;
    return flow.source_side_cut();
}

inline std::optional<VertexSet> min_vertex_separator(const Graph &g, VertexSet a, VertexSet r, int cap) {
    return min_vertex_separator(g, a, r, cap, g.vertices());
}

inline std::optional<VertexSet> min_vertex_separator(const Graph &g, const SeparatorInstance &inst, int cap) {
    return min_vertex_separator(g, inst.a_side, inst.r_side, cap, inst.ambient);
}

namespace detail {

/// Given an OCT z of G[prefix], find one of size at most |z| - 1 or report none exists.
/// Tries every split of z into (kept, color 1, color 2) in base-3 counting order.
inline std::optional<VertexSet> compress_oct(const Graph &g, VertexSet prefix, VertexSet z) {
    const std::vector<vertex_t> members = z.to_vector();
    const int t = static_cast<int>(members.size());
    const int target = t - 1;
    const VertexSet rest = prefix - z;
    const auto base = two_coloring(g, rest);
    if (!base) return std::nullopt;
    int combos = 1;
    for (int i = 0; i < t; ++i) combos *= 3;
    for (int code = 0; code < combos; ++code) {
        VertexSet kept, one, two;
        for (int i = 0, c = code; i < t; ++i, c /= 3) {
            if (c % 3 == 0) kept.insert(members[i]);
            else if (c % 3 == 1) one.insert(members[i]);
            else two.insert(members[i]);
        }
        if (kept.size() > target || !is_independent(g, one) || !is_independent(g, two)) continue;
        const VertexSet n1 = open_neighborhood(g, one) & rest;
        const VertexSet n2 = open_neighborhood(g, two) & rest;
        const VertexSet a = (n1 & base->color_class(1)) | (n2 & base->color_class(2));
        const VertexSet r = (n1 & base->color_class(2)) | (n2 & base->color_class(1));
        if (auto x = min_vertex_separator(g, a, r, target - kept.size(), rest)) return kept | *x;
    }
    return std::nullopt;
}

}  // namespace detail

/// Minimum odd cycle transversal by iterative compression, if one of size <= cap exists.
inline std::optional<VertexSet> min_oct(const Graph &g, int cap) {
    VertexSet prefix;
    VertexSet w;
    for (vertex_t v = 0; v < g.n(); ++v) {
        prefix.insert(v);
        if (two_coloring(g, prefix - w)) continue;
        VertexSet z = w | VertexSet::single(v);
        if (auto smaller = detail::compress_oct(g, prefix, z)) w = *smaller;
        else w = z;
        if (w.size() > cap) return std::nullopt;
    }
    if (w.size() > cap) return std::nullopt;
    return w;
}

inline VertexSet min_oct(const Graph &g) { return *min_oct(g, g.n()); }

}  // namespace hhparam
