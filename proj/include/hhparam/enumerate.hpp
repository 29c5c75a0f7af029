#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "class_oracle.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace hhparam {

/// Connected sets B with anchor in B, |B| <= max_extra + 1 and |N(B)| <= max_boundary.
struct ConnectedSetQuery {
    vertex_t anchor = 0;
    int max_extra = 0;
    int max_boundary = 0;
};

/// Every connected set matching the query exactly once, sorted by bitmask value.
/// Branches on the least undecided boundary vertex: take it into B, or commit it to N(B).
inline std::vector<VertexSet> enum_connected_sets(const Graph &g, const ConnectedSetQuery &q) {
    if (q.anchor < 0 || q.anchor >= g.n() || q.max_extra < 0 || q.max_boundary < 0)
        throw precondition_error(precondition_error::kind::invalid_parameters, "invalid connected set query");
    std::vector<VertexSet> out;
    const int max_size = q.max_extra + 1;
    auto rec = [&](auto &&self, VertexSet b, VertexSet excluded) -> void {
        const VertexSet frontier = open_neighborhood(g, b) - excluded;
        if (frontier.empty()) {
            out.push_back(b);
            return;
        }
        if (b.size() == max_size) {
            if (excluded.size() + frontier.size() <= q.max_boundary) out.push_back(b);
            return;
        }
        const vertex_t u = frontier.min();
        self(self, b | VertexSet::single(u), excluded);
        if (excluded.size() < q.max_boundary) self(self, b, excluded | VertexSet::single(u));
    };
    rec(rec, VertexSet::single(q.anchor), VertexSet{});
    std::sort(out.begin(), out.end());
    return out;
}

/// Y is a deletion set when every component of G - Y belongs to the class.
inline bool is_deletion_set(const ClassOracle &oracle, const Graph &g, VertexSet y) {
    return components_in_class(oracle, g, g.vertices() - y);
}

inline bool is_minimal_deletion_set(const ClassOracle &oracle, const Graph &g, VertexSet y) {
    if (!is_deletion_set(oracle, g, y)) return false;
    for (vertex_t v : y)
        if (is_deletion_set(oracle, g, y - VertexSet::single(v))) return false;
    return true;
}

/// All inclusion-minimal deletion sets of size at most `bound`, in canonical order.
/// Branches over the vertices of an obstruction found inside one component of G - Y.
inline std::vector<VertexSet> enum_minimal_deletion_sets(const ClassOracle &oracle, const Graph &g, int bound) {
    if (!oracle.is_forbidden_induced())
        throw precondition_error(precondition_error::kind::wrong_oracle_variant,
                                 "minimal deletion sets need a forbidden-induced-subgraph class");
    std::vector<VertexSet> found;
    std::unordered_set<VertexSet> visited;
    // A disconnected obstruction can also be destroyed by splitting its component, so the
    // branch then covers the whole component.
    auto rec = [&](auto &&self, VertexSet y) -> void {
        if (!visited.insert(y).second) return;
        for (VertexSet f : found)
            if (f.subset_of(y)) return;
        auto match = find_obstruction_in_component(oracle, g, g.vertices() - y);
        if (!match) {
            found.push_back(y);
            return;
        }
        if (y.size() >= bound) return;
        const Graph &h = oracle.obstructions()[match->index];
        const VertexSet branch = is_connected_set(h, h.vertices()) ? match->image()
                                                                   : reach_within(g, match->embedding.front(), g.vertices() - y);
        for (vertex_t u : branch) self(self, y | VertexSet::single(u));
    };
    rec(rec, VertexSet{});
    std::vector<VertexSet> out;
    for (VertexSet y : found)
        if (is_minimal_deletion_set(oracle, g, y)) out.push_back(y);
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline constexpr int default_separation_cap = 20;

/// Some (s,c)-separation: separator of size <= c whose removal leaves components that can be
/// split into two groups of at least s vertices each. Separators are tried in canonical order;
/// the grouping is found by subset sum over component sizes.
inline std::optional<Separation> find_separation(const Graph &g, int s, int c, int cap = default_separation_cap) {
    if (g.n() > cap) throw size_error("find_separation", g.n(), cap);
    if (s < 0 || c < 0) throw precondition_error(precondition_error::kind::invalid_parameters, "s and c must be non-negative");
    std::optional<Separation> result;
    for_each_subset_canonical(g.vertices(), c, [&](VertexSet sep) {
        const VertexSet rest = g.vertices() - sep;
        if (rest.size() < 2 * s) return false;
        const auto comps = components_within(g, rest);
        const int total = rest.size();
        // reach[i][a]: a vertices can be collected from the first i components.
        const int m = static_cast<int>(comps.size());
        std::vector<std::vector<char>> reach(m + 1, std::vector<char>(total + 1, 0));
        reach[0][0] = 1;
        for (int i = 0; i < m; ++i)
            for (int a = 0; a <= total; ++a) {
                if (!reach[i][a]) continue;
                reach[i + 1][a] = 1;
                if (a + comps[i].size() <= total) reach[i + 1][a + comps[i].size()] = 1;
            }
        for (int a = s; a <= total - s; ++a) {
            if (!reach[m][a]) continue;
            VertexSet x;
            int left = a;
            for (int i = m; i > 0; --i) {
                if (reach[i - 1][left]) continue;
                x |= comps[i - 1];
                left -= comps[i - 1].size();
            }
            result = Separation{x, sep, rest - x};
            return true;
        }
        return false;
    });
    return result;
}

inline bool is_unbreakable(const Graph &g, int s, int c, int cap = default_separation_cap) {
    return !find_separation(g, s, c, cap).has_value();
}

}  // namespace hhparam
