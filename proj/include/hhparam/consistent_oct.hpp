#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "class_oracle.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "oct.hpp"
#include "witness.hpp"

namespace hhparam {

namespace detail {

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t> &p) const {
        return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
};

}  // namespace detail

/// (w_l, w_i) is weakly consistent with witness X when W = w_l + w_i lies in C + X for the
/// unique large component C of G - X, W meets C exactly in w_l, and |w_l| <= k.
inline bool is_weakly_consistent(const Graph &g, const PartitionedOct &p, VertexSet x, int s, int k) {
    std::optional<VertexSet> large;
    for (VertexSet c : components_within(g, g.vertices() - x)) {
        if (c.size() < s) continue;
        if (large) return false;
        large = c;
    }
    if (!large) return false;
    return p.w_l.size() <= k && (p.all() & *large) == p.w_l && p.all().subset_of(*large | x);
}

/// Partitioned OCTs such that, for every witness X of the question on an (s,2k)-unbreakable
/// graph of treewidth above s + k, at least one is weakly consistent with X.
/// Splits a minimum OCT W into (w_l, w_i, w_r) and replaces each w_r vertex by the boundary of
/// a small connected set around it. First-found order, no duplicates.
inline std::vector<PartitionedOct> weakly_consistent_octs(const Graph &g, const SolverParams &p) {
    p.validate();
    std::vector<PartitionedOct> out;
    const auto w = min_oct(g, p.s + p.k - 1);
    if (!w) return out;
    const std::vector<vertex_t> members = w->to_vector();
    std::vector<std::vector<VertexSet>> boundaries;
    for (vertex_t v : members) boundaries.push_back(detail::candidate_boundaries(g, v, p.s, p.k));

    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, detail::PairHash> seen;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < members.size(); ++i) combos *= 3;
    for (std::uint64_t code = 0; code < combos; ++code) {
        VertexSet w_l, w_i;
        std::vector<std::vector<VertexSet>> choices;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < members.size(); ++i, c /= 3) {
            if (c % 3 == 0) w_l.insert(members[i]);
            else if (c % 3 == 1) w_i.insert(members[i]);
            else choices.push_back(boundaries[i]);
        }
        if (w_l.size() > p.k) continue;
        detail::for_each_tuple_union(choices, [&](VertexSet u) {
            const VertexSet rest = (w_i | u) - w_l;
            if (!is_oct(g, w_l | rest)) return false;
            if (seen.emplace(w_l.bits(), rest.bits()).second) out.push_back({w_l, rest});
            return false;
        });
    }
    return out;
}

/// OCTs such that, for every witness X with which `poct` is weakly consistent, at least one
/// is contained in X. Uses a BFS 2-coloring c* of G - W and, per split (W1, W2) of w_l, the
/// terminal sets A and R on which c* must flip or keep; the part of A or R outside X lies in
/// small components whose boundaries are guessed.
inline std::vector<VertexSet> strongly_consistent_octs(const Graph &g, const SolverParams &p, const PartitionedOct &poct) {
    p.validate();
    std::vector<VertexSet> out;
    const VertexSet w = poct.all();
    if (w.size() > p.s + p.k - 1) return out;
    if (poct.w_l.intersects(poct.w_i))
        throw precondition_error(precondition_error::kind::overlapping_sets, "w_l and w_i must be disjoint");
    const auto star = two_coloring(g, g.vertices() - w);
    if (!star) throw precondition_error(precondition_error::kind::not_an_oct, "w_l + w_i is not an odd cycle transversal");
    const VertexSet b1_star = star->color_class(1);
    const VertexSet b2_star = star->color_class(2);

    std::unordered_set<VertexSet> emitted;
    std::unordered_set<VertexSet> tried_q;
    std::unordered_map<vertex_t, std::vector<VertexSet>> boundaries;
    auto boundaries_of = [&](vertex_t y) -> const std::vector<VertexSet> & {
        auto [it, fresh] = boundaries.try_emplace(y);
        if (fresh) it->second = detail::candidate_boundaries(g, y, p.s, 2 * p.k);
        return it->second;
    };
    for_each_subset_canonical(poct.w_l, poct.w_l.size(), [&](VertexSet w1) {
        const VertexSet w2 = poct.w_l - w1;
        const VertexSet b1 = open_neighborhood(g, w2) - w;
        const VertexSet b2 = open_neighborhood(g, w1) - w;
        const VertexSet a = (b1 & b2_star) | (b2 & b1_star);
        const VertexSet r = (b1 & b1_star) | (b2 & b2_star);
        for (VertexSet q : {a, r}) {
            if (q.size() > p.s + p.k || !tried_q.insert(q).second) continue;
            for_each_subset_canonical(q, p.k, [&](VertexSet d) {
                std::vector<std::vector<VertexSet>> choices;
                for (vertex_t y : q - d) choices.push_back(boundaries_of(y));
                detail::for_each_tuple_union(choices, [&](VertexSet u) {
                    const VertexSet cand = (w | d | u) - poct.w_l;
                    if (is_oct(g, cand) && emitted.insert(cand).second) out.push_back(cand);
                    return false;
                });
                return false;
            });
        }
        return false;
    });
    return out;
}

}  // namespace hhparam
