#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "class_oracle.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "width.hpp"

namespace hhparam {

/// ed: elimination distance (treedepth of the torso); tw: H-treewidth (treewidth of the torso).
enum class WitnessKind { ed, tw };

inline std::string to_string(WitnessKind k) { return k == WitnessKind::ed ? "ed" : "tw"; }

struct ComponentCertificate {
    VertexSet vertices;
    bool in_class = false;
};

/// A set X whose removal leaves only components in H, with the measured torso parameter.
/// For kind ed it certifies ed <= k via value = td(torso) <= k; for kind tw it certifies
/// H-treewidth <= k - 1 via value = tw(torso) <= k - 1.
struct Witness {
    WitnessKind kind = WitnessKind::ed;
    int k = 0;
    VertexSet x;
    int value = 0;
    MappedGraph torso;
    std::vector<ComponentCertificate> components;
};

/// Parameters of the structural algorithms. s is the unbreakability size threshold; c the
/// separator bound (k for finite obstruction sets, 2k for bipartite).
struct SolverParams {
    int k = 0;
    int s = 1;
    int c = 0;
    int width_cap = default_width_cap;

    void validate() const {
        if (k < 0 || s < 1 || c < k)
            throw precondition_error(precondition_error::kind::invalid_parameters, "need k >= 0, s >= 1 and c >= k");
    }
};

/// Treedepth (ed) or treewidth (tw) of a graph; tw of the empty graph is -1.
inline int torso_parameter(const Graph &t, WitnessKind kind, int cap = default_width_cap) {
    return kind == WitnessKind::ed ? treedepth_exact(t, cap).first : treewidth_exact(t, cap).first;
}

/// Largest torso parameter a witness for question k may have.
inline int parameter_bound(WitnessKind kind, int k) { return kind == WitnessKind::ed ? k : k - 1; }

inline bool verify_witness(const Graph &g, VertexSet x, int k, WitnessKind kind, const ClassOracle &oracle,
                           int cap = default_width_cap) {
    if (!x.subset_of(g.vertices())) return false;
    for (VertexSet c : components_within(g, g.vertices() - x))
        if (!in_class(oracle, g, c)) return false;
    const Graph t = torso(g, x).graph;
    return kind == WitnessKind::ed ? treedepth_atmost(t, k, cap) : treewidth_atmost(t, k - 1, cap);
}

/// Assembles the full certificate for X; the caller decides whether it is a valid witness.
inline Witness make_witness(const Graph &g, VertexSet x, int k, WitnessKind kind, const ClassOracle &oracle,
                            int cap = default_width_cap) {
    Witness w;
    w.kind = kind;
    w.k = k;
    w.x = x;
    w.torso = torso(g, x);
    w.value = torso_parameter(w.torso.graph, kind, cap);
    for (VertexSet c : components_within(g, g.vertices() - x)) w.components.push_back({c, in_class(oracle, g, c)});
    return w;
}

/// Every component C of G - X has |N(C)| <= value (ed) or <= value + 1 (tw), since N(C)
/// is a clique of the torso.
inline bool satisfies_neighborhood_bound(const Graph &g, const Witness &w) {
    const int limit = w.kind == WitnessKind::ed ? w.value : w.value + 1;
    for (const auto &c : w.components)
        if (open_neighborhood(g, c.vertices).size() > limit) return false;
    return true;
}

/// Full re-check of a witness against its graph: membership certificates, recomputed torso
/// parameter, the bound for its question k, and the neighborhood bound.
inline bool is_sound_witness(const Graph &g, const Witness &w, const ClassOracle &oracle, int cap = default_width_cap) {
    if (!verify_witness(g, w.x, w.k, w.kind, oracle, cap)) return false;
    if (w.value > parameter_bound(w.kind, w.k)) return false;
    if (torso_parameter(torso(g, w.x).graph, w.kind, cap) != w.value) return false;
    for (const auto &c : w.components)
        if (!c.in_class) return false;
    return satisfies_neighborhood_bound(g, w);
}

inline constexpr int default_hhdepth_cap = 14;
inline constexpr int default_torso_search_cap = 12;

/// H-elimination distance by memoized recursion over connected vertex sets:
/// max over components; 0 for a connected member of H; else 1 + min over deleted vertex.
inline int brute_force_hhdepth(const Graph &g, const ClassOracle &oracle, int cap = default_hhdepth_cap) {
    if (g.n() > cap) throw size_error("brute_force_hhdepth", g.n(), cap);
    std::unordered_map<VertexSet, int> memo;
    auto connected = [&](auto &&self, VertexSet s) -> int {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        int result = 0;
        if (!in_class(oracle, g, s)) {
            result = s.size();
            for (vertex_t v : s) {
                int worst = 0;
                for (VertexSet c : components_within(g, s - VertexSet::single(v))) worst = std::max(worst, self(self, c));
                result = std::min(result, 1 + worst);
            }
        }
        memo.emplace(s, result);
        return result;
    };
    int best = 0;
    for (VertexSet c : connected_components(g)) best = std::max(best, connected(connected, c));
    return best;
}

namespace detail {

/// Caches "every component of G - X is in H" through per-component membership.
class ComponentMembership {
   public:
    ComponentMembership(const Graph &g, const ClassOracle &oracle) : g_(g), oracle_(oracle) {}

    bool all_in_class(VertexSet x) {
        for (VertexSet c : components_within(g_, g_.vertices() - x)) {
            auto [it, fresh] = cache_.try_emplace(c, false);
            if (fresh) it->second = in_class(oracle_, g_, c);
            if (!it->second) return false;
        }
        return true;
    }

   private:
    const Graph &g_;
    const ClassOracle &oracle_;
    std::unordered_map<VertexSet, bool> cache_;
};

}  // namespace detail

/// Minimum torso parameter over all X whose removal leaves only components in H.
inline int brute_force_torso_param(const Graph &g, const ClassOracle &oracle, WitnessKind kind,
                                   int cap = default_torso_search_cap) {
    if (g.n() > cap) throw size_error("brute_force_torso_param", g.n(), cap);
    detail::ComponentMembership member(g, oracle);
    int best = kind == WitnessKind::ed ? g.n() : g.n() - 1;
    const std::uint64_t limit = std::uint64_t{1} << g.n();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VertexSet x(bits);
        if (!member.all_in_class(x)) continue;
        const Graph t = torso(g, x).graph;
        // Only an improvement matters, so decide "< best" instead of computing exactly.
        const bool better = kind == WitnessKind::ed ? treedepth_atmost(t, best - 1) : treewidth_atmost(t, best - 1);
        if (better) best = torso_parameter(t, kind);
    }
    return best;
}

/// Every X (in canonical order) that witnesses the question for k.
inline std::vector<VertexSet> brute_force_witnesses(const Graph &g, const ClassOracle &oracle, WitnessKind kind, int k,
                                                    int cap = default_torso_search_cap) {
    if (g.n() > cap) throw size_error("brute_force_witnesses", g.n(), cap);
    detail::ComponentMembership member(g, oracle);
    std::vector<VertexSet> out;
    for_each_subset_canonical(g.vertices(), g.n(), [&](VertexSet x) {
        if (!member.all_in_class(x)) return false;
        const Graph t = torso(g, x).graph;
        if (kind == WitnessKind::ed ? treedepth_atmost(t, k) : treewidth_atmost(t, k - 1)) out.push_back(x);
        return false;
    });
    return out;
}

/// The canonically first witness for question k, found by exhaustive search.
inline std::optional<Witness> brute_force_witness(const Graph &g, const ClassOracle &oracle, WitnessKind kind, int k,
                                                  int cap = default_width_cap) {
    if (g.n() > cap) throw size_error("brute_force_witness", g.n(), cap);
    detail::ComponentMembership member(g, oracle);
    std::optional<VertexSet> found;
    for_each_subset_canonical(g.vertices(), g.n(), [&](VertexSet x) {
        if (!member.all_in_class(x)) return false;
        const Graph t = torso(g, x).graph;
        if (kind == WitnessKind::ed ? treedepth_atmost(t, k) : treewidth_atmost(t, k - 1)) {
            found = x;
            return true;
        }
        return false;
    });
    if (!found) return std::nullopt;
    return make_witness(g, *found, k, kind, oracle);
}

namespace detail {

/// Distinct open neighborhoods of the small connected sets around y, in first-seen order
/// of the canonical set enumeration. Choice tuples only matter through these.
inline std::vector<VertexSet> candidate_boundaries(const Graph &g, vertex_t y, int max_size, int max_boundary) {
    std::vector<VertexSet> out;
    std::unordered_set<VertexSet> seen;
    for (VertexSet s : enum_connected_sets(g, {y, max_size - 1, max_boundary})) {
        VertexSet b = open_neighborhood(g, s);
        if (seen.insert(b).second) out.push_back(b);
    }
    return out;
}

/// Visits the union of boundaries for every choice tuple over `keys` (one entry per key,
/// lexicographic over the per-key lists). Partial unions already expanded at the same
/// depth are skipped, so each reachable union is reported once, in first-occurrence order.
/// Stops when f returns true.
template <typename F>
bool for_each_tuple_union(const std::vector<std::vector<VertexSet>> &choices, F &&f) {
    std::vector<std::unordered_set<VertexSet>> expanded(choices.size() + 1);
    auto rec = [&](auto &&self, std::size_t depth, VertexSet acc) -> bool {
        if (!expanded[depth].insert(acc).second) return false;
        if (depth == choices.size()) return f(acc);
        for (VertexSet b : choices[depth])
            if (self(self, depth + 1, acc | b)) return true;
        return false;
    };
    return rec(rec, 0, VertexSet{});
}

}  // namespace detail

/// Searches for a witness X containing the deletion set Y, for graphs that are
/// (s,c)-unbreakable with tw(G) > s + k. Branches over B within Y (|B| <= k) and a choice of
/// small connected set around each vertex of Y - B; when the forced set D leaves exactly one
/// component C with at least s vertices and fewer than s vertices outside N[C], every
/// D + Q with Q outside N[C] is verified, smaller Q first. Returns the first witness found.
/// The search itself only reports verified witnesses; completeness relies on the hypotheses.
inline std::optional<Witness> extract_witness(const Graph &g, VertexSet y, const SolverParams &p, WitnessKind kind,
                                              const ClassOracle &oracle) {
    p.validate();
    if (!is_deletion_set(oracle, g, y))
        throw precondition_error(precondition_error::kind::not_a_deletion_set, "Y is not a deletion set");
    if (y.size() > p.s + p.k)
        throw precondition_error(precondition_error::kind::deletion_set_too_large, "|Y| exceeds s + k");

    std::unordered_map<vertex_t, std::vector<VertexSet>> boundaries;
    for (vertex_t v : y) boundaries[v] = detail::candidate_boundaries(g, v, p.s, p.k);

    std::unordered_set<VertexSet> processed;
    std::unordered_map<VertexSet, bool> verified;
    std::optional<VertexSet> found;

    auto try_forced = [&](VertexSet d) -> bool {
        if (!processed.insert(d).second) return false;
        const auto comps = components_within(g, g.vertices() - d);
        std::optional<VertexSet> large;
        for (VertexSet c : comps) {
            if (c.size() < p.s) continue;
            if (large) return false;
            large = c;
        }
        if (!large) return false;
        const VertexSet outside = g.vertices() - closed_neighborhood(g, *large);
        if (outside.size() >= p.s) return false;
        return for_each_subset_canonical(outside - d, outside.size(), [&](VertexSet q) {
            const VertexSet x = d | q;
            auto [it, fresh] = verified.try_emplace(x, false);
            if (fresh) it->second = verify_witness(g, x, p.k, kind, oracle, p.width_cap);
            if (it->second) found = x;
            return it->second;
        });
    };

    for_each_subset_canonical(y, p.k, [&](VertexSet b) {
        std::vector<std::vector<VertexSet>> choices;
        for (vertex_t v : y - b) choices.push_back(boundaries[v]);
        return detail::for_each_tuple_union(choices, [&](VertexSet u) { return try_forced(y | u); });
    });
    if (!found) return std::nullopt;
    return make_witness(g, *found, p.k, kind, oracle, p.width_cap);
}

}  // namespace hhparam
