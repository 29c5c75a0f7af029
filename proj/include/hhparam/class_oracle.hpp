#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"
#include "named_graphs.hpp"

namespace hhparam {

/// Proper 2-coloring of G[domain]: vertices in `second` get color 2, the rest of the domain color 1.
struct Coloring {
    VertexSet domain;
    VertexSet second;

    VertexSet color_class(int c) const { return c == 1 ? domain - second : second; }
    int color(vertex_t v) const { return second.contains(v) ? 2 : 1; }

    bool is_proper(const Graph &g) const {
        if (!second.subset_of(domain)) return false;
        for (vertex_t v : domain) {
            VertexSet same = g.adj(v) & color_class(color(v));
            if (!same.empty()) return false;
        }
        return true;
    }
};

/// BFS 2-coloring of G[domain]; each component's minimum vertex gets color 1.
inline std::optional<Coloring> two_coloring(const Graph &g, VertexSet domain) {
    Coloring c{domain, {}};
    VertexSet colored;
    for (vertex_t root = 0; root < g.n(); ++root) {
        if (!domain.contains(root) || colored.contains(root)) continue;
        VertexSet layer = VertexSet::single(root);
        colored |= layer;
        bool odd = false;
        while (!layer.empty()) {
            VertexSet next;
            for (vertex_t v : layer) next |= g.adj(v) & domain;
            next -= colored;
            odd = !odd;
            if (odd) c.second |= next;
            colored |= next;
            layer = next;
        }
    }
    if (!c.is_proper(g)) return std::nullopt;
    return c;
}

inline std::optional<Coloring> is_bipartite(const Graph &g) { return two_coloring(g, g.vertices()); }

struct Bipartite {};
struct ForbiddenInduced {
    std::vector<Graph> obstructions;
};

/// Membership test for a hereditary graph class H.
class ClassOracle {
   public:
    static ClassOracle bipartite() { return ClassOracle("bip", Bipartite{}); }

    static ClassOracle forbidden_induced(std::string name, std::vector<Graph> obstructions) {
        if (obstructions.empty())
            throw precondition_error(precondition_error::kind::invalid_parameters, "obstruction list must not be empty");
        for (const Graph &h : obstructions)
            if (h.n() < 1)
                throw precondition_error(precondition_error::kind::invalid_parameters, "obstructions need at least one vertex");
        return ClassOracle(std::move(name), ForbiddenInduced{std::move(obstructions)});
    }

    const std::string &name() const { return name_; }
    bool is_bipartite_class() const { return std::holds_alternative<Bipartite>(variant_); }
    bool is_forbidden_induced() const { return std::holds_alternative<ForbiddenInduced>(variant_); }

    const std::vector<Graph> &obstructions() const {
        if (!is_forbidden_induced())
            throw precondition_error(precondition_error::kind::wrong_oracle_variant, name_ + " has no obstruction list");
        return std::get<ForbiddenInduced>(variant_).obstructions;
    }

   private:
    ClassOracle(std::string name, std::variant<Bipartite, ForbiddenInduced> v) : name_(std::move(name)), variant_(std::move(v)) {}

    std::string name_;
    std::variant<Bipartite, ForbiddenInduced> variant_;
};

/// Induced copy of obstruction `index`; embedding[i] is the image of obstruction vertex i.
struct ObstructionMatch {
    int index;
    std::vector<vertex_t> embedding;

    VertexSet image() const { return VertexSet::of(embedding); }
};

namespace detail {

inline bool extend_embedding(const Graph &g, VertexSet within, const Graph &h, std::vector<vertex_t> &emb, VertexSet used) {
    const int i = static_cast<int>(emb.size());
    if (i == h.n()) return true;
    const int need = h.degree(i);
    for (vertex_t v : within - used) {
        if ((g.adj(v) & within).size() < need) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) ok = h.has_edge(i, j) == g.has_edge(v, emb[j]);
        if (!ok) continue;
        emb.push_back(v);
        if (extend_embedding(g, within, h, emb, used | VertexSet::single(v))) return true;
        emb.pop_back();
    }
    return false;
}

}  // namespace detail

/// Lexicographically least induced embedding of the least-index obstruction present in G[within].
inline std::optional<ObstructionMatch> find_forbidden_induced(const ClassOracle &oracle, const Graph &g, VertexSet within) {
    const auto &obs = oracle.obstructions();
    for (int idx = 0; idx < static_cast<int>(obs.size()); ++idx) {
        if (obs[idx].n() > within.size()) continue;
        std::vector<vertex_t> emb;
        if (detail::extend_embedding(g, within, obs[idx], emb, {})) return ObstructionMatch{idx, std::move(emb)};
    }
    return std::nullopt;
}

inline std::optional<ObstructionMatch> find_forbidden_induced(const ClassOracle &oracle, const Graph &g) {
    return find_forbidden_induced(oracle, g, g.vertices());
}

/// Is G[within] in the class?
inline bool in_class(const ClassOracle &oracle, const Graph &g, VertexSet within) {
    if (oracle.is_bipartite_class()) return two_coloring(g, within).has_value();
    return !find_forbidden_induced(oracle, g, within).has_value();
}

inline bool in_class(const ClassOracle &oracle, const Graph &g) { return in_class(oracle, g, g.vertices()); }

/// Does every connected component of G[within] belong to the class? This is the
/// membership notion witnesses use; it coincides with in_class for classes closed
/// under disjoint union (bipartite, or all obstructions connected).
inline bool components_in_class(const ClassOracle &oracle, const Graph &g, VertexSet within) {
    if (oracle.is_bipartite_class()) return two_coloring(g, within).has_value();
    for (VertexSet c : components_within(g, within))
        if (!in_class(oracle, g, c)) return false;
    return true;
}

/// First obstruction found inside a single component of G[within], components in order.
inline std::optional<ObstructionMatch> find_obstruction_in_component(const ClassOracle &oracle, const Graph &g,
                                                                     VertexSet within) {
    for (VertexSet c : components_within(g, within))
        if (auto m = find_forbidden_induced(oracle, g, c)) return m;
    return std::nullopt;
}

// Preset classes with finite obstruction sets.
namespace presets {

inline ClassOracle triangle_free() { return ClassOracle::forbidden_induced("triangle-free", {named::complete(3)}); }

inline ClassOracle claw_free() { return ClassOracle::forbidden_induced("claw-free", {named::star(3)}); }

/// Maximum degree at most d. A vertex of degree > d and any d+1 of its neighbors induce
/// a graph on d+2 vertices with a universal vertex, so the obstructions are the star
/// K_{1,d+1} plus every way of adding edges among its leaves, one per isomorphism type.
inline ClassOracle max_degree(int d) {
    if (d < 0 || d > 5) throw precondition_error(precondition_error::kind::invalid_parameters, "maxdeg preset supports 0 <= d <= 5");
    std::vector<Graph> obs;
    for (const Graph &leaf_graph : all_graphs_up_to_isomorphism(d + 1)) {
        std::vector<std::pair<vertex_t, vertex_t>> e;
        for (int i = 1; i <= d + 1; ++i) e.emplace_back(0, i);
        for (auto [u, v] : leaf_graph.edges()) e.emplace_back(u + 1, v + 1);
        obs.emplace_back(d + 2, e);
    }
    return ClassOracle::forbidden_induced("maxdeg:" + std::to_string(d), std::move(obs));
}

/// Split graphs: no induced 2K2, C4 or C5.
inline ClassOracle split() {
    return ClassOracle::forbidden_induced(
        "split", {named::disjoint_union(named::complete(2), named::complete(2)), named::cycle(4), named::cycle(5)});
}

inline ClassOracle cograph() { return ClassOracle::forbidden_induced("cograph", {named::path(4)}); }

/// Every component is a clique: no induced P3.
inline ClassOracle cliques() { return ClassOracle::forbidden_induced("cliques", {named::path(3)}); }

}  // namespace presets

/// Obstruction file: one graph6 string per line; blank lines and '#' comments ignored.
inline std::vector<Graph> parse_obstruction_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Graph> out;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        out.push_back(parse_graph6(line.substr(first, last - first + 1)));
    }
    return out;
}

/// Resolves "bip", "triangle-free", "claw-free", "maxdeg:<d>", "split", "cograph",
/// "cliques" or "file:<path>".
inline ClassOracle oracle_from_spec(const std::string &spec) {
    if (spec == "bip") return ClassOracle::bipartite();
    if (spec == "triangle-free") return presets::triangle_free();
    if (spec == "claw-free") return presets::claw_free();
    if (spec == "split") return presets::split();
    if (spec == "cograph") return presets::cograph();
    if (spec == "cliques") return presets::cliques();
    if (spec.rfind("maxdeg:", 0) == 0) {
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(spec.substr(7), &used);
            if (used != spec.size() - 7) throw std::invalid_argument("trailing");
        } catch (const std::exception &) {
            throw parse_error(parse_error::kind::syntax, "bad class spec '" + spec + "'");
        }
        return presets::max_degree(d);
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream f(path);
        if (!f) throw parse_error(parse_error::kind::syntax, "cannot open obstruction file '" + path + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        return ClassOracle::forbidden_induced(spec, parse_obstruction_list(buf.str()));
    }
    throw parse_error(parse_error::kind::syntax, "unknown class '" + spec + "'");
}

}  // namespace hhparam
