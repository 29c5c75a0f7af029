#pragma once

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "graph_io.hpp"
#include "width.hpp"
#include "witness.hpp"

namespace hhparam {

inline nlohmann::json to_json(VertexSet s) { return s.to_vector(); }

/// {kind, k, value, x, torso:{graph6}, components:[{vertices, in_class}], checks:{neighborhood_bound, torso_param}}
/// `g` must be the graph the witness was built for.
inline nlohmann::json to_json(const Graph &g, const Witness &w) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto &c : w.components) comps.push_back({{"vertices", to_json(c.vertices)}, {"in_class", c.in_class}});
    return {
        {"kind", to_string(w.kind)},
        {"k", w.k},
        {"value", w.value},
        {"x", to_json(w.x)},
        {"torso", {{"graph6", encode_graph6(w.torso.graph)}}},
        {"components", comps},
        {"checks", {{"neighborhood_bound", satisfies_neighborhood_bound(g, w)}, {"torso_param", w.value}}},
    };
}

inline nlohmann::json to_json(const TreeDecomposition &td) {
    nlohmann::json bags = nlohmann::json::array();
    for (VertexSet b : td.bags) bags.push_back(to_json(b));
    return {{"nodes", td.size()}, {"parent", td.parent}, {"bags", bags}, {"width", td.width}};
}

inline nlohmann::json to_json(const EliminationForest &f) { return {{"parent", f.parent}, {"depth", f.depth}}; }

}  // namespace hhparam
