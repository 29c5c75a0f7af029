#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "named_graphs.hpp"

namespace hhparam::corpus {

/// G(n, p) from a 64-bit Mersenne twister. Each pair (u < v) in lexicographic order consumes
/// one raw draw and becomes an edge when the draw falls below p * 2^64, so the output depends
/// only on (n, p, seed).
inline Graph gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw precondition_error(precondition_error::kind::invalid_parameters, "p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    const long double scale = 18446744073709551616.0L;
    const long double cut = static_cast<long double>(p) * scale;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p >= 1.0 || static_cast<long double>(rng()) < cut) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Clique K_q on 0..q-1 joined completely to both sides of K_{a,b} on q..q+a+b-1.
/// With q <= k these have a depth-q witness (the clique) while staying dense enough
/// to be unbreakable for small s.
inline Graph clique_with_bipartite(int q, int a, int b) {
    const int n = q + a + b;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (int u = 0; u < q; ++u) {
        for (int v = u + 1; v < q; ++v) edges.emplace_back(u, v);
        for (int v = q; v < n; ++v) edges.emplace_back(u, v);
    }
    for (int u = q; u < q + a; ++u)
        for (int v = q + a; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// A single apex vertex 0 over an arbitrary base graph shifted to 1..n.
inline Graph apex_over(const Graph &base) {
    auto edges = base.edges();
    for (auto &[u, v] : edges) ++u, ++v;
    for (int v = 1; v <= base.n(); ++v) edges.emplace_back(0, v);
    return Graph(base.n() + 1, edges);
}

/// The d-dimensional hypercube.
inline Graph hypercube(int d) {
    const int n = 1 << d;
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < d; ++bit)
            if (int v = u ^ (1 << bit); u < v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Representatives of every isomorphism class on exactly n vertices.
inline std::vector<Graph> all_graphs(int n) { return all_graphs_up_to_isomorphism(n); }

/// Every isomorphism class on 0..max_n vertices, smallest first.
inline std::vector<Graph> all_graphs_upto(int max_n) {
    std::vector<Graph> out;
    for (int n = 0; n <= max_n; ++n)
        for (Graph &g : all_graphs(n)) out.push_back(std::move(g));
    return out;
}

/// Deterministic batch of random graphs: instance i has n drawn from [min_n, max_n] and
/// p from {0.2, 0.35, 0.5, 0.65}, all from the batch seed.
inline std::vector<Graph> random_batch(int count, int min_n, int max_n, std::uint64_t seed) {
    static constexpr double densities[] = {0.2, 0.35, 0.5, 0.65};
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        const double p = densities[rng() % 4];
        out.push_back(gnp(n, p, rng()));
    }
    return out;
}

/// Named family lookup used by the command line: path, cycle, clique, wheel, star, grid
/// (two sizes), hypercube, petersen, gnp (n, p, seed), clique-bip (q, a, b).
inline Graph family(const std::string &name, const std::vector<double> &args, std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw precondition_error(precondition_error::kind::invalid_parameters,
                                     "family '" + name + "' takes " + std::to_string(count) + " argument(s)");
    };
    auto arg = [&](std::size_t i) {
        const double v = args[i];
        if (v < 0 || v != static_cast<double>(static_cast<int>(v)))
            throw precondition_error(precondition_error::kind::invalid_parameters, "size arguments must be non-negative integers");
        return static_cast<int>(v);
    };
    if (name == "path") return need(1), named::path(arg(0));
    if (name == "cycle") return need(1), named::cycle(arg(0));
    if (name == "clique") return need(1), named::complete(arg(0));
    if (name == "wheel") return need(1), named::wheel(arg(0));
    if (name == "star") return need(1), named::star(arg(0));
    if (name == "grid") return need(2), named::grid(arg(0), arg(1));
    if (name == "hypercube") return need(1), hypercube(arg(0));
    if (name == "petersen") return need(0), named::petersen();
    if (name == "gnp") return need(2), gnp(arg(0), args[1], seed);
    if (name == "clique-bip") return need(3), clique_with_bipartite(arg(0), arg(1), arg(2));
    throw precondition_error(precondition_error::kind::invalid_parameters, "unknown family '" + name + "'");
}

}  // namespace hhparam::corpus
