#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "hhparam.hpp"
#include "oracles.hpp"

using namespace hhparam;

TEST(Bipartite, Examples) {
    const auto c4 = is_bipartite(named::cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->color_class(1), VertexSet::of({0, 2}));
    EXPECT_EQ(c4->color_class(2), VertexSet::of({1, 3}));
    EXPECT_FALSE(is_bipartite(named::cycle(5)));
    const auto empty = is_bipartite(Graph(0));
    ASSERT_TRUE(empty);
    EXPECT_TRUE(empty->domain.empty());
}

TEST(Bipartite, MinimumVertexOfEachComponentGetsColorOne) {
    const Graph g(6, {{1, 2}, {2, 3}, {4, 5}});
    const auto c = is_bipartite(g);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->color(0), 1);
    EXPECT_EQ(c->color(1), 1);
    EXPECT_EQ(c->color(2), 2);
    EXPECT_EQ(c->color(4), 1);
    EXPECT_TRUE(c->is_proper(g));
}

TEST(Bipartite, AgreesWithOddCycleSearchOnAllSmallGraphs) {
    for (int n = 0; n <= 7; ++n)
        for (const Graph &g : corpus::all_graphs(n)) {
            const auto c = is_bipartite(g);
            EXPECT_EQ(c.has_value(), oracle::bipartite_within(g, g.vertices()));
            if (c) {
                EXPECT_TRUE(c->is_proper(g));
            }
        }
    // n = 8 through random samples.
    for (const Graph &g : corpus::random_batch(300, 8, 8, 8))
        EXPECT_EQ(is_bipartite(g).has_value(), oracle::bipartite_within(g, g.vertices()));
}

TEST(ForbiddenInduced, Examples) {
    const ClassOracle k3 = presets::triangle_free();
    const auto m = find_forbidden_induced(k3, named::complete(4));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->index, 0);
    EXPECT_EQ(m->embedding, (std::vector<vertex_t>{0, 1, 2}));
    EXPECT_FALSE(find_forbidden_induced(k3, named::cycle(5)));
    EXPECT_FALSE(find_forbidden_induced(presets::cliques(), named::complete(3)));
}

TEST(ForbiddenInduced, LeastIndexObstructionFirst) {
    // C4 contains no 2K2 but is obstruction 1 of the split preset.
    const auto m = find_forbidden_induced(presets::split(), named::cycle(4));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->index, 1);
    const auto m2 = find_forbidden_induced(presets::split(), named::path(5));
    ASSERT_TRUE(m2);
    EXPECT_EQ(m2->index, 0);
}

TEST(ForbiddenInduced, EmbeddingsAreInducedCopies) {
    const std::vector<ClassOracle> oracles{presets::triangle_free(), presets::claw_free(), presets::split(),
                                           presets::cograph(), presets::cliques(), presets::max_degree(2)};
    for (const Graph &g : corpus::random_batch(200, 4, 10, 31))
        for (const ClassOracle &o : oracles) {
            const auto m = find_forbidden_induced(o, g);
            bool any = false;
            for (const Graph &h : o.obstructions()) any = any || oracle::contains_induced(g, g.vertices(), h);
            EXPECT_EQ(m.has_value(), any);
            if (!m) continue;
            const Graph &h = o.obstructions()[m->index];
            ASSERT_EQ(static_cast<int>(m->embedding.size()), h.n());
            EXPECT_EQ(m->image().size(), h.n());
            for (int a = 0; a < h.n(); ++a)
                for (int b = a + 1; b < h.n(); ++b)
                    EXPECT_EQ(h.has_edge(a, b), g.has_edge(m->embedding[a], m->embedding[b]));
        }
}

TEST(ForbiddenInduced, WrongVariant) {
    EXPECT_THROW(find_forbidden_induced(ClassOracle::bipartite(), named::complete(3)), precondition_error);
    EXPECT_THROW(ClassOracle::bipartite().obstructions(), precondition_error);
}

TEST(ClassOracle, RejectsBadObstructionLists) {
    EXPECT_THROW(ClassOracle::forbidden_induced("none", {}), precondition_error);
    EXPECT_THROW(ClassOracle::forbidden_induced("empty", {Graph(0)}), precondition_error);
}

TEST(InClass, Examples) {
    EXPECT_FALSE(in_class(ClassOracle::bipartite(), named::petersen()));
    EXPECT_TRUE(in_class(ClassOracle::bipartite(), named::complete_bipartite(4, 4)));
    EXPECT_FALSE(in_class(presets::triangle_free(), named::complete(4)));
}

TEST(InClass, HereditaryClosure) {
    const std::vector<ClassOracle> oracles{ClassOracle::bipartite(), presets::triangle_free(), presets::claw_free(),
                                           presets::split(), presets::cograph(), presets::max_degree(3)};
    std::mt19937_64 rng(77);
    for (const Graph &g : corpus::random_batch(200, 2, 10, 41))
        for (const ClassOracle &o : oracles) {
            if (!in_class(o, g)) continue;
            const VertexSet s(rng() & g.vertices().bits());
            EXPECT_TRUE(in_class(o, induced_subgraph(g, s).graph));
            EXPECT_TRUE(in_class(o, g, s));
        }
}

TEST(Presets, MaxDegreeMatchesDegreeBound) {
    for (int d = 0; d <= 3; ++d) {
        const ClassOracle o = presets::max_degree(d);
        for (int n = 1; n <= 6; ++n)
            for (const Graph &g : corpus::all_graphs(n)) {
                int maxdeg = 0;
                for (vertex_t v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
                EXPECT_EQ(in_class(o, g), maxdeg <= d) << encode_graph6(g) << " d=" << d;
            }
    }
    EXPECT_THROW(presets::max_degree(6), precondition_error);
}

TEST(Presets, CliquesMeansEveryComponentIsAClique) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : corpus::all_graphs(n)) {
            bool cluster = true;
            for (VertexSet c : connected_components(g))
                for (vertex_t v : c) cluster = cluster && (g.adj(v) & c) == c - VertexSet::single(v);
            EXPECT_EQ(in_class(presets::cliques(), g), cluster);
        }
}

TEST(Presets, ComponentWiseMembershipForDisconnectedObstructions) {
    const Graph two_k2 = named::disjoint_union(named::complete(2), named::complete(2));
    EXPECT_FALSE(in_class(presets::split(), two_k2));
    EXPECT_TRUE(components_in_class(presets::split(), two_k2, two_k2.vertices()));
    const auto m = find_obstruction_in_component(presets::split(), named::cycle(4), VertexSet::range(4));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->index, 1);
}

TEST(OracleSpec, ResolvesNames) {
    EXPECT_TRUE(oracle_from_spec("bip").is_bipartite_class());
    EXPECT_EQ(oracle_from_spec("triangle-free").name(), "triangle-free");
    EXPECT_EQ(oracle_from_spec("maxdeg:2").name(), "maxdeg:2");
    EXPECT_EQ(oracle_from_spec("cliques").obstructions().size(), 1U);
    EXPECT_EQ(oracle_from_spec("split").obstructions().size(), 3U);
    EXPECT_THROW(oracle_from_spec("maxdeg:x"), parse_error);
    EXPECT_THROW(oracle_from_spec("planar"), parse_error);
    EXPECT_THROW(oracle_from_spec("file:/nonexistent/obstructions.g6"), parse_error);
}

TEST(OracleSpec, ObstructionFile) {
    const std::string path = ::testing::TempDir() + "hhparam_obstructions.g6";
    {
        std::ofstream f(path);
        f << "# triangle and claw\nBw\n\nCs  # K1,3\n";
    }
    const ClassOracle o = oracle_from_spec("file:" + path);
    ASSERT_EQ(o.obstructions().size(), 2U);
    EXPECT_EQ(o.obstructions()[0], named::complete(3));
    EXPECT_TRUE(isomorphic(o.obstructions()[1], named::star(3)));
    std::remove(path.c_str());
}
