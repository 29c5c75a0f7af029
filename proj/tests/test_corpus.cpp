#include <gtest/gtest.h>

#include "hhparam.hpp"

using namespace hhparam;

TEST(Corpus, GnpIsDeterministic) {
    EXPECT_EQ(corpus::gnp(10, 0.3, 7), corpus::gnp(10, 0.3, 7));
    EXPECT_EQ(encode_graph6(corpus::gnp(10, 0.3, 7)), encode_graph6(corpus::gnp(10, 0.3, 7)));
    EXPECT_EQ(corpus::gnp(8, 0.0, 1).edge_count(), 0);
    EXPECT_EQ(corpus::gnp(8, 1.0, 1), named::complete(8));
    EXPECT_THROW(corpus::gnp(5, 1.5, 1), precondition_error);
}

// Frozen output of the generator; a change here breaks reproducibility of stored corpora.
TEST(Corpus, GnpFrozenValue) { EXPECT_EQ(encode_graph6(corpus::gnp(10, 0.3, 7)), "ICEsPOehG"); }

TEST(Corpus, RandomBatchIsDeterministicAndInRange) {
    const auto a = corpus::random_batch(50, 3, 9, 5);
    const auto b = corpus::random_batch(50, 3, 9, 5);
    ASSERT_EQ(a.size(), 50U);
    EXPECT_EQ(a, b);
    for (const Graph &g : a) {
        EXPECT_GE(g.n(), 3);
        EXPECT_LE(g.n(), 9);
    }
}

TEST(Corpus, Families) {
    EXPECT_EQ(encode_graph6(corpus::family("cycle", {5}, 0)), "Dhc");
    const Graph w = corpus::family("wheel", {8}, 0);
    EXPECT_EQ(w.n(), 9);
    EXPECT_EQ(w.degree(0), 8);
    EXPECT_EQ(corpus::family("grid", {2, 3}, 0).edge_count(), 7);
    EXPECT_EQ(corpus::family("hypercube", {3}, 0).edge_count(), 12);
    EXPECT_EQ(corpus::family("petersen", {}, 0), named::petersen());
    EXPECT_EQ(corpus::family("gnp", {10, 0.3}, 7), corpus::gnp(10, 0.3, 7));
    EXPECT_EQ(corpus::family("clique-bip", {2, 2, 3}, 0).edge_count(), 1 + 2 * 5 + 6);
    EXPECT_THROW(corpus::family("cycle", {}, 0), precondition_error);
    EXPECT_THROW(corpus::family("cycle", {2.5}, 0), precondition_error);
    EXPECT_THROW(corpus::family("moebius", {3}, 0), precondition_error);
}

TEST(Corpus, ConstructedInstances) {
    const Graph apex = corpus::apex_over(named::complete_bipartite(3, 3));
    EXPECT_EQ(apex.n(), 7);
    EXPECT_EQ(apex.degree(0), 6);
    EXPECT_TRUE(is_bipartite(induced_subgraph(apex, apex.vertices() - VertexSet::single(0)).graph));
    EXPECT_EQ(corpus::all_graphs_upto(4).size(), 1U + 1 + 2 + 4 + 11);
}
