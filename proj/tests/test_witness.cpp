#include <gtest/gtest.h>

#include "hhparam.hpp"
#include "oracles.hpp"

using namespace hhparam;

namespace {

const ClassOracle bip = ClassOracle::bipartite();

}  // namespace

TEST(VerifyWitness, Examples) {
    EXPECT_TRUE(verify_witness(named::complete(4), VertexSet::of({0, 1}), 2, WitnessKind::tw, bip));
    EXPECT_FALSE(verify_witness(named::cycle(5), {}, 5, WitnessKind::ed, bip));
    const Graph pet = named::petersen();
    EXPECT_TRUE(verify_witness(pet, pet.vertices(), treedepth_exact(pet).first, WitnessKind::ed, presets::claw_free()));
    EXPECT_FALSE(verify_witness(pet, pet.vertices(), treedepth_exact(pet).first - 1, WitnessKind::ed, bip));
    EXPECT_FALSE(verify_witness(named::path(3), VertexSet::single(5), 1, WitnessKind::ed, bip));
}

TEST(VerifyWitness, TreewidthQuestionZeroMeansMembership) {
    EXPECT_TRUE(verify_witness(named::cycle(4), {}, 0, WitnessKind::tw, bip));
    EXPECT_FALSE(verify_witness(named::cycle(5), VertexSet::single(0), 0, WitnessKind::tw, bip));
    EXPECT_TRUE(verify_witness(named::cycle(5), VertexSet::single(0), 1, WitnessKind::tw, bip));
}

TEST(MakeWitness, CertificateContents) {
    const Graph w8 = named::wheel(8);
    const Witness w = make_witness(w8, VertexSet::single(0), 1, WitnessKind::ed, bip);
    EXPECT_EQ(w.value, 1);
    EXPECT_EQ(w.torso.graph.n(), 1);
    ASSERT_EQ(w.components.size(), 1U);
    EXPECT_EQ(w.components[0].vertices, VertexSet::range(9) - VertexSet::single(0));
    EXPECT_TRUE(w.components[0].in_class);
    EXPECT_TRUE(satisfies_neighborhood_bound(w8, w));
    EXPECT_TRUE(is_sound_witness(w8, w, bip));

    const auto j = to_json(w8, w);
    EXPECT_EQ(j["kind"], "ed");
    EXPECT_EQ(j["x"], std::vector<int>{0});
    EXPECT_EQ(j["torso"]["graph6"], "@");
    EXPECT_EQ(j["checks"]["neighborhood_bound"], true);
    EXPECT_EQ(j["checks"]["torso_param"], 1);
    EXPECT_EQ(j["components"][0]["in_class"], true);
}

TEST(BruteForce, HhdepthExamples) {
    EXPECT_EQ(brute_force_hhdepth(named::cycle(4), bip), 0);
    EXPECT_EQ(brute_force_hhdepth(named::cycle(5), bip), 1);
    EXPECT_EQ(brute_force_hhdepth(named::complete(4), bip), 2);
    EXPECT_EQ(brute_force_hhdepth(named::complete(5), bip), 3);
    EXPECT_EQ(brute_force_hhdepth(named::complete(4), presets::triangle_free()), 2);
    EXPECT_EQ(brute_force_hhdepth(Graph(0), bip), 0);
    EXPECT_THROW(brute_force_hhdepth(Graph(15), bip), size_error);
}

TEST(BruteForce, TorsoParamExamples) {
    EXPECT_EQ(brute_force_torso_param(named::cycle(5), bip, WitnessKind::tw), 0);
    EXPECT_EQ(brute_force_torso_param(named::complete(4), bip, WitnessKind::tw), 1);
    EXPECT_EQ(brute_force_torso_param(named::cycle(4), bip, WitnessKind::tw), -1);
    EXPECT_EQ(brute_force_torso_param(named::cycle(4), bip, WitnessKind::ed), 0);
    EXPECT_THROW(brute_force_torso_param(Graph(13), bip, WitnessKind::ed), size_error);
}

TEST(BruteForce, DepthRecursionEqualsTorsoSearch) {
    for (const ClassOracle &o : {bip, presets::triangle_free(), presets::cograph()})
        for (const Graph &g : corpus::random_batch(60, 1, 9, 111))
            EXPECT_EQ(brute_force_hhdepth(g, o), brute_force_torso_param(g, o, WitnessKind::ed)) << encode_graph6(g);
}

TEST(BruteForce, WitnessListsAreConsistent) {
    for (const Graph &g : corpus::random_batch(40, 1, 8, 112))
        for (WitnessKind kind : {WitnessKind::ed, WitnessKind::tw}) {
            const int best = brute_force_torso_param(g, bip, kind);
            const int k = kind == WitnessKind::ed ? best : best + 1;
            const auto all = brute_force_witnesses(g, bip, kind, k);
            ASSERT_FALSE(all.empty());
            for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(canonical_less(all[i - 1], all[i]));
            const auto first = brute_force_witness(g, bip, kind, k);
            ASSERT_TRUE(first);
            EXPECT_EQ(first->x, all.front());
            EXPECT_EQ(first->value, best);
            EXPECT_TRUE(is_sound_witness(g, *first, bip));
            if (k > 0) {
                EXPECT_TRUE(brute_force_witnesses(g, bip, kind, k - 1).empty());
            }
            EXPECT_FALSE(brute_force_witness(g, bip, kind, k - 1));
        }
}

TEST(SolverParams, Validation) {
    EXPECT_NO_THROW((SolverParams{1, 1, 1}.validate()));
    EXPECT_THROW((SolverParams{-1, 1, 1}.validate()), precondition_error);
    EXPECT_THROW((SolverParams{1, 0, 1}.validate()), precondition_error);
    EXPECT_THROW((SolverParams{2, 1, 1}.validate()), precondition_error);
}

TEST(ExtractWitness, Examples) {
    const Graph w8 = named::wheel(8);
    const auto w = extract_witness(w8, VertexSet::single(0), {1, 8, 2}, WitnessKind::ed, bip);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->x, VertexSet::single(0));
    EXPECT_EQ(w->value, 1);

    const Graph k5 = named::complete(5);
    EXPECT_FALSE(extract_witness(k5, min_oct(k5), {1, 8, 2}, WitnessKind::ed, bip));

    const auto c5 = extract_witness(named::cycle(5), VertexSet::single(0), {1, 4, 2}, WitnessKind::ed, bip);
    ASSERT_TRUE(c5);
    EXPECT_EQ(c5->x, VertexSet::single(0));
}

TEST(ExtractWitness, PreconditionErrors) {
    using K = precondition_error::kind;
    try {
        extract_witness(named::cycle(5), {}, {1, 2, 2}, WitnessKind::ed, bip);
        ADD_FAILURE();
    } catch (const precondition_error &e) {
        EXPECT_EQ(e.which(), K::not_a_deletion_set);
    }
    try {
        extract_witness(named::complete(6), VertexSet::range(6), {1, 2, 2}, WitnessKind::ed, bip);
        ADD_FAILURE();
    } catch (const precondition_error &e) {
        EXPECT_EQ(e.which(), K::deletion_set_too_large);
    }
}

// Whenever extraction from Y fails but a witness exists, no witness contains Y.
TEST(ExtractWitness, FailureMeansNoWitnessContainsY) {
    int failures = 0;
    auto graphs = corpus::random_batch(80, 4, 9, 113);
    for (int rim : {6, 7, 8, 9}) graphs.push_back(named::wheel(rim));
    graphs.push_back(named::petersen());
    for (const Graph &g : graphs)
        for (int s = 1; s <= 3; ++s)
            for (int k = 1; k <= 2; ++k) {
                const SolverParams p{k, s, 2 * k};
                const VertexSet y = min_oct(g);
                if (y.size() > s + k) continue;
                if (!is_unbreakable(g, s, p.c) || treewidth_atmost(g, s + k)) continue;
                for (WitnessKind kind : {WitnessKind::ed, WitnessKind::tw}) {
                    const auto got = extract_witness(g, y, p, kind, bip);
                    if (got) {
                        EXPECT_TRUE(y.subset_of(got->x));
                        EXPECT_TRUE(is_sound_witness(g, *got, bip));
                        continue;
                    }
                    ++failures;
                    for (VertexSet x : brute_force_witnesses(g, bip, kind, k)) EXPECT_FALSE(y.subset_of(x));
                }
            }
    EXPECT_GT(failures, 0);
}
