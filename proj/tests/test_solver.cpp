#include <gtest/gtest.h>

#include "hhparam.hpp"

using namespace hhparam;

namespace {

const ClassOracle bip = ClassOracle::bipartite();

void expect_sound(const Graph &g, const SolveResult &r, const ClassOracle &o) {
    if (!r.witness) return;
    EXPECT_TRUE(is_sound_witness(g, *r.witness, o)) << encode_graph6(g);
}

}  // namespace

TEST(SolveBip, Examples) {
    const auto c5 = solve_bip(named::cycle(5), 1, 8, WitnessKind::ed);
    ASSERT_TRUE(c5.witness);
    EXPECT_EQ(c5.witness->value, 1);
    EXPECT_EQ(c5.witness->x, VertexSet::single(0));
    EXPECT_EQ(c5.branch, Branch::brute_force);

    EXPECT_FALSE(solve_bip(named::complete(5), 2, 8, WitnessKind::ed).witness);

    for (const Graph &g : {named::cycle(6), named::grid(3, 4), named::complete_bipartite(3, 5)}) {
        const auto r = solve_bip(g, 0, 1, WitnessKind::ed);
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(r.witness->x.empty());
    }
}

TEST(SolveBip, HighWidthBranchOnWheels) {
    for (int rim : {6, 8, 10, 12}) {
        const Graph g = named::wheel(rim);
        const auto r = solve_bip(g, 1, 1, WitnessKind::ed);
        EXPECT_EQ(r.branch, Branch::claims);
        EXPECT_EQ(r.unbreakable, Hypothesis::holds);
        ASSERT_TRUE(r.witness);
        EXPECT_EQ(r.witness->x, VertexSet::single(0));
        EXPECT_GT(r.counters.weak_octs, 0U);
        expect_sound(g, r, bip);

        const auto tw0 = solve_bip(g, 0, 1, WitnessKind::tw);
        EXPECT_EQ(tw0.branch, Branch::claims);
        EXPECT_FALSE(tw0.witness);
    }
    for (int rim : {7, 9, 11}) {
        const auto r = solve_bip(named::wheel(rim), 1, 1, WitnessKind::ed);
        EXPECT_EQ(r.branch, Branch::claims);
        EXPECT_FALSE(r.witness);
    }
}

TEST(SolveBip, BreakableHighWidthGraphsUseExhaustiveSearch) {
    // Two K5 sharing a vertex: treewidth 4 but a single cut vertex splits it.
    std::vector<std::pair<vertex_t, vertex_t>> e;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) e.emplace_back(a, b), e.emplace_back(a == 0 ? 0 : a + 4, b + 4);
    const Graph g(9, e);
    const auto r = solve_bip(g, 1, 1, WitnessKind::ed);
    EXPECT_EQ(r.branch, Branch::brute_force);
    EXPECT_EQ(r.unbreakable, Hypothesis::violated);
    EXPECT_EQ(r.decision(), brute_force_witness(g, bip, WitnessKind::ed, 1).has_value());
}

TEST(SolveBip, AgreesWithOracleOnRandomGraphs) {
    for (const Graph &g : corpus::random_batch(40, 2, 9, 131))
        for (WitnessKind kind : {WitnessKind::ed, WitnessKind::tw})
            for (int k = 0; k <= 3; ++k) {
                const int best = brute_force_torso_param(g, bip, kind);
                const bool want = kind == WitnessKind::ed ? best <= k : best <= k - 1;
                const auto r = solve_bip(g, k, 2, kind);
                EXPECT_EQ(r.decision(), want) << encode_graph6(g) << " k=" << k;
                expect_sound(g, r, bip);
            }
}

TEST(SolveFiniteObstruction, Examples) {
    const ClassOracle k3 = presets::triangle_free();
    const auto yes = solve_finite_obstruction(named::complete(4), 2, 1, WitnessKind::ed, k3);
    ASSERT_TRUE(yes.witness);
    EXPECT_EQ(yes.witness->value, 2);
    EXPECT_FALSE(solve_finite_obstruction(named::complete(4), 1, 1, WitnessKind::ed, k3).witness);
    for (const Graph &g : {named::cycle(5), named::petersen(), named::grid(3, 3)}) {
        const auto r = solve_finite_obstruction(g, 0, 2, WitnessKind::ed, k3);
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(r.witness->x.empty());
    }
    EXPECT_THROW(solve_finite_obstruction(named::cycle(5), 1, 1, WitnessKind::ed, bip), precondition_error);
}

TEST(SolveFiniteObstruction, HighWidthBranch) {
    const ClassOracle k3 = presets::triangle_free();
    const Graph w8 = named::wheel(8);
    const auto r = solve_finite_obstruction(w8, 1, 1, WitnessKind::ed, k3);
    EXPECT_EQ(r.branch, Branch::claims);
    EXPECT_GT(r.counters.deletion_sets, 0U);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->x, VertexSet::single(0));
    expect_sound(w8, r, k3);
    EXPECT_FALSE(solve_finite_obstruction(named::wheel(7), 0, 1, WitnessKind::ed, k3).witness);
}

TEST(SolveFiniteObstruction, AgreesWithOracleOnRandomGraphs) {
    const std::vector<ClassOracle> oracles{presets::triangle_free(), presets::claw_free(), presets::cograph()};
    for (const Graph &g : corpus::random_batch(25, 2, 8, 141))
        for (const ClassOracle &o : oracles)
            for (WitnessKind kind : {WitnessKind::ed, WitnessKind::tw})
                for (int k = 0; k <= 2; ++k) {
                    const int best = brute_force_torso_param(g, o, kind);
                    const bool want = kind == WitnessKind::ed ? best <= k : best <= k - 1;
                    const auto r = solve_finite_obstruction(g, k, 1, kind, o);
                    EXPECT_EQ(r.decision(), want) << o.name() << " " << encode_graph6(g) << " k=" << k;
                    expect_sound(g, r, o);
                }
}

TEST(Solve, ThreadCountDoesNotChangeResults) {
    for (const Graph &g : {named::wheel(10), corpus::apex_over(named::complete_bipartite(4, 4)), named::complete(7)})
        for (int k = 0; k <= 2; ++k) {
            const auto one = solve(g, k, 1, WitnessKind::ed, bip);
            SolveOptions opt;
            opt.threads = 4;
            const auto four = solve(g, k, 1, WitnessKind::ed, bip, opt);
            EXPECT_EQ(one.decision(), four.decision());
            if (one.witness && four.witness) {
                EXPECT_EQ(one.witness->x, four.witness->x);
            }
        }
}

TEST(Solve, ParameterValidation) {
    EXPECT_THROW(solve_bip(named::cycle(5), -1, 1, WitnessKind::ed), precondition_error);
    EXPECT_THROW(solve_bip(named::cycle(5), 1, 0, WitnessKind::ed), precondition_error);
}

TEST(Solve, ExhaustiveBranchCap) {
    SolveOptions opt;
    opt.brute_force_cap = 8;
    EXPECT_THROW(solve_bip(named::grid(3, 3), 1, 8, WitnessKind::ed, opt), size_error);
}

TEST(Hypothesis, StatusReporting) {
    EXPECT_EQ(unbreakability_status(named::complete(5), 1, 1), Hypothesis::holds);
    EXPECT_EQ(unbreakability_status(named::path(9), 4, 1), Hypothesis::violated);
    EXPECT_EQ(unbreakability_status(Graph(25), 1, 1), Hypothesis::unverified);
    EXPECT_EQ(to_string(Hypothesis::unverified), "unverified");
    EXPECT_EQ(to_string(Branch::claims), "claims");
}
