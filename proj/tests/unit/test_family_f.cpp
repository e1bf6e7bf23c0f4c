#include "coalition/enumerate.hpp"
#include "coalition/errors.hpp"
#include "coalition/family_f.hpp"
#include "coalition/generators.hpp"

#include "support/naive_oracle.hpp"

#include <gtest/gtest.h>

using namespace coalition;

TEST(FamilyF, ThreePathPeelsMiddle)
{
    const auto v = in_family_f(gen::path(3));
    EXPECT_TRUE(v.member);
    ASSERT_EQ(v.trace.steps.size(), 1u);
    EXPECT_EQ(v.trace.steps[0].vertex, 1u);
    EXPECT_EQ(v.trace.steps[0].remaining_order, 2u);
    EXPECT_EQ(v.trace.terminal, PeelTerminal::disconnected_ge2);
}

TEST(FamilyF, Friendship)
{
    EXPECT_TRUE(in_family_f(gen::friendship(2)).member);
    EXPECT_TRUE(in_family_f(gen::friendship(5)).member);
}

TEST(FamilyF, FiveCycleHasNothingToPeel)
{
    const auto v = in_family_f(gen::cycle(5));
    EXPECT_FALSE(v.member);
    EXPECT_TRUE(v.trace.steps.empty());
    EXPECT_EQ(v.trace.terminal, PeelTerminal::connected_no_full);
}

TEST(FamilyF, UniversalVertexOverDisconnectedGraph)
{
    const Graph g = join(gen::complete(1), disjoint_union(gen::cycle(4), gen::path(2)));
    EXPECT_TRUE(in_family_f(g).member);
}

TEST(FamilyF, CompleteGraphsPeelToSingleVertex)
{
    const auto v = in_family_f(gen::complete(4));
    EXPECT_FALSE(v.member);
    EXPECT_EQ(v.trace.terminal, PeelTerminal::reached_k1);
    EXPECT_EQ(v.trace.steps.size(), 3u);
    EXPECT_FALSE(in_family_f(gen::complete(1)).member);
}

TEST(FamilyF, DisconnectedIsImmediateMember)
{
    const auto v = in_family_f(gen::empty(2));
    EXPECT_TRUE(v.member);
    EXPECT_TRUE(v.trace.steps.empty());
}

TEST(FamilyF, HighestIdChoice)
{
    const Graph g = join(gen::complete(2), gen::empty(2));
    const auto low = in_family_f(g, PeelChoice::lowest_id);
    const auto high = in_family_f(g, PeelChoice::highest_id);
    EXPECT_EQ(low.member, high.member);
    EXPECT_EQ(low.trace.steps[0].vertex, 0u);
    EXPECT_EQ(high.trace.steps[0].vertex, 1u);
}

TEST(FamilyF, MatchesRecursiveDefinitionOnAllGraphsUpToFive)
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_labeled_graphs(n, false))
            ASSERT_EQ(in_family_f(g).member, naive::in_family(g));
}

TEST(FamilyF, RejectsEmptyGraph) { EXPECT_THROW(in_family_f(Graph{}), PreconditionError); }
