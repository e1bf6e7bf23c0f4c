#include "coalition/coalition.hpp"
#include "coalition/enumerate.hpp"
#include "coalition/errors.hpp"
#include "coalition/generators.hpp"
#include "coalition/serialize.hpp"

#include "support/naive_oracle.hpp"
#include "support/named_graphs.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace coalition;

namespace {

CcPartition parts(std::size_t n, std::initializer_list<std::initializer_list<Vertex>> blocks)
{
    CcPartition psi;
    for (auto b : blocks)
        psi.parts.emplace_back(n, b);
    return psi;
}

} // namespace

TEST(Coalition, FiveCycleAdjacentPairs)
{
    const Graph c5 = gen::cycle(5);
    EXPECT_TRUE(forms_connected_coalition(c5, VertexSet(5, {0, 1}), VertexSet(5, {2, 3})));
    EXPECT_FALSE(forms_connected_coalition(c5, VertexSet(5, {0}), VertexSet(5, {2})));
}

TEST(Coalition, SixCycleHalves)
{
    const Graph c6 = gen::cycle(6);
    EXPECT_TRUE(forms_connected_coalition(c6, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})));
}

TEST(Coalition, CdsPartsNeverCoalesce)
{
    // {1} is a CDS of P3, so it cannot be one side of a coalition.
    EXPECT_FALSE(forms_connected_coalition(gen::path(3), VertexSet(3, {1}), VertexSet(3, {0})));
}

TEST(Coalition, RejectsEmptyOrOverlapping)
{
    const Graph c5 = gen::cycle(5);
    EXPECT_THROW(forms_connected_coalition(c5, VertexSet(5), VertexSet(5, {1})), PreconditionError);
    EXPECT_THROW(forms_connected_coalition(c5, VertexSet(5, {0, 1}), VertexSet(5, {1, 2})), PreconditionError);
}

TEST(CcPartition, FiveCycleThreeParts)
{
    const auto v = is_cc_partition(gen::cycle(5), parts(5, {{0, 1}, {2, 3}, {4}}));
    EXPECT_TRUE(v.valid);
    EXPECT_EQ(v.parts[0].role, PartRole::partnered);
    // Lowest-index partners: {0,1} pairs with {2,3}, and {4} with {0,1}.
    EXPECT_EQ(*v.parts[0].partner, 1u);
    EXPECT_EQ(*v.parts[2].partner, 0u);
}

TEST(CcPartition, CompleteGraphSingletons)
{
    const auto v = is_cc_partition(gen::complete(4), parts(4, {{0}, {1}, {2}, {3}}));
    EXPECT_TRUE(v.valid);
    for (const auto& s : v.parts)
        EXPECT_EQ(s.role, PartRole::full_singleton);
}

TEST(CcPartition, FiveCycleSingletonsInvalid)
{
    const auto v = is_cc_partition(gen::cycle(5), parts(5, {{0}, {1}, {2}, {3}, {4}}));
    EXPECT_FALSE(v.valid);
    for (const auto& s : v.parts)
        EXPECT_EQ(s.role, PartRole::unpartnered);
}

TEST(CcPartition, NonSingletonCdsIsIllegal)
{
    const auto v = is_cc_partition(gen::cycle(4), parts(4, {{0, 1}, {2, 3}}));
    EXPECT_FALSE(v.valid);
    EXPECT_EQ(v.parts[0].role, PartRole::illegal_cds);
}

TEST(CcPartition, CoverErrors)
{
    const Graph c4 = gen::cycle(4);
    EXPECT_THROW(validate_cover(c4, parts(4, {{0, 1}, {2}})), PreconditionError);
    EXPECT_THROW(validate_cover(c4, parts(4, {{0, 1}, {1, 2, 3}})), PreconditionError);
    EXPECT_THROW(validate_cover(c4, {{VertexSet(4, {0, 1, 2, 3}), VertexSet(4)}}), PreconditionError);
    EXPECT_THROW(validate_cover(c4, {{VertexSet(5, {0, 1, 2, 3})}}), PreconditionError);
}

TEST(CcNumber, SingleVertex)
{
    const auto r = cc_number(named::k1());
    EXPECT_EQ(r.cc, 1u);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(partition_to_json(*r.witness), "[[0]]");
}

TEST(CcNumber, SixPath)
{
    const auto r = cc_number(gen::path(6));
    EXPECT_EQ(r.cc, 2u);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->size(), 2u);
    EXPECT_TRUE(is_cc_partition(gen::path(6), *r.witness).valid);
}

TEST(CcNumber, FourCycleSingletons)
{
    const auto r = cc_number(gen::cycle(4));
    EXPECT_EQ(r.cc, 4u);
    EXPECT_EQ(partition_to_json(*r.witness), "[[0],[1],[2],[3]]");
}

TEST(CcNumber, FiveCycle)
{
    const auto r = cc_number(gen::cycle(5));
    EXPECT_EQ(r.cc, 3u);
    EXPECT_TRUE(is_cc_partition(gen::cycle(5), *r.witness).valid);
}

TEST(CcNumber, FriendshipHasNone)
{
    const auto r = cc_number(gen::friendship(2));
    EXPECT_EQ(r.cc, 0u);
    EXPECT_FALSE(r.witness.has_value());
}

TEST(CcNumber, FrozenValues)
{
    EXPECT_EQ(cc_number(gen::complete(5)).cc, 5u);
    EXPECT_EQ(cc_number(gen::complete_bipartite(2, 3)).cc, 5u);
    EXPECT_EQ(cc_number(gen::path(3)).cc, 0u);
    EXPECT_EQ(cc_number(gen::cycle(6)).cc, 3u);
    EXPECT_EQ(cc_number(named::house()).cc, 4u);
    EXPECT_EQ(cc_number(gen::empty(3)).cc, 0u);
}

TEST(CcNumber, FrozenHistograms)
{
    // Counts of labeled graphs by CC value, per order.
    const std::map<std::size_t, std::map<std::size_t, std::size_t>> expected = {
        {1, {{1, 1}}},
        {2, {{0, 1}, {2, 1}}},
        {3, {{0, 7}, {3, 1}}},
        {4, {{0, 48}, {2, 12}, {4, 4}}},
        {5, {{0, 476}, {2, 240}, {3, 192}, {4, 60}, {5, 56}}},
    };
    for (const auto& [n, hist] : expected) {
        std::map<std::size_t, std::size_t> got;
        for (const auto& g : enumerate_labeled_graphs(n, false))
            ++got[cc_number(g).cc];
        EXPECT_EQ(got, hist) << "n=" << n;
    }
}

TEST(CcNumber, MatchesNaiveOracleOnAllFiveVertexGraphs)
{
    for (const auto& g : enumerate_labeled_graphs(5, false)) {
        const auto r = cc_number(g);
        ASSERT_EQ(static_cast<int>(r.cc), naive::cc(g));
        if (r.witness) {
            ASSERT_EQ(r.witness->size(), r.cc);
            ASSERT_TRUE(is_cc_partition(g, *r.witness).valid);
        }
    }
}

TEST(CcNumber, Errors)
{
    EXPECT_THROW(cc_number(Graph{}), PreconditionError);
    EXPECT_THROW(cc_number(gen::cycle(13)), GuardError);
}

TEST(Shrink, GreedyAscending)
{
    EXPECT_EQ(shrink_to_minimal_cds(gen::cycle(6), VertexSet::full(6)).to_vector(),
              (std::vector<Vertex>{2, 3, 4, 5}));
    EXPECT_EQ(shrink_to_minimal_cds(gen::cycle(4), VertexSet::full(4)).size(), 2u);
}

TEST(ExpandDomatic, FourCycle)
{
    const Graph c4 = gen::cycle(4);
    const auto psi = expand_domatic_to_cc_partition(c4, {{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}});
    EXPECT_GE(psi.size(), 4u);
    EXPECT_TRUE(is_cc_partition(c4, psi).valid);
}

TEST(ExpandDomatic, SixCycleWholeSet)
{
    const Graph c6 = gen::cycle(6);
    const auto psi = expand_domatic_to_cc_partition(c6, {{VertexSet::full(6)}});
    EXPECT_GE(psi.size(), 2u);
    EXPECT_TRUE(is_cc_partition(c6, psi).valid);
}

TEST(ExpandDomatic, SixPathWholeSet)
{
    const Graph p6 = gen::path(6);
    const auto psi = expand_domatic_to_cc_partition(p6, {{VertexSet::full(6)}});
    EXPECT_GE(psi.size(), 2u);
    EXPECT_TRUE(is_cc_partition(p6, psi).valid);
    EXPECT_EQ(cc_number(p6).cc, 2u);
}

TEST(ExpandDomatic, Preconditions)
{
    EXPECT_THROW(expand_domatic_to_cc_partition(gen::complete(3), {{VertexSet::full(3)}}), PreconditionError);
    EXPECT_THROW(expand_domatic_to_cc_partition(gen::cycle(4), {{VertexSet(4, {0, 1})}}), PreconditionError);
}

TEST(CoalitionGraph, CompleteGraphIsEdgeless)
{
    const auto w = coalition_graph(gen::complete(4), parts(4, {{0}, {1}, {2}, {3}}));
    EXPECT_EQ(w.graph, gen::empty(4));
}

TEST(CoalitionGraph, FiveCycle)
{
    // {0,1}+{2,3} is the path 0-1-2-3, which dominates 4, so all three pairs coalesce.
    const auto w = coalition_graph(gen::cycle(5), parts(5, {{0, 1}, {2, 3}, {4}}));
    EXPECT_EQ(w.graph, gen::complete(3));
}

TEST(CoalitionGraph, SixCycleTriangle)
{
    const auto w = coalition_graph(gen::cycle(6), parts(6, {{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_EQ(w.graph, gen::complete(3));
}

TEST(CoalitionGraph, RejectsInvalid)
{
    EXPECT_THROW(coalition_graph(gen::cycle(5), parts(5, {{0}, {1}, {2}, {3}, {4}})), PreconditionError);
}

TEST(PartitionJson, RoundTrip)
{
    const auto psi = parts(5, {{0, 1}, {2, 3}, {4}});
    EXPECT_EQ(partition_to_json(psi), "[[0,1],[2,3],[4]]");
    EXPECT_EQ(parse_partition_json("[[0,1],[2,3],[4]]", 5), psi);
    EXPECT_EQ(parse_partition_json(" [ [4], [0 ,1] ,[2,3]]\n", 5).parts[0].to_vector(), std::vector<Vertex>{4});
}

TEST(PartitionJson, Errors)
{
    EXPECT_THROW(parse_partition_json("[[0,1]", 5), ParseError);
    EXPECT_THROW(parse_partition_json("[[0,7]]", 5), ParseError);
    EXPECT_THROW(parse_partition_json("[[0,-1]]", 5), ParseError);
    EXPECT_THROW(parse_partition_json("[[0,\"a\"]]", 5), ParseError);
    EXPECT_THROW(parse_partition_json("[[0],[]]", 5), ParseError);
    EXPECT_THROW(parse_partition_json("{}", 5), ParseError);
}
