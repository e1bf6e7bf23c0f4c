#pragma once

#include "coalition/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace testgen {

using Rng = std::mt19937_64;

inline coalition::Graph random_graph(Rng& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<coalition::Vertex, coalition::Vertex>> pairs;
    for (coalition::Vertex v = 1; v < n; ++v)
        for (coalition::Vertex u = 0; u < v; ++u)
            if (coin(rng))
                pairs.emplace_back(u, v);
    return coalition::build_graph(n, pairs);
}

/// Random spanning tree plus extra edges with probability p.
inline coalition::Graph random_connected(Rng& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<coalition::Vertex, coalition::Vertex>> pairs;
    for (coalition::Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<coalition::Vertex> pick(0, v - 1);
        pairs.emplace_back(pick(rng), v);
    }
    for (coalition::Vertex v = 1; v < n; ++v)
        for (coalition::Vertex u = 0; u < v; ++u)
            if (coin(rng))
                pairs.emplace_back(u, v);
    return coalition::build_graph(n, pairs);
}

inline std::vector<coalition::Vertex> random_permutation(Rng& rng, std::size_t n)
{
    std::vector<coalition::Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), coalition::Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Vertex v of g becomes perm[v].
inline coalition::Graph relabel(const coalition::Graph& g, const std::vector<coalition::Vertex>& perm)
{
    std::vector<std::pair<coalition::Vertex, coalition::Vertex>> pairs;
    for (const auto& e : g.edges())
        pairs.emplace_back(perm[e.u], perm[e.v]);
    return coalition::build_graph(g.order(), pairs);
}

inline coalition::VertexSet random_subset(Rng& rng, std::size_t n, double p = 0.5)
{
    std::bernoulli_distribution coin(p);
    coalition::VertexSet s(n);
    for (coalition::Vertex v = 0; v < n; ++v)
        if (coin(rng))
            s.insert(v);
    return s;
}

} // namespace testgen
