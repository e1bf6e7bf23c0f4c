#pragma once

#include "coalition/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace coalition {

/// Undirected edge with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
class Graph {
public:
    /// The order-0 graph.
    Graph() = default;

    std::size_t order() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
    VertexSet closed_neighborhood(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    std::size_t min_degree() const;
    std::size_t max_degree() const;

    /// All edges in ascending (u, v) order.
    std::vector<Edge> edges() const;

    /// Closed-neighbourhood bitmask of v; only for graphs with order() <= 64.
    std::uint64_t closed_mask(Vertex v) const { return closed_masks_.at(v); }
    std::uint64_t neighbor_mask(Vertex v) const { return closed_masks_.at(v) & ~(std::uint64_t{1} << v); }
    bool has_masks() const { return order() <= 64; }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

    friend Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

private:
    explicit Graph(std::vector<VertexSet> adj);

    std::vector<VertexSet> adj_;
    std::vector<std::uint64_t> closed_masks_;
    std::size_t edge_count_ = 0;
};

/// Builds a simple graph from vertex pairs. Duplicate pairs (in either
/// orientation) are merged. Throws GraphError on an out-of-range id or a
/// self-loop, naming the pair.
Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

/// True iff the graph has exactly one component. Order 0 is not connected.
bool is_connected(const Graph& g);

/// True iff the subgraph induced by s is connected (false for empty s).
bool induces_connected(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    /// new id -> original id
    std::vector<Vertex> original;
    /// original id -> new id, empty for vertices outside the subset
    std::vector<std::optional<Vertex>> relabel;
};

/// G[S] with members of S renumbered 0..|S|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertices of degree n-1. The single vertex of K_1 is full.
VertexSet full_vertices(const Graph& g);

bool is_tree(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);

/// G + H: disjoint union plus every edge between the two sides. H's ids are
/// shifted by |V(G)|.
Graph join(const Graph& g, const Graph& h);

/// G o H: G first, then |V(G)| copies of H in order; vertex i of G is
/// joined to every vertex of copy i.
Graph corona(const Graph& g, const Graph& h);

/// Recognises H o K_1 with H connected: K_2, or a connected graph in which
/// the pendant vertices have pairwise distinct supports and pendants plus
/// supports are exactly half and half of V.
bool is_corona_with_k1(const Graph& g);

} // namespace coalition
