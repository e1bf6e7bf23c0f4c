#include "coalition/graph.hpp"

#include "coalition/errors.hpp"

#include <algorithm>
#include <string>

namespace coalition {

Graph::Graph(std::vector<VertexSet> adj) : adj_(std::move(adj))
{
    const std::size_t n = adj_.size();
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        const VertexSet& nb = adj_[v];
        if (nb.universe() != n)
            throw GraphError("adjacency of vertex " + std::to_string(v) + " has wrong universe");
        if (nb.contains(v))
            throw GraphError("self-loop at vertex " + std::to_string(v));
        for (Vertex u : nb)
            if (!adj_[u].contains(v))
                throw GraphError("asymmetric adjacency between " + std::to_string(v) + " and " +
                                 std::to_string(u));
        degree_sum += nb.size();
    }
    edge_count_ = degree_sum / 2;
    if (n <= 64) {
        closed_masks_.resize(n);
        for (Vertex v = 0; v < n; ++v)
            closed_masks_[v] = adj_[v].mask() | (std::uint64_t{1} << v);
    }
}

Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs)
{
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& [a, b] : pairs) {
        const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a >= n || b >= n)
            throw GraphError("edge " + pair + " has a vertex id outside [0," + std::to_string(n) + ")");
        if (a == b)
            throw GraphError("edge " + pair + " is a self-loop");
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return Graph(std::move(adj));
}

VertexSet Graph::closed_neighborhood(Vertex v) const
{
    VertexSet s = adj_.at(v);
    s.insert(v);
    return s;
}

std::size_t Graph::min_degree() const
{
    std::size_t best = order() == 0 ? 0 : order();
    for (const auto& nb : adj_)
        best = std::min(best, nb.size());
    return best;
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& nb : adj_)
        best = std::max(best, nb.size());
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

bool induces_connected(const Graph& g, const VertexSet& s)
{
    const std::size_t start = s.first();
    if (start == s.universe())
        return false;
    VertexSet seen(g.order());
    seen.insert(static_cast<Vertex>(start));
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (s.contains(y) && !seen.contains(y)) {
                seen.insert(y);
                stack.push_back(y);
                ++reached;
            }
        }
    }
    return reached == s.size();
}

bool is_connected(const Graph& g)
{
    return g.order() > 0 && induces_connected(g, VertexSet::full(g.order()));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw PreconditionError("induced_subgraph: vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.order()));
    InducedSubgraph out;
    out.relabel.assign(g.order(), std::nullopt);
    for (Vertex v : s) {
        out.relabel[v] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v : s)
        for (Vertex u : g.neighbors(v))
            if (v < u && s.contains(u))
                pairs.emplace_back(*out.relabel[v], *out.relabel[u]);
    out.graph = build_graph(out.original.size(), pairs);
    return out;
}

VertexSet full_vertices(const Graph& g)
{
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order())
            out.insert(v);
    return out;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() + 1 == g.order(); }

namespace {

std::vector<std::pair<Vertex, Vertex>> shifted_edges(const Graph& g, Vertex offset)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : g.edges())
        out.emplace_back(e.u + offset, e.v + offset);
    return out;
}

} // namespace

Graph disjoint_union(const Graph& g, const Graph& h)
{
    auto pairs = shifted_edges(g, 0);
    auto rest = shifted_edges(h, static_cast<Vertex>(g.order()));
    pairs.insert(pairs.end(), rest.begin(), rest.end());
    return build_graph(g.order() + h.order(), pairs);
}

Graph join(const Graph& g, const Graph& h)
{
    auto pairs = shifted_edges(g, 0);
    auto rest = shifted_edges(h, static_cast<Vertex>(g.order()));
    pairs.insert(pairs.end(), rest.begin(), rest.end());
    const auto offset = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = 0; b < h.order(); ++b)
            pairs.emplace_back(a, offset + b);
    return build_graph(g.order() + h.order(), pairs);
}

Graph corona(const Graph& g, const Graph& h)
{
    if (g.order() == 0)
        throw PreconditionError("corona: the first graph must be nonempty");
    const std::size_t n = g.order();
    const std::size_t total = n + n * h.order();
    auto pairs = shifted_edges(g, 0);
    for (Vertex i = 0; i < n; ++i) {
        const auto offset = static_cast<Vertex>(n + i * h.order());
        auto copy = shifted_edges(h, offset);
        pairs.insert(pairs.end(), copy.begin(), copy.end());
        for (Vertex b = 0; b < h.order(); ++b)
            pairs.emplace_back(i, offset + b);
    }
    return build_graph(total, pairs);
}

bool is_corona_with_k1(const Graph& g)
{
    const std::size_t n = g.order();
    if (!is_connected(g))
        return false;
    if (n == 2)
        return true;
    if (n % 2 != 0)
        return false;
    VertexSet pendants(n);
    VertexSet supports(n);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 1)
            continue;
        const Vertex s = static_cast<Vertex>(g.neighbors(v).first());
        if (supports.contains(s))
            return false;
        pendants.insert(v);
        supports.insert(s);
    }
    return pendants.size() * 2 == n && !pendants.intersects(supports) && (pendants | supports).size() == n;
}

} // namespace coalition
