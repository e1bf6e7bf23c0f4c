#include "coalition/matrix_checks.hpp"

#include "coalition/domination.hpp"
#include "coalition/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace coalition {

std::size_t BinaryMatrix::row_sum(std::size_t r) const
{
    std::size_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c)
        s += at(r, c);
    return s;
}

std::size_t BinaryMatrix::col_sum(std::size_t c) const
{
    std::size_t s = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        s += at(r, c);
    return s;
}

std::string BinaryMatrix::dump() const
{
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0)
                os << ' ';
            os << static_cast<int>(at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Edge> matrix_edge_order(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    std::set<Edge> listed;
    std::vector<bool> visited(n, false);
    // Frame: vertex and the neighbour to resume from.
    std::vector<std::pair<Vertex, std::size_t>> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (visited[root])
            continue;
        visited[root] = true;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [x, from] = stack.back();
            const VertexSet& nb = g.neighbors(x);
            std::size_t y = from;
            while (y < n && !nb.contains(static_cast<Vertex>(y)))
                ++y;
            if (y >= n) {
                stack.pop_back();
                continue;
            }
            from = y + 1;
            const Vertex vx = x;
            const auto vy = static_cast<Vertex>(y);
            const Edge e{std::min(vx, vy), std::max(vx, vy)};
            if (listed.insert(e).second)
                out.push_back(e);
            if (!visited[vy]) {
                visited[vy] = true;
                stack.emplace_back(vy, 0);
            }
        }
    }
    return out;
}

namespace {

void require_edges(const Graph& g, const char* what)
{
    if (g.edge_count() == 0)
        throw PreconditionError(std::string(what) + ": graph has no edges");
}

void require_checkable(const Graph& g, std::size_t min_order, const char* what)
{
    if (g.order() < min_order)
        throw PreconditionError(std::string(what) + ": requires n >= " + std::to_string(min_order));
    if (!is_connected(g))
        throw PreconditionError(std::string(what) + ": graph is disconnected");
    if (auto full = full_vertices(g); !full.empty())
        throw PreconditionError(std::string(what) + ": vertex " + std::to_string(full.first()) +
                                " is a full vertex");
}

bool is_cds_triple(const Graph& g, Vertex x, Vertex u, Vertex v)
{
    const std::size_t links = (g.adjacent(x, u) ? 1 : 0) + (g.adjacent(x, v) ? 1 : 0) + (g.adjacent(u, v) ? 1 : 0);
    if (links < 2)
        return false;
    for (Vertex w = 0; w < g.order(); ++w)
        if (!three_vertex_dominates(g, x, u, v, w))
            return false;
    return true;
}

} // namespace

EdgeDominationMatrix edge_domination_matrix(const Graph& g)
{
    require_edges(g, "edge_domination_matrix");
    EdgeDominationMatrix out{matrix_edge_order(g), BinaryMatrix(g.edge_count(), g.order())};
    for (std::size_t r = 0; r < out.edges.size(); ++r) {
        const auto [p, q] = out.edges[r];
        for (Vertex x = 0; x < g.order(); ++x)
            out.matrix.set(r, x, x == p || x == q || g.adjacent(x, p) || g.adjacent(x, q));
    }
    return out;
}

IncidenceMatrix incidence_matrix(const Graph& g)
{
    require_edges(g, "incidence_matrix");
    IncidenceMatrix out{matrix_edge_order(g), BinaryMatrix(g.order(), g.edge_count())};
    for (std::size_t c = 0; c < out.edges.size(); ++c) {
        out.matrix.set(out.edges[c].u, c, true);
        out.matrix.set(out.edges[c].v, c, true);
    }
    return out;
}

bool three_vertex_dominates(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex x)
{
    if (a == b || a == c || b == c)
        throw PreconditionError("three_vertex_dominates: vertices " + std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + " are not distinct");
    return x == a || x == b || x == c || g.adjacent(x, a) || g.adjacent(x, b) || g.adjacent(x, c);
}

CheckNDecision check_cc_equals_n(const Graph& g)
{
    require_checkable(g, 2, "check_cc_equals_n");
    const auto e = edge_domination_matrix(g);
    const auto inc = incidence_matrix(g);
    const std::size_t n = g.order();
    const std::size_t m = e.edges.size();

    CheckNDecision out;
    out.witness.reserve(n);
    for (Vertex x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t col = 0; col < m && !found; ++col) {
            if (inc.matrix.at(x, col) != 1)
                continue;
            std::size_t s = 0;
            for (Vertex v = 0; v < n; ++v)
                s += e.matrix.at(col, v);
            if (s == n) {
                out.witness.push_back(e.edges[col]);
                found = true;
            }
        }
        if (!found) {
            out.witness.clear();
            out.failing_vertex = x;
            return out;
        }
    }
    out.answer = true;
    return out;
}

const char* to_string(Variant v) { return v == Variant::paper ? "paper" : "strict"; }

CheckN1Decision check_cc_equals_n_minus_1(const Graph& g, Variant variant)
{
    require_checkable(g, 3, "check_cc_equals_n_minus_1");
    const std::size_t n = g.order();
    CheckN1Decision out;
    out.variant = variant;

    if (variant == Variant::strict && check_cc_equals_n(g).answer) {
        out.refutation = "every vertex has an incident edge dominating V, so CC(G) = n";
        return out;
    }

    const auto e = edge_domination_matrix(g);
    const auto inc = incidence_matrix(g);
    std::vector<bool> full_row(e.edges.size());
    for (std::size_t r = 0; r < e.edges.size(); ++r)
        full_row[r] = e.matrix.row_sum(r) == n;

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (variant == Variant::strict && is_connected_dominating_set(g, VertexSet(n, {u, v})))
                continue;
            std::vector<std::optional<Justification>> per_vertex(n);
            bool ok = true;
            for (Vertex x = 0; x < n && ok; ++x) {
                if (x == u || x == v)
                    continue;
                for (std::size_t col = 0; col < e.edges.size(); ++col) {
                    const Edge& edge = e.edges[col];
                    if (inc.matrix.at(x, col) != 1 || !full_row[col])
                        continue;
                    if (edge.u == u || edge.u == v || edge.v == u || edge.v == v)
                        continue;
                    per_vertex[x] = Justification{Justification::Kind::edge, edge};
                    break;
                }
                if (!per_vertex[x] && is_cds_triple(g, x, u, v))
                    per_vertex[x] = Justification{Justification::Kind::triple, {}};
                ok = per_vertex[x].has_value();
            }
            if (!ok)
                continue;
            for (Vertex y = 0; y < n; ++y) {
                if (y != u && y != v && is_cds_triple(g, y, u, v)) {
                    out.answer = true;
                    out.pair = std::make_pair(u, v);
                    out.per_vertex = std::move(per_vertex);
                    out.anchor = y;
                    return out;
                }
            }
        }
    }
    out.refutation = variant == Variant::strict
                         ? "no non-dominating pair {u,v} satisfies the covering and anchor conditions"
                         : "no pair {u,v} satisfies the covering and anchor conditions";
    return out;
}

CcPartition partition_from_decision(const Graph& g, const CheckN1Decision& decision)
{
    if (!decision.answer || !decision.pair)
        throw PreconditionError("partition_from_decision: decision is negative");
    const auto [u, v] = *decision.pair;
    CcPartition psi;
    for (Vertex x = 0; x < g.order(); ++x)
        if (x != u && x != v)
            psi.parts.push_back(VertexSet(g.order(), {x}));
    psi.parts.push_back(VertexSet(g.order(), {u, v}));
    return psi;
}

} // namespace coalition
