#pragma once

#include "coalition/coalition.hpp"
#include "coalition/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coalition {

/// Dense 0/1 matrix, row-major.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, bool value) { data_[r * cols_ + c] = value ? 1 : 0; }
    std::size_t row_sum(std::size_t r) const;
    std::size_t col_sum(std::size_t c) const;

    /// "rows cols" header, then one line per row of space-separated digits.
    std::string dump() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Edge order used by every matrix in this module: depth-first from the
/// lowest unvisited vertex, neighbours ascending, each edge listed the first
/// time it is scanned. Paths and cycles come out in walk order.
std::vector<Edge> matrix_edge_order(const Graph& g);

/// Rows are edges (matrix_edge_order), columns vertices. Entry (pq, x) is 1
/// iff x lies in N[p] | N[q].
struct EdgeDominationMatrix {
    std::vector<Edge> edges;
    BinaryMatrix matrix;
};

/// Rows are vertices, columns edges (matrix_edge_order).
struct IncidenceMatrix {
    std::vector<Edge> edges;
    BinaryMatrix matrix;
};

/// Throws PreconditionError on an edgeless graph.
EdgeDominationMatrix edge_domination_matrix(const Graph& g);
IncidenceMatrix incidence_matrix(const Graph& g);

/// x in N[a] | N[b] | N[c]. Throws PreconditionError unless a, b, c are
/// distinct.
bool three_vertex_dominates(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex x);

/// Result of the CC(G) = n test.
struct CheckNDecision {
    bool answer = false;
    /// When answer: for every vertex x, the first incident edge whose
    /// closed neighbourhoods cover V.
    std::vector<Edge> witness;
    /// When !answer: the first vertex with no such edge.
    std::optional<Vertex> failing_vertex;
};

/// Decides CC(G) = n for a connected graph without full vertices, n >= 2,
/// from the edge-domination and incidence matrices: every vertex needs an
/// incident edge whose E-row sums to n. Throws PreconditionError naming a
/// full vertex, or on a disconnected graph.
CheckNDecision check_cc_equals_n(const Graph& g);

enum class Variant { paper, strict };

const char* to_string(Variant v);

/// How a vertex x outside the pair {u,v} is covered.
struct Justification {
    enum class Kind { edge, triple } kind = Kind::edge;
    /// Edge avoiding u and v, incident to x, with E-row sum n (kind == edge).
    Edge edge;
};

struct CheckN1Decision {
    bool answer = false;
    Variant variant = Variant::strict;
    std::optional<std::pair<Vertex, Vertex>> pair;
    /// Indexed by vertex; empty entries for u and v.
    std::vector<std::optional<Justification>> per_vertex;
    /// Vertex y with {y,u,v} a connected dominating set.
    std::optional<Vertex> anchor;
    /// Why the answer is no.
    std::string refutation;
};

/// Decides CC(G) = n-1 for a connected graph without full vertices, n >= 3,
/// by searching unordered pairs {u,v} (ascending) such that
///   (a) every x outside {u,v} has an incident edge avoiding {u,v} with
///       E-row sum n, or {x,u,v} is connected and dominating, and
///   (b) some y outside {u,v} makes {y,u,v} connected and dominating.
/// Variant::strict additionally demands (c) {u,v} is not itself a CDS and
/// (d) check_cc_equals_n(g) is false; it is then exact. Variant::paper
/// checks (a) and (b) only.
CheckN1Decision check_cc_equals_n_minus_1(const Graph& g, Variant variant = Variant::strict);

/// Singletons plus {u,v}, the partition a positive n-1 decision certifies.
CcPartition partition_from_decision(const Graph& g, const CheckN1Decision& decision);

} // namespace coalition
