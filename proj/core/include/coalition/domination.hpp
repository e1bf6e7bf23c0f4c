#pragma once

#include "coalition/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace coalition {

/// Default upper bound on the order accepted by the exact partition searches.
inline constexpr std::size_t kPartitionSearchGuard = 12;

bool is_dominating_set(const Graph& g, const VertexSet& s);

/// Dominating and inducing a connected subgraph. The empty set is never a
/// CDS; a singleton is one exactly when its vertex is full.
bool is_connected_dominating_set(const Graph& g, const VertexSet& s);

/// Bitmask forms of the predicates above, for graphs with order() <= 64.
bool dominates_mask(const Graph& g, std::uint64_t s);
bool induces_connected_mask(const Graph& g, std::uint64_t s);
bool is_cds_mask(const Graph& g, std::uint64_t s);

/// CDS membership for every subset of V, indexed by bitmask. Built in
/// O(2^n) by an incremental sweep; used by the exhaustive searches.
class CdsTable {
public:
    /// Limited to 20 vertices (1M entries).
    static constexpr std::size_t kMaxOrder = 20;

    explicit CdsTable(const Graph& g);

    bool operator[](std::uint64_t mask) const { return cds_[mask] != 0; }
    std::size_t order() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::uint8_t> cds_;
};

struct ConnectedDomination {
    std::size_t size = 0;
    VertexSet witness;
};

/// Minimum connected dominating set by ascending-size search; among sets of
/// the minimum size the lexicographically first sorted member list wins.
/// Throws PreconditionError on a disconnected graph and GuardError when
/// order() > 64.
ConnectedDomination gamma_c(const Graph& g);

/// Partition of V into connected dominating sets.
struct DomaticPartition {
    std::vector<VertexSet> parts;
};

/// Throws PreconditionError unless `d` is a disjoint cover of V whose
/// parts are all connected dominating sets.
void validate_domatic_partition(const Graph& g, const DomaticPartition& d);

struct ConnectedDomatic {
    std::size_t k = 0;
    DomaticPartition witness;
};

/// Connected domatic number d_c(G) with a witness partition.
///
/// Any set containing a CDS is dominated by it, hence itself connected and
/// dominating, so d_c equals the largest number of pairwise disjoint minimal
/// CDSs. The search packs minimal CDSs (lexicographic order, depth-first,
/// bounded by |uncovered| / gamma_c) and the uncovered remainder is merged
/// into the last part of the best packing.
///
/// Throws PreconditionError on a disconnected or empty graph and GuardError
/// when order() > guard.
ConnectedDomatic connected_domatic_number(const Graph& g, std::size_t guard = kPartitionSearchGuard);

} // namespace coalition
