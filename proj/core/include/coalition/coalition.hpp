#pragma once

#include "coalition/domination.hpp"
#include "coalition/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coalition {

/// Ordered list of nonempty, pairwise disjoint vertex sets covering V.
struct CcPartition {
    std::vector<VertexSet> parts;

    std::size_t size() const { return parts.size(); }
    bool operator==(const CcPartition&) const = default;
};

/// Neither a nor b is a CDS while a | b is. Throws PreconditionError when a
/// or b is empty or they overlap.
bool forms_connected_coalition(const Graph& g, const VertexSet& a, const VertexSet& b);

enum class PartRole {
    full_singleton, ///< {v} with v full; a CDS on its own
    partnered,      ///< non-CDS with a non-CDS coalition partner
    unpartnered,    ///< non-CDS without a partner
    illegal_cds,    ///< a CDS that is not a full-vertex singleton
};

const char* to_string(PartRole role);

struct PartStatus {
    PartRole role = PartRole::unpartnered;
    /// Lowest-index partner when role == partnered.
    std::optional<std::size_t> partner;
};

struct CcValidation {
    bool valid = false;
    std::vector<PartStatus> parts;
};

/// Throws PreconditionError unless the parts form a partition of V (nonempty,
/// disjoint, covering, matching universe).
void validate_cover(const Graph& g, const CcPartition& psi);

/// Checks the connected-coalition-partition conditions part by part.
CcValidation is_cc_partition(const Graph& g, const CcPartition& psi);

struct CcResult {
    std::size_t cc = 0;
    std::optional<CcPartition> witness;
};

/// Exact connected coalition number.
///
/// Walks every set partition of V in ascending restricted-growth-string
/// order and keeps the first valid partition of maximal size. Partitions
/// with no more blocks than the current best are skipped without
/// evaluation, which leaves the selected witness unchanged. The all-singleton
/// partition is tried first; if valid it is the unique answer of size n.
/// Disconnected graphs of order >= 2 return 0 without searching.
///
/// Throws PreconditionError for n = 0 and GuardError when n > guard.
CcResult cc_number(const Graph& g, std::size_t guard = kPartitionSearchGuard);

/// Shrinks a CDS to a minimal one by removing vertices in ascending order
/// while the remainder stays a CDS, repeated to a fixed point.
VertexSet shrink_to_minimal_cds(const Graph& g, VertexSet cds);

/// Builds a connected coalition partition with at least 2|D| parts from a
/// connected domatic partition D of a connected graph with n > 1 and no full
/// vertex:
///   1. parts D_1..D_{k-1} are shrunk to minimal CDSs, surplus moves to D_k;
///   2. each minimal CDS is split into two non-CDS halves;
///   3. D_k is split through its minimal core D'_k; the remainder D''_k
///      becomes its own part if some part forms a coalition with it, and is
///      otherwise merged into the second half of D'_k.
/// Splits are tried in a fixed order and the result is checked with
/// is_cc_partition. Throws InvariantViolation if no split validates.
CcPartition expand_domatic_to_cc_partition(const Graph& g, const DomaticPartition& d);

struct CoalitionWitnessGraph {
    CcPartition partition;
    /// Vertex i is partition.parts[i]; edges join coalition pairs.
    Graph graph;
};

/// Connected coalition graph of a valid partition. Full-vertex singletons
/// are isolated. Throws PreconditionError when psi is not valid.
CoalitionWitnessGraph coalition_graph(const Graph& g, const CcPartition& psi);

} // namespace coalition
