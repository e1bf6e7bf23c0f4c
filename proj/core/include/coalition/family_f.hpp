#pragma once

#include "coalition/graph.hpp"

#include <cstddef>
#include <vector>

namespace coalition {

enum class PeelTerminal {
    disconnected_ge2, ///< reached a disconnected graph of order >= 2: member
    connected_no_full, ///< connected, nothing left to peel: not a member
    reached_k1,        ///< peeled down to K_1: not a member
};

const char* to_string(PeelTerminal terminal);

struct PeelStep {
    Vertex vertex = 0;               ///< original id of the removed full vertex
    std::size_t remaining_order = 0; ///< order after the removal
};

struct PeelTrace {
    std::vector<PeelStep> steps;
    PeelTerminal terminal = PeelTerminal::connected_no_full;
};

struct FamilyVerdict {
    bool member = false;
    PeelTrace trace;
};

enum class PeelChoice { lowest_id, highest_id };

/// Membership in the family built from disconnected graphs of order >= 2 by
/// repeatedly adding a universal vertex. Decided top-down: strip a full
/// vertex while one exists, then inspect what is left. Any two full vertices
/// are interchangeable, so the choice does not affect the verdict.
///
/// Throws PreconditionError for n = 0.
FamilyVerdict in_family_f(const Graph& g, PeelChoice choice = PeelChoice::lowest_id);

} // namespace coalition
