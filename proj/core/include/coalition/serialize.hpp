#pragma once

#include "coalition/coalition.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace coalition {

/// Compact array-of-arrays form, e.g. [[0,1],[2,3],[4]].
std::string partition_to_json(const CcPartition& psi);

/// Parses the array-of-arrays form for a graph of order n. Throws ParseError
/// on malformed JSON, non-integer or out-of-range ids, and empty parts.
/// Overlap and coverage are left to validate_cover.
CcPartition parse_partition_json(std::string_view text, std::size_t n);

} // namespace coalition
