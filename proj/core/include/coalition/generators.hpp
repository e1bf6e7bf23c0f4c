#pragma once

#include "coalition/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coalition::gen {

Graph empty(std::size_t n);
/// P_n, vertices 0-1-...-(n-1). Requires n >= 1.
Graph path(std::size_t n);
/// C_n. Requires n >= 3.
Graph cycle(std::size_t n);
/// K_n. Requires n >= 1.
Graph complete(std::size_t n);
/// K_{r,s}: part A is 0..r-1, part B is r..r+s-1. Requires r, s >= 1.
Graph complete_bipartite(std::size_t r, std::size_t s);
/// K_{1,leaves} with hub 0. Requires leaves >= 1.
Graph star(std::size_t leaves);
/// F_k = K_1 + kK_2 with hub 0; 2k+1 vertices, 3k edges. Requires k >= 1.
Graph friendship(std::size_t k);

/// Names accepted by generate().
const std::vector<std::string>& family_names();

/// Dispatches on a family name: path, cycle, complete, complete_bipartite,
/// star, friendship. Throws PreconditionError naming the violated constraint.
Graph generate(std::string_view family, const std::vector<long long>& params);

} // namespace coalition::gen
