#pragma once

#include "coalition/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace coalition {

/// Default and overridden upper bounds on the order accepted by
/// LabeledGraphEnumerator.
inline constexpr std::size_t kEnumerationGuard = 7;
inline constexpr std::size_t kEnumerationGuardOverride = 8;

/// Number of vertex pairs, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// The labeled graph whose adjacency bitmask is `index`. Bit k of the mask
/// is the k-th pair in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph_at(std::size_t n, std::uint64_t index);

/// Streams all 2^(n(n-1)/2) labeled graphs on n vertices in ascending
/// bitmask order, optionally only the connected ones. Single consumer;
/// parallel callers should partition the index range via labeled_graph_at.
class LabeledGraphEnumerator {
public:
    LabeledGraphEnumerator(std::size_t n, bool connected_only, bool allow_override = false);

    std::optional<Graph> next();

    /// 2^(n(n-1)/2), regardless of the connectivity filter.
    std::uint64_t total() const { return total_; }
    std::size_t order() const { return n_; }

private:
    std::size_t n_;
    bool connected_only_;
    std::uint64_t total_;
    std::uint64_t cursor_ = 0;
};

std::vector<Graph> enumerate_labeled_graphs(std::size_t n, bool connected_only, bool allow_override = false);

/// Tree on n vertices encoded by a Pruefer sequence of length n-2 with
/// entries in [0,n). n = 1 and n = 2 take an empty sequence.
Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence);

/// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(std::size_t n);

/// The index-th labeled tree: index is read as a base-n number giving the
/// Pruefer sequence, most significant digit first.
Graph labeled_tree_at(std::size_t n, std::uint64_t index);

} // namespace coalition
