#include "coalition/enumerate.hpp"

#include "coalition/errors.hpp"

#include <algorithm>
#include <string>

namespace coalition {

Graph labeled_graph_at(std::size_t n, std::uint64_t index)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((index >> k) & 1)
                pairs.emplace_back(i, j);
    return build_graph(n, pairs);
}

LabeledGraphEnumerator::LabeledGraphEnumerator(std::size_t n, bool connected_only, bool allow_override)
    : n_(n), connected_only_(connected_only)
{
    const std::size_t limit = allow_override ? kEnumerationGuardOverride : kEnumerationGuard;
    if (n < 1)
        throw PreconditionError("enumerate_labeled_graphs: requires n >= 1");
    if (n > limit)
        throw GuardError("enumerate_labeled_graphs: n = " + std::to_string(n) + " exceeds the guard of " +
                         std::to_string(limit) + (allow_override ? "" : " (override raises it to 8)"));
    total_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> LabeledGraphEnumerator::next()
{
    while (cursor_ < total_) {
        Graph g = labeled_graph_at(n_, cursor_++);
        if (!connected_only_ || is_connected(g))
            return g;
    }
    return std::nullopt;
}

std::vector<Graph> enumerate_labeled_graphs(std::size_t n, bool connected_only, bool allow_override)
{
    LabeledGraphEnumerator it(n, connected_only, allow_override);
    std::vector<Graph> out;
    while (auto g = it.next())
        out.push_back(std::move(*g));
    return out;
}

Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence)
{
    if (n == 0)
        throw PreconditionError("tree_from_pruefer: requires n >= 1");
    const std::size_t expected = n >= 2 ? n - 2 : 0;
    if (sequence.size() != expected)
        throw PreconditionError("tree_from_pruefer: sequence length must be " + std::to_string(expected));
    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : sequence) {
        if (v >= n)
            throw PreconditionError("tree_from_pruefer: entry " + std::to_string(v) + " outside [0," +
                                    std::to_string(n) + ")");
        ++degree[v];
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v : sequence) {
        Vertex leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        pairs.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
    }
    if (n >= 2) {
        std::vector<Vertex> last;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1)
                last.push_back(v);
        pairs.emplace_back(last.at(0), last.at(1));
    }
    return build_graph(n, pairs);
}

std::uint64_t labeled_tree_count(std::size_t n)
{
    if (n <= 2)
        return 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i + 2 < n; ++i)
        total *= n;
    return total;
}

Graph labeled_tree_at(std::size_t n, std::uint64_t index)
{
    if (index >= labeled_tree_count(n))
        throw PreconditionError("labeled_tree_at: index out of range");
    std::vector<Vertex> sequence(n >= 2 ? n - 2 : 0);
    for (std::size_t i = sequence.size(); i-- > 0;) {
        sequence[i] = static_cast<Vertex>(index % n);
        index /= n;
    }
    return tree_from_pruefer(n, sequence);
}

} // namespace coalition
