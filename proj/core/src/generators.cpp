#include "coalition/generators.hpp"

#include "coalition/errors.hpp"

#include <string>

namespace coalition::gen {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw PreconditionError(message);
}

} // namespace

Graph empty(std::size_t n) { return build_graph(n, {}); }

Graph path(std::size_t n)
{
    require(n >= 1, "path: requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i + 1 < n; ++i)
        pairs.emplace_back(i, i + 1);
    return build_graph(n, pairs);
}

Graph cycle(std::size_t n)
{
    require(n >= 3, "cycle: requires n >= 3");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        pairs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return build_graph(n, pairs);
}

Graph complete(std::size_t n)
{
    require(n >= 1, "complete: requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return build_graph(n, pairs);
}

Graph complete_bipartite(std::size_t r, std::size_t s)
{
    require(r >= 1 && s >= 1, "complete_bipartite: requires r >= 1 and s >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < r; ++a)
        for (Vertex b = 0; b < s; ++b)
            pairs.emplace_back(a, static_cast<Vertex>(r + b));
    return build_graph(r + s, pairs);
}

Graph star(std::size_t leaves)
{
    require(leaves >= 1, "star: requires at least 1 leaf");
    return complete_bipartite(1, leaves);
}

Graph friendship(std::size_t k)
{
    require(k >= 1, "friendship: requires k >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < k; ++i) {
        const Vertex a = 1 + 2 * i;
        pairs.emplace_back(0, a);
        pairs.emplace_back(0, a + 1);
        pairs.emplace_back(a, a + 1);
    }
    return build_graph(2 * k + 1, pairs);
}

const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names{"path", "cycle", "complete", "complete_bipartite", "star",
                                                "friendship"};
    return names;
}

Graph generate(std::string_view family, const std::vector<long long>& params)
{
    const std::string name(family);
    auto arity = [&](std::size_t expected) {
        require(params.size() == expected, name + ": expects " + std::to_string(expected) + " parameter(s), got " +
                                               std::to_string(params.size()));
        for (long long p : params)
            require(p >= 0, name + ": parameters must be non-negative");
    };
    auto at = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };

    if (name == "path") {
        arity(1);
        return path(at(0));
    }
    if (name == "cycle") {
        arity(1);
        return cycle(at(0));
    }
    if (name == "complete") {
        arity(1);
        return complete(at(0));
    }
    if (name == "complete_bipartite") {
        arity(2);
        return complete_bipartite(at(0), at(1));
    }
    if (name == "star") {
        arity(1);
        return star(at(0));
    }
    if (name == "friendship") {
        arity(1);
        return friendship(at(0));
    }
    throw PreconditionError("unknown graph family '" + name +
                            "' (expected path, cycle, complete, complete_bipartite, star or friendship)");
}

} // namespace coalition::gen
