#pragma once

// Deliberately slow reference implementations built on std::set adjacency and
// recursive set-partition generation. They share no code with the library
// beyond reading the edge list of a Graph.

#include "coalition/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace naive {

using Set = std::set<int>;
using Partition = std::vector<Set>;

struct Adj {
    int n = 0;
    std::vector<Set> nb;
};

inline Adj adjacency(const coalition::Graph& g)
{
    Adj a;
    a.n = static_cast<int>(g.order());
    a.nb.resize(g.order());
    for (const auto& e : g.edges()) {
        a.nb[e.u].insert(static_cast<int>(e.v));
        a.nb[e.v].insert(static_cast<int>(e.u));
    }
    return a;
}

inline bool dominates(const Adj& a, const Set& s)
{
    Set covered = s;
    for (int v : s)
        covered.insert(a.nb[v].begin(), a.nb[v].end());
    return static_cast<int>(covered.size()) == a.n;
}

inline bool connected(const Adj& a, const Set& s)
{
    if (s.empty())
        return false;
    Set seen{*s.begin()};
    std::vector<int> stack{*s.begin()};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : a.nb[x])
            if (s.count(y) && seen.insert(y).second)
                stack.push_back(y);
    }
    return seen.size() == s.size();
}

inline bool cds(const Adj& a, const Set& s) { return dominates(a, s) && connected(a, s); }

inline Set unite(const Set& x, const Set& y)
{
    Set u = x;
    u.insert(y.begin(), y.end());
    return u;
}

inline bool coalition(const Adj& a, const Set& x, const Set& y)
{
    return !cds(a, x) && !cds(a, y) && cds(a, unite(x, y));
}

inline bool valid_cc_partition(const Adj& a, const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (cds(a, p[i])) {
            if (p[i].size() == 1 && static_cast<int>(a.nb[*p[i].begin()].size()) == a.n - 1)
                continue;
            return false;
        }
        bool partnered = false;
        for (std::size_t j = 0; j < p.size() && !partnered; ++j)
            partnered = j != i && coalition(a, p[i], p[j]);
        if (!partnered)
            return false;
    }
    return true;
}

/// Calls f on every set partition of {0..n-1}.
inline void for_each_partition(int n, const std::function<void(const Partition&)>& f)
{
    Partition current;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            f(current);
            return;
        }
        // Index access: the recursion may grow `current` and move its blocks.
        for (std::size_t i = 0, blocks = current.size(); i < blocks; ++i) {
            current[i].insert(v);
            rec(v + 1);
            current[i].erase(v);
        }
        current.push_back(Set{v});
        rec(v + 1);
        current.pop_back();
    };
    rec(0);
}

inline int cc(const coalition::Graph& g)
{
    const Adj a = adjacency(g);
    int best = 0;
    for_each_partition(a.n, [&](const Partition& p) {
        if (static_cast<int>(p.size()) > best && valid_cc_partition(a, p))
            best = static_cast<int>(p.size());
    });
    return best;
}

inline int connected_domatic(const coalition::Graph& g)
{
    const Adj a = adjacency(g);
    int best = 0;
    for_each_partition(a.n, [&](const Partition& p) {
        if (static_cast<int>(p.size()) > best &&
            std::all_of(p.begin(), p.end(), [&](const Set& s) { return cds(a, s); }))
            best = static_cast<int>(p.size());
    });
    return best;
}

inline int gamma_c(const coalition::Graph& g)
{
    const Adj a = adjacency(g);
    int best = a.n;
    for (unsigned m = 1; m < (1u << a.n); ++m) {
        Set s;
        for (int v = 0; v < a.n; ++v)
            if (m >> v & 1u)
                s.insert(v);
        if (static_cast<int>(s.size()) < best && cds(a, s))
            best = static_cast<int>(s.size());
    }
    return best;
}

/// Membership in the family closed under "add a universal vertex", seeded
/// with disconnected graphs of order >= 2. Tries every full vertex.
inline bool in_family(const Adj& a, const Set& alive)
{
    if (alive.size() >= 2 && !connected(a, alive))
        return true;
    for (int v : alive) {
        bool full = true;
        for (int w : alive)
            if (w != v && !a.nb[v].count(w))
                full = false;
        if (!full)
            continue;
        Set rest = alive;
        rest.erase(v);
        if (!rest.empty() && in_family(a, rest))
            return true;
    }
    return false;
}

inline bool in_family(const coalition::Graph& g)
{
    const Adj a = adjacency(g);
    Set all;
    for (int v = 0; v < a.n; ++v)
        all.insert(v);
    return in_family(a, all);
}

} // namespace naive
