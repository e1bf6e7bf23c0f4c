#include "coalition/domination.hpp"

#include "coalition/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace coalition {

namespace {

std::uint64_t all_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void require_masks(const Graph& g, const char* what)
{
    if (!g.has_masks())
        throw GuardError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds 64");
}

std::vector<Vertex> members_of(std::uint64_t mask)
{
    std::vector<Vertex> out;
    while (mask != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

bool is_dominating_set(const Graph& g, const VertexSet& s)
{
    VertexSet covered(g.order());
    for (Vertex v : s) {
        covered |= g.neighbors(v);
        covered.insert(v);
    }
    return covered.size() == g.order();
}

bool is_connected_dominating_set(const Graph& g, const VertexSet& s)
{
    return !s.empty() && is_dominating_set(g, s) && induces_connected(g, s);
}

bool dominates_mask(const Graph& g, std::uint64_t s)
{
    std::uint64_t covered = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1)
        covered |= g.closed_mask(static_cast<Vertex>(std::countr_zero(rest)));
    return covered == all_mask(g.order());
}

bool induces_connected_mask(const Graph& g, std::uint64_t s)
{
    if (s == 0)
        return false;
    std::uint64_t reach = s & (~s + 1);
    std::uint64_t frontier = reach;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1)
            next |= g.closed_mask(static_cast<Vertex>(std::countr_zero(rest)));
        frontier = next & s & ~reach;
        reach |= frontier;
    }
    return reach == s;
}

bool is_cds_mask(const Graph& g, std::uint64_t s) { return s != 0 && dominates_mask(g, s) && induces_connected_mask(g, s); }

CdsTable::CdsTable(const Graph& g) : n_(g.order())
{
    if (n_ > kMaxOrder)
        throw GuardError("CdsTable: order " + std::to_string(n_) + " exceeds " + std::to_string(kMaxOrder));
    const std::uint64_t count = std::uint64_t{1} << n_;
    cds_.assign(count, 0);
    for (std::uint64_t mask = 1; mask < count; ++mask)
        cds_[mask] = is_cds_mask(g, mask) ? 1 : 0;
}

ConnectedDomination gamma_c(const Graph& g)
{
    if (!is_connected(g))
        throw PreconditionError("gamma_c undefined for disconnected graphs");
    require_masks(g, "gamma_c");
    const std::size_t n = g.order();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Vertex> idx(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = static_cast<Vertex>(i);
        while (true) {
            std::uint64_t mask = 0;
            for (Vertex v : idx)
                mask |= std::uint64_t{1} << v;
            if (is_cds_mask(g, mask))
                return {k, VertexSet::from_mask(n, mask)};
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    throw InvariantViolation("gamma_c: V itself failed the CDS test on a connected graph");
}

void validate_domatic_partition(const Graph& g, const DomaticPartition& d)
{
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const VertexSet& part = d.parts[i];
        if (part.universe() != g.order())
            throw PreconditionError("domatic partition: part " + std::to_string(i) + " has the wrong universe");
        if (part.intersects(seen))
            throw PreconditionError("domatic partition: part " + std::to_string(i) + " overlaps an earlier part");
        if (!is_connected_dominating_set(g, part))
            throw PreconditionError("domatic partition: part " + std::to_string(i) + " " + part.to_string() +
                                    " is not a connected dominating set");
        seen |= part;
    }
    if (seen.size() != g.order())
        throw PreconditionError("domatic partition: parts do not cover V");
}

namespace {

struct PackingSearch {
    const std::vector<std::uint64_t>& sets;
    std::size_t gamma;
    std::uint64_t all;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;

    void run(std::size_t start, std::uint64_t used)
    {
        if (chosen.size() > best.size())
            best = chosen;
        const auto free_vertices = static_cast<std::size_t>(std::popcount(all & ~used));
        if (chosen.size() + free_vertices / gamma <= best.size())
            return;
        for (std::size_t i = start; i < sets.size(); ++i) {
            if ((sets[i] & used) != 0)
                continue;
            chosen.push_back(i);
            run(i + 1, used | sets[i]);
            chosen.pop_back();
            if (chosen.size() + free_vertices / gamma <= best.size())
                return;
        }
    }
};

} // namespace

ConnectedDomatic connected_domatic_number(const Graph& g, std::size_t guard)
{
    const std::size_t n = g.order();
    if (n == 0)
        throw PreconditionError("connected_domatic_number: requires n >= 1");
    if (!is_connected(g))
        throw PreconditionError("connected_domatic_number undefined for disconnected graphs");
    if (n > guard)
        throw GuardError("connected_domatic_number: n = " + std::to_string(n) + " exceeds the partition-search guard " +
                         std::to_string(guard));

    const CdsTable table(g);
    std::vector<std::uint64_t> minimal;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        if (!table[mask])
            continue;
        bool is_minimal = true;
        for (std::uint64_t rest = mask; rest != 0 && is_minimal; rest &= rest - 1)
            if (table[mask & ~(rest & (~rest + 1))])
                is_minimal = false;
        if (is_minimal)
            minimal.push_back(mask);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](std::uint64_t a, std::uint64_t b) { return members_of(a) < members_of(b); });

    std::size_t gamma = n;
    for (auto m : minimal)
        gamma = std::min(gamma, static_cast<std::size_t>(std::popcount(m)));

    PackingSearch search{minimal, gamma, all_mask(n), {}, {}};
    search.run(0, 0);

    ConnectedDomatic out;
    std::uint64_t used = 0;
    for (std::size_t i : search.best) {
        out.witness.parts.push_back(VertexSet::from_mask(n, minimal[i]));
        used |= minimal[i];
    }
    if (out.witness.parts.empty())
        throw InvariantViolation("connected_domatic_number: no CDS found in a connected graph");
    const std::uint64_t leftover = all_mask(n) & ~used;
    if (leftover != 0)
        out.witness.parts.back() |= VertexSet::from_mask(n, leftover);
    out.k = out.witness.parts.size();
    return out;
}

} // namespace coalition
