#include "coalition/coalition.hpp"

#include "coalition/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace coalition {

namespace {

void require_disjoint_nonempty(const VertexSet& a, const VertexSet& b)
{
    if (a.empty() || b.empty())
        throw PreconditionError("forms_connected_coalition: both sets must be nonempty");
    if (a.intersects(b))
        throw PreconditionError("forms_connected_coalition: sets " + a.to_string() + " and " + b.to_string() +
                                " overlap");
}

struct Split {
    VertexSet first;
    VertexSet second;
};

/// Two-way splits of `set` in a fixed order: the first half always holds the
/// smallest member, and the remaining members are added by binary counting.
std::vector<Split> splits_of(const VertexSet& set)
{
    const auto members = set.to_vector();
    std::vector<Split> out;
    if (members.size() < 2)
        return out;
    const std::size_t others = members.size() - 1;
    if (others >= 63)
        throw GuardError("split search: set of " + std::to_string(members.size()) + " vertices is too large");
    const std::uint64_t limit = (std::uint64_t{1} << others) - 1;
    for (std::uint64_t t = 0; t < limit; ++t) {
        Split s{VertexSet(set.universe()), VertexSet(set.universe())};
        s.first.insert(members[0]);
        for (std::size_t i = 0; i < others; ++i)
            ((t >> i) & 1 ? s.first : s.second).insert(members[i + 1]);
        out.push_back(std::move(s));
    }
    return out;
}

Split first_coalition_split(const Graph& g, const VertexSet& minimal_cds)
{
    for (auto& s : splits_of(minimal_cds))
        if (forms_connected_coalition(g, s.first, s.second))
            return s;
    throw InvariantViolation("no two-way split of minimal CDS " + minimal_cds.to_string() +
                             " forms a connected coalition");
}

} // namespace

bool forms_connected_coalition(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    require_disjoint_nonempty(a, b);
    return !is_connected_dominating_set(g, a) && !is_connected_dominating_set(g, b) &&
           is_connected_dominating_set(g, a | b);
}

const char* to_string(PartRole role)
{
    switch (role) {
    case PartRole::full_singleton:
        return "full-singleton";
    case PartRole::partnered:
        return "partnered";
    case PartRole::unpartnered:
        return "unpartnered";
    case PartRole::illegal_cds:
        return "illegal-CDS";
    }
    return "unknown";
}

void validate_cover(const Graph& g, const CcPartition& psi)
{
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < psi.parts.size(); ++i) {
        const VertexSet& part = psi.parts[i];
        if (part.universe() != g.order())
            throw PreconditionError("partition part " + std::to_string(i) + " has universe " +
                                    std::to_string(part.universe()) + ", graph order is " + std::to_string(g.order()));
        if (part.empty())
            throw PreconditionError("partition part " + std::to_string(i) + " is empty");
        if (part.intersects(seen))
            throw PreconditionError("partition part " + std::to_string(i) + " " + part.to_string() +
                                    " overlaps an earlier part");
        seen |= part;
    }
    if (seen.size() != g.order())
        throw PreconditionError("partition does not cover V: missing " + (~seen).to_string());
}

CcValidation is_cc_partition(const Graph& g, const CcPartition& psi)
{
    validate_cover(g, psi);
    const std::size_t k = psi.parts.size();
    std::vector<bool> is_cds(k);
    for (std::size_t i = 0; i < k; ++i)
        is_cds[i] = is_connected_dominating_set(g, psi.parts[i]);

    CcValidation out;
    out.valid = true;
    out.parts.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        PartStatus& status = out.parts[i];
        if (is_cds[i]) {
            status.role = psi.parts[i].size() == 1 ? PartRole::full_singleton : PartRole::illegal_cds;
        } else {
            status.role = PartRole::unpartnered;
            for (std::size_t j = 0; j < k; ++j) {
                if (j != i && !is_cds[j] && is_connected_dominating_set(g, psi.parts[i] | psi.parts[j])) {
                    status.role = PartRole::partnered;
                    status.partner = j;
                    break;
                }
            }
        }
        if (status.role == PartRole::illegal_cds || status.role == PartRole::unpartnered)
            out.valid = false;
    }
    return out;
}

CcResult cc_number(const Graph& g, std::size_t guard)
{
    const std::size_t n = g.order();
    if (n == 0)
        throw PreconditionError("cc_number: requires n >= 1");
    if (n > guard)
        throw GuardError("cc_number: n = " + std::to_string(n) + " exceeds the partition-search guard " +
                         std::to_string(guard));
    if (n >= 2 && !is_connected(g))
        return {};

    const CdsTable cds(g);

    // Restricted growth string a[0..n-1] with prefix maxima m[].
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> m(n, 0);
    std::vector<std::uint64_t> blocks(n);

    auto evaluate = [&](std::size_t k) {
        std::fill(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(k), 0);
        for (std::size_t v = 0; v < n; ++v)
            blocks[a[v]] |= std::uint64_t{1} << v;
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t b = blocks[i];
            if (cds[b]) {
                if (std::popcount(b) != 1)
                    return false;
                continue;
            }
            bool partnered = false;
            for (std::size_t j = 0; j < k && !partnered; ++j)
                partnered = j != i && !cds[blocks[j]] && cds[b | blocks[j]];
            if (!partnered)
                return false;
        }
        return true;
    };

    auto witness_from = [&](std::size_t k) {
        CcPartition psi;
        for (std::size_t i = 0; i < k; ++i)
            psi.parts.push_back(VertexSet::from_mask(n, blocks[i]));
        return psi;
    };

    for (std::size_t v = 0; v < n; ++v)
        a[v] = m[v] = v;
    if (evaluate(n))
        return {n, witness_from(n)};

    std::fill(a.begin(), a.end(), 0);
    std::fill(m.begin(), m.end(), 0);
    CcResult best;
    while (true) {
        const std::size_t k = m[n - 1] + 1;
        if (k > best.cc && k < n && evaluate(k)) {
            best.cc = k;
            best.witness = witness_from(k);
        }
        std::size_t i = n - 1;
        while (i > 0 && a[i] > m[i - 1])
            --i;
        if (i == 0)
            break;
        ++a[i];
        m[i] = std::max(m[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            m[j] = m[i];
        }
    }
    return best;
}

VertexSet shrink_to_minimal_cds(const Graph& g, VertexSet cds)
{
    if (!is_connected_dominating_set(g, cds))
        throw PreconditionError("shrink_to_minimal_cds: " + cds.to_string() + " is not a connected dominating set");
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : cds.to_vector()) {
            VertexSet smaller = cds;
            smaller.erase(v);
            if (is_connected_dominating_set(g, smaller)) {
                cds = std::move(smaller);
                changed = true;
            }
        }
    }
    return cds;
}

CcPartition expand_domatic_to_cc_partition(const Graph& g, const DomaticPartition& d)
{
    const std::size_t n = g.order();
    if (n <= 1)
        throw PreconditionError("expand_domatic_to_cc_partition: requires n > 1");
    if (!is_connected(g))
        throw PreconditionError("expand_domatic_to_cc_partition: graph is disconnected");
    if (auto full = full_vertices(g); !full.empty())
        throw PreconditionError("expand_domatic_to_cc_partition: vertex " + std::to_string(full.first()) +
                                " is a full vertex");
    validate_domatic_partition(g, d);
    if (d.parts.empty())
        throw PreconditionError("expand_domatic_to_cc_partition: empty domatic partition");

    const std::size_t k = d.parts.size();
    std::vector<VertexSet> parts = d.parts;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        VertexSet core = shrink_to_minimal_cds(g, parts[i]);
        parts[k - 1] |= parts[i] - core;
        parts[i] = std::move(core);
    }

    CcPartition base;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        Split s = first_coalition_split(g, parts[i]);
        base.parts.push_back(std::move(s.first));
        base.parts.push_back(std::move(s.second));
    }

    const VertexSet& last = parts[k - 1];
    const VertexSet core = shrink_to_minimal_cds(g, last);
    const VertexSet rest = last - core;

    for (auto& s : splits_of(core)) {
        if (!forms_connected_coalition(g, s.first, s.second))
            continue;
        CcPartition candidate = base;
        candidate.parts.push_back(s.first);
        candidate.parts.push_back(s.second);
        if (!rest.empty()) {
            bool has_partner = false;
            for (const auto& part : candidate.parts)
                if (forms_connected_coalition(g, rest, part)) {
                    has_partner = true;
                    break;
                }
            if (has_partner)
                candidate.parts.push_back(rest);
            else
                candidate.parts.back() |= rest;
        }
        if (candidate.size() >= 2 * k && is_cc_partition(g, candidate).valid)
            return candidate;
    }
    throw InvariantViolation("expand_domatic_to_cc_partition: no split of the last part's minimal core " +
                             core.to_string() + " yields a valid connected coalition partition");
}

CoalitionWitnessGraph coalition_graph(const Graph& g, const CcPartition& psi)
{
    const auto validation = is_cc_partition(g, psi);
    if (!validation.valid)
        throw PreconditionError("coalition_graph: the partition is not a connected coalition partition");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < psi.size(); ++i)
        for (Vertex j = i + 1; j < psi.size(); ++j)
            if (forms_connected_coalition(g, psi.parts[i], psi.parts[j]))
                pairs.emplace_back(i, j);
    return {psi, build_graph(psi.size(), pairs)};
}

} // namespace coalition
