#include "coalition/family_f.hpp"

#include "coalition/errors.hpp"

#include <optional>

namespace coalition {

const char* to_string(PeelTerminal terminal)
{
    switch (terminal) {
    case PeelTerminal::disconnected_ge2:
        return "disconnected_ge2";
    case PeelTerminal::connected_no_full:
        return "connected_no_full";
    case PeelTerminal::reached_k1:
        return "reached_k1";
    }
    return "unknown";
}

FamilyVerdict in_family_f(const Graph& g, PeelChoice choice)
{
    if (g.order() == 0)
        throw PreconditionError("in_family_f: requires n >= 1");

    FamilyVerdict out;
    VertexSet alive = VertexSet::full(g.order());
    while (true) {
        const std::size_t order = alive.size();
        if (order == 1) {
            out.trace.terminal = PeelTerminal::reached_k1;
            break;
        }
        if (!induces_connected(g, alive)) {
            out.trace.terminal = PeelTerminal::disconnected_ge2;
            out.member = true;
            break;
        }
        std::optional<Vertex> pick;
        for (Vertex v : alive) {
            if ((g.neighbors(v) & alive).size() + 1 == order) {
                pick = v;
                if (choice == PeelChoice::lowest_id)
                    break;
            }
        }
        if (!pick) {
            out.trace.terminal = PeelTerminal::connected_no_full;
            break;
        }
        alive.erase(*pick);
        out.trace.steps.push_back({*pick, alive.size()});
    }
    return out;
}

} // namespace coalition
