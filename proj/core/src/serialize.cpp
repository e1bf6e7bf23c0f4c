#include "coalition/serialize.hpp"

#include "coalition/errors.hpp"

#include <json.hpp>

namespace coalition {

std::string partition_to_json(const CcPartition& psi)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& part : psi.parts)
        j.push_back(part.to_vector());
    return j.dump();
}

CcPartition parse_partition_json(std::string_view text, std::size_t n)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("partition JSON: ") + e.what());
    }
    if (!j.is_array())
        throw ParseError("partition JSON: expected an array of arrays");
    CcPartition psi;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& part = j[i];
        if (!part.is_array() || part.empty())
            throw ParseError("partition JSON: part " + std::to_string(i) + " must be a nonempty array");
        VertexSet set(n);
        for (const auto& id : part) {
            if (!id.is_number_integer() || id.get<long long>() < 0 || static_cast<std::size_t>(id.get<long long>()) >= n)
                throw ParseError("partition JSON: part " + std::to_string(i) + " holds " + id.dump() +
                                 ", not a vertex id in [0," + std::to_string(n) + ")");
            set.insert(static_cast<Vertex>(id.get<long long>()));
        }
        psi.parts.push_back(std::move(set));
    }
    return psi;
}

} // namespace coalition
