#include "coalition/graph_io.hpp"

#include "coalition/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>

namespace coalition {

namespace {

constexpr int kOffset = 63;

std::string_view strip_cr(std::string_view line)
{
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.remove_suffix(1);
    return line;
}

bool is_significant(std::string_view line)
{
    for (char c : line) {
        if (c == '#')
            return false;
        if (!std::isspace(static_cast<unsigned char>(c)))
            return true;
    }
    return false;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    text = strip_cr(text);
    if (text.empty())
        throw ParseError("graph6: empty input");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kOffset || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " at position " + std::to_string(i) +
                             " is outside [63,126]");
    }
    const int header = static_cast<unsigned char>(text[0]) - kOffset;
    if (header > static_cast<int>(kGraph6MaxOrder))
        throw ParseError("graph6: orders above 62 are not supported");
    const std::size_t n = static_cast<std::size_t>(header);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - 1 < bytes)
        throw ParseError("graph6: truncated payload, expected " + std::to_string(bytes) + " byte(s) after header, got " +
                         std::to_string(text.size() - 1));
    if (text.size() - 1 > bytes)
        throw ParseError("graph6: " + std::to_string(text.size() - 1 - bytes) + " trailing byte(s) after payload");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
            if ((byte >> (5 - k % 6)) & 1)
                pairs.emplace_back(i, j);
        }
    }
    return build_graph(n, pairs);
}

std::string emit_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw PreconditionError("graph6: order " + std::to_string(n) + " exceeds 62");
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph parse_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> order;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (std::getline(in, line)) {
        ++line_no;
        line.erase(std::min(line.find('#'), line.size()));
        if (!is_significant(line))
            continue;
        std::istringstream fields(line);
        if (!order) {
            long long n = -1;
            std::string extra;
            if (!(fields >> n) || n < 0 || (fields >> extra))
                throw ParseError("edge list line " + std::to_string(line_no) +
                                 ": expected a non-negative vertex count");
            order = static_cast<std::size_t>(n);
            continue;
        }
        long long u = -1;
        long long v = -1;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *order || static_cast<std::size_t>(v) >= *order)
            throw ParseError("edge list line " + std::to_string(line_no) + ": edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") has a vertex id outside [0," + std::to_string(*order) + ")");
        if (u == v)
            throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!order)
        throw ParseError("edge list: missing vertex count");
    return build_graph(*order, pairs);
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (const Edge& e : g.edges())
        os << e.u << ' ' << e.v << '\n';
    return os.str();
}

GraphFormat sniff_format(std::string_view text)
{
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (is_significant(line)) {
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    return std::isdigit(static_cast<unsigned char>(c)) ? GraphFormat::edge_list : GraphFormat::graph6;
        }
        pos = end + 1;
    }
    return GraphFormat::graph6;
}

std::vector<Graph> read_graphs(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::edge_list)
        return {parse_edge_list(text)};

    std::vector<Graph> out;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = strip_cr(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty())
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

} // namespace coalition
