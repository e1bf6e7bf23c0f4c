#include "coalition/vertex_set.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace coalition {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::const_iterator& VertexSet::const_iterator::operator++()
{
    pos_ = set_->next_from(pos_ + 1);
    return *this;
}

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    s.trim();
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask)
{
    if (universe > 64)
        throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
    if (universe < 64 && (mask >> universe) != 0)
        throw std::out_of_range("VertexSet::from_mask: mask has bits outside the universe");
    VertexSet s(universe);
    if (universe > 0)
        s.words_[0] = mask;
    return s;
}

VertexSet VertexSet::from_members(std::size_t universe, const std::vector<Vertex>& members)
{
    VertexSet s(universe);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

std::size_t VertexSet::size() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::next_from(std::size_t pos) const
{
    if (pos >= universe_)
        return universe_;
    std::size_t w = pos >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
        if (bits != 0)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size())
            return universe_;
        bits = words_[w];
    }
}

void VertexSet::check_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet universe mismatch: " + std::to_string(universe_) +
                                    " vs " + std::to_string(other.universe_));
}

void VertexSet::trim()
{
    if (universe_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::operator~() const
{
    VertexSet s(*this);
    for (auto& w : s.words_)
        w = ~w;
    s.trim();
    return s;
}

std::uint64_t VertexSet::mask() const
{
    if (universe_ > 64)
        throw std::invalid_argument("VertexSet::mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for (Vertex v : *this) {
        if (!first_member)
            os << ',';
        os << v;
        first_member = false;
    }
    os << '}';
    return os.str();
}

} // namespace coalition
