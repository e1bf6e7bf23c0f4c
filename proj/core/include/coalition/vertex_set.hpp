#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace coalition {

using Vertex = std::uint32_t;

/// Subset of the vertex ids 0..universe-1 of a fixed-order graph.
///
/// Stored as a packed bitset. Binary set operations require both operands
/// to share the same universe and throw std::invalid_argument otherwise.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        Vertex operator*() const { return static_cast<Vertex>(pos_); }
        const_iterator& operator++();
        const_iterator operator++(int)
        {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        friend class VertexSet;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
    static VertexSet from_members(std::size_t universe, const std::vector<Vertex>& members);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const;

    bool contains(Vertex v) const
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Smallest member; universe() when empty.
    std::size_t first() const { return next_from(0); }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    /// Complement relative to the universe.
    VertexSet operator~() const;

    bool operator==(const VertexSet& other) const = default;

    /// Packed membership for universes of at most 64 vertices.
    std::uint64_t mask() const;

    std::vector<Vertex> to_vector() const;
    std::string to_string() const;

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, universe_); }

private:
    std::size_t next_from(std::size_t pos) const;
    void check_same_universe(const VertexSet& other) const;
    void trim();

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace coalition
