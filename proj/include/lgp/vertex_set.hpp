#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lgp {

using Vertex = std::uint32_t;

/// Subset of the dense vertex range [0, universe), stored as a bitset.
///
/// Every set used together in an operation must share the same universe; the
/// binary operators throw ContractViolation otherwise.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);
    void clear();

    /// Smallest member, if any.
    std::optional<Vertex> first() const;
    std::vector<Vertex> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = __builtin_ctzll(bits);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t intersection_size(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::size_t hash() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    void check_member(Vertex v) const;
    void check_same_universe(const VertexSet& other) const;
    void recount();

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending member lists; the deterministic tie-break
/// used by every solver.
bool lex_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace lgp
