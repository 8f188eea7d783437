#include "lgp/vertex_set.hpp"

#include "lgp/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace lgp {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    s.count_ = universe;
    return s;
}

void VertexSet::check_member(Vertex v) const {
    if (v >= universe_) {
        throw ContractViolation("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) {
        throw ContractViolation("vertex sets over different universes (" + std::to_string(universe_) +
                                " vs " + std::to_string(other.universe_) + ")");
    }
}

void VertexSet::recount() {
    count_ = 0;
    for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

bool VertexSet::contains(Vertex v) const {
    check_member(v);
    return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
    check_member(v);
    auto& w = words_[v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if ((w & bit) == 0) {
        w |= bit;
        ++count_;
    }
}

void VertexSet::erase(Vertex v) {
    check_member(v);
    auto& w = words_[v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if ((w & bit) != 0) {
        w &= ~bit;
        --count_;
    }
}

void VertexSet::clear() {
    for (auto& w : words_) w = 0;
    count_ = 0;
}

std::optional<Vertex> VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    }
    return std::nullopt;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
    check_same_universe(other);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    recount();
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    recount();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    recount();
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::size_t VertexSet::hash() const noexcept {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto am = a.members();
    const auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

}  // namespace lgp
