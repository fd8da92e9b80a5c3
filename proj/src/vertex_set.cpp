#include "pclique/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace pclique {

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
    for (Vertex v : members) {
        assert(v < n);
        insert(v);
    }
}

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members) : VertexSet(n) {
    for (Vertex v : members) {
        assert(v < n);
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s(n);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
}

void VertexSet::trim() noexcept {
    const std::size_t tail = n_ % kWordBits;
    if (tail != 0 && !words_.empty()) {
        words_.back() &= (Word{1} << tail) - 1;
    }
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const noexcept {
    assert(n_ == other.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) noexcept {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

VertexSet VertexSet::operator~() const {
    VertexSet out(*this);
    for (Word& w : out.words_) w = ~w;
    out.trim();
    return out;
}

std::optional<Vertex> VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
        }
    }
    return std::nullopt;
}

std::optional<Vertex> VertexSet::next(Vertex v) const noexcept {
    std::size_t pos = static_cast<std::size_t>(v) + 1;
    if (pos >= n_) return std::nullopt;
    std::size_t w = pos / kWordBits;
    Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
    while (true) {
        if (bits != 0) {
            return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        }
        if (++w == words_.size()) return std::nullopt;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

}  // namespace pclique
