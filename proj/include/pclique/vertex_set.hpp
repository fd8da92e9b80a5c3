#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace pclique {

using Vertex = std::uint32_t;

// Fixed-universe bitset over the vertices [0, n). Bits at positions >= n are
// always clear, so popcounts and comparisons never see stale padding.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_(word_count(n), 0) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> members);
    VertexSet(std::size_t n, std::span<const Vertex> members);

    static VertexSet full(std::size_t n);

    std::size_t universe() const noexcept { return n_; }

    bool test(Vertex v) const noexcept {
        return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void insert(Vertex v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(Vertex v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    void clear() noexcept;

    std::size_t count() const noexcept;
    bool empty() const noexcept;

    // |*this & other| without materializing the intersection.
    std::size_t intersection_count(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator-=(const VertexSet& other) noexcept;
    VertexSet& operator^=(const VertexSet& other) noexcept;
    // Complement within the universe.
    VertexSet operator~() const;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::optional<Vertex> first() const noexcept;
    // Smallest member strictly greater than v.
    std::optional<Vertex> next(Vertex v) const noexcept;

    std::vector<Vertex> to_vector() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> mutable_words() noexcept { return words_; }

    static std::size_t word_count(std::size_t n) noexcept { return (n + kWordBits - 1) / kWordBits; }

private:
    void trim() noexcept;

    std::size_t n_ = 0;
    std::vector<Word> words_;
};

}  // namespace pclique
