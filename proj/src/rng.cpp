#include "pclique/rng.hpp"

#include <cassert>

namespace pclique {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master ^ mix64(index + kGolden));
}

Rng Rng::substream(Stream s) const noexcept { return substream(static_cast<std::uint64_t>(s)); }

Rng Rng::substream(std::uint64_t id) const noexcept { return Rng(mix64(key_ ^ mix64(id))); }

std::uint64_t Rng::next() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double Rng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
    assert(bound > 0);
    __uint128_t m = static_cast<__uint128_t>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<__uint128_t>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

VertexSet Rng::subset(std::size_t n, std::size_t k) {
    assert(k <= n);
    VertexSet out(n);
    for (std::size_t j = n - k; j < n; ++j) {
        auto t = static_cast<Vertex>(below(j + 1));
        if (out.test(t)) {
            out.insert(static_cast<Vertex>(j));
        } else {
            out.insert(t);
        }
    }
    return out;
}

VertexSet Rng::subset_of(const VertexSet& pool, std::size_t k) {
    std::vector<Vertex> members = pool.to_vector();
    assert(k <= members.size());
    VertexSet picks = subset(members.size(), k);
    VertexSet out(pool.universe());
    picks.for_each([&](Vertex i) { out.insert(members[i]); });
    return out;
}

}  // namespace pclique
