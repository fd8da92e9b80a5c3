#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pclique/vertex_set.hpp"

namespace pclique {

// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed for trial `index` of a sweep driven by `master`:
//   mix64(master ^ mix64(index + 0x9E3779B97F4A7C15)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

// Named substreams of one instance seed. Each consumer draws from its own
// stream so that, for example, changing the planting strategy never perturbs
// the base graph's edges.
enum class Stream : std::uint64_t {
    Edges = 1,
    CliqueChoice = 2,
    CommonSet = 3,
    Partition = 4,
    IndependentSet = 5,
    Algorithm = 6,
};

// Counter-based generator: the i-th output is mix64(key + (i + 1) * golden),
// i.e. SplitMix64 viewed as a keyed counter. Distributions are implemented
// here rather than via <random> so that streams are identical on every
// standard library.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t key) noexcept : key_(key) {}

    // Independent generator keyed by mix64(key ^ mix64(stream id)).
    Rng substream(Stream s) const noexcept;
    Rng substream(std::uint64_t id) const noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
    result_type operator()() noexcept { return next(); }

    std::uint64_t next() noexcept;
    // Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept;
    // Uniform integer in [0, bound); bound > 0. Lemire's multiply-shift with
    // rejection, so the result is exactly uniform.
    std::uint64_t below(std::uint64_t bound) noexcept;
    bool bernoulli(double p) noexcept { return uniform() < p; }

    // Uniform k-subset of [0, n) (Floyd's algorithm).
    VertexSet subset(std::size_t n, std::size_t k);
    // Uniform k-subset of the members of `pool`.
    VertexSet subset_of(const VertexSet& pool, std::size_t k);

    template <class T>
    void shuffle(std::span<T> xs) noexcept {
        for (std::size_t i = xs.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(xs[i - 1], xs[j]);
        }
    }

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace pclique
