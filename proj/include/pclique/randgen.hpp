#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pclique/graph.hpp"
#include "pclique/rng.hpp"

namespace pclique {

struct GenParams {
    std::size_t n = 0;
    double p = 0.5;
    std::size_t k = 0;
    std::uint64_t seed = 0;

    // Throws ParameterError unless 0 < p < 1 and k <= n.
    void validate() const;
};

enum class Strategy {
    Random,                // uniform k-subset, made into a clique
    CommonNeighborhood,    // clique inside N*(T) for a random t-set T
    LowDegree,             // greedy k-set with few internal edges
    IndependentRandom,     // uniform k-subset, made independent
    IndependentLowDegree,  // greedy on the complement, made independent
};

std::string_view to_string(Strategy s) noexcept;
// Accepts the CLI spellings: random, common-neighborhood, low-degree,
// is-random, is-low-degree.
Strategy strategy_from_string(std::string_view s);
bool plants_independent_set(Strategy s) noexcept;

struct Adversary {
    Strategy strategy = Strategy::Random;
    std::size_t t_size = 0;
    // The set T used by the common-neighborhood strategy.
    std::optional<VertexSet> T;
    // Number of T draws consumed (common-neighborhood only).
    std::size_t draws = 0;
};

// A graph with its planting ground truth. `base` is G' before planting,
// `planted` the graph handed to algorithms, K the planted set.
struct PlantedInstance {
    Graph base;
    Graph planted;
    VertexSet K;
    GenParams params;
    Adversary adversary;

    bool independent() const noexcept { return plants_independent_set(adversary.strategy); }
};

// planted XOR base touches only pairs inside K, and K is a clique (or
// independent set) of planted. Every generator asserts this.
bool audit_instance(const PlantedInstance& inst);

// G(n, p) with every pair drawn independently; bit-identical per seed.
// Pairs are visited in row-major order (i < j). For p >= 0.01 each pair
// consumes one Bernoulli draw; below that, gaps between edges are drawn from
// the geometric distribution.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

// Insert all missing pairs of K (or delete all pairs of K) in g.
Graph plant_clique_at(const Graph& g, const VertexSet& K);
Graph plant_independent_at(const Graph& g, const VertexSet& K);

// Planting strategies. `p` is recorded in the instance parameters; when
// omitted the empirical edge density of g is used.
PlantedInstance plant_random(const Graph& g, std::size_t k, std::uint64_t seed,
                             std::optional<double> p = std::nullopt);
PlantedInstance plant_common_neighborhood(const Graph& g, std::size_t k, std::size_t t_size,
                                          std::uint64_t seed, std::optional<double> p = std::nullopt);
PlantedInstance plant_low_degree(const Graph& g, std::size_t k, std::uint64_t seed,
                                 std::optional<double> p = std::nullopt);
// strategy must be IndependentRandom or IndependentLowDegree.
PlantedInstance plant_independent_set(const Graph& g, std::size_t k, Strategy strategy, std::uint64_t seed,
                                      std::optional<double> p = std::nullopt);

// Greedy selection used by the low-degree adversary: starting from a random
// vertex, repeatedly add the vertex with the fewest neighbors in the current
// selection (ties broken uniformly at random).
VertexSet greedy_sparse_set(const Graph& g, std::size_t k, Rng& rng);

// Maximum number of T draws for the common-neighborhood adversary.
inline constexpr std::size_t kCommonNeighborhoodDraws = 32;

// sample_gnp(params) followed by the chosen strategy, all keyed by
// params.seed. t_size is used by CommonNeighborhood only.
PlantedInstance generate(const GenParams& params, Strategy strategy, std::size_t t_size = 0);

double edge_density(const Graph& g) noexcept;

}  // namespace pclique
