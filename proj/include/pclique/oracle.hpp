#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pclique/randgen.hpp"

namespace pclique {

inline constexpr std::uint64_t kDefaultOracleNodes = 50'000'000;

// Size of a maximum clique inside `within` by branch and bound with a greedy
// coloring bound (vertices taken in increasing id order). Throws
// OracleUnavailable after node_budget search nodes.
std::size_t clique_number_within(const Graph& g, const VertexSet& within,
                                 std::uint64_t node_budget = kDefaultOracleNodes);

// A maximum clique, the lexicographically smallest sorted vertex list among
// all maximum cliques. The budget applies to each branch-and-bound call.
VertexSet max_clique_exact(const Graph& g, std::uint64_t node_budget = kDefaultOracleNodes);
VertexSet max_is_exact(const Graph& g, std::uint64_t node_budget = kDefaultOracleNodes);

inline constexpr std::size_t kMaxCountOrder = 30;

// Nonempty cliques (singletons included). n <= 30.
std::uint64_t count_all_cliques(const Graph& g);
// Entry s is the number of cliques with exactly s vertices; entry 0 is 1.
std::vector<std::uint64_t> clique_size_counts(const Graph& g);

struct GroundTruth {
    VertexSet clique;
    // P* = K + {v : |N(v) & K| >= 3k/4}.
    VertexSet candidates;
    std::size_t cover_nodes = 0;
    // k >= 10 sqrt(n); recorded, not enforced.
    bool in_regime = false;
};

// Maximum clique of the planted graph restricted to P*, by an exact vertex
// cover of the complement of g[P*] with cap |P*| - k. Throws
// OracleUnavailable when |P*| > k + 10 a(n, p), natural log.
GroundTruth ground_truth_max_clique(const PlantedInstance& inst);

}  // namespace pclique
