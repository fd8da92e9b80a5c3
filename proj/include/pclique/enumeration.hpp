#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "pclique/graph.hpp"

namespace pclique {

struct EnumReport {
    // Largest maximal clique seen (the first one found among equals).
    VertexSet max_clique;
    std::size_t maximal_count = 0;
    std::size_t clique_budget = 0;
    // Set when the budget stopped the listing; maximal_count is then a lower
    // bound.
    bool truncated = false;
};

using CliqueSink = std::function<void(const VertexSet&)>;

// Bron-Kerbosch with a pivot maximizing |P & N(u)|, run on an explicit
// stack. Every maximal clique is passed to `sink` when one is given. Stops
// before the (budget + 1)-th clique. Throws ParameterError for budget 0.
EnumReport list_maximal_cliques(const Graph& g, std::size_t budget, const CliqueSink& sink = {});

struct SparseReport {
    EnumReport listing;
    std::size_t k = 0;
    double T = 0.0;
    double p = 0.0;
    // ceil(4 n^(T/4 + 1/2)).
    std::size_t budget = 0;
    // p <= n^(-2/T) / ln n; a flag only.
    bool in_regime = false;
    double regime_threshold = 0.0;
    bool verified = false;
    std::string warning;
};

std::size_t sparse_budget(std::size_t n, double T);

// Lists maximal cliques under the sparse budget and returns the largest.
// p defaults to the edge density of g.
SparseReport recover_sparse(const Graph& g, std::size_t k, double T, std::optional<double> p = std::nullopt);

struct CountComparison {
    std::uint64_t cliques_base = 0;
    std::uint64_t maximal_planted = 0;
    bool ok = false;
};

// Counts the nonempty cliques of `base` (singletons included) and the
// maximal cliques of `planted`; ok when the second is at most the first.
// Both graphs need n <= 30.
CountComparison count_cliques_vs_maximal(const Graph& base, const Graph& planted);

}  // namespace pclique
