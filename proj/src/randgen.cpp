#include "pclique/randgen.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "pclique/errors.hpp"

namespace pclique {

void GenParams::validate() const {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("edge probability must lie in (0, 1), got " + std::to_string(p));
    if (k > n) throw ParameterError("planted size k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
}

std::string_view to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::Random: return "random";
        case Strategy::CommonNeighborhood: return "common-neighborhood";
        case Strategy::LowDegree: return "low-degree";
        case Strategy::IndependentRandom: return "is-random";
        case Strategy::IndependentLowDegree: return "is-low-degree";
    }
    return "unknown";
}

Strategy strategy_from_string(std::string_view s) {
    for (Strategy st : {Strategy::Random, Strategy::CommonNeighborhood, Strategy::LowDegree,
                        Strategy::IndependentRandom, Strategy::IndependentLowDegree}) {
        if (s == to_string(st)) return st;
    }
    throw ParameterError("unknown planting strategy '" + std::string(s) + "'");
}

bool plants_independent_set(Strategy s) noexcept {
    return s == Strategy::IndependentRandom || s == Strategy::IndependentLowDegree;
}

double edge_density(const Graph& g) noexcept {
    const double n = static_cast<double>(g.order());
    if (g.order() < 2) return 0.0;
    return static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
}

bool audit_instance(const PlantedInstance& inst) {
    const std::size_t n = inst.base.order();
    if (inst.planted.order() != n || inst.K.universe() != n) return false;
    if (inst.K.count() != inst.params.k) return false;
    for (Vertex v = 0; v < n; ++v) {
        VertexSet diff = inst.base.neighbors(v) ^ inst.planted.neighbors(v);
        if (diff.empty()) continue;
        if (!inst.K.test(v) || !diff.is_subset_of(inst.K)) return false;
    }
    return inst.independent() ? is_independent(inst.planted, inst.K) : is_clique(inst.planted, inst.K);
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("edge probability must lie in (0, 1), got " + std::to_string(p));
    Rng rng = Rng(seed).substream(Stream::Edges);
    GraphBuilder b(n);
    if (n < 2) return std::move(b).build();
    if (p >= 0.01) {
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                if (rng.bernoulli(p)) b.add_edge(i, j);
            }
        }
        return std::move(b).build();
    }
    // Geometric skipping over the row-major pair sequence.
    const double log_q = std::log1p(-p);
    Vertex i = 0;
    Vertex j = 1;
    while (true) {
        const double u = 1.0 - rng.uniform();  // (0, 1]
        double skip = std::floor(std::log(u) / log_q);
        // Advance (i, j) by `skip` pairs, then take the pair we land on.
        while (skip > 0) {
            const double left_in_row = static_cast<double>(n - j);
            if (skip < left_in_row) {
                j += static_cast<Vertex>(skip);
                skip = 0;
            } else {
                skip -= left_in_row;
                ++i;
                if (i + 1 >= n) return std::move(b).build();
                j = i + 1;
            }
        }
        b.add_edge(i, j);
        if (++j >= n) {
            ++i;
            if (i + 1 >= n) break;
            j = i + 1;
        }
    }
    return std::move(b).build();
}

Graph plant_clique_at(const Graph& g, const VertexSet& K) {
    GraphBuilder b(g);
    b.make_clique(K);
    return std::move(b).build();
}

Graph plant_independent_at(const Graph& g, const VertexSet& K) {
    GraphBuilder b(g);
    b.make_independent(K);
    return std::move(b).build();
}

namespace {

PlantedInstance assemble(const Graph& g, VertexSet K, Adversary adversary, std::uint64_t seed,
                         std::optional<double> p) {
    PlantedInstance inst;
    inst.base = g;
    inst.planted = plants_independent_set(adversary.strategy) ? plant_independent_at(g, K) : plant_clique_at(g, K);
    inst.params.n = g.order();
    inst.params.k = K.count();
    inst.params.p = p.value_or(edge_density(g));
    inst.params.seed = seed;
    inst.K = std::move(K);
    inst.adversary = std::move(adversary);
    assert(audit_instance(inst));
    return inst;
}

void check_k(const Graph& g, std::size_t k) {
    if (k > g.order()) {
        throw ParameterError("planted size k=" + std::to_string(k) + " exceeds n=" + std::to_string(g.order()));
    }
}

}  // namespace

PlantedInstance plant_random(const Graph& g, std::size_t k, std::uint64_t seed, std::optional<double> p) {
    check_k(g, k);
    Rng rng = Rng(seed).substream(Stream::CliqueChoice);
    return assemble(g, rng.subset(g.order(), k), Adversary{.strategy = Strategy::Random, .t_size = 0, .T = std::nullopt, .draws = 0}, seed, p);
}

PlantedInstance plant_common_neighborhood(const Graph& g, std::size_t k, std::size_t t_size, std::uint64_t seed,
                                          std::optional<double> p) {
    check_k(g, k);
    const std::size_t n = g.order();
    if (t_size > n) throw ParameterError("t_size exceeds n");
    Rng t_rng = Rng(seed).substream(Stream::CommonSet);
    std::size_t largest = 0;
    for (std::size_t draw = 1; draw <= kCommonNeighborhoodDraws; ++draw) {
        VertexSet T = t_rng.subset(n, t_size);
        VertexSet pool = T.empty() ? VertexSet::full(n) : common_neighborhood(g, T);
        const std::size_t size = pool.count();
        largest = std::max(largest, size);
        if (size < k) continue;
        Rng k_rng = Rng(seed).substream(Stream::CliqueChoice);
        Adversary adv{Strategy::CommonNeighborhood, t_size, std::move(T), draw};
        return assemble(g, k_rng.subset_of(pool, k), std::move(adv), seed, p);
    }
    throw GenerationError("common neighborhood of every sampled T has fewer than k=" + std::to_string(k) +
                          " vertices (largest found: " + std::to_string(largest) + ")");
}

VertexSet greedy_sparse_set(const Graph& g, std::size_t k, Rng& rng) {
    const std::size_t n = g.order();
    assert(k <= n);
    VertexSet chosen(n);
    std::vector<std::size_t> into(n, 0);
    std::vector<Vertex> ties;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        ties.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (chosen.test(v)) continue;
            if (into[v] < best) {
                best = into[v];
                ties.clear();
            }
            if (into[v] == best) ties.push_back(v);
        }
        const Vertex pick = ties[rng.below(ties.size())];
        chosen.insert(pick);
        g.neighbors(pick).for_each([&](Vertex u) { ++into[u]; });
    }
    return chosen;
}

PlantedInstance plant_low_degree(const Graph& g, std::size_t k, std::uint64_t seed, std::optional<double> p) {
    check_k(g, k);
    Rng rng = Rng(seed).substream(Stream::CliqueChoice);
    return assemble(g, greedy_sparse_set(g, k, rng), Adversary{.strategy = Strategy::LowDegree, .t_size = 0, .T = std::nullopt, .draws = 0}, seed, p);
}

PlantedInstance plant_independent_set(const Graph& g, std::size_t k, Strategy strategy, std::uint64_t seed,
                                      std::optional<double> p) {
    check_k(g, k);
    Rng rng = Rng(seed).substream(Stream::CliqueChoice);
    switch (strategy) {
        case Strategy::IndependentRandom:
            return assemble(g, rng.subset(g.order(), k), Adversary{.strategy = strategy, .t_size = 0, .T = std::nullopt, .draws = 0}, seed, p);
        case Strategy::IndependentLowDegree:
            return assemble(g, greedy_sparse_set(complement(g), k, rng), Adversary{.strategy = strategy, .t_size = 0, .T = std::nullopt, .draws = 0}, seed, p);
        default:
            throw ParameterError("plant_independent_set needs an independent-set strategy");
    }
}

PlantedInstance generate(const GenParams& params, Strategy strategy, std::size_t t_size) {
    params.validate();
    Graph base = sample_gnp(params.n, params.p, params.seed);
    PlantedInstance inst;
    switch (strategy) {
        case Strategy::Random: inst = plant_random(base, params.k, params.seed, params.p); break;
        case Strategy::CommonNeighborhood:
            inst = plant_common_neighborhood(base, params.k, t_size, params.seed, params.p);
            break;
        case Strategy::LowDegree: inst = plant_low_degree(base, params.k, params.seed, params.p); break;
        case Strategy::IndependentRandom:
        case Strategy::IndependentLowDegree:
            inst = plant_independent_set(base, params.k, strategy, params.seed, params.p);
            break;
    }
    return inst;
}

}  // namespace pclique
