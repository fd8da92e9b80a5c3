#include "pclique/oracle.hpp"

#include <cmath>

#include "pclique/certificate.hpp"
#include "pclique/errors.hpp"
#include "pclique/recovery.hpp"

namespace pclique {

namespace {

class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    std::size_t run(const VertexSet& within) {
        best_ = 0;
        expand(within, 0);
        return best_;
    }

private:
    // Greedy sequential coloring of P in id order; returns vertices in color
    // class order with the color of each.
    void color(const VertexSet& P, std::vector<Vertex>& order, std::vector<std::size_t>& colors) const {
        order.clear();
        colors.clear();
        VertexSet uncolored = P;
        std::size_t c = 0;
        while (!uncolored.empty()) {
            ++c;
            VertexSet q = uncolored;
            while (auto v = q.first()) {
                q.erase(*v);
                q -= g_.neighbors(*v);
                uncolored.erase(*v);
                order.push_back(*v);
                colors.push_back(c);
            }
        }
    }

    void expand(VertexSet P, std::size_t size) {
        if (++nodes_ > budget_) throw OracleUnavailable("maximum-clique search exceeded its node budget");
        std::vector<Vertex> order;
        std::vector<std::size_t> colors;
        color(P, order, colors);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + colors[i] <= best_) return;
            const Vertex v = order[i];
            const VertexSet next = P & g_.neighbors(v);
            if (next.empty()) {
                if (size + 1 > best_) best_ = size + 1;
            } else {
                expand(next, size + 1);
            }
            P.erase(v);
        }
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
};

void count_from(const Graph& g, const VertexSet& P, std::size_t size, std::vector<std::uint64_t>& counts) {
    for (auto v = P.first(); v; v = P.next(*v)) {
        ++counts[size + 1];
        VertexSet next = P & g.neighbors(*v);
        for (Vertex w = 0; w <= *v; ++w) next.erase(w);
        if (!next.empty()) count_from(g, next, size + 1, counts);
    }
}

}  // namespace

std::size_t clique_number_within(const Graph& g, const VertexSet& within, std::uint64_t node_budget) {
    return MaxCliqueSearch(g, node_budget).run(within);
}

VertexSet max_clique_exact(const Graph& g, std::uint64_t node_budget) {
    const std::size_t n = g.order();
    VertexSet result(n);
    if (n == 0) return result;
    const std::size_t omega = clique_number_within(g, VertexSet::full(n), node_budget);
    // Fix vertices in increasing order whenever a maximum clique still fits.
    VertexSet P = VertexSet::full(n);
    std::size_t need = omega;
    while (need > 0) {
        bool placed = false;
        for (auto v = P.first(); v; v = P.next(*v)) {
            VertexSet rest = P & g.neighbors(*v);
            for (Vertex w = 0; w <= *v; ++w) rest.erase(w);
            if (rest.count() + 1 < need) continue;
            const std::size_t inner = need == 1 ? 0 : clique_number_within(g, rest, node_budget);
            if (inner + 1 >= need) {
                result.insert(*v);
                P = std::move(rest);
                --need;
                placed = true;
                break;
            }
        }
        if (!placed) throw Error("maximum-clique reconstruction failed");
    }
    return result;
}

VertexSet max_is_exact(const Graph& g, std::uint64_t node_budget) {
    return max_clique_exact(complement(g), node_budget);
}

std::vector<std::uint64_t> clique_size_counts(const Graph& g) {
    if (g.order() > kMaxCountOrder) throw ParameterError("clique counting needs n <= 30");
    std::vector<std::uint64_t> counts(g.order() + 1, 0);
    counts[0] = 1;
    count_from(g, VertexSet::full(g.order()), 0, counts);
    return counts;
}

std::uint64_t count_all_cliques(const Graph& g) {
    const std::vector<std::uint64_t> counts = clique_size_counts(g);
    std::uint64_t total = 0;
    for (std::size_t s = 1; s < counts.size(); ++s) total += counts[s];
    return total;
}

GroundTruth ground_truth_max_clique(const PlantedInstance& inst) {
    const Graph& g = inst.planted;
    const std::size_t n = g.order();
    const std::size_t k = inst.K.count();
    GroundTruth gt;
    gt.in_regime = static_cast<double>(k) >= 10.0 * std::sqrt(static_cast<double>(n));
    gt.candidates = inst.K;
    const double need = 0.75 * static_cast<double>(k);
    for (Vertex v = 0; v < n; ++v) {
        if (!inst.K.test(v) && static_cast<double>(degree_in(g, v, inst.K)) >= need) gt.candidates.insert(v);
    }
    const std::size_t size = gt.candidates.count();
    if (n > 1) {
        const double a = extension_bound(n, inst.params.p);
        if (static_cast<double>(size) > static_cast<double>(k) + 10.0 * a) {
            throw OracleUnavailable("candidate set of " + std::to_string(size) + " vertices exceeds k + 10 a(n, p)");
        }
    }
    const InducedSubgraph sub = induced_subgraph(g, gt.candidates);
    // K is a clique inside P*, so a cover of size |P*| - k always exists.
    const CoverResult cr = min_vertex_cover_branching(complement(sub.graph), size - k);
    gt.cover_nodes = cr.nodes;
    gt.clique = gt.candidates - sub.lift(cr.cover, n);
    return gt;
}

}  // namespace pclique
