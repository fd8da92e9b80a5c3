#include "pclique/enumeration.hpp"

#include <cmath>
#include <sstream>

#include "pclique/errors.hpp"
#include "pclique/oracle.hpp"
#include "pclique/randgen.hpp"

namespace pclique {

namespace {

struct Frame {
    VertexSet R;
    VertexSet P;
    VertexSet X;
    VertexSet todo;
    bool expanded = false;
};

Vertex choose_pivot(const Graph& g, const VertexSet& P, const VertexSet& X) {
    Vertex best = 0;
    std::size_t best_score = 0;
    bool have = false;
    auto consider = [&](Vertex u) {
        const std::size_t s = g.neighbors(u).intersection_count(P);
        if (!have || s > best_score) {
            best = u;
            best_score = s;
            have = true;
        }
    };
    P.for_each(consider);
    X.for_each(consider);
    return best;
}

}  // namespace

EnumReport list_maximal_cliques(const Graph& g, std::size_t budget, const CliqueSink& sink) {
    if (budget == 0) throw ParameterError("clique budget must be at least 1");
    const std::size_t n = g.order();
    EnumReport rep;
    rep.clique_budget = budget;
    rep.max_clique = VertexSet(n);
    if (n == 0) {
        // The empty set is the single maximal clique of the empty graph.
        rep.maximal_count = 1;
        if (sink) sink(rep.max_clique);
        return rep;
    }

    std::vector<Frame> stack;
    stack.push_back({VertexSet(n), VertexSet::full(n), VertexSet(n), VertexSet(n), false});
    std::size_t best = 0;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (!f.expanded) {
            f.expanded = true;
            if (f.P.empty()) {
                if (f.X.empty()) {
                    if (rep.maximal_count == budget) {
                        rep.truncated = true;
                        break;
                    }
                    ++rep.maximal_count;
                    const std::size_t size = f.R.count();
                    if (size > best) {
                        best = size;
                        rep.max_clique = f.R;
                    }
                    if (sink) sink(f.R);
                }
                stack.pop_back();
                continue;
            }
            const Vertex u = choose_pivot(g, f.P, f.X);
            f.todo = f.P - g.neighbors(u);
        }
        const std::optional<Vertex> v = f.todo.first();
        if (!v) {
            stack.pop_back();
            continue;
        }
        f.todo.erase(*v);
        Frame child;
        child.R = f.R;
        child.R.insert(*v);
        child.P = f.P & g.neighbors(*v);
        child.X = f.X & g.neighbors(*v);
        f.P.erase(*v);
        f.X.insert(*v);
        stack.push_back(std::move(child));
    }
    return rep;
}

std::size_t sparse_budget(std::size_t n, double T) {
    return static_cast<std::size_t>(std::ceil(4.0 * std::pow(static_cast<double>(n), T / 4.0 + 0.5)));
}

SparseReport recover_sparse(const Graph& g, std::size_t k, double T, std::optional<double> p) {
    if (!(T > 0.0)) throw ParameterError("T must be positive");
    const std::size_t n = g.order();
    SparseReport rep;
    rep.k = k;
    rep.T = T;
    rep.p = p ? *p : edge_density(g);
    rep.budget = std::max<std::size_t>(1, sparse_budget(n, T));
    if (n > 1) {
        const double nd = static_cast<double>(n);
        rep.regime_threshold = std::pow(nd, -2.0 / T) / std::log(nd);
        rep.in_regime = rep.p <= rep.regime_threshold;
    }
    rep.listing = list_maximal_cliques(g, rep.budget);
    rep.verified = is_clique(g, rep.listing.max_clique) && rep.listing.max_clique.count() >= k;
    if (rep.listing.truncated) {
        std::ostringstream msg;
        msg << "maximal-clique budget " << rep.budget << " exhausted; the graph is outside the sparse regime";
        rep.warning = msg.str();
    }
    return rep;
}

CountComparison count_cliques_vs_maximal(const Graph& base, const Graph& planted) {
    if (base.order() != planted.order()) throw ParameterError("graphs must have the same order");
    if (planted.order() > kMaxCountOrder) throw ParameterError("clique counting needs n <= 30");
    CountComparison c;
    c.cliques_base = count_all_cliques(base);
    // Every graph on <= 30 vertices has at most 3^(30/3) maximal cliques.
    const EnumReport rep = list_maximal_cliques(planted, 60'000);
    c.maximal_planted = rep.maximal_count;
    c.ok = c.maximal_planted <= c.cliques_base;
    return c;
}

}  // namespace pclique
