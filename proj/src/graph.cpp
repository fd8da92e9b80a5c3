#include "pclique/graph.hpp"

#include <cassert>
#include <string>

#include "pclique/errors.hpp"

namespace pclique {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
        for (auto v = adj_[u].next(u); v; v = adj_[u].next(*v)) out.emplace_back(u, *v);
    }
    return out;
}

bool Graph::check_invariants() const {
    const std::size_t n = order();
    std::size_t twice_m = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (adj_[u].universe() != n) return false;
        if (adj_[u].test(u)) return false;
        bool ok = true;
        adj_[u].for_each([&](Vertex v) {
            if (!adj_[v].test(u)) ok = false;
        });
        if (!ok) return false;
        twice_m += adj_[u].count();
    }
    return twice_m == 2 * m_;
}

GraphBuilder::GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(Graph g) : adj_(std::move(g.adj_)) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= order() || v >= order()) {
        throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") out of range for " + std::to_string(order()) + " vertices");
    }
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) noexcept {
    adj_[u].erase(v);
    adj_[v].erase(u);
}

void GraphBuilder::make_clique(const VertexSet& s) {
    s.for_each([&](Vertex v) {
        adj_[v] |= s;
        adj_[v].erase(v);
    });
}

void GraphBuilder::make_independent(const VertexSet& s) {
    s.for_each([&](Vertex v) { adj_[v] -= s; });
}

Graph GraphBuilder::build() && {
    Graph g;
    g.adj_ = std::move(adj_);
    std::size_t twice_m = 0;
    for (const auto& row : g.adj_) twice_m += row.count();
    g.m_ = twice_m / 2;
    assert(g.check_invariants());
    return g;
}

Graph GraphBuilder::build() const& {
    GraphBuilder copy(*this);
    return std::move(copy).build();
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t parent_order) const {
    VertexSet out(parent_order);
    local.for_each([&](Vertex a) { out.insert(to_original[a]); });
    return out;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        VertexSet row = ~g.neighbors(u);
        row.erase(u);
        row.for_each([&](Vertex v) {
            if (v > u) b.add_edge(u, v);
        });
    }
    return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.to_original = s.to_vector();
    const std::size_t m = out.to_original.size();
    GraphBuilder b(m);
    for (std::size_t a = 0; a < m; ++a) {
        const VertexSet& row = g.neighbors(out.to_original[a]);
        for (std::size_t c = a + 1; c < m; ++c) {
            if (row.test(out.to_original[c])) b.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(c));
        }
    }
    out.graph = std::move(b).build();
    return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
    auto first = s.first();
    if (!first) throw ParameterError("common neighborhood of the empty set is undefined");
    VertexSet out = g.neighbors(*first);
    s.for_each([&](Vertex v) { out &= g.neighbors(v); });
    out -= s;
    return out;
}

VertexSet common_non_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet touched = s;
    s.for_each([&](Vertex v) { touched |= g.neighbors(v); });
    return ~touched;
}

std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& s) noexcept {
    return g.neighbors(v).intersection_count(s);
}

std::size_t edges_within(const Graph& g, const VertexSet& s) noexcept {
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += g.neighbors(v).intersection_count(s); });
    return twice / 2;
}

bool is_clique(const Graph& g, const VertexSet& s) noexcept {
    const std::size_t need = s.count();
    if (need <= 1) return true;
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighbors(v).intersection_count(s) != need - 1) ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, const VertexSet& s) noexcept {
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    GraphBuilder b(g.order());
    for (const auto& [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

namespace named {

Graph complete(std::size_t n) {
    GraphBuilder b(n);
    b.make_clique(VertexSet::full(n));
    return std::move(b).build();
}

Graph cycle(std::size_t n) {
    GraphBuilder b(n);
    if (n >= 3) {
        for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
    }
    return std::move(b).build();
}

Graph path(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph star(std::size_t leaves) {
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return std::move(b).build();
}

Graph diamond() {
    GraphBuilder b(4);
    b.add_edge(0, 1);
    b.add_edge(0, 2);
    b.add_edge(0, 3);
    b.add_edge(1, 2);
    b.add_edge(1, 3);
    return std::move(b).build();
}

}  // namespace named

}  // namespace pclique
