#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pclique/vertex_set.hpp"

namespace pclique {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

// Dense simple undirected graph on vertices [0, n) with one bitset row per
// vertex. Immutable once built; GraphBuilder is the only way to change edges.
//
// Invariants: rows are symmetric, no vertex is its own neighbor, and no bit at
// position >= n is set.
class Graph {
public:
    Graph() = default;
    // Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    // Throws ParameterError on self-loops or out-of-range endpoints. Duplicate
    // edges are merged.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const noexcept { return adj_[v]; }
    std::size_t degree(Vertex v) const noexcept { return adj_[v].count(); }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Full structural validation; used by tests and by the builder.
    bool check_invariants() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;
    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(Graph g);

    std::size_t order() const noexcept { return adj_.size(); }
    bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v) noexcept;
    // Inserts every pair inside s.
    void make_clique(const VertexSet& s);
    // Deletes every pair inside s.
    void make_independent(const VertexSet& s);

    Graph build() &&;
    Graph build() const&;

private:
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    // to_original[a] is the id of local vertex a in the parent graph.
    std::vector<Vertex> to_original;

    VertexSet lift(const VertexSet& local, std::size_t parent_order) const;
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// {v not in s : v adjacent to every member of s}. Throws ParameterError for
// empty s.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);
// Vertices outside s adjacent to no member of s.
VertexSet common_non_neighborhood(const Graph& g, const VertexSet& s);

// |N(v) & s|.
std::size_t degree_in(const Graph& g, Vertex v, const VertexSet& s) noexcept;
// Number of edges with both endpoints in s.
std::size_t edges_within(const Graph& g, const VertexSet& s) noexcept;

bool is_clique(const Graph& g, const VertexSet& s) noexcept;
bool is_independent(const Graph& g, const VertexSet& s) noexcept;

// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Small named graphs used by tests, gadgets and the CLI.
namespace named {
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
// K4 minus the edge (2, 3).
Graph diamond();
}  // namespace named

}  // namespace pclique
