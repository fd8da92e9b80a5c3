#pragma once

// Brute-force reference computations on small graphs stored as bitmasks.
// Nothing here calls into the library, so these serve as independent
// oracles for it.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "pclique/graph.hpp"

namespace ref {

using Mask = std::uint32_t;

struct SmallGraph {
    int n = 0;
    std::vector<Mask> adj;

    bool edge(int u, int v) const { return (adj[u] >> v) & 1U; }
};

inline SmallGraph random_small(int n, double p, std::mt19937_64& gen) {
    std::bernoulli_distribution coin(p);
    SmallGraph g{n, std::vector<Mask>(static_cast<std::size_t>(n), 0)};
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(gen)) {
                g.adj[u] |= Mask{1} << v;
                g.adj[v] |= Mask{1} << u;
            }
        }
    }
    return g;
}

inline pclique::Graph to_graph(const SmallGraph& s) {
    pclique::GraphBuilder b(static_cast<std::size_t>(s.n));
    for (int u = 0; u < s.n; ++u) {
        for (int v = u + 1; v < s.n; ++v) {
            if (s.edge(u, v)) b.add_edge(static_cast<pclique::Vertex>(u), static_cast<pclique::Vertex>(v));
        }
    }
    return std::move(b).build();
}

inline SmallGraph from_graph(const pclique::Graph& g) {
    const int n = static_cast<int>(g.order());
    SmallGraph s{n, std::vector<Mask>(static_cast<std::size_t>(n), 0)};
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && g.adjacent(static_cast<pclique::Vertex>(u), static_cast<pclique::Vertex>(v))) {
                s.adj[u] |= Mask{1} << v;
            }
        }
    }
    return s;
}

inline Mask full_mask(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool is_clique(const SmallGraph& g, Mask s) {
    for (Mask r = s; r; r &= r - 1) {
        const int v = std::countr_zero(r);
        if ((s & ~(Mask{1} << v) & ~g.adj[v]) != 0) return false;
    }
    return true;
}

inline bool is_independent(const SmallGraph& g, Mask s) {
    for (Mask r = s; r; r &= r - 1) {
        if (g.adj[std::countr_zero(r)] & s) return false;
    }
    return true;
}

inline bool is_cover(const SmallGraph& g, Mask c) {
    for (int u = 0; u < g.n; ++u) {
        if ((c >> u) & 1U) continue;
        if (g.adj[u] & ~c) return false;
    }
    return true;
}

// Every subset, in increasing mask order.
template <class F>
void for_each_subset(int n, F&& f) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) f(static_cast<Mask>(s));
}

inline int clique_number(const SmallGraph& g) {
    int best = 0;
    for_each_subset(g.n, [&](Mask s) {
        const int c = std::popcount(s);
        if (c > best && is_clique(g, s)) best = c;
    });
    return best;
}

inline int independence_number(const SmallGraph& g) {
    int best = 0;
    for_each_subset(g.n, [&](Mask s) {
        const int c = std::popcount(s);
        if (c > best && is_independent(g, s)) best = c;
    });
    return best;
}

inline int min_vertex_cover(const SmallGraph& g) {
    int best = g.n;
    for_each_subset(g.n, [&](Mask s) {
        const int c = std::popcount(s);
        if (c < best && is_cover(g, s)) best = c;
    });
    return best;
}

// Maximal cliques (the empty set when n = 0).
inline std::vector<Mask> maximal_cliques(const SmallGraph& g) {
    std::vector<Mask> out;
    const Mask all = full_mask(g.n);
    for_each_subset(g.n, [&](Mask s) {
        if (!is_clique(g, s)) return;
        Mask common = all & ~s;
        for (Mask r = s; r; r &= r - 1) common &= g.adj[std::countr_zero(r)];
        if (common == 0) out.push_back(s);
    });
    return out;
}

// Nonempty cliques.
inline std::uint64_t clique_count(const SmallGraph& g) {
    std::uint64_t c = 0;
    for_each_subset(g.n, [&](Mask s) {
        if (s != 0 && is_clique(g, s)) ++c;
    });
    return c;
}

inline Mask to_mask(const pclique::VertexSet& s) {
    Mask m = 0;
    s.for_each([&](pclique::Vertex v) { m |= Mask{1} << v; });
    return m;
}

// theta(g) = min lambda_max(M) over symmetric M with M_ij = 1 on the diagonal
// and on non-edges. For a vertex-transitive cycle the optimum is circulant,
// M = J + x A, so a scalar sweep over x finds it.
inline double cycle_theta_by_sweep(std::size_t n) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<Eigen::Index>(i);
        const auto b = static_cast<Eigen::Index>((i + 1) % n);
        A(a, b) = A(b, a) = 1.0;
    }
    const Eigen::MatrixXd J = Eigen::MatrixXd::Ones(A.rows(), A.cols());
    auto top = [&](double x) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J + x * A, Eigen::EigenvaluesOnly);
        return es.eigenvalues().maxCoeff();
    };
    // lambda_max(J + xA) is convex in x and the optimum lies near -n/4.
    double lo = -static_cast<double>(n), hi = static_cast<double>(n);
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
    double fa = top(a), fb = top(b);
    for (int it = 0; it < 200; ++it) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - r * (hi - lo);
            fa = top(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + r * (hi - lo);
            fb = top(b);
        }
    }
    return std::min(fa, fb);
}

}  // namespace ref
