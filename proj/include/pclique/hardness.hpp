#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pclique/randgen.hpp"

namespace pclique {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    // Reduced, positive denominator.
    static Rational make(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct ReductionOutput {
    Graph gadget;
    std::size_t t = 0;
    Rational alpha_avg;
    // Independent sets of size s in H correspond to size s + 3 (|V(H)|/2) t
    // in R(H).
    std::size_t is_shift = 0;
    std::size_t map_is(std::size_t s) const { return s + is_shift; }
};

// R(H): every edge (u, v) of the 3-regular graph h becomes a path with 2t
// inner vertices. Original vertices keep their ids; the path of the e-th edge
// in sorted order uses ids m + 2t e, ..., m + 2t e + 2t - 1, starting next
// to u. Throws ParameterError for t = 0 or non-3-regular h.
ReductionOutput reduce_3regular(const Graph& h, std::size_t t);

// Exact test that no nonempty vertex subset induces a subgraph of larger
// average degree than h itself. Subset enumeration (Gray code) for
// |V| <= 24, maximum-density closure via max-flow above that.
bool is_balanced(const Graph& h);
inline constexpr std::size_t kBalancedBruteForceLimit = 24;

struct Partition {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t part_size() const { return m == 0 ? 0 : n / m; }
    // Part i is [i n/m, (i+1) n/m).
    std::size_t part_of(Vertex v) const { return v / part_size(); }
};

struct PlantedHInstance {
    Graph graph;
    Graph H;
    Partition partition;
    // M[i] is the vertex of part i carrying vertex i of H.
    std::vector<Vertex> M;
    VertexSet M_set;
    VertexSet I_prime;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t k = 0;
    std::size_t k_prime = 0;
    std::uint64_t seed = 0;
    // Too few common non-neighbors of M: a uniform independent set of size k
    // was planted instead, recorded in I_prime.
    bool failed_default = false;
};

// G' ~ G(n, p), a uniform partition-obeying M, and g[M] replaced by h.
// Throws ParameterError unless |V(h)| divides n and 0 < p < 1.
PlantedHInstance plant_H(std::size_t n, double p, const Graph& h, std::uint64_t seed);

// plant_H followed by an independent set I' of size k - k' among the common
// non-neighbors of M. Requires k' <= k <= n - m.
PlantedHInstance plant_H_with_IS(std::size_t n, double p, const Graph& h, std::size_t k, std::size_t k_prime,
                                 std::uint64_t seed);

inline constexpr std::size_t kMaxCountParts = 8;
inline constexpr std::size_t kMaxCountPartSize = 64;

// Number of partition-obeying sets inducing h with vertex i in part i.
// Requires m <= 8 and n/m <= 64.
std::uint64_t count_XH(const Graph& g, const Graph& h, const Partition& partition);

// (n/m)^m p^|E(h)| (1-p)^(C(m,2) - |E(h)|).
double expected_XH(std::size_t n, double p, const Graph& h);

// X_H(g) / E[X_H], the ratio of the planted-copy density to the G(n, p)
// density at g.
double likelihood_ratio(const Graph& g, const Graph& h, std::size_t n, double p);

// Any finder of independent sets of size at least k in a graph.
using IndependentSetFinder = std::function<std::optional<VertexSet>(const Graph&, std::size_t k)>;

struct AlgrandIteration {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool failed_default = false;
    bool returned = false;
    bool independent = false;
    std::size_t size = 0;
    std::size_t in_copy = 0;
    // The part of the set inside M is independent in h.
    bool sound = false;
    bool success = false;
};

struct AlgrandResult {
    // Independent set of h (ids of h), present on success.
    std::optional<VertexSet> answer;
    std::size_t budget = 0;
    std::vector<AlgrandIteration> transcript;
};

// ceil(10 ln n / gamma).
std::size_t algrand_iterations(std::size_t n, double gamma);

// Up to algrand_iterations rounds of: sample plant_H_with_IS, run `finder`,
// accept a returned independent set of size >= k with at least k' vertices
// in M whose trace on M is independent in h. Only such a trace is returned.
AlgrandResult algrand(const Graph& h, std::size_t k_prime, std::size_t n, double p, std::size_t k, double gamma,
                      const IndependentSetFinder& finder, std::uint64_t seed);

// Exact finder: a maximum independent set chosen uniformly among all of them
// (keyed by seed and the graph), or max_is_exact above 30 vertices. Uniform
// choice keeps the answer independent of vertex labels, which matter here
// because vertex i of h always sits in part i.
IndependentSetFinder oracle_finder(std::uint64_t seed = 0);

// Every maximum independent set of inst.graph has at least k' vertices in M.
// Requires n <= 30.
bool check_unique_structure(const PlantedHInstance& inst);

struct PlannerInput {
    double delta = 0.5;
    // epsilon of the copy-count lemma, in (0, 1/7).
    double epsilon = 0.1;
    std::size_t n = 1000;
    // Average degree; unset picks the midpoint of the admissible range.
    std::optional<double> alpha;
    // Fraction of the admissible rho range used.
    double rho_fraction = 0.5;
    // Constant c in c n^(1 - delta) ln n <= k.
    double k_constant = 6.0;
};

struct PlannerOutput {
    double p = 0.0;
    double alpha_min = 2.0;
    double alpha_max = 0.0;
    double alpha = 0.0;
    double rho_max = 0.0;
    double rho = 0.0;
    double m = 0.0;
    double k_min = 0.0;
    double k_max = 0.0;
    // epsilon >= m^2 p.
    bool copy_density_ok = false;
    // epsilon^2 >= 2 m^4 / (n^2 p^alpha), and the variant without the 2.
    bool copy_variance_ok = false;
    bool copy_variance_ok_without_2 = false;
    double log_expected_copies = 0.0;
    bool feasible = false;
    std::string verdict;
};

// Admissible alpha in (2, min(2/(1-delta), 3)) and
// rho < min((1-delta)/2, (2 - alpha(1-delta))/4), with the desk-scale checks
// of the copy-count lemma at the given n.
PlannerOutput plan_hardness(const PlannerInput& in);

}  // namespace pclique
