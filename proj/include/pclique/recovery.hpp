#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "pclique/graph.hpp"
#include "pclique/theta.hpp"

namespace pclique {

struct RecoveryParams {
    // Clique-size constant: k >= epsilon * sqrt(np).
    double epsilon = 1.0;
    // Bound c on the edge probability, p < c.
    double c_cap = 0.9;
    // Subset size for the guessing wrapper. Unset: min(s_guess_formula, 8).
    std::optional<std::size_t> s_guess;
    // Maximum size of the vertex cover searched for. 0: ceil(10 ln n) + 20.
    std::size_t branch_depth_cap = 0;
    // H = {i : c_i >= h_threshold}.
    double h_threshold = 0.75;
    // F adds vertices with at least f_fraction * k neighbors in H.
    double f_fraction = 0.75;
    // High-degree algorithm: P adds vertices with at least
    // high_degree_fraction * |D| neighbors in D.
    double high_degree_fraction = 0.75;
    // Constant C of the regime k >= C sqrt(np log n); recorded in reports.
    double high_degree_C = 1.0;
    // Stop the guessing wrapper after this many inner theta runs (0: no cap).
    std::size_t guess_candidate_budget = 0;
    // Return the first verified candidate in enumeration order instead of
    // the largest over all candidates.
    bool guess_first_success = false;
    // Worker threads for the guessing wrapper.
    std::size_t jobs = 1;
    SolverConfig theta_cfg;

    double zeta() const { return 5.0 / (1.0 - c_cap); }
    void validate() const;
};

inline constexpr std::size_t kMaxGuessSize = 8;

// s = 2 ceil(log_{1/p}(2 zeta / epsilon)) + 2.
std::size_t s_guess_formula(double p, double c_cap, double epsilon);
// ceil(10 ln n) + 20.
std::size_t default_branch_depth_cap(std::size_t n);

struct CoverResult {
    VertexSet cover;
    std::size_t nodes = 0;
};

// Exact minimum vertex cover by branching on the lexicographically smallest
// remaining edge (u, v), trying u before v, with a maximal-matching lower
// bound and the forced-vertex rule (a vertex of degree above the remaining
// budget must be in the cover). Throws DepthExceeded when every cover has
// more than depth_cap vertices.
CoverResult min_vertex_cover_branching(const Graph& g, std::size_t depth_cap);

struct RecoveryReport {
    std::string algorithm;
    std::size_t k = 0;
    VertexSet clique;
    // theta pipeline: H and F. high-degree: D and P.
    VertexSet H;
    VertexSet F;
    double theta_value = 0.0;
    SolveStatus theta_status = SolveStatus::InfeasibleInput;
    std::size_t theta_iterations = 0;
    std::size_t cover_size = 0;
    std::size_t branch_nodes = 0;
    std::size_t depth_cap = 0;
    double wall_ms = 0.0;
    bool verified = false;

    // Guessing wrapper.
    std::size_t s_formula = 0;
    std::size_t s_used = 0;
    bool s_capped = false;
    std::size_t candidates_enumerated = 0;
    std::size_t theta_runs = 0;
    bool budget_exhausted = false;
};

// Theta pipeline on the graph alone:
//   theta(complement g) -> H -> F -> F minus a minimum vertex cover of
//   complement(g[F]).
// The cover search is capped at min(depth cap, |F| - k) since a larger cover
// leaves fewer than k vertices. Throws DepthExceeded when the depth cap is
// the binding limit and NotFound when F holds no clique of size k. Theta
// non-convergence is reported through theta_status; the pipeline continues
// with the returned iterate.
RecoveryReport recover_theta(const Graph& g, std::size_t k, const RecoveryParams& params = {});
// Same pipeline reusing an already computed theta(complement g).
RecoveryReport recover_theta_with(const Graph& g, std::size_t k, const ThetaSolution& sol,
                                  const RecoveryParams& params = {});

// For every s-clique S (lexicographic order, pruned by
// |N*(S')| >= k - |S'| on prefixes), run the theta pipeline on g[N*(S)] with
// target k - s and keep the largest verified S + M_S (ties to the earliest
// S). Throws NotFound if no candidate verifies. The result does not depend
// on the number of jobs.
RecoveryReport recover_guessing(const Graph& g, std::size_t k, const RecoveryParams& params = {});

// D = the ceil(k/2) highest-degree vertices (ties to the smaller id),
// P = D + {v : |N(v) & D| >= fraction * |D|}, then the same vertex-cover
// finish on P.
RecoveryReport recover_high_degree(const Graph& g, std::size_t k, const RecoveryParams& params = {});

}  // namespace pclique
