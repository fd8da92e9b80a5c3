#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pclique/graph.hpp"
#include "pclique/randgen.hpp"

namespace pclique {

struct SolverConfig {
    // Stop once max(primal_residual, dual_residual) < eps.
    double eps = 1e-5;
    std::size_t max_iters = 50000;
    // Step length of the multiplier update, in [1, 1.9].
    double relaxation = 1.6;
    // When set, one CSV row "iter,primal_residual,dual_residual,value" per
    // iteration (header included).
    std::ostream* trace_csv = nullptr;

    void validate() const;
};

enum class SolveStatus { Converged, MaxIters, InfeasibleInput };
std::string_view to_string(SolveStatus s) noexcept;

struct ThetaSolution {
    double value = 0.0;
    // Upper bound estimate from the dual multiplier of the trace constraint.
    double dual_value = 0.0;
    // c_i = (h . s_i)^2 for the unit Gram vectors s_i of B and handle
    // h = sum(b_i) / |sum(b_i)|, clamped to [0, 1]; see gram_contributions.
    std::vector<double> contributions;
    // Range of the contributions before clamping.
    double raw_contribution_min = 0.0;
    double raw_contribution_max = 0.0;
    std::size_t iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double duality_gap = 0.0;
    SolveStatus status = SolveStatus::InfeasibleInput;
    // Optimal PSD matrix: trace 1, zero on every edge.
    Eigen::MatrixXd B;

    double contribution_sum() const;
};

// Lovasz theta of g: maximize <J, B> over PSD B with tr(B) = 1 and B_ij = 0
// on every edge of g. Solved with an alternating-direction augmented
// Lagrangian method on the dual; each iteration projects onto the PSD cone
// with one symmetric eigendecomposition. Non-convergence is reported through
// status (the last iterate is returned).
ThetaSolution theta(const Graph& g, const SolverConfig& cfg = {});

// theta(complement(g)), an upper bound on the clique number of g.
ThetaSolution theta_of_complement(const Graph& g, const SolverConfig& cfg = {});
ThetaSolution theta_of_complement(const PlantedInstance& inst, const SolverConfig& cfg = {});

inline constexpr double kMinZeroNorm = 1e-9;

// Contributions c_i from a PSD matrix, via the Gram identity
// (h . b_i)^2 / |b_i|^2 = (B 1)_i^2 / (B_ii * 1'B1); independent of which
// factorization B = [b_i . b_j] is chosen. Vertices with
// |b_i| <= max(zero_norm, 1e-9) get 0. Returns unclamped values.
//
// theta() passes its eps as zero_norm: an optimal B satisfies
// (B 1)_i = theta * B_ii, so c_i = theta * |b_i|^2 there, and the Gram
// direction of a vector at the residual level carries no information (a
// numerically rank-one B would otherwise give every vertex c_i = 1).
std::vector<double> gram_contributions(const Eigen::MatrixXd& B, double zero_norm = kMinZeroNorm);

// Dense dump: rows*cols little-endian float64 in row-major order.
void write_matrix_binary(std::ostream& out, const Eigen::MatrixXd& m);

}  // namespace pclique
