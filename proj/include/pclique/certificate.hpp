#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pclique/randgen.hpp"

namespace pclique {

struct CertificateConfig {
    // Fixed stand-in for the o(k') term in the second-eigenvalue bound
    // lambda2 <= 4/(1-p) * sqrt(np) + slack * k'.
    double lambda2_slack = 0.2;
    // Relative tolerance for lambda1 = k'.
    double lambda1_rel_tol = 1e-6;
};

struct CertificateReport {
    VertexSet Q;
    std::size_t k_prime = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda1_U = 0.0;
    double lambda2_V = 0.0;
    double lambda1_W = 0.0;
    double trace_W2 = 0.0;
    // Vertices outside Q in increasing order, with their weights x_i and
    // degrees d(i, Q).
    std::vector<Vertex> outside;
    std::vector<double> x_weights;
    std::vector<std::size_t> outside_degrees;
    bool valid = false;

    // Same spectrum with the diagonal set to 1 everywhere instead of only on Q.
    double lambda1_unit_diagonal = 0.0;
    double lambda2_unit_diagonal = 0.0;
    // max |(U + V + W) - M| entrywise.
    double reconstruction_error = 0.0;
    // max |M 1_Q - k' 1_Q|.
    double eigenvector_residual = 0.0;
    // lambda1(U) + lambda2(V) + lambda1(W), the Weyl bound on lambda2(M).
    double weyl_bound = 0.0;
    double lambda2_reference_bound = 0.0;
    // Every i outside Q has d(i, Q) < (1+p)/2 * k. Diagnostic only: Q grows
    // K, so a vertex may see more of Q than it saw of K.
    bool membership_rule_holds = true;
    // Whether Q was already a clique of the planted graph (it is completed to
    // one for the construction either way).
    bool q_clique_in_planted = true;
};

// Q = K + {v outside K : d(v, K) >= (1+p)/2 * k}, degrees in the planted graph.
VertexSet extend_clique(const PlantedInstance& inst);

// M = U + V + W on the planted graph with Q completed to a clique:
//   U: 1 on base-graph edges, -p/(1-p) on non-edges, 0 on the diagonal;
//   V: 1 - U_ij on the Q x Q block (diagonal included), 0 elsewhere;
//   W: x_i on non-adjacent pairs (i outside Q, j in Q), symmetric,
//      x_i = (k'p - d(i,Q)) / ((1-p)(k' - d(i,Q))).
// Every row of the (outside Q) x Q block of M then sums to zero, so 1_Q is an
// eigenvector with eigenvalue k'.
struct CertificateParts {
    Eigen::MatrixXd U;
    Eigen::MatrixXd V;
    Eigen::MatrixXd W;

    Eigen::MatrixXd sum() const { return U + V + W; }
};

// Throws ParameterError when some vertex outside Q is adjacent to all of Q.
CertificateParts certificate_parts(const PlantedInstance& inst, const VertexSet& Q);
Eigen::MatrixXd build_certificate(const PlantedInstance& inst, const VertexSet& Q);

CertificateReport verify_certificate(const PlantedInstance& inst, const VertexSet& Q, const Eigen::MatrixXd& M,
                                     const CertificateConfig& cfg = {});

struct VarBoundResult {
    double lhs = 0.0;
    // (n-k) k p (1-p)
    double expected = 0.0;
    // expected * (1 + slack)
    double rhs = 0.0;
    bool ok = false;
};

// lhs = sum over i outside K of (d_base(i, K) - kp)^2, using the graph
// before planting.
VarBoundResult empirical_varbound(const PlantedInstance& inst, double slack = 0.25);

// a(n, p) = 48 / (1-p)^2 * p * log n, natural log unless base2 is set.
double extension_bound(std::size_t n, double p, bool base2 = false);

}  // namespace pclique
