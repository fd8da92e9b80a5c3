#include "pclique/certificate.hpp"

#include <cmath>

#include "pclique/errors.hpp"
#include "pclique/linalg.hpp"

namespace pclique {

VertexSet extend_clique(const PlantedInstance& inst) {
    const Graph& g = inst.planted;
    const double threshold = (1.0 + inst.params.p) / 2.0 * static_cast<double>(inst.K.count());
    VertexSet Q = inst.K;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (inst.K.test(v)) continue;
        if (static_cast<double>(degree_in(g, v, inst.K)) >= threshold) Q.insert(v);
    }
    return Q;
}

CertificateParts certificate_parts(const PlantedInstance& inst, const VertexSet& Q) {
    const Graph& base = inst.base;
    const Graph& g = inst.planted;
    const std::size_t n = g.order();
    const auto N = static_cast<Eigen::Index>(n);
    const double p = inst.params.p;
    const double off = -p / (1.0 - p);
    const double kq = static_cast<double>(Q.count());

    CertificateParts parts;
    parts.U.setZero(N, N);
    parts.V.setZero(N, N);
    parts.W.setZero(N, N);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double u = base.adjacent(i, j) ? 1.0 : off;
            parts.U(i, j) = u;
            parts.U(j, i) = u;
        }
    }
    Q.for_each([&](Vertex i) {
        Q.for_each([&](Vertex j) { parts.V(i, j) = 1.0 - parts.U(i, j); });
    });
    for (Vertex i = 0; i < n; ++i) {
        if (Q.test(i)) continue;
        const std::size_t d = degree_in(g, i, Q);
        if (static_cast<double>(d) >= kq) {
            throw ParameterError("certificate: vertex " + std::to_string(i) + " is adjacent to all of Q");
        }
        const double dd = static_cast<double>(d);
        const double x = (kq * p - dd) / ((1.0 - p) * (kq - dd));
        Q.for_each([&](Vertex j) {
            if (!g.adjacent(i, j)) {
                parts.W(i, j) = x;
                parts.W(j, i) = x;
            }
        });
    }
    return parts;
}

Eigen::MatrixXd build_certificate(const PlantedInstance& inst, const VertexSet& Q) {
    return certificate_parts(inst, Q).sum();
}

CertificateReport verify_certificate(const PlantedInstance& inst, const VertexSet& Q, const Eigen::MatrixXd& M,
                                     const CertificateConfig& cfg) {
    const Graph& g = inst.planted;
    const std::size_t n = g.order();
    const double p = inst.params.p;
    const double k = static_cast<double>(inst.K.count());

    CertificateReport rep;
    rep.Q = Q;
    rep.k_prime = Q.count();
    const double kq = static_cast<double>(rep.k_prime);

    const linalg::TopTwo top = linalg::top_two_eigenvalues(M);
    rep.lambda1 = top.first;
    rep.lambda2 = top.second;

    Eigen::MatrixXd unit = M;
    for (Vertex i = 0; i < n; ++i) {
        if (!Q.test(i)) unit(i, i) = 1.0;
    }
    const linalg::TopTwo top_unit = linalg::top_two_eigenvalues(unit);
    rep.lambda1_unit_diagonal = top_unit.first;
    rep.lambda2_unit_diagonal = top_unit.second;

    const CertificateParts parts = certificate_parts(inst, Q);
    rep.reconstruction_error = (parts.sum() - M).cwiseAbs().maxCoeff();
    rep.lambda1_U = linalg::top_two_eigenvalues(parts.U).first;
    rep.lambda2_V = linalg::top_two_eigenvalues(parts.V).second;
    rep.lambda1_W = linalg::top_two_eigenvalues(parts.W).first;
    rep.weyl_bound = rep.lambda1_U + rep.lambda2_V + rep.lambda1_W;

    Eigen::VectorXd ind = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Q.for_each([&](Vertex v) { ind[v] = 1.0; });
    rep.eigenvector_residual = (M * ind - kq * ind).cwiseAbs().maxCoeff();

    const double member_threshold = (1.0 + p) / 2.0 * k;
    for (Vertex i = 0; i < n; ++i) {
        if (Q.test(i)) continue;
        const std::size_t d = degree_in(g, i, Q);
        const double dd = static_cast<double>(d);
        const double x = (kq * p - dd) / ((1.0 - p) * (kq - dd));
        rep.outside.push_back(i);
        rep.outside_degrees.push_back(d);
        rep.x_weights.push_back(x);
        rep.trace_W2 += 2.0 * (kq - dd) * x * x;
        if (dd >= member_threshold) rep.membership_rule_holds = false;
    }
    rep.q_clique_in_planted = is_clique(g, Q);
    rep.lambda2_reference_bound =
        4.0 / (1.0 - p) * std::sqrt(static_cast<double>(n) * p) + cfg.lambda2_slack * kq;
    rep.valid = std::abs(rep.lambda1 - kq) <= cfg.lambda1_rel_tol * kq && rep.lambda2 < kq;
    return rep;
}

VarBoundResult empirical_varbound(const PlantedInstance& inst, double slack) {
    const Graph& base = inst.base;
    const std::size_t n = base.order();
    const std::size_t k = inst.K.count();
    const double p = inst.params.p;
    const double kp = static_cast<double>(k) * p;
    VarBoundResult r;
    for (Vertex i = 0; i < n; ++i) {
        if (inst.K.test(i)) continue;
        const double dev = static_cast<double>(degree_in(base, i, inst.K)) - kp;
        r.lhs += dev * dev;
    }
    r.expected = static_cast<double>(n - k) * kp * (1.0 - p);
    r.rhs = r.expected * (1.0 + slack);
    r.ok = r.lhs <= r.rhs;
    return r;
}

double extension_bound(std::size_t n, double p, bool base2) {
    const double lg = base2 ? std::log2(static_cast<double>(n)) : std::log(static_cast<double>(n));
    return 48.0 / ((1.0 - p) * (1.0 - p)) * p * lg;
}

}  // namespace pclique
