#include "pclique/theta.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <ostream>

#include "pclique/errors.hpp"
#include "pclique/linalg.hpp"

namespace pclique {

void SolverConfig::validate() const {
    if (!(eps > 0.0)) throw ParameterError("solver eps must be positive");
    if (!(relaxation >= 1.0 && relaxation <= 1.9)) throw ParameterError("relaxation must lie in [1, 1.9]");
    if (max_iters == 0) throw ParameterError("max_iters must be positive");
}

std::string_view to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::Converged: return "converged";
        case SolveStatus::MaxIters: return "max_iters";
        case SolveStatus::InfeasibleInput: return "infeasible-input";
    }
    return "unknown";
}

double ThetaSolution::contribution_sum() const {
    double s = 0.0;
    for (double c : contributions) s += c;
    return s;
}

std::vector<double> gram_contributions(const Eigen::MatrixXd& B, double zero_norm) {
    const double zero_sq = std::max(zero_norm, kMinZeroNorm) * std::max(zero_norm, kMinZeroNorm);
    const auto n = B.rows();
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    const Eigen::VectorXd row_sums = B.rowwise().sum();
    const double total = row_sums.sum();
    if (!(total > 0.0)) return c;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double norm2 = B(i, i);
        if (norm2 <= zero_sq) continue;
        c[static_cast<std::size_t>(i)] = row_sums[i] * row_sums[i] / (norm2 * total);
    }
    return c;
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Dual ADMM for  min <C, X>  s.t.  tr X = 1, X_ij = 0 on edges, X PSD,  with
// C = -J. With unit step the iteration is a fixed-point map on one symmetric
// matrix V:
//   S = V_+,  X = -V_- / mu,  y = multipliers from (X, S),
//   V' = C - A*(y) - mu X.
// Edge constraints are scaled by 1/sqrt(2) so AA* is diagonal and the
// multiplier solve is closed form; entrywise, edge entries of V' reduce to
// S_ij, other off-diagonal entries to -1 - mu X_ij. The map is driven by
// Anderson acceleration with a residual safeguard.
class ThetaMap {
public:
    ThetaMap(const Graph& g, double mu) : n_(g.order()), mu_(mu), mask_(n_ * n_, 0) {
        for (const auto& [u, v] : g.edges()) {
            mask_[u * n_ + v] = 1;
            mask_[v * n_ + u] = 1;
        }
    }

    struct Result {
        MatrixXd next;  // V'
        MatrixXd X;     // PSD primal iterate
        double y0 = 0.0;
        double primal_residual = 0.0;
        double dual_residual = 0.0;
        double value = 0.0;
    };

    Result operator()(const MatrixXd& V) const {
        const auto N = static_cast<Eigen::Index>(n_);
        const double nd = static_cast<double>(n_);
        linalg::SymmetricEigen es = linalg::eigh(V);
        Eigen::Index neg = 0;
        while (neg < N && es.values[neg] < 0.0) ++neg;

        // Form the smaller spectral side explicitly.
        MatrixXd S;
        Result r;
        if (neg <= N - neg) {
            const auto Q = es.vectors.leftCols(neg);
            MatrixXd Vneg = Q * es.values.head(neg).asDiagonal() * Q.transpose();
            S = V - Vneg;
            r.X = -Vneg / mu_;
        } else {
            const auto Q = es.vectors.rightCols(N - neg);
            S = Q * es.values.tail(N - neg).asDiagonal() * Q.transpose();
            r.X = (S - V) / mu_;
        }

        r.y0 = -(mu_ * (r.X.trace() - 1.0) + S.trace() + nd) / nd;
        r.next.resize(N, N);
        double edge_sq = 0.0;
        for (Eigen::Index j = 0; j < N; ++j) {
            const unsigned char* col = &mask_[static_cast<std::size_t>(j) * n_];
            for (Eigen::Index i = 0; i < N; ++i) {
                if (col[i]) {
                    r.next(i, j) = S(i, j);
                    if (i < j) edge_sq += r.X(i, j) * r.X(i, j);
                } else {
                    r.next(i, j) = -1.0 - mu_ * r.X(i, j);
                }
            }
            r.next(j, j) = -1.0 - r.y0 - mu_ * r.X(j, j);
        }
        const double tr_err = r.X.trace() - 1.0;
        r.primal_residual = std::sqrt(tr_err * tr_err + 2.0 * edge_sq) / 2.0;
        // V' - V equals (C - A*y' - S') - (C - A*y - S) shifted by mu X terms;
        // its norm over (1 + |C|) measures dual infeasibility of the step.
        r.dual_residual = (r.next - V).norm() / (1.0 + nd);
        r.value = r.X.sum();
        return r;
    }

private:
    std::size_t n_;
    double mu_;
    std::vector<unsigned char> mask_;
};

// Type-II Anderson acceleration over flattened matrices.
class Anderson {
public:
    explicit Anderson(std::size_t memory) : memory_(memory) {}

    void reset() {
        dv_.clear();
        df_.clear();
        has_prev_ = false;
    }

    // Records the pair (v, f = T(v) - v) and returns the next point, mixing
    // with weight beta.
    VectorXd step(const VectorXd& v, const VectorXd& f, double beta) {
        if (has_prev_) {
            dv_.push_back(v - prev_v_);
            df_.push_back(f - prev_f_);
            if (dv_.size() > memory_) {
                dv_.pop_front();
                df_.pop_front();
            }
        }
        prev_v_ = v;
        prev_f_ = f;
        has_prev_ = true;

        VectorXd next = v + beta * f;
        const auto m = static_cast<Eigen::Index>(df_.size());
        if (m == 0) return next;
        MatrixXd G(m, m);
        VectorXd rhs(m);
        for (Eigen::Index a = 0; a < m; ++a) {
            rhs[a] = df_[a].dot(f);
            for (Eigen::Index b = 0; b <= a; ++b) G(a, b) = G(b, a) = df_[a].dot(df_[b]);
        }
        G.diagonal().array() += 1e-10 * G.trace() + 1e-300;
        const VectorXd gamma = G.ldlt().solve(rhs);
        if (!gamma.allFinite()) return next;
        for (Eigen::Index a = 0; a < m; ++a) next -= gamma[a] * (dv_[a] + beta * df_[a]);
        return next;
    }

private:
    std::size_t memory_;
    std::deque<VectorXd> dv_;
    std::deque<VectorXd> df_;
    VectorXd prev_v_;
    VectorXd prev_f_;
    bool has_prev_ = false;
};

constexpr std::size_t kAndersonMemory = 10;
constexpr double kPenaltyScale = 0.3;
// An accelerated point is kept only if its residual stays within this factor
// of the last accepted one.
constexpr double kSafeguard = 2.0;

}  // namespace

ThetaSolution theta(const Graph& g, const SolverConfig& cfg) {
    cfg.validate();
    ThetaSolution sol;
    const std::size_t n = g.order();
    if (n == 0) {
        sol.status = SolveStatus::InfeasibleInput;
        return sol;
    }
    const auto N = static_cast<Eigen::Index>(n);
    const double nd = static_cast<double>(n);
    const double mu = kPenaltyScale * nd;
    const ThetaMap map(g, mu);
    Anderson accel(kAndersonMemory);

    // V for X = I/n, S = 0.
    MatrixXd V = -MatrixXd::Ones(N, N) - (mu / nd) * MatrixXd::Identity(N, N);
    ThetaMap::Result cur = map(V);
    double accepted_norm = cur.dual_residual;

    if (cfg.trace_csv) *cfg.trace_csv << "iter,primal_residual,dual_residual,value\n";
    sol.status = SolveStatus::MaxIters;
    std::size_t it = 1;
    for (;; ++it) {
        if (cfg.trace_csv) {
            *cfg.trace_csv << it << ',' << cur.primal_residual << ',' << cur.dual_residual << ',' << cur.value << '\n';
        }
        if (std::max(cur.primal_residual, cur.dual_residual) < cfg.eps) {
            sol.status = SolveStatus::Converged;
            break;
        }
        if (it >= cfg.max_iters) break;

        const MatrixXd F = cur.next - V;
        const VectorXd v = Eigen::Map<const VectorXd>(V.data(), N * N);
        const VectorXd f = Eigen::Map<const VectorXd>(F.data(), N * N);
        VectorXd proposal = accel.step(v, f, cfg.relaxation);
        MatrixXd V_try = Eigen::Map<const MatrixXd>(proposal.data(), N, N);
        ThetaMap::Result trial = map(V_try);
        if (trial.dual_residual > kSafeguard * accepted_norm) {
            // Fall back to the plain relaxed step and restart the history.
            accel.reset();
            V_try = V + cfg.relaxation * F;
            trial = map(V_try);
        }
        V = std::move(V_try);
        cur = std::move(trial);
        accepted_norm = cur.dual_residual;
    }

    sol.iterations = it;
    sol.primal_residual = cur.primal_residual;
    sol.dual_residual = cur.dual_residual;
    sol.dual_value = -cur.y0;
    sol.B = std::move(cur.X);
    sol.value = sol.B.sum();
    sol.duality_gap = std::abs(sol.value - sol.dual_value) / (1.0 + std::abs(sol.value) + std::abs(sol.dual_value));

    std::vector<double> raw = gram_contributions(sol.B, cfg.eps);
    sol.raw_contribution_min = *std::min_element(raw.begin(), raw.end());
    sol.raw_contribution_max = *std::max_element(raw.begin(), raw.end());
    sol.contributions.resize(raw.size());
    std::transform(raw.begin(), raw.end(), sol.contributions.begin(),
                   [](double c) { return std::clamp(c, 0.0, 1.0); });
    return sol;
}

ThetaSolution theta_of_complement(const Graph& g, const SolverConfig& cfg) { return theta(complement(g), cfg); }

ThetaSolution theta_of_complement(const PlantedInstance& inst, const SolverConfig& cfg) {
    return theta_of_complement(inst.planted, cfg);
}

void write_matrix_binary(std::ostream& out, const Eigen::MatrixXd& m) {
    static_assert(std::endian::native == std::endian::little, "matrix dump assumes a little-endian host");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double x = m(i, j);
            out.write(reinterpret_cast<const char*>(&x), sizeof(double));
        }
    }
}

}  // namespace pclique
