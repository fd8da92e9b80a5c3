#include "pclique/recovery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "pclique/errors.hpp"
#include "pclique/randgen.hpp"

namespace pclique {

void RecoveryParams::validate() const {
    if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
    if (!(c_cap > 0.0 && c_cap < 1.0)) throw ParameterError("c must lie in (0, 1)");
    if (s_guess && *s_guess == 0) throw ParameterError("s_guess must be at least 1");
    if (!(h_threshold > 0.0 && h_threshold <= 1.0)) throw ParameterError("H threshold must lie in (0, 1]");
    if (!(f_fraction > 0.0 && f_fraction <= 1.0)) throw ParameterError("F fraction must lie in (0, 1]");
    if (!(high_degree_fraction > 0.0 && high_degree_fraction <= 1.0)) {
        throw ParameterError("high-degree fraction must lie in (0, 1]");
    }
    theta_cfg.validate();
}

std::size_t s_guess_formula(double p, double c_cap, double epsilon) {
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("s_guess_formula: p must lie in (0, 1)");
    const double zeta = 5.0 / (1.0 - c_cap);
    const double lg = std::log(2.0 * zeta / epsilon) / std::log(1.0 / p);
    // Guard against 6.0000000001 style rounding above an exact integer.
    const double rounded = std::round(lg);
    const double ceil_lg = std::abs(lg - rounded) < 1e-9 ? rounded : std::ceil(lg);
    return 2 * static_cast<std::size_t>(std::max(0.0, ceil_lg)) + 2;
}

std::size_t default_branch_depth_cap(std::size_t n) {
    return static_cast<std::size_t>(std::ceil(10.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 1))))) + 20;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class CoverSearch {
public:
    CoverSearch(const Graph& g, std::size_t cap) : g_(g), best_size_(cap + 1) {}

    CoverResult run() {
        std::vector<Vertex> chosen;
        search(VertexSet::full(g_.order()), chosen);
        if (!found_) throw DepthExceeded("vertex cover larger than " + std::to_string(best_size_ - 1));
        CoverResult r;
        r.cover = VertexSet(g_.order(), best_);
        r.nodes = nodes_;
        return r;
    }

private:
    std::size_t alive_degree(Vertex v, const VertexSet& alive) const {
        return g_.neighbors(v).intersection_count(alive);
    }

    // Size of a greedy maximal matching among alive vertices.
    std::size_t matching_bound(const VertexSet& alive) const {
        VertexSet free = alive;
        std::size_t m = 0;
        for (auto u = free.first(); u; u = free.next(*u)) {
            const VertexSet nb = g_.neighbors(*u) & free;
            auto w = nb.first();
            if (!w) continue;
            free.erase(*u);
            free.erase(*w);
            ++m;
        }
        return m;
    }

    void search(VertexSet alive, std::vector<Vertex>& chosen) {
        ++nodes_;
        const std::size_t base = chosen.size();
        if (base >= best_size_) return;

        // Forced vertices: degree above what the budget could cover otherwise.
        bool changed = true;
        while (changed) {
            changed = false;
            const std::size_t budget = best_size_ - 1 - chosen.size();
            for (auto v = alive.first(); v; v = alive.next(*v)) {
                if (alive_degree(*v, alive) > budget) {
                    if (chosen.size() + 1 >= best_size_) {
                        chosen.resize(base);
                        return;
                    }
                    chosen.push_back(*v);
                    alive.erase(*v);
                    changed = true;
                    break;
                }
            }
        }

        // Lexicographically smallest remaining edge.
        std::optional<Vertex> u;
        VertexSet nb;
        for (auto v = alive.first(); v; v = alive.next(*v)) {
            nb = g_.neighbors(*v) & alive;
            if (!nb.empty()) {
                u = v;
                break;
            }
        }
        if (!u) {
            best_.assign(chosen.begin(), chosen.end());
            best_size_ = chosen.size();
            found_ = true;
            chosen.resize(base);
            return;
        }
        if (chosen.size() + matching_bound(alive) >= best_size_) {
            chosen.resize(base);
            return;
        }
        const Vertex v = *nb.first();
        for (Vertex pick : {*u, v}) {
            VertexSet next = alive;
            next.erase(pick);
            chosen.push_back(pick);
            search(std::move(next), chosen);
            chosen.pop_back();
        }
        chosen.resize(base);
    }

    const Graph& g_;
    std::size_t best_size_;
    std::vector<Vertex> best_;
    bool found_ = false;
    std::size_t nodes_ = 0;
};

// F minus a minimum vertex cover of complement(g[F]); fills the clique and
// cover fields of rep.
void finish_with_cover(const Graph& g, const VertexSet& F, std::size_t k, std::size_t depth_cap,
                       RecoveryReport& rep) {
    const std::size_t f = F.count();
    rep.depth_cap = depth_cap;
    if (f < k) {
        throw NotFound("candidate set has " + std::to_string(f) + " vertices, fewer than k=" + std::to_string(k));
    }
    const InducedSubgraph sub = induced_subgraph(g, F);
    const Graph cover_graph = complement(sub.graph);
    const std::size_t room = f - k;
    const std::size_t cap = std::min(depth_cap, room);
    CoverResult cr;
    try {
        cr = min_vertex_cover_branching(cover_graph, cap);
    } catch (const DepthExceeded&) {
        if (depth_cap < room) throw;
        throw NotFound("no clique of size " + std::to_string(k) + " inside the candidate set");
    }
    rep.cover_size = cr.cover.count();
    rep.branch_nodes = cr.nodes;
    rep.clique = F - sub.lift(cr.cover, g.order());
    if (!is_clique(g, rep.clique)) throw Error("vertex-cover finish produced a non-clique");
    rep.verified = rep.clique.count() >= k;
}

RecoveryReport recover_from_theta(const Graph& g, std::size_t k, const ThetaSolution& sol,
                                  const RecoveryParams& params) {
    RecoveryReport rep;
    rep.algorithm = "theta";
    rep.k = k;
    rep.theta_value = sol.value;
    rep.theta_status = sol.status;
    rep.theta_iterations = sol.iterations;
    const std::size_t n = g.order();
    rep.H = VertexSet(n);
    for (Vertex v = 0; v < n; ++v) {
        if (sol.contributions[v] >= params.h_threshold) rep.H.insert(v);
    }
    rep.F = rep.H;
    const double need = params.f_fraction * static_cast<double>(k);
    for (Vertex v = 0; v < n; ++v) {
        if (static_cast<double>(degree_in(g, v, rep.H)) >= need) rep.F.insert(v);
    }
    const std::size_t cap = params.branch_depth_cap ? params.branch_depth_cap : default_branch_depth_cap(n);
    finish_with_cover(g, rep.F, k, cap, rep);
    return rep;
}

void check_target(const Graph& g, std::size_t k) {
    if (k == 0 || k > g.order()) {
        throw ParameterError("k=" + std::to_string(k) + " must lie in [1, n=" + std::to_string(g.order()) + "]");
    }
}

// Lexicographic enumeration of s-cliques whose prefixes S' keep
// |N*(S')| >= k - |S'|. Each frame carries N* of the current prefix, so
// extending by v is one AND. Shared between workers under a mutex.
class CliqueSubsets {
public:
    CliqueSubsets(const Graph& g, std::size_t s, std::size_t k) : g_(g), s_(s), k_(k) {
        frames_.push_back({VertexSet::full(g.order()), std::nullopt});
    }

    // Next clique with its common neighborhood, or nullopt when exhausted.
    std::optional<std::pair<std::vector<Vertex>, VertexSet>> next() {
        while (!frames_.empty()) {
            Frame& top = frames_.back();
            const std::optional<Vertex> v = top.last ? top.common.next(*top.last) : top.common.first();
            if (!v) {
                frames_.pop_back();
                if (!stack_.empty()) stack_.pop_back();
                continue;
            }
            top.last = v;
            VertexSet common = top.common & g_.neighbors(*v);
            if (common.count() + stack_.size() + 1 < k_) continue;
            if (stack_.size() + 1 == s_) {
                std::vector<Vertex> S = stack_;
                S.push_back(*v);
                return std::make_pair(std::move(S), std::move(common));
            }
            stack_.push_back(*v);
            // Members of common below v were already tried as earlier prefixes.
            frames_.push_back({std::move(common), v});
        }
        return std::nullopt;
    }

private:
    struct Frame {
        VertexSet common;
        std::optional<Vertex> last;
    };
    const Graph& g_;
    std::size_t s_;
    std::size_t k_;
    std::vector<Frame> frames_;
    std::vector<Vertex> stack_;
};

}  // namespace

CoverResult min_vertex_cover_branching(const Graph& g, std::size_t depth_cap) {
    return CoverSearch(g, depth_cap).run();
}

RecoveryReport recover_theta(const Graph& g, std::size_t k, const RecoveryParams& params) {
    params.validate();
    check_target(g, k);
    const auto t0 = Clock::now();
    const ThetaSolution sol = theta_of_complement(g, params.theta_cfg);
    RecoveryReport rep = recover_from_theta(g, k, sol, params);
    rep.theta_runs = 1;
    rep.wall_ms = ms_since(t0);
    return rep;
}

RecoveryReport recover_theta_with(const Graph& g, std::size_t k, const ThetaSolution& sol,
                                  const RecoveryParams& params) {
    params.validate();
    check_target(g, k);
    const auto t0 = Clock::now();
    RecoveryReport rep = recover_from_theta(g, k, sol, params);
    rep.wall_ms = ms_since(t0);
    return rep;
}

RecoveryReport recover_guessing(const Graph& g, std::size_t k, const RecoveryParams& params) {
    params.validate();
    check_target(g, k);
    const auto t0 = Clock::now();
    const double p = edge_density(g);

    RecoveryReport rep;
    rep.algorithm = "guess";
    rep.k = k;
    rep.s_formula = (p > 0.0 && p < 1.0) ? s_guess_formula(p, params.c_cap, params.epsilon) : 0;
    if (params.s_guess) {
        rep.s_used = *params.s_guess;
    } else {
        rep.s_used = std::min(rep.s_formula == 0 ? std::size_t{1} : rep.s_formula, kMaxGuessSize);
        rep.s_capped = rep.s_formula > kMaxGuessSize;
    }
    const std::size_t s = rep.s_used;
    if (s >= k) throw ParameterError("guess size must be smaller than k");

    CliqueSubsets subsets(g, s, k);
    std::mutex mu;
    std::size_t next_index = 0;
    bool stop = false;

    struct Best {
        std::size_t index = 0;
        RecoveryReport inner;
        VertexSet clique;
        bool set = false;
    } best;

    auto worker = [&] {
        for (;;) {
            std::vector<Vertex> S;
            VertexSet common;
            std::size_t index = 0;
            {
                std::lock_guard lock(mu);
                if (stop) return;
                if (params.guess_first_success && best.set) {
                    stop = true;
                    return;
                }
                if (params.guess_candidate_budget && rep.theta_runs >= params.guess_candidate_budget) {
                    rep.budget_exhausted = true;
                    stop = true;
                    return;
                }
                auto item = subsets.next();
                if (!item) {
                    stop = true;
                    return;
                }
                S = std::move(item->first);
                common = std::move(item->second);
                index = next_index++;
                ++rep.candidates_enumerated;
                ++rep.theta_runs;
            }
            const InducedSubgraph sub = induced_subgraph(g, common);
            RecoveryReport inner;
            try {
                inner = recover_theta(sub.graph, k - s, params);
            } catch (const DepthExceeded&) {
                continue;
            } catch (const NotFound&) {
                continue;
            }
            if (!inner.verified) continue;
            VertexSet clique = sub.lift(inner.clique, g.order());
            for (Vertex v : S) clique.insert(v);
            if (!is_clique(g, clique)) continue;
            std::lock_guard lock(mu);
            const std::size_t size = clique.count();
            bool better = !best.set || index < best.index;
            if (!params.guess_first_success && best.set) {
                better = size > best.clique.count() || (size == best.clique.count() && index < best.index);
            }
            if (better) {
                inner.H = sub.lift(inner.H, g.order());
                inner.F = sub.lift(inner.F, g.order());
                best = {index, std::move(inner), std::move(clique), true};
            }
        }
    };

    const std::size_t jobs = std::max<std::size_t>(1, params.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    rep.wall_ms = ms_since(t0);
    if (!best.set) {
        throw NotFound("no guessed subset led to a clique of size " + std::to_string(k) + " (" +
                       std::to_string(rep.theta_runs) + " candidates tried)");
    }
    rep.clique = std::move(best.clique);
    rep.H = std::move(best.inner.H);
    rep.F = std::move(best.inner.F);
    rep.theta_value = best.inner.theta_value;
    rep.theta_status = best.inner.theta_status;
    rep.theta_iterations = best.inner.theta_iterations;
    rep.cover_size = best.inner.cover_size;
    rep.branch_nodes = best.inner.branch_nodes;
    rep.depth_cap = best.inner.depth_cap;
    rep.verified = rep.clique.count() >= k;
    return rep;
}

RecoveryReport recover_high_degree(const Graph& g, std::size_t k, const RecoveryParams& params) {
    params.validate();
    check_target(g, k);
    const auto t0 = Clock::now();
    const std::size_t n = g.order();
    RecoveryReport rep;
    rep.algorithm = "high-degree";
    rep.k = k;

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    const std::size_t half = (k + 1) / 2;
    rep.H = VertexSet(n, std::span<const Vertex>(order.data(), half));

    rep.F = rep.H;
    const double need = params.high_degree_fraction * static_cast<double>(half);
    for (Vertex v = 0; v < n; ++v) {
        if (static_cast<double>(degree_in(g, v, rep.H)) >= need) rep.F.insert(v);
    }
    const std::size_t cap = params.branch_depth_cap ? params.branch_depth_cap : default_branch_depth_cap(n);
    finish_with_cover(g, rep.F, k, cap, rep);
    rep.wall_ms = ms_since(t0);
    return rep;
}

}  // namespace pclique
