#include "pclique/hardness.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "pclique/enumeration.hpp"
#include "pclique/errors.hpp"
#include "pclique/oracle.hpp"

namespace pclique {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ParameterError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

ReductionOutput reduce_3regular(const Graph& h, std::size_t t) {
    if (t == 0) throw ParameterError("subdivision parameter t must be at least 1");
    const std::size_t m = h.order();
    for (Vertex v = 0; v < m; ++v) {
        if (h.degree(v) != 3) throw ParameterError("reduction input must be 3-regular");
    }
    const std::vector<Edge> edges = h.edges();
    const std::size_t inner = 2 * t;
    GraphBuilder b(m + inner * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto first = static_cast<Vertex>(m + inner * e);
        Vertex prev = edges[e].first;
        for (std::size_t j = 0; j < inner; ++j) {
            const auto cur = static_cast<Vertex>(first + j);
            b.add_edge(prev, cur);
            prev = cur;
        }
        b.add_edge(prev, edges[e].second);
    }
    ReductionOutput out;
    out.gadget = std::move(b).build();
    out.t = t;
    out.alpha_avg = Rational::make(static_cast<std::int64_t>(2 * out.gadget.edge_count()),
                                   static_cast<std::int64_t>(out.gadget.order()));
    out.is_shift = edges.size() * t;
    return out;
}

namespace {

bool balanced_by_subsets(const Graph& h) {
    const std::size_t nv = h.order();
    std::vector<std::uint32_t> adj(nv, 0);
    for (Vertex v = 0; v < nv; ++v) h.neighbors(v).for_each([&](Vertex u) { adj[v] |= std::uint32_t{1} << u; });
    const auto total_e = static_cast<std::int64_t>(h.edge_count());
    const auto total_v = static_cast<std::int64_t>(nv);
    std::uint32_t S = 0;
    std::int64_t e = 0;
    std::int64_t size = 0;
    const std::uint64_t limit = std::uint64_t{1} << nv;
    for (std::uint64_t i = 1; i < limit; ++i) {
        const int bit = std::countr_zero(i);
        const std::uint32_t mask = std::uint32_t{1} << bit;
        if (S & mask) {
            S &= ~mask;
            e -= std::popcount(adj[static_cast<std::size_t>(bit)] & S);
            --size;
        } else {
            e += std::popcount(adj[static_cast<std::size_t>(bit)] & S);
            S |= mask;
            ++size;
        }
        if (e * total_v > total_e * size) return false;
    }
    return true;
}

// Maximum-density subgraph as a closure problem: choosing an edge earns |V|
// and forces both endpoints, each costing |E|. Some subset beats the whole
// graph's density iff the best closure is positive.
bool balanced_by_flow(const Graph& h) {
    using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
    using FlowGraph = boost::adjacency_list<
        boost::vecS, boost::vecS, boost::directedS, boost::no_property,
        boost::property<boost::edge_capacity_t, std::int64_t,
                        boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                        boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

    const std::vector<Edge> edges = h.edges();
    const std::size_t nv = h.order();
    const std::size_t ne = edges.size();
    const auto V = static_cast<std::int64_t>(nv);
    const auto E = static_cast<std::int64_t>(ne);
    const std::int64_t inf = V * E + 1;

    FlowGraph fg(ne + nv + 2);
    const std::size_t source = ne + nv;
    const std::size_t sink = source + 1;
    auto cap = boost::get(boost::edge_capacity, fg);
    auto rev = boost::get(boost::edge_reverse, fg);
    auto add = [&](std::size_t a, std::size_t b, std::int64_t c) {
        const auto e1 = boost::add_edge(a, b, fg).first;
        const auto e2 = boost::add_edge(b, a, fg).first;
        cap[e1] = c;
        cap[e2] = 0;
        rev[e1] = e2;
        rev[e2] = e1;
    };
    for (std::size_t i = 0; i < ne; ++i) {
        add(source, i, V);
        add(i, ne + edges[i].first, inf);
        add(i, ne + edges[i].second, inf);
    }
    for (std::size_t v = 0; v < nv; ++v) add(ne + v, sink, E);
    const std::int64_t flow = boost::push_relabel_max_flow(fg, source, sink);
    return E * V - flow <= 0;
}

}  // namespace

bool is_balanced(const Graph& h) {
    if (h.order() == 0 || h.edge_count() == 0) return true;
    if (h.order() <= kBalancedBruteForceLimit) return balanced_by_subsets(h);
    return balanced_by_flow(h);
}

PlantedHInstance plant_H(std::size_t n, double p, const Graph& h, std::uint64_t seed) {
    const std::size_t m = h.order();
    if (m == 0 || n % m != 0) throw ParameterError("|V(h)| must be positive and divide n");
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie in (0, 1)");
    PlantedHInstance inst;
    inst.n = n;
    inst.p = p;
    inst.seed = seed;
    inst.H = h;
    inst.partition = {n, m};
    const std::size_t part = n / m;
    Rng rng = Rng(seed).substream(Stream::Partition);
    GraphBuilder b(sample_gnp(n, p, seed));
    inst.M.resize(m);
    for (std::size_t i = 0; i < m; ++i) inst.M[i] = static_cast<Vertex>(i * part + rng.below(part));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
                b.add_edge(inst.M[i], inst.M[j]);
            } else {
                b.remove_edge(inst.M[i], inst.M[j]);
            }
        }
    }
    inst.graph = std::move(b).build();
    inst.M_set = VertexSet(n, inst.M);
    inst.I_prime = VertexSet(n);
    return inst;
}

PlantedHInstance plant_H_with_IS(std::size_t n, double p, const Graph& h, std::size_t k, std::size_t k_prime,
                                 std::uint64_t seed) {
    if (k_prime > k || k + h.order() > n) throw ParameterError("need k' <= k <= n - m");
    PlantedHInstance inst = plant_H(n, p, h, seed);
    inst.k = k;
    inst.k_prime = k_prime;
    const std::size_t need = k - k_prime;
    if (need == 0) return inst;
    Rng rng = Rng(seed).substream(Stream::IndependentSet);
    const VertexSet pool = common_non_neighborhood(inst.graph, inst.M_set);
    if (pool.count() >= need) {
        inst.I_prime = rng.subset_of(pool, need);
    } else {
        inst.failed_default = true;
        inst.I_prime = rng.subset(n, k);
    }
    inst.graph = plant_independent_at(inst.graph, inst.I_prime);
    return inst;
}

namespace {

class CopyCounter {
public:
    CopyCounter(const Graph& g, const Graph& h, const Partition& part) : g_(g), h_(h), part_(part) {}

    std::uint64_t run() {
        chosen_.assign(part_.m, 0);
        return extend(0);
    }

private:
    std::uint64_t extend(std::size_t i) {
        if (i == part_.m) return 1;
        std::uint64_t total = 0;
        const std::size_t size = part_.part_size();
        for (std::size_t off = 0; off < size; ++off) {
            const auto v = static_cast<Vertex>(i * size + off);
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                ok = g_.adjacent(chosen_[j], v) == h_.adjacent(static_cast<Vertex>(j), static_cast<Vertex>(i));
            }
            if (!ok) continue;
            chosen_[i] = v;
            total += extend(i + 1);
        }
        return total;
    }

    const Graph& g_;
    const Graph& h_;
    const Partition& part_;
    std::vector<Vertex> chosen_;
};

}  // namespace

std::uint64_t count_XH(const Graph& g, const Graph& h, const Partition& partition) {
    const std::size_t m = h.order();
    if (partition.m != m || m == 0) throw ParameterError("partition must have one part per vertex of h");
    if (partition.n != g.order() || g.order() % m != 0) throw ParameterError("m must divide n");
    if (m > kMaxCountParts || partition.part_size() > kMaxCountPartSize) {
        throw ParameterError("copy counting needs m <= 8 and n/m <= 64");
    }
    return CopyCounter(g, h, partition).run();
}

double expected_XH(std::size_t n, double p, const Graph& h) {
    const auto m = static_cast<double>(h.order());
    const auto e = static_cast<double>(h.edge_count());
    const double pairs = m * (m - 1.0) / 2.0;
    return std::pow(static_cast<double>(n) / m, m) * std::pow(p, e) * std::pow(1.0 - p, pairs - e);
}

double likelihood_ratio(const Graph& g, const Graph& h, std::size_t n, double p) {
    const double count = static_cast<double>(count_XH(g, h, Partition{n, h.order()}));
    return count / expected_XH(n, p, h);
}

std::size_t algrand_iterations(std::size_t n, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) throw ParameterError("gamma must lie in (0, 1]");
    if (n < 2) return 1;
    return static_cast<std::size_t>(std::ceil(10.0 * std::log(static_cast<double>(n)) / gamma));
}

AlgrandResult algrand(const Graph& h, std::size_t k_prime, std::size_t n, double p, std::size_t k, double gamma,
                      const IndependentSetFinder& finder, std::uint64_t seed) {
    AlgrandResult res;
    res.budget = algrand_iterations(n, gamma);
    for (std::size_t i = 0; i < res.budget; ++i) {
        AlgrandIteration it;
        it.index = i;
        it.seed = derive_seed(seed, i);
        const PlantedHInstance inst = plant_H_with_IS(n, p, h, k, k_prime, it.seed);
        it.failed_default = inst.failed_default;
        const std::optional<VertexSet> found = finder(inst.graph, k);
        if (found) {
            it.returned = true;
            it.independent = is_independent(inst.graph, *found);
            it.size = found->count();
            it.in_copy = found->intersection_count(inst.M_set);
            it.success = it.independent && it.size >= k && it.in_copy >= k_prime;
        }
        VertexSet answer(h.order());
        if (it.success) {
            for (std::size_t j = 0; j < inst.M.size(); ++j) {
                if (found->test(inst.M[j])) answer.insert(static_cast<Vertex>(j));
            }
            // The fallback planting may delete edges inside M, so the copy is
            // checked against h itself.
            it.sound = is_independent(h, answer) && answer.count() >= k_prime;
            it.success = it.sound;
        }
        res.transcript.push_back(it);
        if (!it.success) continue;
        res.answer = std::move(answer);
        break;
    }
    return res;
}

IndependentSetFinder oracle_finder(std::uint64_t seed) {
    return [seed](const Graph& g, std::size_t k) -> std::optional<VertexSet> {
        if (g.order() > kMaxCountOrder) {
            VertexSet s = max_is_exact(g);
            if (s.count() >= k) return s;
            return std::nullopt;
        }
        std::vector<VertexSet> best;
        std::size_t best_size = 0;
        const EnumReport rep = list_maximal_cliques(complement(g), 60'000, [&](const VertexSet& s) {
            const std::size_t size = s.count();
            if (size > best_size) {
                best_size = size;
                best.clear();
            }
            if (size == best_size) best.push_back(s);
        });
        if (rep.truncated) throw BudgetExceeded("independent-set enumeration exceeded its budget");
        if (best_size < k) return std::nullopt;
        // The choice is keyed by the graph itself, so the finder stays a pure
        // function of its input.
        std::uint64_t key = mix64(seed ^ g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            for (VertexSet::Word w : g.neighbors(v).words()) key = mix64(key ^ w);
        }
        Rng rng(key);
        return best[rng.below(best.size())];
    };
}

bool check_unique_structure(const PlantedHInstance& inst) {
    if (inst.graph.order() > kMaxCountOrder) throw ParameterError("structure check needs n <= 30");
    std::size_t best = 0;
    bool all_ok = true;
    const EnumReport rep = list_maximal_cliques(complement(inst.graph), 60'000, [&](const VertexSet& s) {
        const std::size_t size = s.count();
        const bool ok = s.intersection_count(inst.M_set) >= inst.k_prime;
        if (size > best) {
            best = size;
            all_ok = ok;
        } else if (size == best) {
            all_ok = all_ok && ok;
        }
    });
    if (rep.truncated) throw BudgetExceeded("independent-set enumeration exceeded its budget");
    return all_ok;
}

PlannerOutput plan_hardness(const PlannerInput& in) {
    if (!(in.delta > 0.0 && in.delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
    if (!(in.epsilon > 0.0 && in.epsilon < 1.0 / 7.0)) throw ParameterError("epsilon must lie in (0, 1/7)");
    if (!(in.rho_fraction > 0.0 && in.rho_fraction < 1.0)) throw ParameterError("rho fraction must lie in (0, 1)");
    if (in.n < 2) throw ParameterError("n must be at least 2");
    PlannerOutput out;
    const double n = static_cast<double>(in.n);
    const double d = in.delta;
    out.p = std::pow(n, d - 1.0);
    out.alpha_max = std::min(2.0 / (1.0 - d), 3.0);
    out.alpha = in.alpha.value_or((out.alpha_min + out.alpha_max) / 2.0);
    std::ostringstream verdict;
    const bool alpha_ok = out.alpha > out.alpha_min && out.alpha < out.alpha_max;
    out.rho_max = std::min((1.0 - d) / 2.0, (2.0 - out.alpha * (1.0 - d)) / 4.0);
    out.rho = in.rho_fraction * out.rho_max;
    out.m = std::pow(n, out.rho);
    out.k_min = in.k_constant * std::pow(n, 1.0 - d) * std::log(n);
    out.k_max = 2.0 * n / 3.0;
    const double eps = in.epsilon;
    out.copy_density_ok = eps >= out.m * out.m * out.p;
    const double ratio = std::pow(out.m, 4) / (n * n * std::pow(out.p, out.alpha));
    out.copy_variance_ok = eps * eps >= 2.0 * ratio;
    out.copy_variance_ok_without_2 = eps * eps >= ratio;
    const double edges = out.alpha * out.m / 2.0;
    out.log_expected_copies = out.m * std::log(n / out.m) + edges * std::log(out.p) +
                              (out.m * (out.m - 1.0) / 2.0 - edges) * std::log1p(-out.p);
    const bool k_range_ok = out.k_min <= out.k_max;
    out.feasible = alpha_ok && out.rho_max > 0.0 && out.m >= 1.0 && out.copy_density_ok && out.copy_variance_ok &&
                   k_range_ok;
    if (out.feasible) {
        verdict << "feasible at n=" << in.n;
    } else {
        verdict << "infeasible at n=" << in.n << ":";
        if (!alpha_ok) verdict << " alpha outside (2, " << out.alpha_max << ")";
        if (!(out.rho_max > 0.0)) verdict << " no admissible rho";
        if (!out.copy_density_ok) verdict << " epsilon < m^2 p";
        if (!out.copy_variance_ok) verdict << " epsilon^2 < 2 m^4 / (n^2 p^alpha)";
        if (!k_range_ok) verdict << " empty k range";
    }
    out.verdict = verdict.str();
    return out;
}

}  // namespace pclique
