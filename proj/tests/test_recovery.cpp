#include <doctest.h>

#include <cmath>
#include <random>

#include "pclique/certificate.hpp"
#include "pclique/errors.hpp"
#include "pclique/oracle.hpp"
#include "pclique/recovery.hpp"
#include "support.hpp"

using namespace pclique;

namespace {

// 2 ceil(log_{1/p}(2 zeta / eps)) + 2 with zeta = 5 / (1 - c_cap) and p the
// edge density of g, counted pair by pair.
std::size_t expected_s(const Graph& g, double c_cap, double eps) {
    const std::size_t n = g.order();
    double edges = 0.0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges += g.adjacent(u, v) ? 1.0 : 0.0;
    }
    const double p = edges / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
    const double zeta = 5.0 / (1.0 - c_cap);
    return 2 * static_cast<std::size_t>(std::ceil(std::log(2.0 * zeta / eps) / std::log(1.0 / p))) + 2;
}

// K_n minus the perfect matching {2i, 2i+1}.
Graph cocktail_party(std::size_t n) {
    GraphBuilder b(named::complete(n));
    for (Vertex v = 0; v + 1 < n; v += 2) b.remove_edge(v, v + 1);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("min vertex cover examples") {
    CHECK(min_vertex_cover_branching(Graph(6), 3).cover.empty());
    CHECK(min_vertex_cover_branching(named::path(2), 3).cover.count() == 1);
    const CoverResult c5 = min_vertex_cover_branching(named::cycle(5), 10);
    CHECK(c5.cover.count() == 3);
    CHECK(ref::is_cover(ref::from_graph(named::cycle(5)), ref::to_mask(c5.cover)));
    CHECK_THROWS_AS(min_vertex_cover_branching(named::cycle(5), 2), DepthExceeded);
    CHECK(min_vertex_cover_branching(named::star(7), 1).cover == VertexSet(8, {0}));
}

TEST_CASE("property: branching cover equals exhaustive search") {
    std::mt19937_64 gen(1601);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    int mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(gen() % 17);
        const ref::SmallGraph s = ref::random_small(n, density(gen), gen);
        const CoverResult r = min_vertex_cover_branching(ref::to_graph(s), 16);
        const bool ok = ref::is_cover(s, ref::to_mask(r.cover)) &&
                        static_cast<int>(r.cover.count()) == ref::min_vertex_cover(s);
        if (!ok) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("s_guess formula") {
    RecoveryParams params;
    CHECK(params.zeta() == doctest::Approx(50.0));
    CHECK(s_guess_formula(0.5, 0.9, 1.0) == 16);
    CHECK(default_branch_depth_cap(400) == static_cast<std::size_t>(std::ceil(10 * std::log(400.0))) + 20);
}

TEST_CASE("recover_theta on K_n") {
    const RecoveryReport rep = recover_theta(named::complete(30), 30);
    CHECK(rep.verified);
    CHECK(rep.clique == VertexSet::full(30));
    CHECK(rep.cover_size == 0);
    CHECK_THROWS_AS(recover_theta(named::complete(5), 6), ParameterError);
    CHECK_THROWS_AS(recover_theta(named::complete(5), 0), ParameterError);
}

TEST_CASE("recover_theta without a planted clique reports not-found") {
    const Graph g = sample_gnp(100, 0.5, 3);
    CHECK_THROWS_AS(recover_theta(g, 40), NotFound);
}

TEST_CASE("recover_theta matches the ground truth at n=400") {
    int matches = 0;
    int flagged = 0;
    const double a = extension_bound(400, 0.5);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PlantedInstance inst = generate({.n = 400, .p = 0.5, .k = 200, .seed = seed}, Strategy::Random);
        RecoveryReport rep;
        try {
            rep = recover_theta(inst.planted, 200);
        } catch (const Error& e) {
            MESSAGE("seed " << seed << ": " << e.what());
            continue;
        }
        CHECK(rep.verified);
        CHECK(is_clique(inst.planted, rep.clique));
        CHECK(rep.clique.count() >= 200);
        CHECK(rep.clique.is_subset_of(rep.F));
        CHECK(static_cast<double>(rep.F.count()) <= 200.0 + 5.0 * a);
        try {
            const GroundTruth gt = ground_truth_max_clique(inst);
            CHECK(gt.clique.is_subset_of(rep.F));
            if (gt.clique == rep.clique) ++matches;
        } catch (const OracleUnavailable&) {
            ++flagged;
        }
    }
    MESSAGE("matches " << matches << "/" << 20 - flagged);
    CHECK(matches >= 18);
}

TEST_CASE("recover_theta against the low-degree adversary") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const PlantedInstance inst = generate({.n = 400, .p = 0.5, .k = 200, .seed = seed}, Strategy::LowDegree);
        const RecoveryReport rep = recover_theta(inst.planted, 200);
        CHECK(rep.verified);
        CHECK(rep.clique.count() >= 200);
    }
}

TEST_CASE("recover_theta_with reuses a solve") {
    const PlantedInstance inst = generate({.n = 120, .p = 0.5, .k = 50, .seed = 4}, Strategy::Random);
    const ThetaSolution sol = theta_of_complement(inst.planted);
    const RecoveryReport a = recover_theta(inst.planted, 50);
    const RecoveryReport b = recover_theta_with(inst.planted, 50, sol);
    CHECK(a.clique == b.clique);
    CHECK(a.theta_value == b.theta_value);
}

TEST_CASE("vertex-cover finish: depth cap and not-found") {
    const Graph g = cocktail_party(20);
    RecoveryParams params;
    params.branch_depth_cap = 3;
    CHECK_THROWS_AS(recover_high_degree(g, 2, params), DepthExceeded);
    params.branch_depth_cap = 20;
    const RecoveryReport rep = recover_high_degree(g, 2, params);
    CHECK(rep.verified);
    // k=2 puts one vertex in H, so F is that vertex and its 18 neighbours.
    CHECK(rep.F.count() == 19);
    CHECK(rep.clique.count() == 10);
    CHECK(rep.cover_size == 9);
    CHECK_THROWS_AS(recover_high_degree(g, 11, params), NotFound);
}

TEST_CASE("guessing with singletons is at least as good as the plain pipeline") {
    RecoveryParams params;
    params.s_guess = 1;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const PlantedInstance inst = generate({.n = 100, .p = 0.5, .k = 30, .seed = seed}, Strategy::Random);
        const RecoveryReport plain = recover_theta(inst.planted, 30);
        REQUIRE(plain.verified);
        const RecoveryReport guess = recover_guessing(inst.planted, 30, params);
        CHECK(guess.verified);
        CHECK(guess.clique.count() >= plain.clique.count());
        CHECK(guess.s_used == 1);
        CHECK(guess.s_formula == expected_s(inst.planted, 0.9, 1.0));
    }
}

TEST_CASE("guessing is deterministic across job counts") {
    const PlantedInstance inst = generate({.n = 80, .p = 0.5, .k = 20, .seed = 9}, Strategy::Random);
    RecoveryParams params;
    params.s_guess = 2;
    params.jobs = 1;
    const RecoveryReport one = recover_guessing(inst.planted, 20, params);
    params.jobs = 3;
    const RecoveryReport three = recover_guessing(inst.planted, 20, params);
    CHECK(one.clique == three.clique);
    CHECK(one.candidates_enumerated == three.candidates_enumerated);

    params.guess_first_success = true;
    params.jobs = 1;
    const RecoveryReport first1 = recover_guessing(inst.planted, 20, params);
    params.jobs = 3;
    const RecoveryReport first3 = recover_guessing(inst.planted, 20, params);
    CHECK(first1.clique == first3.clique);
    CHECK(first1.verified);
}

TEST_CASE("guessing caps s and checks its inputs") {
    const PlantedInstance inst = generate({.n = 60, .p = 0.5, .k = 20, .seed = 2}, Strategy::Random);
    RecoveryParams params;
    params.guess_candidate_budget = 1;
    params.guess_first_success = true;
    try {
        const RecoveryReport rep = recover_guessing(inst.planted, 20, params);
        CHECK(rep.s_used == kMaxGuessSize);
        CHECK(rep.s_capped);
    } catch (const NotFound&) {
        // One candidate is rarely enough; the budget stops the search.
    }
    params.s_guess = 20;
    CHECK_THROWS_AS(recover_guessing(inst.planted, 20, params), ParameterError);
    params.s_guess = 0;
    CHECK_THROWS_AS(recover_guessing(inst.planted, 20, params), ParameterError);
}

TEST_CASE("high-degree examples") {
    const RecoveryReport all = recover_high_degree(named::complete(40), 40);
    CHECK(all.clique == VertexSet::full(40));
    CHECK(all.H.count() == 20);

    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        const PlantedInstance inst = generate({.n = 2000, .p = 0.5, .k = 900, .seed = seed}, Strategy::Random);
        const RecoveryReport rep = recover_high_degree(inst.planted, 900);
        CHECK(rep.verified);
        CHECK(inst.K.is_subset_of(rep.clique));
    }
}

TEST_CASE("guessing at n=600 with s=6") {
    // k = ceil(1.5 sqrt(n)). Stopping at the first verified candidate keeps
    // the run to thousands of inner solves instead of millions.
    RecoveryParams params;
    params.s_guess = 6;
    params.guess_first_success = true;
    int verified = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const PlantedInstance inst = generate({.n = 600, .p = 0.5, .k = 37, .seed = seed}, Strategy::Random);
        try {
            const RecoveryReport rep = recover_guessing(inst.planted, 37, params);
            CHECK(is_clique(inst.planted, rep.clique));
            CHECK(rep.s_formula == expected_s(inst.planted, 0.9, 1.0));
            CHECK(!rep.s_capped);
            if (rep.verified && rep.clique.count() >= 37) ++verified;
            MESSAGE("seed " << seed << ": " << rep.theta_runs << " inner solves, contains K: "
                            << inst.K.is_subset_of(rep.clique));
        } catch (const NotFound& e) {
            MESSAGE("seed " << seed << ": " << e.what());
        }
    }
    CHECK(verified >= 8);
}
