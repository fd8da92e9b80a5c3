#include <doctest.h>

#include <cmath>
#include <random>

#include "pclique/errors.hpp"
#include "pclique/oracle.hpp"
#include "support.hpp"

using namespace pclique;

namespace {

// Lexicographically smallest sorted vertex list among maximum cliques.
ref::Mask lex_first_max_clique(const ref::SmallGraph& s) {
    const int w = ref::clique_number(s);
    std::vector<ref::Mask> all;
    ref::for_each_subset(s.n, [&](ref::Mask m) {
        if (std::popcount(m) == w && ref::is_clique(s, m)) all.push_back(m);
    });
    auto key = [](ref::Mask m) {
        std::vector<int> v;
        for (ref::Mask r = m; r; r &= r - 1) v.push_back(std::countr_zero(r));
        return v;
    };
    ref::Mask best = all.front();
    for (ref::Mask m : all) {
        if (key(m) < key(best)) best = m;
    }
    return best;
}

}  // namespace

TEST_CASE("max clique examples") {
    CHECK(max_clique_exact(named::complete(9)) == VertexSet::full(9));
    CHECK(max_clique_exact(named::cycle(5)) == VertexSet(5, {0, 1}));
    CHECK(max_clique_exact(Graph(4)) == VertexSet(4, {0}));
    CHECK(max_is_exact(Graph(6)) == VertexSet::full(6));
    CHECK(max_is_exact(named::complete(5)).count() == 1);
    CHECK(max_is_exact(named::cycle(5)).count() == 2);
}

TEST_CASE("property: exact max clique equals subset enumeration") {
    std::mt19937_64 gen(1401);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    int mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 14);
        const ref::SmallGraph s = ref::random_small(n, density(gen), gen);
        const VertexSet got = max_clique_exact(ref::to_graph(s));
        if (ref::to_mask(got) != lex_first_max_clique(s)) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("node budget surfaces as oracle-unavailable") {
    const Graph g = sample_gnp(60, 0.5, 1);
    CHECK_THROWS_AS(clique_number_within(g, VertexSet::full(60), 10), OracleUnavailable);
}

TEST_CASE("clique counting examples") {
    CHECK(count_all_cliques(Graph(5)) == 5);
    CHECK(count_all_cliques(named::complete(3)) == 7);
    const std::vector<std::uint64_t> sizes = clique_size_counts(named::complete(4));
    CHECK(sizes == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
    CHECK_THROWS_AS(count_all_cliques(Graph(31)), ParameterError);

    std::mt19937_64 gen(30);
    for (int trial = 0; trial < 50; ++trial) {
        const ref::SmallGraph s = ref::random_small(1 + static_cast<int>(gen() % 18), 0.5, gen);
        CHECK(count_all_cliques(ref::to_graph(s)) == ref::clique_count(s));
    }
}

TEST_CASE("triangle count matches its expectation") {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        total += static_cast<double>(clique_size_counts(sample_gnp(20, 0.3, seed))[3]);
    }
    const double expect = 1140.0 * 0.027;
    CHECK(std::abs(total / 500.0 - expect) <= 0.1 * expect);
}

TEST_CASE("ground truth at n=400") {
    const std::size_t log_slack = static_cast<std::size_t>(std::ceil(2.0 * std::log2(400.0)));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const PlantedInstance inst = generate({.n = 400, .p = 0.5, .k = 200, .seed = seed}, Strategy::Random);
        const GroundTruth gt = ground_truth_max_clique(inst);
        CHECK(gt.in_regime);
        CHECK(is_clique(inst.planted, gt.clique));
        CHECK(gt.clique.count() >= 200);
        CHECK(inst.K.is_subset_of(gt.clique));
        CHECK(gt.clique.intersection_count(inst.K) + log_slack >= 200);
        CHECK(inst.K.is_subset_of(gt.candidates));
    }
}

TEST_CASE("ground truth equals brute force on small instances") {
    std::mt19937_64 gen(2);
    int compared = 0;
    for (std::uint64_t seed = 1; compared < 30 && seed < 200; ++seed) {
        const std::size_t k = 6 + gen() % 6;
        const PlantedInstance inst = generate({.n = 20, .p = 0.5, .k = k, .seed = seed}, Strategy::Random);
        GroundTruth gt;
        try {
            gt = ground_truth_max_clique(inst);
        } catch (const OracleUnavailable&) {
            continue;
        }
        ++compared;
        // Restricted to P*, so the answer is the maximum clique inside it.
        const ref::SmallGraph s = ref::from_graph(induced_subgraph(inst.planted, gt.candidates).graph);
        CHECK(static_cast<int>(gt.clique.count()) == ref::clique_number(s));
        CHECK(is_clique(inst.planted, gt.clique));
    }
    CHECK(compared == 30);
}
