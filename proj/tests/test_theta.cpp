#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <numeric>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "pclique/errors.hpp"
#include "pclique/theta.hpp"
#include "support.hpp"

using namespace pclique;

namespace {

double odd_cycle_formula(double n) {
    const double c = std::cos(std::numbers::pi / n);
    return n * c / (1.0 + c);
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("theta of the edgeless graph on 7 vertices") {
    const auto t0 = std::chrono::steady_clock::now();
    const ThetaSolution sol = theta(Graph(7));
    CHECK(elapsed_s(t0) < 1.0);
    CHECK(sol.status == SolveStatus::Converged);
    CHECK(std::abs(sol.value - 7.0) <= 1e-4);
    for (double c : sol.contributions) CHECK(c == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("theta of K5") {
    const auto t0 = std::chrono::steady_clock::now();
    const ThetaSolution sol = theta(named::complete(5));
    CHECK(elapsed_s(t0) < 1.0);
    CHECK(std::abs(sol.value - 1.0) <= 1e-4);
}

TEST_CASE("theta of C5 against the circulant dual") {
    const double oracle = ref::cycle_theta_by_sweep(5);
    CHECK(std::abs(oracle - std::sqrt(5.0)) < 1e-6);
    const auto t0 = std::chrono::steady_clock::now();
    const ThetaSolution sol = theta(named::cycle(5));
    CHECK(elapsed_s(t0) < 1.0);
    CHECK(std::abs(sol.value - oracle) <= 1e-3);
}

TEST_CASE("theta of longer odd cycles") {
    for (std::size_t n : {7u, 9u, 31u, 61u}) {
        const ThetaSolution sol = theta(named::cycle(n));
        const double sweep = ref::cycle_theta_by_sweep(n);
        CHECK(std::abs(sweep - odd_cycle_formula(static_cast<double>(n))) < 1e-6);
        CHECK(std::abs(sol.value - sweep) <= 1e-3);
    }
    // Even cycles are perfect: theta = n/2.
    CHECK(std::abs(theta(named::cycle(8)).value - 4.0) <= 1e-3);
}

TEST_CASE("complement of K_n has theta n") {
    const PlantedInstance inst = generate({.n = 12, .p = 0.5, .k = 12, .seed = 1}, Strategy::Random);
    CHECK(inst.planted == named::complete(12));
    CHECK(std::abs(theta_of_complement(inst).value - 12.0) <= 1e-3);
}

TEST_CASE("sandwich against brute-force independence and clique numbers") {
    std::mt19937_64 gen(404);
    SolverConfig tight;
    tight.eps = 1e-8;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 16);
        const ref::SmallGraph s = ref::random_small(n, 0.5, gen);
        const Graph g = ref::to_graph(s);
        const ThetaSolution sol = theta(g, tight);
        CHECK(sol.value >= ref::independence_number(s) - 1e-3);
        CHECK(sol.value >= 1.0 - 1e-6);
        CHECK(sol.value <= static_cast<double>(n) + 1e-3);
        const ThetaSolution comp = theta_of_complement(g, tight);
        CHECK(comp.value >= ref::clique_number(s) - 1e-3);
        // Lovasz: theta(g) * theta(complement g) >= n.
        CHECK(sol.value * comp.value >= static_cast<double>(n) - 1e-2);
    }
}

TEST_CASE("contributions add up to the value") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = ref::to_graph(ref::random_small(20, 0.4, gen));
        const ThetaSolution sol = theta(g);
        CHECK(std::abs(sol.contribution_sum() - sol.value) <= 1e-2 * sol.value);
        for (double c : sol.contributions) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
        }
    }
}

TEST_CASE("gram contributions match an explicit factorization") {
    std::mt19937_64 gen(8);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 6, r = 3;
        Eigen::MatrixXd X(n, r);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < r; ++j) X(i, j) = normal(gen);
        const Eigen::MatrixXd B = X * X.transpose();
        const Eigen::VectorXd sum = X.colwise().sum().transpose();
        const Eigen::VectorXd h = sum / sum.norm();
        const std::vector<double> c = gram_contributions(B);
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::VectorXd bi = X.row(i).transpose();
            const double expect = std::pow(h.dot(bi), 2) / bi.squaredNorm();
            CHECK(c[static_cast<std::size_t>(i)] == doctest::Approx(expect).epsilon(1e-9));
        }
    }
}

TEST_CASE("value is invariant under relabeling") {
    std::mt19937_64 gen(21);
    SolverConfig cfg;
    cfg.eps = 1e-8;
    for (int trial = 0; trial < 5; ++trial) {
        const Graph g = ref::to_graph(ref::random_small(24, 0.5, gen));
        std::vector<Vertex> perm(24);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), gen);
        const double a = theta(g, cfg).value;
        const double b = theta(relabel(g, perm), cfg).value;
        CHECK(std::abs(a - b) <= 1e-6);
    }
}

TEST_CASE("planted instances: value at least k and the deletion inequality") {
    std::mt19937_64 gen(31);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const PlantedInstance inst = generate({.n = 80, .p = 0.5, .k = 20, .seed = seed}, Strategy::Random);
        const ThetaSolution sol = theta_of_complement(inst);
        CHECK(sol.value >= 20.0 - 1e-3);
        const Graph cg = complement(inst.planted);
        for (int rep = 0; rep < 3; ++rep) {
            const std::size_t t = 1 + gen() % 10;
            std::vector<Vertex> all(80);
            std::iota(all.begin(), all.end(), Vertex{0});
            std::shuffle(all.begin(), all.end(), gen);
            VertexSet T(80);
            double removed = 0.0;
            for (std::size_t i = 0; i < t; ++i) {
                T.insert(all[i]);
                removed += sol.contributions[all[i]];
            }
            const double rest = theta(induced_subgraph(cg, ~T).graph).value;
            CHECK(rest >= sol.value - removed - 1e-2);
        }
    }
}

TEST_CASE("planted instance at n=400 stays in the sandwich") {
    const PlantedInstance inst = generate({.n = 400, .p = 0.5, .k = 200, .seed = 1}, Strategy::Random);
    const auto t0 = std::chrono::steady_clock::now();
    const ThetaSolution sol = theta_of_complement(inst);
    CHECK(elapsed_s(t0) < 120.0);
    CHECK(sol.value >= 200.0 - 0.01);
    CHECK(sol.value <= 200.0 + 96.0 * std::log(400.0));
}

TEST_CASE("solver configuration and outputs") {
    SolverConfig bad;
    bad.eps = 0.0;
    CHECK_THROWS_AS(theta(Graph(3), bad), ParameterError);
    bad = {};
    bad.relaxation = 2.5;
    CHECK_THROWS_AS(theta(Graph(3), bad), ParameterError);
    CHECK(theta(Graph(0)).status == SolveStatus::InfeasibleInput);

    SolverConfig few;
    few.max_iters = 1;
    few.eps = 1e-12;
    const ThetaSolution partial = theta(named::cycle(7), few);
    CHECK(partial.status == SolveStatus::MaxIters);

    std::stringstream trace;
    SolverConfig traced;
    traced.trace_csv = &trace;
    const ThetaSolution sol = theta(named::cycle(5), traced);
    std::string header;
    std::getline(trace, header);
    CHECK(header == "iter,primal_residual,dual_residual,value");
    std::size_t rows = 0;
    for (std::string line; std::getline(trace, line);) ++rows;
    CHECK(rows == sol.iterations);

    std::stringstream bin;
    write_matrix_binary(bin, sol.B);
    CHECK(bin.str().size() == 25 * sizeof(double));
    double first = 0.0;
    std::memcpy(&first, bin.str().data(), sizeof(double));
    CHECK(first == sol.B(0, 0));
    CHECK(std::abs(sol.B.trace() - 1.0) < 1e-4);
    CHECK(std::abs(sol.B(0, 1)) < 1e-4);
}
