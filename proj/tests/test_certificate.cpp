#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "pclique/certificate.hpp"
#include "pclique/errors.hpp"
#include "pclique/theta.hpp"

using namespace pclique;

namespace {

double top_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

PlantedInstance desk(std::uint64_t seed, Strategy s = Strategy::Random) {
    return generate({.n = 400, .p = 0.5, .k = 200, .seed = seed}, s);
}

}  // namespace

TEST_CASE("extend_clique at n=400") {
    int equal = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const PlantedInstance inst = desk(seed);
        const VertexSet Q = extend_clique(inst);
        CHECK(inst.K.is_subset_of(Q));
        CHECK(static_cast<double>(Q.count()) <= 200.0 + 96.0 * std::log(400.0));
        if (Q == inst.K) ++equal;
    }
    CHECK(equal >= 19);
}

TEST_CASE("extend_clique keeps T for the common-neighborhood adversary") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const PlantedInstance inst = generate({.n = 400, .p = 0.5, .k = 10, .seed = seed}, Strategy::CommonNeighborhood, 5);
        REQUIRE(inst.adversary.T.has_value());
        CHECK(inst.adversary.T->is_subset_of(extend_clique(inst)));
    }
}

TEST_CASE("certificate structure") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const PlantedInstance inst = generate({.n = 150, .p = 0.5, .k = 60, .seed = seed}, Strategy::Random);
        const VertexSet Q = extend_clique(inst);
        const auto kq = static_cast<double>(Q.count());
        const Eigen::MatrixXd M = build_certificate(inst, Q);
        const Graph& g = inst.planted;

        for (Vertex i = 0; i < g.order(); ++i) {
            CHECK(M(i, i) == (Q.test(i) ? 1.0 : 0.0));
            for (Vertex j = 0; j < g.order(); ++j) {
                if (i != j && (g.adjacent(i, j) || (Q.test(i) && Q.test(j)))) CHECK(M(i, j) == 1.0);
                CHECK(M(i, j) == M(j, i));
            }
            if (!Q.test(i)) {
                double row = 0.0;
                Q.for_each([&](Vertex j) { row += M(i, j); });
                CHECK(std::abs(row) <= 1e-10);
            }
        }

        Eigen::VectorXd ind = Eigen::VectorXd::Zero(M.rows());
        Q.for_each([&](Vertex v) { ind[v] = 1.0; });
        CHECK((M * ind - kq * ind).cwiseAbs().maxCoeff() <= 1e-8 * kq);

        const CertificateReport rep = verify_certificate(inst, Q, M);
        const CertificateParts parts = certificate_parts(inst, Q);
        CHECK(rep.reconstruction_error <= 1e-10);
        CHECK(rep.eigenvector_residual <= 1e-8 * kq);
        CHECK(rep.trace_W2 == doctest::Approx(parts.W.squaredNorm()).epsilon(1e-9));
        CHECK(rep.lambda1_W <= std::sqrt(rep.trace_W2) + 1e-9);
        CHECK(rep.lambda1 == doctest::Approx(top_eigenvalue(M)).epsilon(1e-9));
        CHECK(rep.weyl_bound >= rep.lambda2 - 1e-8);

        // With a unit diagonal M is feasible for the dual of theta on the
        // complement of g with Q completed, which bounds theta(complement g).
        SolverConfig tight;
        tight.eps = 1e-8;
        const double th = theta_of_complement(inst, tight).value;
        CHECK(th <= rep.lambda1_unit_diagonal + 1e-3);
        CHECK(th >= kq - 1e-3);
    }
}

TEST_CASE("certificate is valid at n=400") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const PlantedInstance inst = desk(seed);
        const VertexSet Q = extend_clique(inst);
        const CertificateReport rep = verify_certificate(inst, Q, build_certificate(inst, Q));
        const auto kq = static_cast<double>(rep.k_prime);
        CHECK(rep.valid);
        CHECK(std::abs(rep.lambda1 - kq) <= 1e-6 * kq);
        CHECK(rep.lambda2 < kq);
        CHECK(rep.lambda2 <= 4.0 / 0.5 * std::sqrt(400.0 * 0.5) + 0.2 * kq);
        CHECK(rep.lambda2_reference_bound == doctest::Approx(8.0 * std::sqrt(200.0) + 0.2 * kq));
    }
}

TEST_CASE("a vertex seeing all of Q is rejected") {
    const PlantedInstance inst = generate({.n = 40, .p = 0.5, .k = 10, .seed = 2}, Strategy::Random);
    VertexSet Q = inst.K;
    Q.erase(*Q.first());
    CHECK_THROWS_AS(build_certificate(inst, Q), ParameterError);
}

TEST_CASE("empirical varbound") {
    const PlantedInstance none = generate({.n = 50, .p = 0.5, .k = 0, .seed = 1}, Strategy::Random);
    CHECK(empirical_varbound(none).lhs == 0.0);

    int ok = 0;
    double sum = 0.0;
    double expected = 0.0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const VarBoundResult r = empirical_varbound(desk(seed));
        if (seed <= 20 && r.ok) ++ok;
        sum += r.lhs;
        expected = r.expected;
    }
    CHECK(expected == doctest::Approx(200.0 * 200.0 * 0.25));
    CHECK(ok >= 19);
    CHECK(std::abs(sum / 200.0 - expected) <= 0.05 * expected);
}

TEST_CASE("binomial fourth moment of degrees into K") {
    const double k = 200.0, p = 0.5;
    double total = 0.0;
    std::size_t samples = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const PlantedInstance inst = desk(seed);
        for (Vertex i = 0; i < 400; ++i) {
            if (inst.K.test(i)) continue;
            total += std::pow(static_cast<double>(degree_in(inst.base, i, inst.K)) - k * p, 4);
            ++samples;
        }
    }
    const double expect = k * p * (1 - p) * (1 + (3 * k - 6) * p * (1 - p));
    CHECK(std::abs(total / static_cast<double>(samples) - expect) <= 0.1 * expect);
}

TEST_CASE("extension bound") {
    CHECK(extension_bound(400, 0.5) == doctest::Approx(96.0 * std::log(400.0)));
    CHECK(extension_bound(400, 0.5, true) == doctest::Approx(96.0 * std::log2(400.0)));
}
