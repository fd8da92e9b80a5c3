#include "pclique/linalg.hpp"

#include <limits>

#include <Eigen/Eigenvalues>

#include "pclique/errors.hpp"

namespace pclique::linalg {

SymmetricEigen eigh(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw NumericalError("eigh: matrix is not square");
    if (a.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw NumericalError("eigh: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw NumericalError("eigvalsh: matrix is not square");
    if (a.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("eigvalsh: eigensolver did not converge");
    return es.eigenvalues();
}

TopTwo top_two_eigenvalues(const Eigen::MatrixXd& a) {
    Eigen::VectorXd w = eigvalsh(a);
    const auto n = w.size();
    if (n == 0) throw NumericalError("top_two_eigenvalues: empty matrix");
    return {w[n - 1], n > 1 ? w[n - 2] : -std::numeric_limits<double>::infinity()};
}

}  // namespace pclique::linalg
