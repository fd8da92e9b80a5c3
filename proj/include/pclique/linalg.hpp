#pragma once

#include <Eigen/Dense>

namespace pclique::linalg {

struct SymmetricEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // column j pairs with values[j]
};

// Full eigendecomposition of a symmetric matrix. Only the lower triangle is
// read. Throws NumericalError on failure.
SymmetricEigen eigh(const Eigen::MatrixXd& a);

// Eigenvalues only, ascending.
Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& a);

// Largest and second-largest eigenvalues (second is -inf for 1x1).
struct TopTwo {
    double first;
    double second;
};
TopTwo top_two_eigenvalues(const Eigen::MatrixXd& a);

}  // namespace pclique::linalg
