#pragma once

#include <Eigen/Dense>
#include <vector>

#include "polyvar/poly.hpp"

namespace polyvar {

/// Row-stochastic (k-1) x k matrix transporting the distinct zeros to the
/// critical points that are not zeros: w = G z.
struct GLMatrix {
    Eigen::MatrixXd entries;            // (k-1) x k
    std::vector<cplx> zero_locations;   // k distinct zeros
    std::vector<int> multiplicities;    // sum = n
    std::vector<cplx> crit_locations;   // k-1 critical points
};

/// GLMatrix rows plus the final row m_j / n.
struct AugmentedGLMatrix {
    Eigen::MatrixXd entries;  // k x k
};

struct StochasticityReport {
    std::vector<double> row_sums;
    std::vector<double> col_sums;
    std::vector<double> col_maxima;
    bool is_row = false;
    bool is_doubly = false;
    double tol = 1e-8;
};

GLMatrix gauss_lucas_matrix(const Polynomial& f);
AugmentedGLMatrix augmented_matrix(const Polynomial& f);
GLMatrix gauss_lucas_from_roots(const RootMultiset& zeros,
                                const RootMultiset& crits);

StochasticityReport stochasticity_report(const Eigen::MatrixXd& m,
                                         double tol = 1e-8);

/// Entrywise squared modulus. Doubly stochastic whenever the input is
/// unitary.
Eigen::MatrixXd phi(const Eigen::MatrixXcd& m);

}  // namespace polyvar
