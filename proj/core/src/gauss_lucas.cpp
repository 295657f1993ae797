#include "polyvar/gauss_lucas.hpp"

#include <cmath>
#include <stdexcept>

namespace polyvar {

GLMatrix gauss_lucas_from_roots(const RootMultiset& zeros,
                                const RootMultiset& crits) {
    const int k = static_cast<int>(zeros.entries.size());
    if (k < 2) throw std::invalid_argument("need >= 2 distinct zeros");
    const auto w = distinct_critical_points(zeros, crits).expanded();
    if (static_cast<int>(w.size()) != k - 1)
        throw std::runtime_error("critical point count mismatch");

    double scale = 0.0;
    for (const auto& e : zeros.entries)
        scale = std::max(scale, std::abs(e.location));

    GLMatrix g;
    g.entries.resize(k - 1, k);
    g.crit_locations = w;
    for (const auto& e : zeros.entries) {
        g.zero_locations.push_back(e.location);
        g.multiplicities.push_back(e.multiplicity);
    }
    for (int i = 0; i < k - 1; ++i) {
        double denom = 0.0;
        for (int j = 0; j < k; ++j) {
            double d = std::abs(w[i] - zeros.entries[j].location);
            if (d <= 1e-10 * (1.0 + scale))
                throw std::runtime_error(
                    "degenerate: critical point coincides with a simple zero");
            g.entries(i, j) = zeros.entries[j].multiplicity / (d * d);
            denom += g.entries(i, j);
        }
        for (int j = 0; j < k; ++j) g.entries(i, j) /= denom;
    }
    return g;
}

GLMatrix gauss_lucas_matrix(const Polynomial& f) {
    const auto zeros = roots(f);
    const auto crits = critical_points(f);
    return gauss_lucas_from_roots(zeros, crits);
}

AugmentedGLMatrix augmented_matrix(const Polynomial& f) {
    const GLMatrix g = gauss_lucas_matrix(f);
    const int k = static_cast<int>(g.zero_locations.size());
    int n = 0;
    for (int m : g.multiplicities) n += m;
    AugmentedGLMatrix a;
    a.entries.resize(k, k);
    a.entries.topRows(k - 1) = g.entries;
    for (int j = 0; j < k; ++j)
        a.entries(k - 1, j) = double(g.multiplicities[j]) / n;
    return a;
}

StochasticityReport stochasticity_report(const Eigen::MatrixXd& m, double tol) {
    if ((m.array() < 0.0).any())
        throw std::invalid_argument("negative matrix entry");
    StochasticityReport r;
    r.tol = tol;
    for (int i = 0; i < m.rows(); ++i) r.row_sums.push_back(m.row(i).sum());
    for (int j = 0; j < m.cols(); ++j) {
        r.col_sums.push_back(m.col(j).sum());
        r.col_maxima.push_back(m.col(j).maxCoeff());
    }
    r.is_row = true;
    for (double s : r.row_sums)
        if (std::abs(s - 1.0) > tol) r.is_row = false;
    r.is_doubly = r.is_row && m.rows() == m.cols();
    if (r.is_doubly)
        for (double s : r.col_sums)
            if (std::abs(s - 1.0) > tol) r.is_doubly = false;
    return r;
}

Eigen::MatrixXd phi(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs2();
}

}  // namespace polyvar
