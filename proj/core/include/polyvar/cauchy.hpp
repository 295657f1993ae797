#pragma once

#include <vector>

#include "polyvar/geometry.hpp"
#include "polyvar/operators.hpp"
#include "polyvar/poly.hpp"

namespace polyvar {

/// Finite positive atomic measure. Duplicate atoms are merged by weight
/// summation at construction.
class PointMeasure {
public:
    struct Atom {
        cplx location;
        double weight;
    };

    PointMeasure() = default;
    explicit PointMeasure(std::vector<Atom> atoms, bool normalize = false);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool normalized() const { return normalized_; }
    double total_weight() const;
    PointMeasure normalize() const;
    WeightedPointSet as_point_set() const;
    std::vector<cplx> support() const;

    /// Uniform unit mass on each zero, multiplicity as weight.
    static PointMeasure uniform_on_roots(const RootMultiset& r);

private:
    std::vector<Atom> atoms_;
    bool normalized_ = false;
};

struct MeasureStats {
    cplx barycenter;
    double sigma_2 = 0.0;
    double sigma_inf = 0.0;
    std::vector<int> s_min;  // indices of minimal-weight atoms
};

MeasureStats measure_stats(const PointMeasure& mu);

/// C_mu(z) = sum alpha_k / (z - z_k). Throws when z sits on an atom.
cplx cauchy_eval(const PointMeasure& mu, cplx z);

/// The n-1 zeros of the Cauchy transform, as eigenvalues of the compression
/// of diag(locations) to the complement of (sqrt alpha_k).
std::vector<cplx> transform_zeros(const PointMeasure& mu);

/// transform_zeros plus the barycenter E(mu).
std::vector<cplx> extended_zero_set(const PointMeasure& mu);

/// Matrix of A + T_a in the L2(mu)-orthonormal frame:
/// diag(z_l) + (a - z_l) sqrt(alpha_l alpha_k). Spectrum = {a} union V(mu);
/// at a = E the perturbation is nilpotent with norm sigma_2(mu).
ComplexMatrix rank_one_perturbation(const PointMeasure& mu, cplx a);

struct CounterexampleReport {
    PointMeasure mu;
    std::vector<cplx> extended_zeros;
    bool all_real = false;
    double sigma_inf = 0.0;
    double dist_i_to_we = 0.0;
    bool claims_violated = false;  // Hausdorff claims with sigma_2 / sigma_inf
};

/// The (z-1)(z^2+1)^n family: mu = (delta_1 + n delta_i + n delta_-i)/(2n+1).
CounterexampleReport counterexample_family(int n);

}  // namespace polyvar
