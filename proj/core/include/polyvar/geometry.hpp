#pragma once

#include <limits>
#include <vector>

#include "polyvar/poly.hpp"

namespace polyvar {

struct WeightedPoint {
    cplx location;
    double weight = 1.0;
};

/// Finite positive weighted point configuration.
struct WeightedPointSet {
    std::vector<WeightedPoint> points;

    double total_weight() const {
        double w = 0.0;
        for (const auto& p : points) w += p.weight;
        return w;
    }
    std::vector<cplx> locations() const {
        std::vector<cplx> out;
        out.reserve(points.size());
        for (const auto& p : points) out.push_back(p.location);
        return out;
    }
    static WeightedPointSet uniform(const std::vector<cplx>& pts);
    /// Zeros with multiplicities as weights.
    static WeightedPointSet from_roots(const RootMultiset& r);
};

struct CenterResult {
    cplx center;
    double value = 0.0;  // sigma_p
    double p = 2.0;
    int iterations = 0;
};

struct Disk {
    cplx center;
    double radius = 0.0;
};

constexpr double kPInf = std::numeric_limits<double>::infinity();

/// Weighted mean of the locations; the exact p=2 center.
cplx barycenter(const WeightedPointSet& s);

/// sigma_p = min_c (sum w_k |z_k - c|^p / W)^(1/p). p = kPInf gives the
/// Chebyshev radius. p < 1 is rejected (non-convex; the conjectures fail
/// there).
///
/// p = 2 is closed-form, p = 1 uses Weiszfeld iteration with an anchored
/// optimality test at data points, other finite p use gradient descent with
/// backtracking and eps-smoothing continuation.
CenterResult p_variance(const WeightedPointSet& s, double p);

/// Smallest enclosing disk (randomized move-to-front incremental).
Disk chebyshev_disk(const std::vector<cplx>& pts, unsigned seed = 12345u);

enum class HausdorffMode { OneSided, Symmetric };

/// One-sided: max over a in A of min over b in B of |a-b|.
double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b,
                 HausdorffMode mode = HausdorffMode::OneSided);

/// sigma_circ for n = 2, 3, 4 point configurations (closed forms over the
/// classified unimodular zero-sum weight classes). Unsupported for n >= 5.
double circular_deviation(const std::vector<cplx>& pts);

/// Convex hull (counterclockwise, no duplicate endpoint).
std::vector<cplx> convex_hull(std::vector<cplx> pts);

/// Distance from z to the convex hull of pts (0 if inside).
double dist_to_convex_hull(cplx z, const std::vector<cplx>& hull);

}  // namespace polyvar
