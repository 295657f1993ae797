#include <random>

#include "doctest.h"
#include "polyvar/geometry.hpp"
#include "test_util.hpp"

using namespace polyvar;

namespace {

WeightedPointSet example_family_zeros(int n) {
    RootMultiset r;
    r.entries.push_back({cplx(0.0), 1});
    r.entries.push_back({cplx(1.0), n - 1});
    return WeightedPointSet::from_roots(r);
}

}  // namespace

TEST_CASE("the two-point family has the classical closed-form variances") {
    for (int n = 3; n <= 12; ++n) {
        auto s = example_family_zeros(n);
        CHECK(std::abs(p_variance(s, 1.0).value - 1.0 / n) < 1e-9);
        CHECK(std::abs(p_variance(s, kPInf).value - 0.5) < 1e-9);
        // sigma_2^2 = (n-1)/n^2 in closed form
        CHECK(std::abs(p_variance(s, 2.0).value -
                       std::sqrt((n - 1.0) / (double(n) * n))) < 1e-9);
    }
}

TEST_CASE("the p=2 center is the barycenter") {
    std::mt19937 rng(21);
    for (int t = 0; t < 20; ++t) {
        auto s = WeightedPointSet::uniform(testutil::separated_points(rng, 5));
        auto c = p_variance(s, 2.0);
        CHECK(std::abs(c.center - barycenter(s)) < 1e-12);
    }
}

TEST_CASE("the geometric median may sit on a data point") {
    // weight 2 at the origin dominates: the median anchors there
    WeightedPointSet s;
    s.points = {{cplx(0.0), 2.0}, {cplx(1.0), 1.0}};
    auto c = p_variance(s, 1.0);
    CHECK(std::abs(c.center) < 1e-10);
    CHECK(std::abs(c.value - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("sigma_p is monotone in p up to the Chebyshev radius") {
    std::mt19937 rng(22);
    const double ps[] = {1.0, 1.5, 2.0, 3.0, 7.0};
    for (int t = 0; t < 50; ++t) {
        auto s = WeightedPointSet::uniform(
            testutil::separated_points(rng, 3 + t % 6));
        double prev = 0.0;
        for (double p : ps) {
            double v = p_variance(s, p).value;
            CHECK(v >= prev - 1e-9);
            prev = v;
        }
        CHECK(p_variance(s, kPInf).value >= prev - 1e-9);
    }
}

TEST_CASE("p below one is rejected") {
    auto s = WeightedPointSet::uniform({cplx(0.0), cplx(1.0)});
    CHECK_THROWS(p_variance(s, 0.5));
}

TEST_CASE("smallest enclosing disk basics") {
    Disk d2 = chebyshev_disk({cplx(-1.0), cplx(1.0)});
    CHECK(std::abs(d2.center) < 1e-12);
    CHECK(std::abs(d2.radius - 1.0) < 1e-12);

    // equilateral triangle on the unit circle
    std::vector<cplx> tri;
    for (int k = 0; k < 3; ++k) tri.push_back(std::polar(1.0, 2 * M_PI * k / 3));
    Disk d3 = chebyshev_disk(tri);
    CHECK(std::abs(d3.center) < 1e-12);
    CHECK(std::abs(d3.radius - 1.0) < 1e-12);

    // interior points do not change the disk
    tri.push_back(cplx(0.1, 0.2));
    Disk d4 = chebyshev_disk(tri);
    CHECK(std::abs(d4.radius - 1.0) < 1e-12);
}

TEST_CASE("enclosing disk scale equivariance") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        auto pts = testutil::separated_points(rng, 6);
        cplx a = testutil::disk_point(rng) + cplx(1.5, 0.0);
        cplx b = testutil::disk_point(rng);
        std::vector<cplx> mapped;
        for (cplx z : pts) mapped.push_back(a * z + b);
        Disk d1 = chebyshev_disk(pts);
        Disk d2 = chebyshev_disk(mapped);
        CHECK(std::abs(d2.radius - std::abs(a) * d1.radius) < 1e-9);
        CHECK(std::abs(d2.center - (a * d1.center + b)) < 1e-9);
    }
}

TEST_CASE("Hausdorff distances, one-sided and symmetric") {
    std::vector<cplx> a = {cplx(0.0), cplx(2.0)};
    std::vector<cplx> b = {cplx(0.0)};
    CHECK(hausdorff(a, b) == doctest::Approx(2.0));
    CHECK(hausdorff(b, a) == doctest::Approx(0.0));
    CHECK(hausdorff(a, b, HausdorffMode::Symmetric) == doctest::Approx(2.0));
}

TEST_CASE("circular deviation closed forms") {
    // two points: half the distance
    CHECK(circular_deviation({cplx(0.0), cplx(3.0)}) == doctest::Approx(1.5));

    // zeros of z^3 - z: 1/sqrt(3)
    CHECK(circular_deviation({cplx(-1.0), cplx(0.0), cplx(1.0)}) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    // cubic circulant configuration: max(|a|, |b|)
    std::mt19937 rng(24);
    for (int t = 0; t < 20; ++t) {
        cplx a = testutil::disk_point(rng), b = testutil::disk_point(rng);
        const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
        std::vector<cplx> zs;
        for (int k = 0; k < 3; ++k)
            zs.push_back(a * std::pow(w, k) + b * std::pow(w, 2 * k));
        CHECK(std::abs(circular_deviation(zs) -
                       std::max(std::abs(a), std::abs(b))) < 1e-10);
    }

    // fourth roots of unity: the (1,-1,c,-c) class attains 1
    CHECK(circular_deviation({cplx(1.0), cplx(-1.0), cplx(0.0, 1.0),
                              cplx(0.0, -1.0)}) == doctest::Approx(1.0));
}

TEST_CASE("circular deviation is dominated by the mean deviation") {
    std::mt19937 rng(25);
    for (int t = 0; t < 40; ++t) {
        auto pts = testutil::separated_points(rng, 2 + t % 3);
        double sc = circular_deviation(pts);
        double s1 = p_variance(WeightedPointSet::uniform(pts), 1.0).value;
        CHECK(sc <= s1 + 1e-9);
    }
}

TEST_CASE("convex hull and hull distance") {
    std::vector<cplx> pts = {cplx(0.0), cplx(1.0), cplx(0.0, 1.0),
                             cplx(0.3, 0.3)};
    auto hull = convex_hull(pts);
    CHECK(hull.size() == 3);
    CHECK(dist_to_convex_hull(cplx(0.25, 0.25), hull) == doctest::Approx(0.0));
    CHECK(dist_to_convex_hull(cplx(-1.0, 0.0), hull) == doctest::Approx(1.0));
}
