#include <random>

#include "doctest.h"
#include "polyvar/conjectures.hpp"
#include "polyvar/search.hpp"
#include "test_util.hpp"

using namespace polyvar;

namespace {

Polynomial unity(int n) {
    std::vector<cplx> c(n + 1, cplx(0.0));
    c[0] = -1.0;
    c[n] = 1.0;
    return Polynomial(c);
}

Polynomial example_family(int n) {
    RootMultiset r;
    r.entries.push_back({cplx(0.0), 1});
    r.entries.push_back({cplx(1.0), n - 1});
    return from_roots(r);
}

}  // namespace

TEST_CASE("verdict classification bands") {
    CHECK(classify(1e-3, 1e-9) == Status::HOLDS);
    CHECK(classify(-1e-3, 1e-9) == Status::VIOLATED);
    CHECK(classify(5e-9, 1e-9) == Status::INCONCLUSIVE);
    CHECK(classify(-5e-9, 1e-9) == Status::INCONCLUSIVE);
}

TEST_CASE("variance check on the symmetric extremal family") {
    for (int n = 3; n <= 7; ++n) {
        for (double p : {1.0, 2.0, kPInf}) {
            auto v = variance_check(unity(n), p);
            CHECK(std::abs(v.detail("h") - 1.0) < 1e-9);
            CHECK(std::abs(v.detail("sigma_p") - 1.0) < 1e-9);
            CHECK(v.status != Status::VIOLATED);
            CHECK(v.detail("extremal_form") == 1.0);
        }
    }
}

TEST_CASE("mean-deviation equality without the extremal form") {
    auto v = variance_check(example_family(5), 1.0);
    CHECK(std::abs(v.margin) < 1e-9);
    CHECK(v.status != Status::VIOLATED);
    CHECK(v.detail("extremal_form") == 0.0);
}

TEST_CASE("degree-3 instances satisfy the 2-variance inequality") {
    std::mt19937 rng(61);
    for (int t = 0; t < 50; ++t) {
        auto zs = testutil::separated_points(rng, 3, 0.05);
        auto v = variance_check(from_roots(zs), 2.0);
        CHECK(v.status != Status::VIOLATED);
    }
}

TEST_CASE("variance verdict is affine invariant") {
    std::mt19937 rng(62);
    for (int t = 0; t < 15; ++t) {
        auto zs = testutil::separated_points(rng, 4, 0.1);
        cplx a = testutil::disk_point(rng) + cplx(2.0, 0.5);
        cplx b = 3.0 * testutil::disk_point(rng);
        std::vector<cplx> mapped;
        for (cplx z : zs) mapped.push_back(a * z + b);
        for (double p : {1.0, 2.0, kPInf}) {
            auto v1 = variance_check(from_roots(zs), p);
            auto v2 = variance_check(from_roots(mapped), p);
            CHECK(v1.status == v2.status);
            CHECK(std::abs(v2.margin - std::abs(a) * v1.margin) <
                  1e-7 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("asymptotic bound h <= 2^(1/n) sigma_inf on random instances") {
    std::mt19937 rng(63);
    for (int t = 0; t < 30; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 6, 0.05);
        auto v = variance_check(from_roots(zs), kPInf);
        CHECK(v.detail("asymptotic_margin") > -1e-9);
    }
}

TEST_CASE("reverse inequality is never violated") {
    auto v = reverse_check(example_family(5));
    CHECK(std::abs(v.detail("h_reverse") - 0.2) < 1e-9);
    CHECK(v.status != Status::VIOLATED);

    std::mt19937 rng(64);
    for (int t = 0; t < 60; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 10, 0.05);
        CHECK(reverse_check(from_roots(zs)).status != Status::VIOLATED);
    }
}

TEST_CASE("real-zero refinement boundary case") {
    Polynomial f({0.0, -1.0, 0.0, 1.0});  // zeros -1, 0, 1
    auto v = real_zero_refined_check(f);
    CHECK(v.status != Status::VIOLATED);
    CHECK(std::abs(v.margin) < 1e-9);  // critical point exactly on the circle
    CHECK(std::abs(v.detail("radius") - 1.0 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("real-zero refinement rejects non-real zeros and reports sharpness") {
    CHECK_THROWS(real_zero_refined_check(unity(4)));

    // (z^2-1)^2: the reverse sigma_2 bound is attained
    Polynomial f({1.0, 0.0, -2.0, 0.0, 1.0});
    auto v = real_zero_refined_check(f);
    CHECK(std::abs(v.detail("companion_margin")) < 1e-9);
}

TEST_CASE("hull sampling check on the symmetric family") {
    for (int n : {3, 5, 8}) {
        auto v = schmeisser_check(unity(n));
        CHECK(v.status != Status::VIOLATED);
        // every hull point is within exactly sigma_inf of the origin
        CHECK(v.detail("sample_min") > -1e-9);
    }
}

TEST_CASE("hull sampling reports the finite-p failure criterion") {
    auto v = schmeisser_check(example_family(10), 25, 2.0);
    CHECK(v.detail("example_family_fails") == 1.0);
    auto w = schmeisser_check(example_family(3), 25, 2.0);
    CHECK(w.detail("example_family_fails") == 0.0);
}

TEST_CASE("hull sampling on random instances never violates") {
    std::mt19937 rng(65);
    for (int t = 0; t < 25; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 6, 0.05);
        CHECK(schmeisser_check(from_roots(zs)).status != Status::VIOLATED);
    }
}

TEST_CASE("exclusion disks for the boundary family") {
    for (int n = 3; n <= 10; ++n) {
        auto rep = exclusion_check(example_family(n), 0);
        CHECK(std::abs(rep.open_disk.detail("radius") - 1.0 / n) < 1e-12);
        CHECK(std::abs(rep.open_disk.detail("nearest_crit_dist") - 1.0 / n) <
              1e-9);
        CHECK(rep.open_disk.status != Status::VIOLATED);
        CHECK(rep.tangent_disk.status != Status::VIOLATED);
    }
}

TEST_CASE("exclusion around a well separated zero holds strictly") {
    auto rep = exclusion_check(unity(5), 0);
    CHECK(rep.open_disk.status == Status::HOLDS);
    CHECK(rep.tangent_disk.status == Status::HOLDS);
    CHECK_THROWS(exclusion_check(unity(5), 99));
}

TEST_CASE("a single distinct zero has no exclusion data") {
    RootMultiset r;
    r.entries.push_back({cplx(0.5), 4});
    CHECK_THROWS(exclusion_check(from_roots(r), 0));
}

TEST_CASE("polar identities at a critical point") {
    // z^3 - z at w = 1/sqrt(3), vertical line
    Polynomial f({0.0, -1.0, 0.0, 1.0});
    auto rep = critical_identities(f, cplx(1.0 / std::sqrt(3.0)), M_PI / 2.0);
    CHECK(rep.holds);

    // z^2 - 1 at the midpoint: symmetric cancellation for any angle
    Polynomial g({-1.0, 0.0, 1.0});
    CHECK(critical_identities(g, cplx(0.0), 0.3).holds);

    // w equal to a zero is rejected
    CHECK_THROWS(critical_identities(g, cplx(1.0), 0.0));
}

TEST_CASE("polar identities on random instances") {
    std::mt19937 rng(66);
    std::uniform_real_distribution<double> ang(0.0, M_PI);
    for (int t = 0; t < 30; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 7, 0.05);
        Polynomial f = from_roots(zs);
        for (cplx w : distinct_critical_points(roots(f), critical_points(f))
                          .locations())
            CHECK(critical_identities(f, w, ang(rng)).holds);
    }
}

TEST_CASE("collision search finds the obvious pairs") {
    // z^2 - a z is not injective past |a|/2
    cplx a(0.8, 0.3);
    Polynomial f({0.0, -a, 1.0});
    auto rep = nonunivalence_search(f, {cplx(0.0), std::abs(a) / 2.0 + 0.05});
    CHECK(rep.found);
    CHECK(std::abs(f(rep.pair.z1) - f(rep.pair.z2)) <= 1e-10);

    // z^n collides rotationally on any disk
    Polynomial zn({0.0, 0.0, 0.0, 1.0});
    CHECK(nonunivalence_search(zn, {cplx(0.0), 0.5}).found);
}

TEST_CASE("collision search misses are inconclusive, never a claim") {
    // z^2 - a z restricted inside the univalence radius
    cplx a(1.0, 0.0);
    Polynomial f({0.0, -a, 1.0});
    auto rep = nonunivalence_search(f, {cplx(0.0), 0.3});
    CHECK_FALSE(rep.found);
    CHECK(rep.verdict.status == Status::INCONCLUSIVE);
}

TEST_CASE("uniform root measures reduce the transform conjecture to zeros") {
    std::mt19937 rng(67);
    for (int t = 0; t < 20; ++t) {
        auto zs = testutil::separated_points(rng, 4, 0.1);
        auto mu = PointMeasure::uniform_on_roots(roots(from_roots(zs)))
                      .normalize();
        auto r = cauchy_conjecture_check(mu);
        CHECK(r.conjecture.status != Status::VIOLATED);
    }
}
