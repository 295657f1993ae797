#include <random>

#include "doctest.h"
#include "polyvar/cauchy.hpp"
#include "polyvar/conjectures.hpp"
#include "test_util.hpp"

using namespace polyvar;

namespace {

PointMeasure random_measure(std::mt19937& rng, int k) {
    std::uniform_real_distribution<double> w(0.2, 2.0);
    std::vector<PointMeasure::Atom> atoms;
    for (cplx z : testutil::separated_points(rng, k, 0.1))
        atoms.push_back({z, w(rng)});
    return PointMeasure(atoms, true);
}

}  // namespace

TEST_CASE("atoms merge and bad weights are rejected") {
    PointMeasure m({{cplx(0.0), 1.0}, {cplx(0.0), 2.0}, {cplx(1.0), 1.0}});
    CHECK(m.atoms().size() == 2);
    CHECK(m.total_weight() == doctest::Approx(4.0));
    CHECK_THROWS(PointMeasure({{cplx(0.0), 0.0}}));
    CHECK_THROWS(PointMeasure(std::vector<PointMeasure::Atom>{}));
}

TEST_CASE("uniform two-point measure: the transform vanishes at the midpoint") {
    PointMeasure m({{cplx(0.0), 1.0}, {cplx(1.0), 1.0}}, true);
    auto v = transform_zeros(m);
    REQUIRE(v.size() == 1);
    CHECK(std::abs(v[0] - cplx(0.5)) < 1e-12);
    // the barycenter is already a transform zero, so the extended set does
    // not duplicate it
    CHECK(extended_zero_set(m).size() == 1);
}

TEST_CASE("transform zeros annihilate the Cauchy transform") {
    std::mt19937 rng(51);
    for (int t = 0; t < 30; ++t) {
        auto m = random_measure(rng, 3 + t % 4);
        for (cplx z : transform_zeros(m))
            CHECK(std::abs(cauchy_eval(m, z)) < 1e-8);
    }
}

TEST_CASE("evaluation at an atom throws") {
    PointMeasure m({{cplx(0.0), 1.0}, {cplx(1.0), 1.0}});
    CHECK_THROWS(cauchy_eval(m, cplx(1.0)));
}

TEST_CASE("the disproof family matches its closed form") {
    for (int n = 3; n <= 6; ++n) {
        auto rep = counterexample_family(n);
        CHECK(rep.all_real);
        CHECK(std::abs(rep.sigma_inf - 1.0) < 1e-12);
        CHECK(rep.dist_i_to_we > 1.0);
        CHECK(rep.claims_violated);

        const double denom = 2.0 * n + 1.0;
        const double disc = std::sqrt(n * n - 2.0 * n - 1.0);
        std::vector<cplx> expected = {cplx((n + disc) / denom),
                                      cplx((n - disc) / denom),
                                      cplx(1.0 / denom)};
        double worst = 0.0;
        for (cplx e : expected) {
            double best = 1e300;
            for (cplx w : rep.extended_zeros)
                best = std::min(best, std::abs(w - e));
            worst = std::max(worst, best);
        }
        CHECK(worst < 1e-8);
    }
    CHECK_THROWS(counterexample_family(2));
}

TEST_CASE("verdicts on the disproof family") {
    auto r = cauchy_conjecture_check(counterexample_family(3).mu);
    CHECK(r.conjecture.status == Status::HOLDS);
    CHECK(r.claim_sigma2.status == Status::VIOLATED);
    CHECK(r.claim_sigmainf.status == Status::VIOLATED);
    // the minimal atom is the real one; its nearest transform zero is
    // (3 + sqrt 2)/7
    CHECK(std::abs(r.conjecture.detail("h") -
                   (1.0 - (3.0 + std::sqrt(2.0)) / 7.0)) < 1e-9);
}

TEST_CASE("three-atom measures satisfy the sigma_2 strengthening") {
    std::mt19937 rng(52);
    for (int t = 0; t < 100; ++t) {
        auto m = random_measure(rng, 3);
        auto st = measure_stats(m);
        auto v = transform_zeros(m);
        double h = 0.0;
        for (int idx : st.s_min) {
            double best = 1e300;
            for (cplx w : v)
                best = std::min(best, std::abs(m.atoms()[idx].location - w));
            h = std::max(h, best);
        }
        CHECK(h <= st.sigma_2 + 1e-9);
    }
}

TEST_CASE("rank-one perturbation spectrum and nilpotency at the barycenter") {
    std::mt19937 rng(53);
    for (int t = 0; t < 30; ++t) {
        auto m = random_measure(rng, 2 + t % 5);
        auto st = measure_stats(m);

        cplx a = testutil::disk_point(rng, 2.0);
        auto expected = transform_zeros(m);
        expected.push_back(a);
        CHECK(multiset_match_distance(eigenvalues(rank_one_perturbation(m, a)),
                                      expected) < 1e-7);

        // at a = E the perturbation part is nilpotent with norm sigma_2
        auto full = rank_one_perturbation(m, st.barycenter);
        ComplexMatrix t_e = full;
        for (int i = 0; i < t_e.rows(); ++i)
            t_e(i, i) -= m.atoms()[i].location;
        CHECK((t_e * t_e).jacobiSvd().singularValues()(0) <= 1e-10);
        CHECK(std::abs(t_e.jacobiSvd().singularValues()(0) - st.sigma_2) <
              1e-9);
    }
    CHECK_THROWS(rank_one_perturbation(
        PointMeasure({{cplx(0.0), 1.0}, {cplx(1.0), 1.0}}), cplx(0.0)));
}

TEST_CASE("minimal-weight support detection") {
    PointMeasure m({{cplx(0.0), 1.0}, {cplx(1.0), 1.0}, {cplx(2.0), 3.0}},
                   true);
    auto st = measure_stats(m);
    REQUIRE(st.s_min.size() == 2);
    CHECK(m.atoms()[st.s_min[0]].weight == doctest::Approx(0.2));
}
