// Acceptance gate: twelve criteria, one pass/fail line each. Exit status is
// the number of failed criteria. All tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "polyvar/cauchy.hpp"
#include "polyvar/conjectures.hpp"
#include "polyvar/gauss_lucas.hpp"
#include "polyvar/geometry.hpp"
#include "polyvar/operators.hpp"
#include "polyvar/poly.hpp"
#include "polyvar/search.hpp"
#include "test_util.hpp"

using namespace polyvar;

namespace {

Polynomial example_family(int n) {
    RootMultiset r;
    r.entries.push_back({cplx(0.0), 1});
    r.entries.push_back({cplx(1.0), n - 1});
    return from_roots(r);
}

double dist_to_set(cplx z, const std::vector<cplx>& set) {
    double best = 1e300;
    for (cplx w : set) best = std::min(best, std::abs(z - w));
    return best;
}

// 1. closed-form boundary family: h = 1/n, sigma_1 = 1/n, sigma_inf = 1/2
bool criterion_1() {
    for (int n = 3; n <= 12; ++n) {
        Polynomial f = example_family(n);
        auto zeros = roots(f);
        auto crits = critical_points(f);
        double h = hausdorff(zeros.locations(), crits.locations());
        auto set = WeightedPointSet::from_roots(zeros);
        if (std::abs(h - 1.0 / n) > 1e-9) return false;
        if (std::abs(p_variance(set, 1.0).value - 1.0 / n) > 1e-9) return false;
        if (std::abs(p_variance(set, kPInf).value - 0.5) > 1e-9) return false;
    }
    return true;
}

// 2. sigma_p monotone in p on 1000 random weighted sets
bool criterion_2() {
    std::mt19937 rng(1002);
    std::uniform_real_distribution<double> w(0.2, 2.0);
    const double ps[] = {1.0, 1.5, 2.0, 3.0, 7.0};
    for (int t = 0; t < 1000; ++t) {
        WeightedPointSet s;
        for (cplx z : testutil::separated_points(rng, 3 + t % 6, 0.02))
            s.points.push_back({z, w(rng)});
        double prev = 0.0;
        for (double p : ps) {
            double v = p_variance(s, p).value;
            if (v < prev - 1e-9) return false;
            prev = v;
        }
        if (p_variance(s, kPInf).value < prev - 1e-9) return false;
    }
    return true;
}

// 3. augmented matrices doubly stochastic for <=3 distinct zeros and for
// real zeros; z^4 - 3z^2 - 4 fails by more than 1e-3
bool criterion_3() {
    std::mt19937 rng(1003);
    std::uniform_int_distribution<int> mult(1, 4);
    for (int t = 0; t < 500; ++t) {
        RootMultiset r;
        for (cplx z : testutil::separated_points(rng, 2 + t % 2, 0.1))
            r.entries.push_back({z, mult(rng)});
        // recovering a 4-fold zero from coefficients is eps^(1/4)-conditioned,
        // so the stochasticity tolerance is looser here than for simple zeros
        auto rep = stochasticity_report(
            augmented_matrix(from_roots(r)).entries, 1e-5);
        if (!rep.is_doubly) return false;
    }
    for (int t = 0; t < 500; ++t) {
        auto xs = testutil::separated_reals(rng, 3 + t % 6);
        std::vector<cplx> zs(xs.begin(), xs.end());
        auto rep = stochasticity_report(augmented_matrix(from_roots(zs)).entries);
        if (!rep.is_doubly) return false;
    }
    auto rep = stochasticity_report(
        augmented_matrix(Polynomial({-4.0, 0.0, -3.0, 0.0, 1.0})).entries);
    double worst = 0.0;
    for (double s : rep.col_sums) worst = std::max(worst, std::abs(s - 1.0));
    return worst > 1e-3;
}

// 4. the degree-19 instance: literal roots and two small matrix columns
bool criterion_4() {
    auto f = named_instance("miller").poly;
    auto zeros = roots(f);
    const cplx target(0.909090818, 0.330014556);
    bool hit_plus = false, hit_minus = false;
    for (cplx z : zeros.locations()) {
        if (std::abs(z - target) < 1e-6) hit_plus = true;
        if (std::abs(z - std::conj(target)) < 1e-6) hit_minus = true;
    }
    if (!hit_plus || !hit_minus) return false;

    auto g = gauss_lucas_matrix(f);
    int small_cols = 0;
    for (size_t j = 0; j < g.zero_locations.size(); ++j) {
        if (std::abs(g.zero_locations[j] - target) < 1e-6 ||
            std::abs(g.zero_locations[j] - std::conj(target)) < 1e-6) {
            double colmax = g.entries.col(j).maxCoeff();
            if (colmax < 1.0 / 19.0) ++small_cols;
        }
    }
    return small_cols == 2;
}

// 5. compression eigenvalues = critical points; off-block norm = sigma_2
bool criterion_5() {
    std::mt19937 rng(1005);
    for (int t = 0; t < 200; ++t) {
        const int n = 3 + t % 13;  // degrees 3..15
        auto zs = testutil::separated_points(rng, n, 0.03);
        auto crits = critical_points(from_roots(zs)).expanded();
        double s2 = p_variance(WeightedPointSet::uniform(zs), 2.0).value;
        ComplexMatrix a = ComplexMatrix::Zero(n, n);
        for (int k = 0; k < n; ++k) a(k, k) = zs[k];
        auto u = differentiator_basis(n);
        for (int l = 0; l < n; ++l) {
            Eigen::VectorXcd v = u.row(l).transpose();
            if (multiset_match_distance(eigenvalues(compress(a, v)), crits) >=
                1e-7)
                return false;
            if (std::abs(off_block_norm(a, v) - s2) >= 1e-9) return false;
        }
    }
    return true;
}

// 6. |Discr| = n^n |R|; Discr(z^3-1) = 27; disk product bound
bool criterion_6() {
    auto dr = discriminant_resultant(Polynomial({-1.0, 0.0, 0.0, 1.0}));
    if (std::abs(std::abs(dr.discriminant) - 27.0) > 1e-9) return false;

    std::mt19937 rng(1006);
    for (int t = 0; t < 200; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 8, 0.03);
        auto d = discriminant_resultant(from_roots(zs));
        const double n = zs.size();
        const double rhs = std::pow(n, n) * std::abs(d.resultant);
        if (std::abs(std::abs(d.discriminant) - rhs) > 1e-8 * (1.0 + rhs))
            return false;
    }
    for (int t = 0; t < 200; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 8, 0.02);
        Polynomial f = from_roots(zs);
        double prod = 1.0;
        for (cplx w : critical_points(f).expanded()) prod *= std::abs(f(w));
        if (prod > 1.0 + 1e-9) return false;
    }
    return true;
}

// 7. the disproof family in closed form; transform conjecture holds there
// and with sigma_2 on random 3-atom measures
bool criterion_7() {
    for (int n = 3; n <= 6; ++n) {
        auto rep = counterexample_family(n);
        if (!rep.all_real) return false;
        if (std::abs(rep.sigma_inf - 1.0) > 1e-12) return false;
        if (rep.dist_i_to_we <= 1.0) return false;

        const double denom = 2.0 * n + 1.0;
        const double disc = std::sqrt(double(n) * n - 2.0 * n - 1.0);
        const cplx expected[] = {cplx((n + disc) / denom),
                                 cplx((n - disc) / denom),
                                 cplx(1.0 / denom)};
        for (cplx e : expected)
            if (dist_to_set(e, rep.extended_zeros) > 1e-8) return false;

        if (cauchy_conjecture_check(rep.mu).conjecture.status !=
            Status::HOLDS)
            return false;
    }

    std::mt19937 rng(1007);
    std::uniform_real_distribution<double> w(0.2, 2.0);
    for (int t = 0; t < 1000; ++t) {
        std::vector<PointMeasure::Atom> atoms;
        for (cplx z : testutil::separated_points(rng, 3, 0.05))
            atoms.push_back({z, w(rng)});
        PointMeasure mu(atoms, true);
        auto st = measure_stats(mu);
        auto v = transform_zeros(mu);
        for (int idx : st.s_min)
            if (dist_to_set(mu.atoms()[idx].location, v) > st.sigma_2 + 1e-9)
                return false;
    }
    return true;
}

// 8. real-zero refinement: never VIOLATED on random real-rooted inputs;
// the cubic boundary case stays out of VIOLATED
bool criterion_8() {
    std::mt19937 rng(1008);
    for (int t = 0; t < 500; ++t) {
        auto xs = testutil::separated_reals(rng, 3 + t % 10);
        std::vector<cplx> zs(xs.begin(), xs.end());
        if (real_zero_refined_check(from_roots(zs)).status ==
            Status::VIOLATED)
            return false;
    }
    auto v = real_zero_refined_check(Polynomial({0.0, -1.0, 0.0, 1.0}));
    return v.status != Status::VIOLATED;
}

// 9. rank-one perturbation: spectrum, nilpotency, norm
bool criterion_9() {
    std::mt19937 rng(1009);
    std::uniform_real_distribution<double> w(0.2, 2.0);
    for (int t = 0; t < 200; ++t) {
        std::vector<PointMeasure::Atom> atoms;
        for (cplx z : testutil::separated_points(rng, 2 + t % 7, 0.05))
            atoms.push_back({z, w(rng)});
        PointMeasure mu(atoms, true);
        auto st = measure_stats(mu);

        cplx a = testutil::disk_point(rng, 2.0);
        auto expected = transform_zeros(mu);
        expected.push_back(a);
        if (multiset_match_distance(eigenvalues(rank_one_perturbation(mu, a)),
                                    expected) > 1e-7)
            return false;

        ComplexMatrix t_e = rank_one_perturbation(mu, st.barycenter);
        for (int i = 0; i < t_e.rows(); ++i)
            t_e(i, i) -= mu.atoms()[i].location;
        if ((t_e * t_e).jacobiSvd().singularValues()(0) > 1e-10) return false;
        if (std::abs(t_e.jacobiSvd().singularValues()(0) - st.sigma_2) > 1e-9)
            return false;
    }
    return true;
}

// 10. Toeplitz eigenvalue bound scan plus the equality boundary instance
bool criterion_10() {
    std::mt19937 rng(1010);
    for (int t = 0; t < 10000; ++t) {
        const int n = 3 + t % 10;  // matrices up to 11x11 (n <= 12)
        std::vector<cplx> a;
        for (int k = 0; k < n - 1; ++k) a.push_back(testutil::disk_point(rng));
        auto rep = toeplitz_check(a);
        if (rep.min_abs_eig_sq > rep.bound + 1e-9) return false;
    }
    auto rep = toeplitz_check({cplx(1.0), cplx(0.0)});
    return std::abs(rep.min_abs_eig_sq - rep.bound) < 1e-12;
}

// 11. exclusion boundary family and the polar identities
bool criterion_11() {
    for (int n = 3; n <= 10; ++n) {
        auto rep = exclusion_check(example_family(n), 0);
        if (std::abs(rep.open_disk.detail("radius") - 1.0 / n) > 1e-12)
            return false;
        if (std::abs(rep.open_disk.detail("nearest_crit_dist") - 1.0 / n) >
            1e-9)
            return false;
        if (rep.open_disk.status == Status::VIOLATED) return false;
    }

    std::mt19937 rng(1011);
    std::uniform_real_distribution<double> ang(0.0, M_PI);
    for (int t = 0; t < 200; ++t) {
        auto zs = testutil::separated_points(rng, 3 + t % 8, 0.05);
        Polynomial f = from_roots(zs);
        auto crits =
            distinct_critical_points(roots(f), critical_points(f)).locations();
        for (cplx w : crits) {
            auto rep = critical_identities(f, w, ang(rng));
            if (!rep.holds) return false;
        }
    }
    return true;
}

// 12. search sanity: no spurious ratio above 1; extremal probes stay maximal
bool criterion_12() {
    for (int n : {3, 4, 5}) {
        for (double p : {1.0, 2.0, kPInf}) {
            SearchConfig cfg;
            cfg.degree = n;
            cfg.p = p;
            cfg.starts = 16;  // full 100-start sweeps were run offline; this
                              // keeps the gate under the ctest time budget
            cfg.seed = 7;
            if (local_search(cfg).best_rho > 1.0 + 1e-6) return false;
        }
    }
    for (int n : {3, 4, 5}) {
        auto probe = local_max_probe(
            named_instance("unity(" + std::to_string(n) + ")").poly, kPInf,
            10000, 1e-3, 3);
        if (probe.fraction != 0.0) return false;
    }
    auto miller = local_max_probe(named_instance("miller").poly, kPInf, 10000,
                                  1e-3, 3);
    return miller.fraction == 0.0;
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        bool (*fn)();
    };
    const Entry entries[] = {
        {"01 boundary family closed forms (h, sigma_1, sigma_inf)", criterion_1},
        {"02 sigma_p monotonicity on random weighted sets", criterion_2},
        {"03 doubly stochastic augmented matrices + known failure", criterion_3},
        {"04 degree-19 instance roots and small matrix columns", criterion_4},
        {"05 differentiator compression identity and off-block norm", criterion_5},
        {"06 discriminant-resultant identity and disk product bound", criterion_6},
        {"07 transform disproof family and 3-atom strengthening", criterion_7},
        {"08 real-zero refinement never violated", criterion_8},
        {"09 rank-one perturbation spectrum / nilpotency / norm", criterion_9},
        {"10 Toeplitz eigenvalue bound scan and equality instance", criterion_10},
        {"11 exclusion boundary and polar identities", criterion_11},
        {"12 search sanity and local-maximum probes", criterion_12},
    };

    setvbuf(stdout, nullptr, _IONBF, 0);
    int failures = 0;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = e.fn();
        } catch (const std::exception& ex) {
            std::printf("FAIL %s (exception: %s)\n", e.label, ex.what());
            ++failures;
            continue;
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        std::printf("%s %s [%.1fs]\n", ok ? "PASS" : "FAIL", e.label, dt);
        if (!ok) ++failures;
    }
    return failures;
}
