#include "polyvar/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyvar {

namespace {

double scale_of(const std::vector<cplx>& pts) {
    double s = 0.0;
    for (cplx z : pts) s = std::max(s, std::abs(z));
    return s;
}

// distance from z to the nearest point of the set, with the achieving point
std::pair<double, cplx> nearest(cplx z, const std::vector<cplx>& set) {
    double best = std::numeric_limits<double>::infinity();
    cplx arg{};
    for (cplx w : set) {
        double d = std::abs(z - w);
        if (d < best) {
            best = d;
            arg = w;
        }
    }
    return {best, arg};
}

// one-sided Hausdorff with the witness in `from` that realizes it
std::pair<double, cplx> hausdorff_witness(const std::vector<cplx>& from,
                                          const std::vector<cplx>& to) {
    double h = 0.0;
    cplx wit = from.empty() ? cplx(0.0) : from[0];
    for (cplx z : from) {
        double d = nearest(z, to).first;
        if (d > h) {
            h = d;
            wit = z;
        }
    }
    return {h, wit};
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::HOLDS: return "HOLDS";
        case Status::VIOLATED: return "VIOLATED";
        default: return "INCONCLUSIVE";
    }
}

double Verdict::detail(const std::string& key) const {
    for (const auto& [k, v] : details)
        if (k == key) return v;
    throw std::out_of_range("no detail named " + key);
}

Status classify(double margin, double tolerance) {
    if (margin > 10.0 * tolerance) return Status::HOLDS;
    if (margin < -10.0 * tolerance) return Status::VIOLATED;
    return Status::INCONCLUSIVE;
}

Verdict variance_check(const Polynomial& f, double p, double tol) {
    if (f.degree() < 2) throw std::invalid_argument("degree < 2");
    const auto zeros = roots(f);
    const auto crits = critical_points(f);
    const auto zl = zeros.locations();
    const auto wl = crits.locations();
    const double scale = 1.0 + scale_of(zl);

    auto [h, wit] = hausdorff_witness(zl, wl);
    const auto sp = p_variance(WeightedPointSet::from_roots(zeros), p);
    const auto sinf = p_variance(WeightedPointSet::from_roots(zeros), kPInf);

    Verdict v;
    v.check = "variance";
    v.tolerance = tol * scale;
    v.margin = sp.value - h;
    v.status = classify(v.margin, v.tolerance);
    v.witness = wit;
    v.details.emplace_back("p", p);
    v.details.emplace_back("h", h);
    v.details.emplace_back("sigma_p", sp.value);
    if (sp.value > 0.0) v.details.emplace_back("rho_p", h / sp.value);

    // equality family a(z-c)^n - b: all critical points coincide
    bool extremal = true;
    for (cplx w : wl)
        if (std::abs(w - wl[0]) > 1e-7 * scale) extremal = false;
    v.details.emplace_back("extremal_form", extremal ? 1.0 : 0.0);

    const double n = f.degree();
    v.details.emplace_back("asymptotic_margin",
                           std::pow(2.0, 1.0 / n) * sinf.value - h);
    if (v.status == Status::INCONCLUSIVE && std::abs(v.margin) <= v.tolerance)
        v.note = "equality within tolerance";
    return v;
}

Verdict reverse_check(const Polynomial& f, double tol) {
    if (f.degree() < 2) throw std::invalid_argument("degree < 2");
    const auto zeros = roots(f);
    const auto crits = critical_points(f);
    const auto zl = zeros.locations();
    const double scale = 1.0 + scale_of(zl);

    auto [h, wit] = hausdorff_witness(crits.locations(), zl);
    const auto s1 = p_variance(WeightedPointSet::from_roots(zeros), 1.0);

    Verdict v;
    v.check = "reverse";
    v.tolerance = tol * scale;
    v.margin = s1.value - h;
    v.status = classify(v.margin, v.tolerance);
    v.witness = wit;
    v.details.emplace_back("h_reverse", h);
    v.details.emplace_back("sigma_1", s1.value);
    return v;
}

Verdict real_zero_refined_check(const Polynomial& f, double tol) {
    if (f.degree() < 2) throw std::invalid_argument("degree < 2");
    const auto zeros = roots(f);
    const auto zl = zeros.locations();
    const double scale = 1.0 + scale_of(zl);
    for (cplx z : zl)
        if (std::abs(z.imag()) > 1e-8 * scale)
            throw std::invalid_argument("zeros are not real");

    const auto crits = critical_points(f);
    const auto wl = crits.locations();
    const auto s2 = p_variance(WeightedPointSet::from_roots(zeros), 2.0);
    const double n = f.degree();
    const double radius = s2.value / std::sqrt(n - 1.0);

    Verdict v;
    v.check = "real_zero_refined";
    v.tolerance = tol * scale;
    v.margin = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < zl.size(); ++k) {
        double m = radius - nearest(zl[k], wl).first;
        v.details.emplace_back("margin_" + std::to_string(k), m);
        if (m < v.margin) {
            v.margin = m;
            v.witness = zl[k];
        }
    }
    v.status = classify(v.margin, v.tolerance);
    v.details.emplace_back("radius", radius);
    // sigma_2 companion for the reverse direction; sharp at (z^2-1)^2
    v.details.emplace_back("companion_margin",
                           s2.value - hausdorff_witness(wl, zl).first);
    return v;
}

Verdict schmeisser_check(const Polynomial& f, int grid_density, double p,
                         double tol) {
    if (f.degree() < 2) throw std::invalid_argument("degree < 2");
    if (grid_density < 1) throw std::invalid_argument("grid density < 1");
    const auto zeros = roots(f);
    const auto zl = zeros.locations();
    const double scale = 1.0 + scale_of(zl);
    const auto crits = critical_points(f);
    const auto wl = crits.locations();
    const auto sp = p_variance(WeightedPointSet::from_roots(zeros), p);

    auto hull = convex_hull(zl);
    double diam = 0.0;
    for (size_t i = 0; i < hull.size(); ++i)
        for (size_t j = i + 1; j < hull.size(); ++j)
            diam = std::max(diam, std::abs(hull[i] - hull[j]));

    std::vector<cplx> samples = hull;
    double slack = 0.0;
    if (diam > 0.0) {
        const double h = diam / grid_density;
        slack = h;  // conservative covering radius of the sample cloud
        // hull edge samples
        for (size_t i = 0; i < hull.size(); ++i) {
            cplx a = hull[i], b = hull[(i + 1) % hull.size()];
            int steps = std::max(1, int(std::ceil(std::abs(b - a) / h)));
            for (int s = 1; s < steps; ++s)
                samples.push_back(a + (b - a) * (double(s) / steps));
        }
        // interior triangular lattice
        double lo_x = hull[0].real(), hi_x = lo_x;
        double lo_y = hull[0].imag(), hi_y = lo_y;
        for (cplx z : hull) {
            lo_x = std::min(lo_x, z.real());
            hi_x = std::max(hi_x, z.real());
            lo_y = std::min(lo_y, z.imag());
            hi_y = std::max(hi_y, z.imag());
        }
        const double row = h * std::sqrt(3.0) / 2.0;
        int r = 0;
        for (double y = lo_y; y <= hi_y + 1e-15; y += row, ++r) {
            double x0 = lo_x + (r % 2 ? h / 2.0 : 0.0);
            for (double x = x0; x <= hi_x + 1e-15; x += h) {
                cplx z(x, y);
                if (dist_to_convex_hull(z, hull) <= 1e-12 * scale)
                    samples.push_back(z);
            }
        }
    }

    double sample_min = std::numeric_limits<double>::infinity();
    cplx wit{};
    for (cplx z : samples) {
        double m = sp.value - nearest(z, wl).first;
        if (m < sample_min) {
            sample_min = m;
            wit = z;
        }
    }

    Verdict v;
    v.check = "schmeisser";
    v.tolerance = tol * scale;
    v.witness = wit;
    v.margin = sample_min - slack;  // certified: dist is 1-Lipschitz in zeta
    if (sample_min < -10.0 * v.tolerance)
        v.status = Status::VIOLATED;
    else if (v.margin > 10.0 * v.tolerance)
        v.status = Status::HOLDS;
    else
        v.status = Status::INCONCLUSIVE;
    v.details.emplace_back("p", p);
    v.details.emplace_back("sigma_p", sp.value);
    v.details.emplace_back("sample_min", sample_min);
    v.details.emplace_back("slack", slack);
    // finite-p failure criterion for the z(z-1)^(n-1) family
    if (std::isfinite(p)) {
        const double n = f.degree();
        double crit = 1.0 / n + 2.0 * std::pow(n, -1.0 / p);
        v.details.emplace_back("example_family_fails", crit < 1.0 ? 1.0 : 0.0);
    }
    return v;
}

ExclusionReport exclusion_check(const Polynomial& f, int zero_index,
                                double tol) {
    if (f.degree() < 2) throw std::invalid_argument("degree < 2");
    const auto zeros = roots(f);
    const int k = static_cast<int>(zeros.entries.size());
    if (zero_index < 0 || zero_index >= k)
        throw std::invalid_argument("invalid zero index");
    if (k < 2) throw std::invalid_argument("only one distinct zero");
    const cplx z1 = zeros.entries[zero_index].location;
    const int m1 = zeros.entries[zero_index].multiplicity;
    const int n = f.degree();
    const double scale = 1.0 + scale_of(zeros.locations());

    ExclusionReport r;
    r.m1 = m1;
    r.d = std::numeric_limits<double>::infinity();
    cplx nearest_zero{};
    for (int j = 0; j < k; ++j) {
        if (j == zero_index) continue;
        double dd = std::abs(zeros.entries[j].location - z1);
        if (dd < r.d) {
            r.d = dd;
            nearest_zero = zeros.entries[j].location;
        }
    }

    const auto crits = critical_points(f);
    const auto wl = distinct_critical_points(zeros, crits).expanded();
    if (wl.empty()) throw std::runtime_error("no distinct critical points");

    const double radius = m1 * r.d / n;
    auto [dw, wwit] = nearest(z1, wl);
    r.open_disk.check = "exclusion_open_disk";
    r.open_disk.tolerance = tol * scale;
    r.open_disk.margin = dw - radius;
    r.open_disk.status = classify(r.open_disk.margin, r.open_disk.tolerance);
    if (r.open_disk.status == Status::INCONCLUSIVE &&
        r.open_disk.margin >= -r.open_disk.tolerance)
        // the excluded disk is open, so a boundary critical point is allowed
        r.open_disk.note = "critical point on the open-disk boundary";
    r.open_disk.witness = wwit;
    r.open_disk.details.emplace_back("radius", radius);
    r.open_disk.details.emplace_back("nearest_crit_dist", dw);

    // side count: sweep directed lines through z1 over the critical angles
    std::vector<double> angles;
    for (int j = 0; j < k; ++j) {
        if (j == zero_index) continue;
        double th = std::arg(zeros.entries[j].location - z1);
        angles.push_back(th);
        angles.push_back(th + M_PI);
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> probes = angles;
    for (size_t i = 0; i < angles.size(); ++i) {
        double a = angles[i];
        double b = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2 * M_PI;
        probes.push_back((a + b) / 2.0);
    }
    r.s = 0;
    for (double psi : probes) {
        int cnt = 0;
        for (int j = 0; j < k; ++j) {
            if (j == zero_index) continue;
            cplx u = (zeros.entries[j].location - z1) *
                     cplx(std::cos(-psi), std::sin(-psi));
            if (u.imag() > 1e-12 * scale) cnt += zeros.entries[j].multiplicity;
        }
        r.s = std::max(r.s, cnt);
    }

    // internally tangent disk of K = disk of diameter d toward the nearest zero
    const cplx dir = (nearest_zero - z1) / std::abs(nearest_zero - z1);
    const double tr = m1 * r.d / (2.0 * (m1 + r.s));
    const cplx tc = z1 + dir * tr;
    auto [dt, twit] = nearest(tc, wl);
    r.tangent_disk.check = "exclusion_tangent_disk";
    r.tangent_disk.tolerance = tol * scale;
    r.tangent_disk.margin = dt - tr;
    r.tangent_disk.status =
        classify(r.tangent_disk.margin, r.tangent_disk.tolerance);
    r.tangent_disk.witness = twit;
    r.tangent_disk.details.emplace_back("radius", tr);
    r.tangent_disk.details.emplace_back("side_count", r.s);
    return r;
}

CriticalIdentityReport critical_identities(const Polynomial& f, cplx w,
                                           double psi) {
    const auto zeros = roots(f);
    const auto zl = zeros.expanded();
    const double scale = 1.0 + scale_of(zl);
    for (cplx z : zl)
        if (std::abs(z - w) <= 1e-10 * scale)
            throw std::invalid_argument("w is a zero of F");

    CriticalIdentityReport r;
    double sine_sum = 0.0, left = 0.0, right = 0.0, inv_r_sum = 0.0;
    for (size_t j = 0; j < zl.size(); ++j) {
        const cplx rel = zl[j] - w;
        const double rk = std::abs(rel);
        const double phi = std::arg(rel) - psi;
        const double s = std::sin(phi);
        inv_r_sum += 1.0 / rk;
        sine_sum += s / rk;
        const double inv_d = std::abs(s) / rk;
        if (inv_d <= 1e-12 / rk * scale) {
            r.on_line.push_back(static_cast<int>(j));
        } else if (s > 0.0) {
            r.left.push_back(static_cast<int>(j));
            left += inv_d;
        } else {
            r.right.push_back(static_cast<int>(j));
            right += inv_d;
        }
    }
    r.sine_residual = std::abs(sine_sum);
    r.partition_residual = std::abs(left - right);
    r.residual_bound = 1e-8 * inv_r_sum;
    r.holds = r.sine_residual <= r.residual_bound &&
              r.partition_residual <= r.residual_bound;
    return r;
}

NonunivalenceReport nonunivalence_search(const Polynomial& f, const Disk& disk,
                                         int grid) {
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("degree < 2");
    const Polynomial df = derivative(f);
    const double in_tol = 1e-12 * (1.0 + disk.radius + std::abs(disk.center));

    auto inside = [&](cplx z) {
        return std::abs(z - disk.center) <= disk.radius + in_tol;
    };

    NonunivalenceReport rep;
    rep.verdict.check = "nonunivalence";
    rep.verdict.status = Status::INCONCLUSIVE;

    const auto& c = f.coeffs();
    for (int ir = 0; ir <= grid && !rep.found; ++ir) {
        const double rho = disk.radius * double(ir) / grid;
        const int nth = (ir == 0) ? 1 : grid;
        for (int it = 0; it < nth && !rep.found; ++it) {
            const double th = 2.0 * M_PI * it / nth + 0.37 / (ir + 1);
            const cplx z1 =
                disk.center + rho * cplx(std::cos(th), std::sin(th));
            // difference quotient (F(z1)-F(z2))/(z1-z2) as polynomial in z2:
            // q_j = sum_{k >= j+1} c_k z1^(k-1-j)
            std::vector<cplx> q(n, cplx(0.0));
            for (int j = 0; j < n; ++j) {
                cplx s(0.0);
                for (int k = n; k >= j + 1; --k) s = s * z1 + c[k];
                q[j] = s;
            }
            Polynomial quotient(q);
            if (quotient.is_zero() || quotient.degree() < 1) continue;
            for (cplx z2 : roots(quotient).expanded()) {
                // Newton-polish z2 as a root of F(.) - F(z1)
                const cplx target = f(z1);
                for (int it2 = 0; it2 < 50; ++it2) {
                    cplx fv = f(z2) - target;
                    cplx dv = df(z2);
                    if (std::abs(dv) < 1e-300) break;
                    cplx step = fv / dv;
                    z2 -= step;
                    if (std::abs(step) < 1e-15 * (1.0 + std::abs(z2))) break;
                }
                const double sep = std::abs(z1 - z2);
                const double res = std::abs(f(z1) - f(z2));
                if (inside(z1) && inside(z2) && sep > 1e-6 && res <= 1e-10) {
                    rep.found = true;
                    rep.pair = {z1, z2, res};
                    rep.verdict.status = Status::HOLDS;
                    rep.verdict.margin = sep;
                    rep.verdict.witness = z1;
                    rep.verdict.note = "collision pair found";
                    break;
                }
            }
        }
    }
    if (!rep.found) rep.verdict.note = "no collision found; semidecision only";
    return rep;
}

CauchyVerdicts cauchy_conjecture_check(const PointMeasure& mu_in, double tol) {
    if (mu_in.atoms().size() < 2)
        throw std::invalid_argument("fewer than 2 atoms");
    const PointMeasure mu = mu_in.normalized() ? mu_in : mu_in.normalize();
    const auto st = measure_stats(mu);
    const auto support = mu.support();
    const double scale = 1.0 + scale_of(support);
    const auto v = transform_zeros(mu);
    const auto we = extended_zero_set(mu);

    std::vector<cplx> smin;
    for (int idx : st.s_min) smin.push_back(mu.atoms()[idx].location);

    CauchyVerdicts out;
    {
        auto [h, wit] = hausdorff_witness(smin, v);
        out.conjecture.check = "cauchy_min_weight";
        out.conjecture.tolerance = tol * scale;
        out.conjecture.margin = st.sigma_inf - h;
        out.conjecture.status =
            classify(out.conjecture.margin, out.conjecture.tolerance);
        out.conjecture.witness = wit;
        out.conjecture.details.emplace_back("h", h);
        out.conjecture.details.emplace_back("sigma_inf", st.sigma_inf);
    }
    const double hsym = hausdorff(support, we, HausdorffMode::Symmetric);
    {
        out.claim_sigma2.check = "cauchy_claim_sigma2";
        out.claim_sigma2.tolerance = tol * scale;
        out.claim_sigma2.margin = st.sigma_2 - hsym;
        out.claim_sigma2.status =
            classify(out.claim_sigma2.margin, out.claim_sigma2.tolerance);
        out.claim_sigma2.details.emplace_back("H", hsym);
        out.claim_sigma2.details.emplace_back("sigma_2", st.sigma_2);
    }
    {
        out.claim_sigmainf.check = "cauchy_claim_sigmainf";
        out.claim_sigmainf.tolerance = tol * scale;
        out.claim_sigmainf.margin = st.sigma_inf - hsym;
        out.claim_sigmainf.status =
            classify(out.claim_sigmainf.margin, out.claim_sigmainf.tolerance);
        out.claim_sigmainf.details.emplace_back("H", hsym);
        out.claim_sigmainf.details.emplace_back("sigma_inf", st.sigma_inf);
    }
    return out;
}

}  // namespace polyvar
