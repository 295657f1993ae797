#include "polyvar/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyvar/geometry.hpp"

namespace polyvar {

namespace {

double spectral_norm(const ComplexMatrix& m) {
    return m.jacobiSvd().singularValues()(0);
}

// Hungarian algorithm (potentials formulation), minimum-sum assignment on a
// square cost matrix. Returns row -> column.
std::vector<int> min_sum_assignment(const Eigen::MatrixXd& cost) {
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

// Hermitian unitary reflector H with Hv proportional to e_1, so that
// rows/cols 2..n of H span an orthonormal basis of v-perp.
ComplexMatrix householder_frame(const Eigen::VectorXcd& v) {
    const int n = static_cast<int>(v.size());
    cplx phase(1.0, 0.0);
    if (std::abs(v(0)) > 1e-300) phase = v(0) / std::abs(v(0));
    Eigen::VectorXcd u = v;
    u(0) += phase;
    double un = u.norm();
    if (un < 1e-14) {
        // v is already -phase * e_1
        return ComplexMatrix::Identity(n, n);
    }
    u /= un;
    return ComplexMatrix::Identity(n, n) - 2.0 * u * u.adjoint();
}

void check_unit(const Eigen::VectorXcd& v) {
    if (std::abs(v.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("vector is not unit length");
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
    if (m.rows() > 200) throw std::invalid_argument("dimension > 200");
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigenvalue iteration failed");
    std::vector<cplx> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) out[i] = es.eigenvalues()(i);
    return out;
}

ComplexMatrix differentiator_basis(int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    ComplexMatrix u(n, n);
    const double s = 1.0 / std::sqrt(double(n));
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * M_PI * double(k) * double(l) / n;
            u(l, k) = s * cplx(std::cos(th), std::sin(th));
        }
    return u;
}

ComplexMatrix compress(const ComplexMatrix& a, const Eigen::VectorXcd& v) {
    if (a.rows() != a.cols() || a.rows() != v.size())
        throw std::invalid_argument("dimension mismatch");
    check_unit(v);
    ComplexMatrix h = householder_frame(v);
    ComplexMatrix t = h * a * h;  // h is Hermitian and unitary
    return t.bottomRightCorner(a.rows() - 1, a.cols() - 1);
}

double off_block_norm(const ComplexMatrix& a, const Eigen::VectorXcd& v) {
    if (a.rows() != a.cols() || a.rows() != v.size())
        throw std::invalid_argument("dimension mismatch");
    check_unit(v);
    Eigen::VectorXcd av = a * v;
    Eigen::VectorXcd residual = av - v * (v.adjoint() * av)(0);
    return residual.norm();
}

std::vector<cplx> dft_coefficients(const std::vector<cplx>& zeros) {
    const int n = static_cast<int>(zeros.size());
    std::vector<cplx> a(n, cplx(0.0));
    for (int j = 0; j < n; ++j) {
        cplx s(0.0);
        for (int k = 1; k <= n; ++k) {
            double th = -2.0 * M_PI * double(k) * double(j) / n;
            s += zeros[k - 1] * cplx(std::cos(th), std::sin(th));
        }
        a[j] = s / double(n);
    }
    return a;
}

ComplexMatrix circulant_from_zeros(const std::vector<cplx>& zeros) {
    const int n = static_cast<int>(zeros.size());
    const auto a = dft_coefficients(zeros);
    ComplexMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = a[((j - i) % n + n) % n];
    return c;
}

ToeplitzInstance make_toeplitz(const std::vector<cplx>& a) {
    const int n = static_cast<int>(a.size()) + 1;
    if (n < 3) throw std::invalid_argument("n >= 3 required");
    ToeplitzInstance t;
    t.a = a;
    t.a0 = cplx(0.0);
    for (cplx x : a) t.a0 -= x;
    // entry(i,j) = a_{(j-i) mod n} with a_n-th wrap never hit (size n-1)
    t.matrix.resize(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
            int d = ((j - i) % n + n) % n;
            t.matrix(i, j) = (d == 0) ? t.a0 : a[d - 1];
        }
    return t;
}

ToeplitzReport toeplitz_check(const std::vector<cplx>& a, double tol) {
    ToeplitzInstance t = make_toeplitz(a);
    ToeplitzReport r;
    for (cplx x : a) r.bound += std::norm(x);
    double mn = std::numeric_limits<double>::infinity();
    for (cplx ev : eigenvalues(t.matrix)) mn = std::min(mn, std::norm(ev));
    r.min_abs_eig_sq = mn;
    r.margin = r.bound - mn;
    r.holds = mn <= r.bound + tol;
    return r;
}

std::vector<cplx> numerical_range_boundary(const ComplexMatrix& a,
                                           int samples) {
    if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
    if (samples < 16) throw std::invalid_argument("samples >= 16 required");
    std::vector<cplx> pts;
    pts.reserve(samples);
    for (int s = 0; s < samples; ++s) {
        double th = 2.0 * M_PI * s / samples;
        cplx rot(std::cos(-th), std::sin(-th));
        ComplexMatrix h = 0.5 * (rot * a + std::conj(rot) * a.adjoint());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
        Eigen::VectorXcd x = es.eigenvectors().col(a.rows() - 1);  // top
        pts.push_back((x.adjoint() * a * x)(0));
    }
    return pts;
}

std::pair<cplx, double> min_shift_norm(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("non-square matrix");
    const int n = static_cast<int>(a.rows());
    auto f = [&](cplx c) {
        return spectral_norm(a - c * ComplexMatrix::Identity(n, n));
    };

    // Coarse phase: Chebyshev center of the spectrum (exact optimum for
    // normal A) plus a grid over the spectrum's bounding box.
    auto evs = eigenvalues(a);
    Disk cheb = chebyshev_disk(evs);
    cplx best = cheb.center;
    double fbest = f(best);
    double lo_x = evs[0].real(), hi_x = lo_x, lo_y = evs[0].imag(), hi_y = lo_y;
    for (cplx e : evs) {
        lo_x = std::min(lo_x, e.real());
        hi_x = std::max(hi_x, e.real());
        lo_y = std::min(lo_y, e.imag());
        hi_y = std::max(hi_y, e.imag());
    }
    const int grid = 7;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            cplx c(lo_x + (hi_x - lo_x) * i / grid,
                   lo_y + (hi_y - lo_y) * j / grid);
            double v = f(c);
            if (v < fbest) {
                fbest = v;
                best = c;
            }
        }

    // Local descent: Nelder-Mead on the convex (nonsmooth) objective.
    double scale = std::max({hi_x - lo_x, hi_y - lo_y, 1e-3});
    std::array<cplx, 3> sx{best, best + cplx(0.25 * scale, 0.0),
                           best + cplx(0.0, 0.25 * scale)};
    std::array<double, 3> sf{f(sx[0]), f(sx[1]), f(sx[2])};
    for (int it = 0; it < 300; ++it) {
        std::array<int, 3> ord{0, 1, 2};
        std::sort(ord.begin(), ord.end(),
                  [&](int i, int j) { return sf[i] < sf[j]; });
        if (std::abs(sx[ord[0]] - sx[ord[2]]) < 1e-11 * (1.0 + scale)) break;
        cplx centroid = 0.5 * (sx[ord[0]] + sx[ord[1]]);
        cplx xr = centroid + (centroid - sx[ord[2]]);
        double fr = f(xr);
        if (fr < sf[ord[0]]) {
            cplx xe = centroid + 2.0 * (centroid - sx[ord[2]]);
            double fe = f(xe);
            if (fe < fr) {
                sx[ord[2]] = xe;
                sf[ord[2]] = fe;
            } else {
                sx[ord[2]] = xr;
                sf[ord[2]] = fr;
            }
        } else if (fr < sf[ord[1]]) {
            sx[ord[2]] = xr;
            sf[ord[2]] = fr;
        } else {
            cplx xc = centroid + 0.5 * (sx[ord[2]] - centroid);
            double fc = f(xc);
            if (fc < sf[ord[2]]) {
                sx[ord[2]] = xc;
                sf[ord[2]] = fc;
            } else {
                for (int i : {1, 2}) {
                    sx[ord[i]] = sx[ord[0]] + 0.5 * (sx[ord[i]] - sx[ord[0]]);
                    sf[ord[i]] = f(sx[ord[i]]);
                }
            }
        }
    }
    for (int i = 0; i < 3; ++i)
        if (sf[i] < fbest) {
            fbest = sf[i];
            best = sx[i];
        }
    return {best, fbest};
}

SubmatrixSpectraReport submatrix_spectra_check(const ComplexMatrix& a,
                                               int samples, double tol) {
    const int n = static_cast<int>(a.rows());
    if (n != a.cols()) throw std::invalid_argument("non-square matrix");
    double anorm = spectral_norm(a);
    double normality = (a.adjoint() * a - a * a.adjoint()).norm();
    if (normality > tol * std::max(anorm * anorm, 1e-30) + 1e-12)
        throw std::invalid_argument("matrix is not normal");

    std::vector<cplx> spectra_union;
    for (int k = 0; k < n; ++k) {
        ComplexMatrix sub(n - 1, n - 1);
        int ii = 0;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                sub(ii, jj++) = a(i, j);
            }
            ++ii;
        }
        if (n == 1) continue;
        for (cplx ev : eigenvalues(sub)) spectra_union.push_back(ev);
    }

    SubmatrixSpectraReport r;
    r.min_shift = min_shift_norm(a).second;
    if (spectra_union.empty()) {
        r.holds = true;
        return r;
    }

    // W(A) for normal A is the convex hull of the spectrum. Sample the hull
    // (boundary + interior grid); dist(., U) is 1-Lipschitz so the covering
    // radius certifies the supremum.
    auto evs = eigenvalues(a);
    auto hull = convex_hull(evs);
    double span = 0.0;
    for (cplx h1 : hull)
        for (cplx h2 : hull) span = std::max(span, std::abs(h1 - h2));
    const int g = std::max(8, samples / 16);
    double step = (span > 0.0) ? span / g : 0.0;
    std::vector<cplx> wsamples = hull;
    if (hull.size() >= 2 && span > 0.0) {
        for (size_t i = 0; i < hull.size(); ++i) {
            cplx p0 = hull[i], p1 = hull[(i + 1) % hull.size()];
            int m = std::max(1, int(std::abs(p1 - p0) / step));
            for (int t = 1; t < m; ++t)
                wsamples.push_back(p0 + (p1 - p0) * (double(t) / m));
        }
        double lo_x = hull[0].real(), hi_x = lo_x, lo_y = hull[0].imag(),
               hi_y = lo_y;
        for (cplx h : hull) {
            lo_x = std::min(lo_x, h.real());
            hi_x = std::max(hi_x, h.real());
            lo_y = std::min(lo_y, h.imag());
            hi_y = std::max(hi_y, h.imag());
        }
        for (double x = lo_x; x <= hi_x; x += step)
            for (double y = lo_y; y <= hi_y; y += step) {
                cplx z(x, y);
                if (dist_to_convex_hull(z, hull) <= 1e-12 * (1.0 + span))
                    wsamples.push_back(z);
            }
    }
    double h_wu = 0.0;
    for (cplx w : wsamples) {
        double mind = std::numeric_limits<double>::infinity();
        for (cplx u : spectra_union) mind = std::min(mind, std::abs(w - u));
        h_wu = std::max(h_wu, mind);
    }
    double h_uw = 0.0;
    for (cplx u : spectra_union)
        h_uw = std::max(h_uw, dist_to_convex_hull(u, hull));
    r.hausdorff_distance = std::max(h_wu, h_uw);
    r.discretization = step;  // covering-radius slack for the sampled side
    r.holds = r.hausdorff_distance <= r.min_shift + r.discretization + 10 * tol;
    return r;
}

std::pair<cplx, cplx> steiner_foci(cplx z1, cplx z2, cplx z3) {
    // roots of 3z^2 - 2(z1+z2+z3)z + (z1 z2 + z1 z3 + z2 z3)
    cplx s1 = z1 + z2 + z3;
    cplx s2 = z1 * z2 + z1 * z3 + z2 * z3;
    cplx disc = std::sqrt(s1 * s1 - 3.0 * s2);
    return {(s1 + disc) / 3.0, (s1 - disc) / 3.0};
}

IndefiniteProbe indefinite_lemma_probe(const ComplexMatrix& b,
                                       const Eigen::VectorXcd& x) {
    if (b.rows() != b.cols() || (b.rows() != 2 && b.rows() != 3))
        throw std::invalid_argument("dimension must be 2 or 3");
    if (x.norm() < 1e-300) throw std::invalid_argument("zero vector");
    double num = (b * x).squaredNorm() + (b.adjoint() * x).squaredNorm();
    return {num / x.squaredNorm()};
}

double multiset_match_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multiset size mismatch");
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    Eigen::MatrixXd cost(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost(i, j) = std::abs(a[i] - b[j]);
    auto asg = min_sum_assignment(cost);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, cost(i, asg[i]));
    return worst;
}

}  // namespace polyvar
