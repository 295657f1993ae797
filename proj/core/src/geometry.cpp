#include "polyvar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <random>
#include <stdexcept>

namespace polyvar {

namespace {

double sq(double x) { return x * x; }

Disk disk_two(cplx a, cplx b) {
    return {0.5 * (a + b), 0.5 * std::abs(a - b)};
}

// Circumscribed disk of three points; falls back to the best two-point disk
// when nearly collinear.
Disk disk_three(cplx a, cplx b, cplx c) {
    double ax = a.real(), ay = a.imag();
    double bx = b.real(), by = b.imag();
    double cx = c.real(), cy = c.imag();
    double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    double span = std::max({std::abs(a - b), std::abs(b - c), std::abs(a - c)});
    if (std::abs(d) < 1e-14 * sq(span + 1.0)) {
        Disk best = disk_two(a, b);
        for (Disk cand : {disk_two(a, c), disk_two(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    double ux = (sq(ax) + sq(ay)) * (by - cy) + (sq(bx) + sq(by)) * (cy - ay) +
                (sq(cx) + sq(cy)) * (ay - by);
    double uy = (sq(ax) + sq(ay)) * (cx - bx) + (sq(bx) + sq(by)) * (ax - cx) +
                (sq(cx) + sq(cy)) * (bx - ax);
    cplx ctr(ux / d, uy / d);
    return {ctr, std::abs(ctr - a)};
}

bool in_disk(const Disk& d, cplx p) {
    return std::abs(p - d.center) <= d.radius + 1e-12 * (1.0 + d.radius);
}

double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double dist_to_segment(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

struct Objective {
    const WeightedPointSet& s;
    double p;
    double eps;
    double total;

    double value(cplx c) const {
        double f = 0.0;
        for (const auto& pt : s.points)
            f += pt.weight * std::pow(std::norm(pt.location - c) + sq(eps), 0.5 * p);
        return f / total;
    }
    cplx gradient(cplx c) const {
        cplx g(0.0);
        for (const auto& pt : s.points) {
            double d2 = std::norm(pt.location - c) + sq(eps);
            g += pt.weight * p * std::pow(d2, 0.5 * p - 1.0) * (c - pt.location);
        }
        return g / total;
    }
    // 2x2 real Hessian as (hxx, hxy, hyy).
    std::array<double, 3> hessian(cplx c) const {
        double hxx = 0.0, hxy = 0.0, hyy = 0.0;
        for (const auto& pt : s.points) {
            cplx u = c - pt.location;
            double d2 = std::norm(u) + sq(eps);
            double a = pt.weight * p * std::pow(d2, 0.5 * p - 1.0) / total;
            double b = pt.weight * p * (p - 2.0) * std::pow(d2, 0.5 * p - 2.0) / total;
            hxx += a + b * sq(u.real());
            hyy += a + b * sq(u.imag());
            hxy += b * u.real() * u.imag();
        }
        return {hxx, hxy, hyy};
    }
};

CenterResult weiszfeld(const WeightedPointSet& s) {
    const double total = s.total_weight();
    double scale = 1.0;
    for (const auto& pt : s.points)
        scale = std::max(scale, std::abs(pt.location));
    cplx c = barycenter(s);
    int iters = 0;
    const double anchor_tol = 1e-12 * scale;
    for (; iters < 100000; ++iters) {
        // Anchored-point test: if the iterate sits on a data point, it is
        // optimal there iff the residual pull of the others does not exceed
        // that point's weight.
        int anchor = -1;
        for (size_t k = 0; k < s.points.size(); ++k)
            if (std::abs(c - s.points[k].location) <= anchor_tol) {
                anchor = static_cast<int>(k);
                break;
            }
        if (anchor >= 0) {
            cplx pull(0.0);
            double denom = 0.0;
            for (size_t k = 0; k < s.points.size(); ++k) {
                if (static_cast<int>(k) == anchor) continue;
                cplx d = s.points[k].location - c;
                double ad = std::abs(d);
                pull += s.points[k].weight * d / ad;
                denom += s.points[k].weight / ad;
            }
            double r = std::abs(pull);
            if (r <= s.points[anchor].weight || denom == 0.0) break;  // optimal
            c += (r - s.points[anchor].weight) / denom * (pull / r);
            continue;
        }
        cplx num(0.0);
        double den = 0.0;
        for (const auto& pt : s.points) {
            double d = std::abs(pt.location - c);
            num += pt.weight / d * pt.location;
            den += pt.weight / d;
        }
        cplx next = num / den;
        double step = std::abs(next - c);
        c = next;
        if (step <= 1e-13 * scale) break;
    }
    double v = 0.0;
    for (const auto& pt : s.points) v += pt.weight * std::abs(pt.location - c);
    return {c, v / total, 1.0, iters};
}

CenterResult descend(const WeightedPointSet& s, double p) {
    const double total = s.total_weight();
    double scale = 1.0;
    for (const auto& pt : s.points)
        scale = std::max(scale, std::abs(pt.location));

    std::vector<double> eps_schedule{0.0};
    if (p < 2.0) eps_schedule = {1e-4 * scale, 1e-8 * scale, 1e-12 * scale, 0.0};

    cplx c = barycenter(s);
    int iters = 0;
    for (double eps : eps_schedule) {
        Objective obj{s, p, eps, total};
        double f = obj.value(c);
        double step0 = 0.1 * scale;
        for (int it = 0; it < 20000; ++it, ++iters) {
            cplx g = obj.gradient(c);
            double gn = std::abs(g);
            double gtol = 1e-12 * p * std::pow(std::max(1.0, scale), p - 1.0);
            if (gn <= gtol) break;

            // Damped Newton when the Hessian is safely positive definite,
            // otherwise a backtracked gradient step.
            cplx dir = -g;
            auto [hxx, hxy, hyy] = obj.hessian(c);
            double det = hxx * hyy - hxy * hxy;
            if (det > 1e-300 && hxx > 0.0) {
                double nx = (hyy * (-g.real()) - hxy * (-g.imag())) / det;
                double ny = (hxx * (-g.imag()) - hxy * (-g.real())) / det;
                dir = cplx(nx, ny);
            }
            double t = 1.0;
            if (std::abs(dir) > step0) t = step0 / std::abs(dir);
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                cplx cand = c + t * dir;
                double fc = obj.value(cand);
                if (fc < f - 1e-4 * t * gn * std::min(std::abs(dir), gn)) {
                    c = cand;
                    f = fc;
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
            if (!moved) break;
        }
    }
    Objective exact{s, p, 0.0, total};
    return {c, std::pow(exact.value(c), 1.0 / p), p, iters};
}

}  // namespace

WeightedPointSet WeightedPointSet::uniform(const std::vector<cplx>& pts) {
    WeightedPointSet s;
    for (cplx z : pts) s.points.push_back({z, 1.0});
    return s;
}

WeightedPointSet WeightedPointSet::from_roots(const RootMultiset& r) {
    WeightedPointSet s;
    for (const auto& e : r.entries)
        s.points.push_back({e.location, double(e.multiplicity)});
    return s;
}

cplx barycenter(const WeightedPointSet& s) {
    if (s.points.empty()) throw std::invalid_argument("empty point set");
    cplx sum(0.0);
    for (const auto& pt : s.points) sum += pt.weight * pt.location;
    return sum / s.total_weight();
}

CenterResult p_variance(const WeightedPointSet& s, double p) {
    if (s.points.empty()) throw std::invalid_argument("empty point set");
    if (p < 1.0) throw std::invalid_argument("p < 1 is not supported");

    if (p == kPInf) {
        Disk d = chebyshev_disk(s.locations());
        return {d.center, d.radius, kPInf, 0};
    }
    if (p == 2.0) {
        cplx e = barycenter(s);
        double v = 0.0;
        for (const auto& pt : s.points)
            v += pt.weight * std::norm(pt.location - e);
        return {e, std::sqrt(v / s.total_weight()), 2.0, 0};
    }
    if (p == 1.0) return weiszfeld(s);
    return descend(s, p);
}

Disk chebyshev_disk(const std::vector<cplx>& pts, unsigned seed) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    std::vector<cplx> p = pts;
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);

    Disk d{p[0], 0.0};
    for (size_t i = 1; i < p.size(); ++i) {
        if (in_disk(d, p[i])) continue;
        d = {p[i], 0.0};
        for (size_t j = 0; j < i; ++j) {
            if (in_disk(d, p[j])) continue;
            d = disk_two(p[i], p[j]);
            for (size_t k = 0; k < j; ++k) {
                if (in_disk(d, p[k])) continue;
                d = disk_three(p[i], p[j], p[k]);
            }
        }
    }
    return d;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b,
                 HausdorffMode mode) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty set");
    auto one_sided = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
        double h = 0.0;
        for (cplx xi : x) {
            double m = std::numeric_limits<double>::infinity();
            for (cplx yj : y) m = std::min(m, std::abs(xi - yj));
            h = std::max(h, m);
        }
        return h;
    };
    double h = one_sided(a, b);
    if (mode == HausdorffMode::Symmetric) h = std::max(h, one_sided(b, a));
    return h;
}

double circular_deviation(const std::vector<cplx>& pts) {
    const size_t n = pts.size();
    if (n == 2) return 0.5 * std::abs(pts[0] - pts[1]);
    if (n == 3) {
        const cplx w(-0.5, std::sqrt(3.0) / 2.0);
        const cplx w2 = w * w;
        double a = std::abs(pts[0] + w * pts[1] + w2 * pts[2]);
        double b = std::abs(pts[0] + w2 * pts[1] + w * pts[2]);
        return std::max(a, b) / 3.0;
    }
    if (n == 4) {
        // (1,-1,c,-c) classes: |z_a - z_b| + |z_c - z_d| over the 3 pairings.
        double best = 0.0;
        const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        for (const auto& q : pairs) {
            double v = std::abs(pts[q[0]] - pts[q[1]]) +
                       std::abs(pts[q[2]] - pts[q[3]]);
            best = std::max(best, v);
        }
        return best / 4.0;
    }
    throw std::invalid_argument("circular deviation defined for n in {2,3,4}");
}

std::vector<cplx> convex_hull(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<cplx> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double dist_to_convex_hull(cplx z, const std::vector<cplx>& hull) {
    if (hull.empty()) throw std::invalid_argument("empty hull");
    if (hull.size() == 1) return std::abs(z - hull[0]);
    if (hull.size() == 2) return dist_to_segment(z, hull[0], hull[1]);
    bool inside = true;
    for (size_t i = 0; i < hull.size(); ++i) {
        cplx a = hull[i], b = hull[(i + 1) % hull.size()];
        if (cross(a, b, z) < 0) {
            inside = false;
            break;
        }
    }
    if (inside) return 0.0;
    double d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < hull.size(); ++i)
        d = std::min(d, dist_to_segment(z, hull[i], hull[(i + 1) % hull.size()]));
    return d;
}

}  // namespace polyvar
