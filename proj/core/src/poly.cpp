#include "polyvar/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace polyvar {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Horner value together with the scale sum_k |c_k| |z|^k used for
// floating-point stopping tests.
std::pair<cplx, double> eval_with_scale(const std::vector<cplx>& c, cplx z) {
    cplx v(0.0);
    double s = 0.0;
    double az = std::abs(z);
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        v = v * z + c[k];
        s = s * az + std::abs(c[k]);
    }
    return {v, s};
}

std::vector<cplx> derivative_coeffs(const std::vector<cplx>& c) {
    if (c.size() <= 1) return {cplx(0.0)};
    std::vector<cplx> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
    return d;
}

std::vector<cplx> companion_roots(const std::vector<cplx>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -monic[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

// Aberth-Ehrlich simultaneous iteration on a monic polynomial.
bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z, int max_iter,
            unsigned seed) {
    const int n = static_cast<int>(c.size()) - 1;
    const auto dc = derivative_coeffs(c);

    double rmax = 0.0;
    for (int k = 0; k < n; ++k) {
        double a = std::abs(c[k]);
        if (a > 0.0) rmax = std::max(rmax, std::pow(a, 1.0 / (n - k)));
    }
    double radius = 1.0 + rmax;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    z.resize(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * (i + 0.5) / n + 0.61803398875 + jitter(rng);
        z[i] = radius * (1.0 + jitter(rng)) * cplx(std::cos(th), std::sin(th));
    }

    std::vector<bool> done(n, false);
    for (int it = 0; it < max_iter; ++it) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            auto [pv, scale] = eval_with_scale(c, z[i]);
            if (std::abs(pv) <= 4.0 * n * kEps * scale) {
                done[i] = true;
                continue;
            }
            all_done = false;
            cplx dv = eval_with_scale(dc, z[i]).first;
            cplx newton = (dv != cplx(0.0)) ? pv / dv : cplx(1e-8);
            cplx rep(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                cplx diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = cplx(1e-300);
                rep += 1.0 / diff;
            }
            cplx denom = 1.0 - newton * rep;
            cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            z[i] -= step;
        }
        if (all_done) return true;
    }
    // Accept if every approximation still meets a looser residual bound.
    for (int i = 0; i < n; ++i) {
        auto [pv, scale] = eval_with_scale(c, z[i]);
        if (std::abs(pv) > 1e3 * n * kEps * scale) return false;
    }
    return true;
}

// Newton polish of the centroid of a suspected m-fold cluster, run on the
// (m-1)-th derivative where the root is simple and evaluation noise does
// not swamp the signal.
cplx refine_cluster_root(const std::vector<std::vector<cplx>>& derivs, cplx c,
                         int mult) {
    const auto& p = derivs[mult - 1];
    const auto& dp = derivs[mult];
    if (p.size() <= 1) return c;
    for (int it = 0; it < 60; ++it) {
        auto [pv, scale] = eval_with_scale(p, c);
        cplx dv = eval_with_scale(dp, c).first;
        if (std::abs(dv) < 1e-300) break;
        cplx step = pv / dv;
        c -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(c))) break;
        if (std::abs(pv) <= 2.0 * kEps * scale) break;
    }
    return c;
}

// A merged cluster is genuine only if all derivatives below the candidate
// multiplicity vanish at the polished centroid, up to evaluation round-off.
bool cluster_valid(const std::vector<std::vector<cplx>>& derivs, cplx c,
                   int mult, double tau) {
    for (int j = 0; j < mult; ++j) {
        auto [v, scale] = eval_with_scale(derivs[j], c);
        if (std::abs(v) > tau * std::max(scale, 1e-300)) return false;
    }
    return true;
}

struct Cluster {
    cplx center;
    int mult;
};

}  // namespace

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("empty coefficient list");
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= 1e-300)
        coeffs_.pop_back();
    if (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= 1e-300)
        throw std::invalid_argument("leading coefficient is zero");
}

cplx Polynomial::evaluate(cplx z) const {
    cplx v(0.0);
    for (int k = degree(); k >= 0; --k) v = v * z + coeffs_[k];
    return v;
}

Polynomial Polynomial::monic() const {
    std::vector<cplx> c = coeffs_;
    cplx lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial(std::move(c));
}

std::vector<cplx> RootMultiset::locations() const {
    std::vector<cplx> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.location);
    return out;
}

std::vector<cplx> RootMultiset::expanded() const {
    std::vector<cplx> out;
    out.reserve(total());
    for (const auto& e : entries)
        for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.location);
    return out;
}

Polynomial from_roots(const RootMultiset& roots, cplx leading) {
    return from_roots(roots.expanded(), leading);
}

Polynomial from_roots(const std::vector<cplx>& roots, cplx leading) {
    if (std::abs(leading) <= 1e-300)
        throw std::invalid_argument("zero leading coefficient");
    std::vector<cplx> c{leading};
    for (cplx r : roots) {
        c.push_back(cplx(0.0));
        for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] *= -r;
    }
    return Polynomial(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) return Polynomial();  // flagged zero polynomial
    return Polynomial(derivative_coeffs(p.coeffs()));
}

RootMultiset roots(const Polynomial& p, const RootOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
    if (p.degree() < 1) throw std::invalid_argument("roots of constant");
    const auto monic = p.monic().coeffs();
    const int n = static_cast<int>(monic.size()) - 1;

    if (n == 1) return RootMultiset{{{-monic[0], 1}}};

    std::vector<cplx> raw;
    if (!aberth(monic, raw, opts.max_iterations, opts.seed))
        raw = companion_roots(monic);

    for (cplx r : raw) {
        auto [pv, scale] = eval_with_scale(monic, r);
        if (std::abs(pv) > 1e-6 * std::max(scale, 1.0))
            throw std::runtime_error("root finding failed to converge");
    }

    double maxabs = 0.0;
    for (cplx r : raw) maxabs = std::max(maxabs, std::abs(r));
    const double scale = 1.0 + maxabs;

    // Derivative ladder, needed for multiplicity polish and validation.
    std::vector<std::vector<cplx>> derivs{monic};
    for (int k = 0; k < n; ++k)
        derivs.push_back(derivative_coeffs(derivs.back()));

    // Pass 1: greedy merge at the base clustering radius.
    const double eps1 = opts.cluster_radius_rel * scale;
    std::vector<Cluster> clusters;
    std::vector<char> used(raw.size(), 0);
    for (size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        cplx sum = raw[i];
        int m = 1;
        used[i] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            cplx ctr = sum / double(m);
            for (size_t j = 0; j < raw.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(raw[j] - ctr) <= eps1) {
                    sum += raw[j];
                    ++m;
                    used[j] = 1;
                    grew = true;
                }
            }
        }
        clusters.push_back({refine_cluster_root(derivs, sum / double(m), m), m});
    }

    // Pass 2: validated hierarchical merging. Multiple roots of order m come
    // out of the iteration as clusters of diameter ~ eps^(1/m), far wider
    // than eps1, so close clusters are merged whenever the merged centroid
    // annihilates all derivatives below the combined multiplicity.
    const double horizon = 0.1 * scale;
    // Genuine clusters evaluate at round-off level (~n*eps) after the
    // centroid polish; anything looser lets two simple roots separated by
    // 2*sqrt(tau) pass as a double root.
    const double tau = 1e-13;
    bool merged = true;
    while (merged && clusters.size() > 1) {
        merged = false;
        std::vector<std::tuple<double, size_t, size_t>> pairs;
        for (size_t i = 0; i < clusters.size(); ++i)
            for (size_t j = i + 1; j < clusters.size(); ++j) {
                double d = std::abs(clusters[i].center - clusters[j].center);
                if (d <= horizon) pairs.emplace_back(d, i, j);
            }
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) {
                      return std::get<0>(a) < std::get<0>(b);
                  });
        for (const auto& [d, i, j] : pairs) {
            int m = clusters[i].mult + clusters[j].mult;
            if (m > n) continue;
            cplx ctr = (clusters[i].center * double(clusters[i].mult) +
                        clusters[j].center * double(clusters[j].mult)) /
                       double(m);
            cplx c = refine_cluster_root(derivs, ctr, m);
            if (std::abs(c - ctr) > horizon) continue;
            if (!cluster_valid(derivs, c, m, tau)) continue;
            clusters[i] = {c, m};
            clusters.erase(clusters.begin() + j);
            merged = true;
            break;
        }
    }

    RootMultiset out;
    for (const auto& cl : clusters) out.entries.push_back({cl.center, cl.mult});
    std::sort(out.entries.begin(), out.entries.end(),
              [](const auto& a, const auto& b) {
                  if (a.location.real() != b.location.real())
                      return a.location.real() < b.location.real();
                  return a.location.imag() < b.location.imag();
              });
    return out;
}

RootMultiset critical_points(const Polynomial& p, const RootOptions& opts) {
    if (p.degree() < 2)
        throw std::invalid_argument("critical points need degree >= 2");
    return roots(derivative(p), opts);
}

RootMultiset distinct_critical_points(const RootMultiset& zeros,
                                      const RootMultiset& crits) {
    auto w = crits.expanded();
    std::vector<char> removed(w.size(), 0);
    for (const auto& z : zeros.entries) {
        for (int r = 0; r < z.multiplicity - 1; ++r) {
            int best = -1;
            double bd = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < w.size(); ++i) {
                if (removed[i]) continue;
                double d = std::abs(w[i] - z.location);
                if (d < bd) {
                    bd = d;
                    best = static_cast<int>(i);
                }
            }
            if (best >= 0) removed[best] = 1;
        }
    }
    // Re-cluster what is left, preserving the multiplicities of coincident
    // survivors.
    RootMultiset out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (removed[i]) continue;
        bool found = false;
        for (auto& e : out.entries) {
            if (std::abs(e.location - w[i]) <= 1e-9 * (1.0 + std::abs(w[i]))) {
                ++e.multiplicity;
                found = true;
                break;
            }
        }
        if (!found) out.entries.push_back({w[i], 1});
    }
    return out;
}

DiscrResult discriminant_resultant(const Polynomial& p) {
    if (p.degree() < 2)
        throw std::invalid_argument("discriminant needs degree >= 2");
    const Polynomial m = p.monic();
    const auto z = roots(m).expanded();
    const auto w = critical_points(m).expanded();
    cplx discr(1.0);
    for (size_t k = 0; k < z.size(); ++k)
        for (size_t l = 0; l < k; ++l) {
            cplx d = z[k] - z[l];
            discr *= d * d;
        }
    cplx res(1.0);
    for (cplx zk : z)
        for (cplx wj : w) res *= zk - wj;
    return {discr, res};
}

cplx apolar_form(const Polynomial& f, const Polynomial& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("apolar form needs equal degrees");
    const int n = f.degree();
    cplx sum(0.0);
    for (int k = 0; k <= n; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * f.coeffs()[k] * g.coeffs()[n - k] / binomial(n, k);
    }
    return sum;
}

}  // namespace polyvar
