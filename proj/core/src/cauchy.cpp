#include "polyvar/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyvar {

PointMeasure::PointMeasure(std::vector<Atom> atoms, bool normalize_flag) {
    if (atoms.empty()) throw std::invalid_argument("measure needs atoms");
    double scale = 0.0;
    for (const auto& a : atoms) {
        if (a.weight <= 0.0) throw std::invalid_argument("weights must be > 0");
        scale = std::max(scale, std::abs(a.location));
    }
    const double merge_tol = 1e-12 * (1.0 + scale);
    for (const auto& a : atoms) {
        bool merged = false;
        for (auto& e : atoms_) {
            if (std::abs(e.location - a.location) <= merge_tol) {
                e.weight += a.weight;
                merged = true;
                break;
            }
        }
        if (!merged) atoms_.push_back(a);
    }
    if (normalize_flag) {
        double w = total_weight();
        for (auto& a : atoms_) a.weight /= w;
        normalized_ = true;
    }
}

double PointMeasure::total_weight() const {
    double w = 0.0;
    for (const auto& a : atoms_) w += a.weight;
    return w;
}

PointMeasure PointMeasure::normalize() const {
    return PointMeasure(atoms_, true);
}

WeightedPointSet PointMeasure::as_point_set() const {
    WeightedPointSet s;
    for (const auto& a : atoms_) s.points.push_back({a.location, a.weight});
    return s;
}

std::vector<cplx> PointMeasure::support() const {
    std::vector<cplx> out;
    for (const auto& a : atoms_) out.push_back(a.location);
    return out;
}

PointMeasure PointMeasure::uniform_on_roots(const RootMultiset& r) {
    std::vector<Atom> atoms;
    for (const auto& e : r.entries)
        atoms.push_back({e.location, double(e.multiplicity)});
    return PointMeasure(atoms);
}

MeasureStats measure_stats(const PointMeasure& mu) {
    const PointMeasure m = mu.normalized() ? mu : mu.normalize();
    MeasureStats st;
    st.barycenter = barycenter(m.as_point_set());
    double s2 = 0.0;
    for (const auto& a : m.atoms())
        s2 += a.weight * std::norm(a.location - st.barycenter);
    st.sigma_2 = std::sqrt(s2);
    st.sigma_inf = chebyshev_disk(m.support()).radius;

    double wmin = m.atoms()[0].weight;
    for (const auto& a : m.atoms()) wmin = std::min(wmin, a.weight);
    for (size_t k = 0; k < m.atoms().size(); ++k)
        if (m.atoms()[k].weight <= wmin * (1.0 + 1e-12))
            st.s_min.push_back(static_cast<int>(k));
    return st;
}

cplx cauchy_eval(const PointMeasure& mu, cplx z) {
    double scale = 0.0;
    for (const auto& a : mu.atoms()) scale = std::max(scale, std::abs(a.location));
    cplx s(0.0);
    for (const auto& a : mu.atoms()) {
        cplx d = z - a.location;
        if (std::abs(d) <= 1e-14 * (1.0 + scale))
            throw std::invalid_argument("evaluation at an atom");
        s += a.weight / d;
    }
    return s;
}

std::vector<cplx> transform_zeros(const PointMeasure& mu) {
    const auto& atoms = mu.atoms();
    const int n = static_cast<int>(atoms.size());
    if (n < 2) throw std::invalid_argument("need >= 2 atoms");
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    Eigen::VectorXcd v(n);
    double total = mu.total_weight();
    for (int k = 0; k < n; ++k) {
        a(k, k) = atoms[k].location;
        v(k) = std::sqrt(atoms[k].weight / total);
    }
    return eigenvalues(compress(a, v));
}

std::vector<cplx> extended_zero_set(const PointMeasure& mu) {
    auto w = transform_zeros(mu);
    cplx e = barycenter(mu.as_point_set());
    double scale = 1.0;
    for (const auto& a : mu.atoms()) scale = std::max(scale, std::abs(a.location));
    bool present = false;
    for (cplx z : w)
        if (std::abs(z - e) <= 1e-10 * scale) present = true;
    if (!present) w.push_back(e);
    return w;
}

ComplexMatrix rank_one_perturbation(const PointMeasure& mu, cplx a) {
    if (!mu.normalized())
        throw std::invalid_argument("rank-one perturbation needs a normalized measure");
    const auto& atoms = mu.atoms();
    const int n = static_cast<int>(atoms.size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int l = 0; l < n; ++l) {
        double sl = std::sqrt(atoms[l].weight);
        for (int k = 0; k < n; ++k)
            m(l, k) = (a - atoms[l].location) * sl * std::sqrt(atoms[k].weight);
        m(l, l) += atoms[l].location;
    }
    return m;
}

CounterexampleReport counterexample_family(int n) {
    if (n < 3)
        throw std::invalid_argument(
            "family needs n >= 3 (transform zeros are non-real below that)");
    const double denom = 2.0 * n + 1.0;
    PointMeasure mu(
        {{cplx(1.0, 0.0), 1.0 / denom},
         {cplx(0.0, 1.0), n / denom},
         {cplx(0.0, -1.0), n / denom}},
        true);

    CounterexampleReport r;
    r.mu = mu;
    r.extended_zeros = extended_zero_set(mu);
    r.all_real = true;
    for (cplx z : r.extended_zeros)
        if (std::abs(z.imag()) > 1e-9) r.all_real = false;
    r.sigma_inf = measure_stats(mu).sigma_inf;
    double d = std::numeric_limits<double>::infinity();
    for (cplx z : r.extended_zeros)
        d = std::min(d, std::abs(z - cplx(0.0, 1.0)));
    r.dist_i_to_we = d;
    r.claims_violated = r.dist_i_to_we > r.sigma_inf;
    return r;
}

}  // namespace polyvar
