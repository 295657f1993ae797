#include "polyvar/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <regex>
#include <stdexcept>
#include <thread>

#include "polyvar/geometry.hpp"

namespace polyvar {

namespace {

double dist_to_set(cplx z, const std::vector<cplx>& set) {
    double best = std::numeric_limits<double>::infinity();
    for (cplx w : set) best = std::min(best, std::abs(z - w));
    return best;
}

double rho_from(const RootMultiset& zeros, const RootMultiset& crits,
                double p) {
    const auto zl = zeros.locations();
    const auto wl = crits.locations();
    double h = 0.0;
    for (cplx z : zl) h = std::max(h, dist_to_set(z, wl));
    const auto sp = p_variance(WeightedPointSet::from_roots(zeros), p);
    double scale = 0.0;
    for (cplx z : zl) scale = std::max(scale, std::abs(z));
    if (sp.value <= 1e-15 * (1.0 + scale))
        throw std::invalid_argument("all roots equal: sigma_p = 0");
    return h / sp.value;
}

cplx disk_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = std::sqrt(u(rng));
    const double th = 2.0 * M_PI * u(rng);
    return r * cplx(std::cos(th), std::sin(th));
}

// derivative-free simplex ascent; returns best point, value, eval count
struct SimplexResult {
    std::vector<double> x;
    double value = -std::numeric_limits<double>::infinity();
    int evaluations = 0;
    bool collapsed = false;
};

template <typename F>
SimplexResult simplex_maximize(F&& f, std::vector<double> x0, double step,
                               int max_evals) {
    const int d = static_cast<int>(x0.size());
    std::vector<std::vector<double>> pts(d + 1, x0);
    for (int i = 0; i < d; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(d + 1);
    SimplexResult res;
    auto eval = [&](const std::vector<double>& x) {
        ++res.evaluations;
        return f(x);
    };
    for (int i = 0; i <= d; ++i) vals[i] = eval(pts[i]);

    while (res.evaluations < max_evals) {
        std::vector<int> ord(d + 1);
        for (int i = 0; i <= d; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(),
                  [&](int a, int b) { return vals[a] > vals[b]; });
        const int best = ord[0], worst = ord[d], second_worst = ord[d - 1];

        double diam = 0.0;
        for (int i = 1; i <= d; ++i) {
            double s = 0.0;
            for (int j = 0; j < d; ++j) {
                double dd = pts[ord[i]][j] - pts[best][j];
                s += dd * dd;
            }
            diam = std::max(diam, std::sqrt(s));
        }
        if (diam < 1e-10) {
            res.collapsed = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (int i = 0; i <= d; ++i) {
            if (i == worst) continue;
            for (int j = 0; j < d; ++j) centroid[j] += pts[i][j] / d;
        }
        auto blend = [&](double t) {
            std::vector<double> x(d);
            for (int j = 0; j < d; ++j)
                x[j] = centroid[j] + t * (centroid[j] - pts[worst][j]);
            return x;
        };

        auto xr = blend(1.0);
        double fr = eval(xr);
        if (fr > vals[best]) {
            auto xe = blend(2.0);
            double fe = eval(xe);
            if (fe > fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
        } else if (fr > vals[second_worst]) {
            pts[worst] = xr;
            vals[worst] = fr;
        } else {
            auto xc = blend(fr > vals[worst] ? 0.5 : -0.5);
            double fc = eval(xc);
            if (fc > std::max(fr, vals[worst])) {
                pts[worst] = xc;
                vals[worst] = fc;
            } else {
                for (int i = 0; i <= d; ++i) {
                    if (i == best) continue;
                    for (int j = 0; j < d; ++j)
                        pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
                    vals[i] = eval(pts[i]);
                }
            }
        }
    }
    int bi = 0;
    for (int i = 1; i <= static_cast<int>(x0.size()); ++i)
        if (vals[i] > vals[bi]) bi = i;
    res.x = pts[bi];
    res.value = vals[bi];
    return res;
}

std::vector<cplx> unpack(const std::vector<double>& x) {
    std::vector<cplx> roots(x.size() / 2);
    for (size_t k = 0; k < roots.size(); ++k)
        roots[k] = cplx(x[2 * k], x[2 * k + 1]);
    return roots;
}

int worker_count(int starts) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("POLYVAR_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return std::min(hw, std::max(1, starts));
}

StartOutcome run_start(const SearchConfig& cfg, int index) {
    std::mt19937 rng(cfg.seed ^ (0x9e3779b9u * static_cast<unsigned>(index + 1)));
    const int n = cfg.degree;

    std::vector<double> x0(2 * n);
    if (index % 5 == 0) {
        // near-circle start with one mobile root
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int k = 0; k < n - 1; ++k) {
            double th = 2.0 * M_PI * k / (n - 1) + cfg.perturbation * u(rng);
            double r = 1.0 + 0.1 * cfg.perturbation * u(rng);
            x0[2 * k] = r * std::cos(th);
            x0[2 * k + 1] = r * std::sin(th);
        }
        cplx mobile = disk_point(rng);
        x0[2 * (n - 1)] = mobile.real();
        x0[2 * (n - 1) + 1] = mobile.imag();
    } else {
        for (int k = 0; k < n; ++k) {
            cplx z = disk_point(rng);
            x0[2 * k] = z.real();
            x0[2 * k + 1] = z.imag();
        }
    }

    auto objective = [&](const std::vector<double>& x) {
        try {
            return ratio_of_roots(unpack(x), cfg.p);
        } catch (const std::exception&) {
            return -1.0;  // degenerate configuration
        }
    };

    StartOutcome out;
    out.start_index = index;
    std::vector<double> x = x0;
    double step = cfg.simplex_step;
    int evals_left = cfg.max_evals;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> best_x = x0;
    for (int r = 0; r <= cfg.max_restarts && evals_left > 0; ++r) {
        auto sr = simplex_maximize(objective, x, step, evals_left);
        evals_left -= sr.evaluations;
        out.evaluations += sr.evaluations;
        if (sr.value > best) {
            best = sr.value;
            best_x = sr.x;
        }
        if (!sr.collapsed) break;
        out.converged = true;
        x = sr.x;
        step *= 0.2;  // restart tighter around the collapse point
    }
    out.rho = best;
    out.roots = unpack(best_x);
    return out;
}

}  // namespace

double ratio_of_roots(const std::vector<cplx>& root_vec, double p) {
    if (root_vec.size() < 2) throw std::invalid_argument("degree < 2");
    // rho is affine-invariant: center and rescale so the root-finder's
    // absolute error cannot be amplified by shrinking the configuration
    cplx mean(0.0);
    for (cplx z : root_vec) mean += z;
    mean /= double(root_vec.size());
    double r = 0.0;
    for (cplx z : root_vec) r = std::max(r, std::abs(z - mean));
    if (r <= 1e-15) throw std::invalid_argument("all roots equal: sigma_p = 0");
    std::vector<cplx> norm;
    norm.reserve(root_vec.size());
    for (cplx z : root_vec) norm.push_back((z - mean) / r);

    // the zeros are the parameters themselves; re-finding them would merge
    // near-coincident roots and perturb h
    RootMultiset zeros;
    for (cplx z : norm) zeros.entries.push_back({z, 1});
    Polynomial f = from_roots(norm);
    return rho_from(zeros, critical_points(f), p);
}

double ratio(const Polynomial& f, double p) {
    if (f.degree() < 2) throw std::invalid_argument("degree < 2");
    return rho_from(roots(f), critical_points(f), p);
}

SearchRecord local_search(const SearchConfig& cfg) {
    if (cfg.degree < 3) throw std::invalid_argument("degree < 3");
    if (cfg.p < 1.0) throw std::invalid_argument("p < 1");
    if (cfg.starts < 1 || cfg.max_evals < 1 || cfg.max_restarts < 0)
        throw std::invalid_argument("caps must be positive");

    SearchRecord rec;
    rec.starts.resize(cfg.starts);
    const int workers = worker_count(cfg.starts);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    auto body = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= cfg.starts) return;
            rec.starts[i] = run_start(cfg, i);
        }
    };
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();

    rec.best_start = -1;
    for (const auto& s : rec.starts) {
        rec.total_evaluations += s.evaluations;
        // strict > keeps the deterministic lowest-start-index tie-break
        if (rec.best_start < 0 || s.rho > rec.best_rho) {
            rec.best_rho = s.rho;
            rec.best_roots = s.roots;
            rec.best_start = s.start_index;
        }
    }

    if (rec.best_rho > 1.0 + 1e-9) {
        // re-verify at tighter root-finder tolerance before flagging
        RootMultiset zeros;
        for (cplx z : rec.best_roots) zeros.entries.push_back({z, 1});
        Polynomial f = from_roots(rec.best_roots);
        RootOptions tight;
        tight.max_iterations = 5000;
        tight.cluster_radius_rel = 1e-8;
        double rho2 = rho_from(zeros, critical_points(f, tight), cfg.p);
        rec.best_rho = std::min(rec.best_rho, rho2);
        rec.violation_candidate = rho2 > 1.0 + 1e-9;
    }
    return rec;
}

ProbeReport local_max_probe(const Polynomial& f, double p, int trials,
                            double radius, unsigned seed) {
    if (f.degree() < 3) throw std::invalid_argument("degree < 3");
    const auto base_roots = roots(f).expanded();
    ProbeReport rep;
    rep.trials = trials;
    rep.base_rho = ratio(f, p);
    rep.best_perturbed_rho = rep.base_rho;
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto pert = base_roots;
        for (auto& z : pert) z += radius * disk_point(rng);
        double r;
        try {
            r = ratio_of_roots(pert, p);  // rho is scale-free, so no
                                          // renormalization is needed
        } catch (const std::exception&) {
            continue;
        }
        rep.best_perturbed_rho = std::max(rep.best_perturbed_rho, r);
        if (r > rep.base_rho + 1e-9) ++rep.increases;
    }
    rep.fraction = trials > 0 ? double(rep.increases) / trials : 0.0;
    return rep;
}

NamedInstance named_instance(const std::string& name) {
    NamedInstance inst;
    inst.name = name;
    std::smatch m;

    if (name == "miller") {
        std::vector<cplx> c(20, cplx(0.0));
        c[0] = -0.492806889;
        c[17] = 0.896690269;
        c[18] = -0.881444934;
        c[19] = 1.0;
        inst.poly = Polynomial(c);
        return inst;
    }
    if (name == "z4") {
        inst.poly = Polynomial({-4.0, 0.0, -3.0, 0.0, 1.0});
        return inst;
    }
    if (name == "sharp-real") {
        inst.poly = Polynomial({1.0, 0.0, -2.0, 0.0, 1.0});
        return inst;
    }
    if (name == "cubic") {
        inst.poly = Polynomial({0.0, -1.0, 0.0, 1.0});
        return inst;
    }
    if (std::regex_match(name, m, std::regex(R"(example1\((\d+)\))"))) {
        int n = std::stoi(m[1]);
        if (n < 2) throw std::invalid_argument("example1 needs n >= 2");
        RootMultiset r;
        r.entries.push_back({cplx(0.0), 1});
        r.entries.push_back({cplx(1.0), n - 1});
        inst.poly = from_roots(r);
        return inst;
    }
    if (std::regex_match(name, m, std::regex(R"(unity\((\d+)\))"))) {
        int n = std::stoi(m[1]);
        if (n < 2) throw std::invalid_argument("unity needs n >= 2");
        std::vector<cplx> c(n + 1, cplx(0.0));
        c[0] = -1.0;
        c[n] = 1.0;
        inst.poly = Polynomial(c);
        return inst;
    }
    if (std::regex_match(name, m, std::regex(R"(claim93\((\d+)\))"))) {
        int n = std::stoi(m[1]);
        inst.kind = NamedInstance::Kind::Measure;
        inst.measure = counterexample_family(n).mu;
        return inst;
    }
    if (std::regex_match(
            name, m,
            std::regex(R"(circulant\((-?[\d.]+),(-?[\d.]+)\))")) ||
        name == "circulant") {
        double a = 1.0, b = 0.5;
        if (!m.empty()) {
            a = std::stod(m[1]);
            b = std::stod(m[2]);
        }
        // cubic with zeros a w^k + b w^(2k), w = exp(2 pi i / 3)
        const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
        std::vector<cplx> zs;
        for (int k = 0; k < 3; ++k) zs.push_back(a * std::pow(w, k) + b * std::pow(w, 2 * k));
        inst.poly = from_roots(zs);
        return inst;
    }
    throw std::invalid_argument("unknown instance: " + name);
}

std::vector<std::string> catalog_names() {
    return {"example1(n)", "unity(n)", "miller",   "claim93(n)",
            "z4",          "sharp-real", "cubic",  "circulant(a,b)"};
}

}  // namespace polyvar
