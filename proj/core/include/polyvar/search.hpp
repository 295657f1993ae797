#pragma once

#include <string>
#include <vector>

#include "polyvar/cauchy.hpp"
#include "polyvar/poly.hpp"

namespace polyvar {

struct SearchConfig {
    int degree = 3;          // n >= 3
    double p = 2.0;          // >= 1 (kPInf allowed)
    int starts = 32;
    unsigned seed = 1u;
    double perturbation = 0.25;   // start-jitter radius
    int max_evals = 4000;         // per start
    int max_restarts = 3;         // simplex-collapse restarts per start
    double simplex_step = 0.15;   // initial simplex edge
};

struct StartOutcome {
    int start_index = 0;
    double rho = 0.0;
    std::vector<cplx> roots;
    int evaluations = 0;
    bool converged = false;
};

struct SearchRecord {
    double best_rho = 0.0;
    std::vector<cplx> best_roots;
    int best_start = -1;
    long total_evaluations = 0;
    std::vector<StartOutcome> starts;
    /// set only when a rho > 1 survived re-verification at 10x tighter
    /// root-finder tolerance
    bool violation_candidate = false;
};

/// h(F,F') / sigma_p(F); scale- and translation-invariant.
double ratio(const Polynomial& f, double p);
double ratio_of_roots(const std::vector<cplx>& roots, double p);

/// Multistart derivative-free simplex ascent of rho over root coordinates
/// (2n reals). Deterministic for a fixed seed, independent of worker count
/// (set POLYVAR_THREADS to cap the pool). 20% of starts are biased to
/// near-circle configurations with one mobile root.
SearchRecord local_search(const SearchConfig& cfg);

struct ProbeReport {
    int trials = 0;
    int increases = 0;
    double fraction = 0.0;
    double base_rho = 0.0;
    double best_perturbed_rho = 0.0;
};

/// Fraction of random root perturbations of the given radius that increase
/// rho by more than 1e-9. A local maximum reports fraction 0.
ProbeReport local_max_probe(const Polynomial& f, double p, int trials,
                            double radius, unsigned seed);

struct NamedInstance {
    enum class Kind { Poly, Measure };
    std::string name;
    Kind kind = Kind::Poly;
    Polynomial poly;
    PointMeasure measure;
};

/// Catalog keys: example1(n), miller, claim93(n), z4, sharp-real, cubic,
/// circulant(a,b). Throws on unknown names.
NamedInstance named_instance(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace polyvar
