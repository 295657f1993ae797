#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyvar/cauchy.hpp"
#include "polyvar/geometry.hpp"
#include "polyvar/poly.hpp"

namespace polyvar {

enum class Status { HOLDS, VIOLATED, INCONCLUSIVE };

std::string to_string(Status s);

/// Three-valued check outcome. Positive margin means the inequality holds
/// with room to spare. The guard band is 10x the tolerance: |margin| inside
/// the band is INCONCLUSIVE, so boundary-equality instances never come out
/// VIOLATED by round-off.
struct Verdict {
    std::string check;
    Status status = Status::INCONCLUSIVE;
    double margin = 0.0;
    double tolerance = 1e-9;
    cplx witness{};     // offending zero / critical point / sample center
    std::string note;
    std::vector<std::pair<std::string, double>> details;

    double detail(const std::string& key) const;
};

Status classify(double margin, double tolerance);

/// h(F,F') <= sigma_p(F). Also reports rho_p = h/sigma_p, whether F has the
/// equality form a(z-c)^n - b (all critical points coincide), and the margin
/// of the asymptotic bound h <= 2^(1/n) sigma_inf.
Verdict variance_check(const Polynomial& f, double p, double tol = 1e-9);

/// Reverse inequality h(F',F) <= sigma_1(F) (proved).
Verdict reverse_check(const Polynomial& f, double tol = 1e-9);

/// For real-zero F: every disk D(z_l, sigma_2/sqrt(n-1)) contains a critical
/// point (proved). Details carry per-zero margins and the sigma_2 companion
/// bound on h(F',F), which is sharp at (z^2-1)^2.
Verdict real_zero_refined_check(const Polynomial& f, double tol = 1e-9);

/// Every point of the zero hull has a critical point within sigma_inf(F).
/// Sampled at hull vertices plus a triangular interior grid; the margin is
/// certified via the 1-Lipschitz bound on distance functions. Details report
/// whether the sigma_p analogue must fail (n^-1 + 2 n^(-1/p) < 1).
Verdict schmeisser_check(const Polynomial& f, int grid_density = 25,
                         double p = kPInf, double tol = 1e-9);

struct ExclusionReport {
    Verdict open_disk;       // no critical point inside radius m1 d / n
    Verdict tangent_disk;    // none on the inner disk of diameter m1/(m1+s) d
    double d = 0.0;          // distance to the nearest other zero
    int m1 = 1;              // multiplicity of the selected zero
    int s = 0;               // max zero count strictly on one side of a line
};

/// Critical-point exclusion regions around the zero at `zero_index` of the
/// distinct-zero list (multiplicity order as returned by roots()).
ExclusionReport exclusion_check(const Polynomial& f, int zero_index,
                                double tol = 1e-9);

struct CriticalIdentityReport {
    double sine_residual = 0.0;       // |sum sin(phi_k) / r_k|
    double partition_residual = 0.0;  // |sum 1/d_left - sum 1/d_right|
    double residual_bound = 0.0;      // 1e-8 * sum 1/r_k
    std::vector<int> left;            // zero indices strictly left of the line
    std::vector<int> right;
    std::vector<int> on_line;         // d_k = infinity terms
    bool holds = false;
};

/// At a critical point w that is not a zero: the polar identity
/// sum sin(phi_k)/r_k = 0 and the reciprocal-distance partition identity for
/// the line through w at angle psi.
CriticalIdentityReport critical_identities(const Polynomial& f, cplx w,
                                           double psi);

struct NonunivalencePair {
    cplx z1, z2;
    double residual = 0.0;  // |F(z1) - F(z2)| after refinement
};

struct NonunivalenceReport {
    bool found = false;
    NonunivalencePair pair;
    Verdict verdict;  // found -> HOLDS (collision exists); else INCONCLUSIVE
};

/// Semidecision search for z1 != z2 in the disk with F(z1) = F(z2). A miss
/// is never a univalence claim.
NonunivalenceReport nonunivalence_search(const Polynomial& f, const Disk& disk,
                                         int grid = 24);

struct CauchyVerdicts {
    Verdict conjecture;  // h(S_min, V(mu)) <= sigma_inf
    Verdict claim_sigma2;   // H(S, W_e) <= sigma_2   (disproved in general)
    Verdict claim_sigmainf; // H(S, W_e) <= sigma_inf (disproved in general)
};

CauchyVerdicts cauchy_conjecture_check(const PointMeasure& mu,
                                       double tol = 1e-9);

}  // namespace polyvar
