#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyvar {

using cplx = std::complex<double>;

/// A zero set with multiplicities. `total` is the sum of multiplicities.
struct RootMultiset {
    struct Entry {
        cplx location;
        int multiplicity = 1;
    };
    std::vector<Entry> entries;

    int total() const {
        int t = 0;
        for (const auto& e : entries) t += e.multiplicity;
        return t;
    }
    /// Distinct locations, one per entry.
    std::vector<cplx> locations() const;
    /// Locations repeated according to multiplicity (size == total()).
    std::vector<cplx> expanded() const;
};

/// Dense complex polynomial, coefficients in ascending degree order.
/// The leading coefficient is kept nonzero (trailing near-zeros trimmed).
class Polynomial {
public:
    Polynomial() : coeffs_{cplx(0.0)} {}
    explicit Polynomial(std::vector<cplx> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx leading() const { return coeffs_.back(); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == cplx(0.0); }

    cplx operator()(cplx z) const { return evaluate(z); }
    cplx evaluate(cplx z) const;

    /// Monic rescaling; the caller carries the leading coefficient if needed.
    Polynomial monic() const;

private:
    std::vector<cplx> coeffs_;
};

/// Expand a(z - r_1)^{m_1} ... (z - r_k)^{m_k}. Throws on zero leading factor.
Polynomial from_roots(const RootMultiset& roots, cplx leading = cplx(1.0));
Polynomial from_roots(const std::vector<cplx>& roots, cplx leading = cplx(1.0));

/// Coefficientwise k*c_k shift. The derivative of a constant is the zero
/// polynomial (degree 0, is_zero() true).
Polynomial derivative(const Polynomial& p);

struct RootOptions {
    int max_iterations = 500;
    /// Relative radius for the initial greedy clustering pass.
    double cluster_radius_rel = 1e-7;
    unsigned seed = 0x9e3779b9u;
};

/// All complex roots with multiplicity recovery.
///
/// Aberth-Ehrlich simultaneous iteration, companion-matrix fallback on
/// non-convergence. Nearby approximants are merged into multiplicity
/// clusters; each cluster centroid is re-polished as a simple root of the
/// appropriate derivative, so multiple roots come back with full accuracy
/// rather than the eps^(1/m) smear of the raw iteration.
RootMultiset roots(const Polynomial& p, const RootOptions& opts = {});

/// roots(derivative(p)); total = degree - 1.
RootMultiset critical_points(const Polynomial& p, const RootOptions& opts = {});

/// Critical points that are not zeros of F: for each zero of multiplicity
/// m_j >= 2, the m_j - 1 nearest critical points are dropped (count-based
/// matching, exact by theory).
RootMultiset distinct_critical_points(const RootMultiset& zeros,
                                      const RootMultiset& crits);

struct DiscrResult {
    cplx discriminant;  // prod_{k>l} (z_k - z_l)^2 of the monic rescaling
    cplx resultant;     // prod_k prod_j (z_k - w_j)
};

/// Discriminant and resultant of the monic rescaling of p, computed from the
/// zeros and critical points. |discr| = n^n |res|.
DiscrResult discriminant_resultant(const Polynomial& p);

/// Apolarity pairing sum_k (-1)^k C(n,k) a_k b_{n-k} where a_k, b_k are the
/// binomial-normalized coefficients. Zero iff F and G are apolar.
cplx apolar_form(const Polynomial& f, const Polynomial& g);

}  // namespace polyvar
