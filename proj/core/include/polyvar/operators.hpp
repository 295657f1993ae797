#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "polyvar/poly.hpp"

namespace polyvar {

using ComplexMatrix = Eigen::MatrixXcd;

/// All eigenvalues with algebraic multiplicity.
std::vector<cplx> eigenvalues(const ComplexMatrix& m);

/// Unitary n x n matrix whose rows are the Fourier differentiator vectors
/// v^(l)_k = exp(2 pi i k l / n) / sqrt(n).
ComplexMatrix differentiator_basis(int n);

/// Compression of A to the orthogonal complement of the unit vector v,
/// expressed in an orthonormal basis of v-perp (Householder frame).
ComplexMatrix compress(const ComplexMatrix& a, const Eigen::VectorXcd& v);

/// Spectral norm of P A Q with P the projection onto v-perp and Q = vv*.
/// Equals sigma_2 of the diagonal for diagonal A and a differentiator v.
double off_block_norm(const ComplexMatrix& a, const Eigen::VectorXcd& v);

struct ToeplitzInstance {
    std::vector<cplx> a;  // a_1 .. a_{n-1}
    cplx a0;              // -sum a_k
    ComplexMatrix matrix; // (n-1) x (n-1), entry(i,j) = a_{(j-i) mod n}
};

ToeplitzInstance make_toeplitz(const std::vector<cplx>& a);

/// Circulant n x n matrix with entry(i,j) = a_{(j-i) mod n} built from the
/// DFT coefficients of a zero sequence; its spectrum is the zero set.
ComplexMatrix circulant_from_zeros(const std::vector<cplx>& zeros);

/// DFT coefficients a_j = (1/n) sum_k z_k e^{-2 pi i k j / n}, so that the
/// circulant built from them has the z_k as its spectrum.
std::vector<cplx> dft_coefficients(const std::vector<cplx>& zeros);

struct ToeplitzReport {
    double min_abs_eig_sq = 0.0;
    double bound = 0.0;  // sum |a_k|^2
    bool holds = false;
    double margin = 0.0;  // bound - min_abs_eig_sq
};

/// Smallest |eigenvalue|^2 of the Toeplitz instance against sum |a_k|^2.
ToeplitzReport toeplitz_check(const std::vector<cplx>& a, double tol = 1e-9);

/// Support points of the numerical range boundary from a uniform angle
/// sweep; returns a convex polygon with Hausdorff error <= |A| 2 pi/samples.
std::vector<cplx> numerical_range_boundary(const ComplexMatrix& a, int samples);

/// Minimizer of c -> |A - cI| (spectral norm). For normal A this is the
/// Chebyshev disk of the spectrum.
std::pair<cplx, double> min_shift_norm(const ComplexMatrix& a);

struct SubmatrixSpectraReport {
    double hausdorff_distance = 0.0;   // H(W(A) polygon, union of spectra)
    double min_shift = 0.0;            // min_c |A - cI|
    double discretization = 0.0;       // certified sampling slack
    bool holds = false;
};

/// Borcea's normal-matrix generalization of Schmeisser: compares the union
/// of principal (n-1)x(n-1) submatrix spectra to W(A).
SubmatrixSpectraReport submatrix_spectra_check(const ComplexMatrix& a,
                                               int samples = 720,
                                               double tol = 1e-8);

/// Critical points of (z-z1)(z-z2)(z-z3): the Steiner inellipse foci.
/// Collinear input degenerates the ellipse but foci are still returned.
std::pair<cplx, cplx> steiner_foci(cplx z1, cplx z2, cplx z3);

struct IndefiniteProbe {
    double ratio = 0.0;  // (|Bx|^2 + |B*x|^2) / |x|^2
};

IndefiniteProbe indefinite_lemma_probe(const ComplexMatrix& b,
                                       const Eigen::VectorXcd& x);

/// Optimal-assignment distance between two complex multisets (they need not
/// have a canonical order). Returns max matched pairwise distance.
double multiset_match_distance(std::vector<cplx> a, std::vector<cplx> b);

}  // namespace polyvar
