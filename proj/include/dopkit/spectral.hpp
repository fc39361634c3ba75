#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dopkit/algdop.hpp"
#include "dopkit/catalog.hpp"
#include "dopkit/density.hpp"
#include "dopkit/linalg.hpp"
#include "dopkit/poly.hpp"

namespace dopkit {

// Monomial basis of P_w(n), ordered by (deg_w ascending, then x-exponent
// ascending). The first k elements always span a filtration subspace.
struct FiltrationBasis {
    Weights w;
    long cutoff = 0;
    std::vector<Expo> monomials;
    std::vector<long> degrees; // deg_w per monomial

    std::size_t size() const { return monomials.size(); }
};

FiltrationBasis filtration_basis(const Weights& w, long n);

struct QuadNode {
    double x, y, weight;
};

struct QuadratureRule {
    std::vector<QuadNode> nodes;
    int order = 0;
    int outer_slices = 0;
    double mass = 0.0; // integral of rho over Omega
};

// Iterated Gauss-Legendre rule over a bounded domain: outer nodes in x over
// the sliced bounding box, inner y-intervals located by bisection on the
// sign-condition polynomials. Node weights include the density.
// Throws std::invalid_argument for unbounded domains or negative exponents.
QuadratureRule build_quadrature(const DomainSpec& omega, const DensitySpec& rho, int order);

// L f = sum g^ij d_ij f + sum b^i d_i f with the drift assembled exactly from
// g and rho (eq. (3) expanded through eq. (6)). Requires every density factor
// to satisfy (A3) against g; throws std::invalid_argument otherwise.
RatPoly2 apply_L(const Cometric& g, const DensitySpec& rho, const RatPoly2& f);

struct InvarianceResult {
    bool invariant = false;
    std::optional<Expo> witness;   // first monomial whose image escapes
    FiltrationBasis basis;
    RatMat matrix;                 // exact matrix of L, rows/cols in basis order
};

// deg_w L(m) <= deg_w m for every basis monomial with deg_w <= n.
InvarianceResult filtration_invariance(const Cometric& g, const DensitySpec& rho, const Weights& w, long n);

struct GramSchmidtResult {
    // column k holds the monomial coefficients of the k-th orthonormal
    // polynomial; upper triangular with positive diagonal
    std::vector<std::vector<double>> coeffs;
    double gram_residual = 0.0; // max |<q_i, q_j> - delta_ij|
    double condition_estimate = 0.0;
};

GramSchmidtResult gram_schmidt(const FiltrationBasis& basis, const QuadratureRule& rule);

// max over basis pairs of |<f1, L f2> - <f2, L f1>| / max(1, |<f1, L f2>|)
double symmetry_defect(const Cometric& g, const DensitySpec& rho, const Weights& w, long n,
                       const QuadratureRule& rule);

struct EigenBlock {
    long degree = 0;
    std::vector<std::size_t> indices; // basis positions of this degree
    std::vector<std::complex<double>> eigenvalues;
    // eigenpolynomial coefficients over the full basis, one column per eigenvalue
    std::vector<std::vector<double>> eigenvectors;
    bool defective = false;
};

struct EigenResult {
    FiltrationBasis basis;
    std::vector<EigenBlock> blocks;
    double max_imag = 0.0;
};

// Eigenvalues block-by-block from the exact filtration matrix; eigenpolynomials
// reconstructed by back-substitution through the lower degree blocks.
EigenResult eigenstructure(const Cometric& g, const DensitySpec& rho, const Weights& w, long n);

// exact rational membership guard used by quadrature tests
bool node_inside_exact(const DomainSpec& omega, double x, double y);

} // namespace dopkit
