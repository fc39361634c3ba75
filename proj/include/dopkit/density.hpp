#pragma once

#include <map>
#include <string>
#include <vector>

#include "dopkit/algdop.hpp"
#include "dopkit/poly.hpp"

namespace dopkit {

// First-order data L^i = b^i - sum_j d_j g^ij of eq. (6).
struct DriftPair {
    RatPoly2 L1, L2;
};

// Measure density rho = prod Gamma_k^{p_k} * exp(Q), stored unnormalized.
struct DensitySpec {
    std::vector<std::pair<RatPoly2, Rat>> factor_exponents; // (Gamma_k, p_k)
    RatPoly2 Q;

    bool operator==(const DensitySpec& o) const {
        return factor_exponents == o.factor_exponents && Q == o.Q;
    }
};

// Exact polynomial identity form of eq. (7): with N_x = c L1 - b L2 and
// N_y = a L2 - b L1 (the adjugate rows applied to L), the compatibility
// condition is  Delta*(d_y N_x - d_x N_y) = N_x d_y Delta - N_y d_x Delta.
bool drift_compatible(const Cometric& g, const DriftPair& d);

// Exact basis of the space of (L1, L2) in the deg_w boxes satisfying eq. (7).
// Throws when Delta is identically zero.
std::vector<DriftPair> solve_drift(const Cometric& g, const Weights& w);

struct IntegrateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrates d h = g^{-1} L against the supplied factor list: finds rational
// residues p_k and a polynomial Q with
//   dh = sum_k p_k dGamma_k / Gamma_k + dQ.
// Throws IntegrateError when the factors are insufficient (residue mismatch)
// or a non-integrable rational part remains. Q is normalized with zero
// constant term.
DensitySpec integrate_drift(const Cometric& g, const DriftPair& d, const BoundarySpec& gamma);

// eq. (9): w_j * deg_{x_j}(Q * Delta) <= 2 w1 + 2 w2 for j = 1, 2.
bool check_degree_bound_9(const RatPoly2& delta, const RatPoly2& Q, const Weights& w);

// One inequality of an integrability table, evaluated at rational parameters.
struct Inequality {
    std::string text; // human-readable, e.g. "p > 3/10"
    bool satisfied;
};

struct IntegrabilityReport {
    std::vector<Inequality> inequalities;
    bool ok() const {
        for (const auto& i : inequalities)
            if (!i.satisfied) return false;
        return true;
    }
};

} // namespace dopkit
