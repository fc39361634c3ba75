#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dopkit/poly.hpp"

namespace dopkit {

// Symmetric cometric g = [[a, b], [b, c]].
struct Cometric {
    RatPoly2 a, b, c;

    Cometric() = default;
    Cometric(RatPoly2 a_, RatPoly2 b_, RatPoly2 c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    RatPoly2 det() const { return a * c - b * b; } // Delta = ac - b^2

    bool operator==(const Cometric& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Square-free boundary polynomial given as an explicit list of factors.
// Factors are taken as supplied and never factored further. An empty list
// encodes Gamma = 1 (Omega = R^2).
struct BoundarySpec {
    std::vector<RatPoly2> factors;

    BoundarySpec() = default;
    explicit BoundarySpec(std::vector<RatPoly2> f);

    RatPoly2 product() const;
    bool trivial() const { return factors.empty(); }

    // each factor non-constant, pairwise coprime, product square-free
    void validate() const;
};

// Quotients of eq-(4)/(10): a Gx + b Gy = S1 * Gamma, b Gx + c Gy = S2 * Gamma.
struct CofactorCertificate {
    RatPoly2 S1, S2;
    const RatPoly2& L1() const { return S1; }
    const RatPoly2& L2() const { return S2; }
    // true iff deg_w S^i <= w_i in the normalized scale of w
    bool degree_bounds_ok(const Weights& w) const;
};

// (A1): deg_w a <= 2 w1, deg_w b <= w1 + w2, deg_w c <= 2 w2.
bool check_A1(const Cometric& g, const Weights& w);

enum class A2A3Status {
    ok,
    zero_determinant,      // Delta identically zero
    gamma_not_dividing,    // Gamma does not divide Delta
    a3_fails,              // some divisibility of eq. (10) fails
};

struct A2A3Result {
    A2A3Status status = A2A3Status::a3_fails;
    std::optional<CofactorCertificate> certificate;
    bool ok() const { return status == A2A3Status::ok; }
};

// (A2)+(A3) with an exact certificate, verified by back-multiplication.
// Degree bounds on S^i are NOT enforced here; query the certificate.
A2A3Result check_A2_A3(const Cometric& g, const BoundarySpec& gamma);

// One basis element of the linear solution space of eq. (4).
struct MetricSolution {
    Cometric g;
    RatPoly2 S1, S2;
};

// Exact basis of (a, b, c, S1, S2) satisfying eq. (4) within the (A1) degree
// boxes for w. (A2) is not imposed; callers filter. Deterministic basis:
// Bareiss with fixed column order (a, b, c, S1, S2 coefficients, each in
// graded-lex ascending).
std::vector<MetricSolution> solve_metric(const BoundarySpec& gamma, const Weights& w);

// Largest square-free boundary supported by g, given the irreducible factors
// of Delta (constants allowed in the list). Throws when the supplied
// factorization does not multiply back to Delta up to a rational constant.
BoundarySpec maximal_boundary(const Cometric& g, const std::vector<RatPoly2>& delta_factors);

// Admissible changes of variables of eq. (5), split per Example 2.7.
struct ChangeOfVariables {
    enum class Kind { translate, scale, shear } kind;
    Rat alpha{1}, beta{0}, gamma{1};
    RatPoly2 p; // shear polynomial p(x)

    static ChangeOfVariables translate(const Rat& beta);
    static ChangeOfVariables scale(const Rat& alpha, const Rat& gamma); // alpha*gamma != 0
    static ChangeOfVariables shear(const RatPoly2& p);                  // p univariate in x
};

// Pushforward of the cometric under the change of variables.
Cometric apply_change(const Cometric& g, const ChangeOfVariables& ch);
// Transported boundary Gamma o Phi^{-1}.
RatPoly2 apply_change(const RatPoly2& gamma, const ChangeOfVariables& ch);

} // namespace dopkit
