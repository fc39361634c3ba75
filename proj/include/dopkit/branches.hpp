#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dopkit/algdop.hpp"
#include "dopkit/poly.hpp"
#include "dopkit/series.hpp"

namespace dopkit {

// Three-valued verdict for truncated-series checks.
enum class Verdict { yes, no, inconclusive };

// Valuation result: finite order, +infinity (identically zero on a certified
// window wide enough to rule out hidden cancellation), or inconclusive.
struct Valuation {
    enum class Kind { finite, infinite, inconclusive } kind;
    int value = 0; // meaningful for finite

    static Valuation finite(int v) { return {Kind::finite, v}; }
    static Valuation infinite() { return {Kind::infinite, 0}; }
    static Valuation unknown() { return {Kind::inconclusive, 0}; }
    bool is_finite() const { return kind == Kind::finite; }
    bool is_infinite() const { return kind == Kind::infinite; }
};

// ord_t of p(xi(t), eta(t)) for a truncated germ.
Valuation valuation(const BranchGerm& germ, const RatPoly2& p);

// composition p(xi, eta) as a windowed Laurent series
LaurentSeries compose_on_branch(const BranchGerm& germ, const RatPoly2& p);

// eq. (11): b(xi,eta) xi' == a(xi,eta) eta' and c(xi,eta) xi' == b(xi,eta) eta'.
Verdict check_condition_11(const BranchGerm& germ, const Cometric& g);

// eq. (12): v(a) - v(b) == v(b) - v(c) == ord xi' - ord eta'.
// Requires both coordinates non-constant; throws otherwise.
Verdict check_eq_12(const BranchGerm& germ, const Cometric& g);

// Hirzebruch F_2 chart transitions of eq. (20); charts 0..3.
std::pair<Rat, Rat> chart_transform(const std::pair<Rat, Rat>& p, int from_chart, int to_chart);
std::pair<LaurentSeries, LaurentSeries> chart_transform(const std::pair<LaurentSeries, LaurentSeries>& s,
                                                        int from_chart, int to_chart);

// Univariate parametrization [X(t) : Y(t) : Z(t)] in weighted homogeneous
// coordinates (x = X/Z, y = Y/Z^2). Components are stored as polynomials in
// x with deg_y == 0.
struct WProjParam {
    RatPoly2 X, Y, Z;

    WProjParam() = default;
    WProjParam(RatPoly2 x, RatPoly2 y, RatPoly2 z);
    void validate() const; // no common root of all three, not all constant
};

// Projective duality for ordinary P^2 parametrizations, eq. (24); common
// polynomial content removed. Throws on identically-zero output.
WProjParam dual_param(const WProjParam& phi);

// Does the weighted-projective parametrization lie on {Gamma = 0}? Exact:
// substitutes X, Y, Z into the weighted homogenization of Gamma.
bool on_curve(const WProjParam& phi, const RatPoly2& gamma);

// weighted homogenization helper: x^i y^j -> X^i Y^j Z^(D - i - 2j)
RatPoly2 substitute_weighted_homogeneous(const RatPoly2& gamma, const RatPoly2& X, const RatPoly2& Y,
                                         const RatPoly2& Z);

} // namespace dopkit
