#include "dopkit/branches.hpp"

#include <algorithm>

namespace dopkit {

namespace {

// order bound helpers: the smallest exponent a composed term could have if
// nothing canceled. Series orders are taken from the germ; a certified-zero
// coordinate contributes its window (nothing below it can appear).
int series_order_floor(const LaurentSeries& s) {
    if (auto o = s.order()) return *o;
    return s.known_to() + 1;
}

long compose_order_floor(const BranchGerm& germ, const RatPoly2& p) {
    long m0 = LaurentSeries::kExact;
    long ox = series_order_floor(germ.xi), oy = series_order_floor(germ.eta);
    for (const auto& [e, c] : p.terms())
        m0 = std::min(m0, static_cast<long>(e.first) * ox + static_cast<long>(e.second) * oy);
    return m0;
}

} // namespace

LaurentSeries compose_on_branch(const BranchGerm& germ, const RatPoly2& p) {
    // powers of xi and eta are reused across the support
    int dx = std::max(p.deg_x(), 0), dy = std::max(p.deg_y(), 0);
    std::vector<LaurentSeries> xp(static_cast<std::size_t>(dx) + 1), yp(static_cast<std::size_t>(dy) + 1);
    xp[0] = LaurentSeries(Rat(1));
    for (int i = 1; i <= dx; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * germ.xi;
    yp[0] = LaurentSeries(Rat(1));
    for (int j = 1; j <= dy; ++j) yp[static_cast<std::size_t>(j)] = yp[static_cast<std::size_t>(j - 1)] * germ.eta;
    LaurentSeries acc;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        LaurentSeries term = xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)];
        term = term * LaurentSeries(c);
        acc = first ? term : acc + term;
        first = false;
    }
    if (first) acc = LaurentSeries(); // zero polynomial: exact zero
    return acc;
}

Valuation valuation(const BranchGerm& germ, const RatPoly2& p) {
    if (p.is_zero()) return Valuation::infinite();
    LaurentSeries s = compose_on_branch(germ, p);
    if (s.has_terms()) return Valuation::finite(*s.order());
    // certified zero through the window; meaningful only if the window covers
    // at least the lowest exponent the composition could have produced
    if (s.known_to() >= compose_order_floor(germ, p)) return Valuation::infinite();
    return Valuation::unknown();
}

namespace {

// verdict for "series is identically zero on its certified window", where
// floor is the lowest exponent the expression could have had
Verdict zero_verdict(const LaurentSeries& s, long floor) {
    if (s.has_terms()) return Verdict::no;
    if (s.known_to() >= floor) return Verdict::yes;
    return Verdict::inconclusive;
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::no || b == Verdict::no) return Verdict::no;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
    return Verdict::yes;
}

} // namespace

Verdict check_condition_11(const BranchGerm& germ, const Cometric& g) {
    LaurentSeries xid = germ.xi.derivative();
    LaurentSeries etad = germ.eta.derivative();
    LaurentSeries a = compose_on_branch(germ, g.a);
    LaurentSeries b = compose_on_branch(germ, g.b);
    LaurentSeries c = compose_on_branch(germ, g.c);

    LaurentSeries lhs1 = b * xid - a * etad;
    LaurentSeries lhs2 = c * xid - b * etad;

    long fx = series_order_floor(xid), fe = series_order_floor(etad);
    long floor1 = std::min(compose_order_floor(germ, g.b) + fx, compose_order_floor(germ, g.a) + fe);
    long floor2 = std::min(compose_order_floor(germ, g.c) + fx, compose_order_floor(germ, g.b) + fe);
    return combine(zero_verdict(lhs1, floor1), zero_verdict(lhs2, floor2));
}

Verdict check_eq_12(const BranchGerm& germ, const Cometric& g) {
    LaurentSeries xid = germ.xi.derivative();
    LaurentSeries etad = germ.eta.derivative();
    if (!xid.has_terms() || !etad.has_terms())
        throw std::invalid_argument("check_eq_12: both coordinates must be non-constant");
    Valuation va = valuation(germ, g.a);
    Valuation vb = valuation(germ, g.b);
    Valuation vc = valuation(germ, g.c);
    if (!va.is_finite() || !vb.is_finite() || !vc.is_finite()) return Verdict::inconclusive;
    int diff = *xid.order() - *etad.order();
    bool ok = (va.value - vb.value == diff) && (vb.value - vc.value == diff);
    return ok ? Verdict::yes : Verdict::no;
}

namespace {

// chart k -> chart 0 and back, generic over the coordinate value type.
template <typename T, typename Inv>
std::pair<T, T> to_chart0(const std::pair<T, T>& p, int chart, Inv inv) {
    const T& u = p.first;
    const T& v = p.second;
    switch (chart) {
        case 0:
            return p;
        case 1: {
            // x = 1/x1, y = y1 / x1^2
            T ix = inv(u);
            return {ix, v * ix * ix};
        }
        case 2:
            return {u, inv(v)};
        case 3: {
            // x = 1/x3, y = 1/(x3^2 y3)
            T ix = inv(u);
            return {ix, inv(u * u * v)};
        }
        default:
            throw std::invalid_argument("chart index out of range");
    }
}

template <typename T, typename Inv>
std::pair<T, T> from_chart0(const std::pair<T, T>& p, int chart, Inv inv) {
    const T& x = p.first;
    const T& y = p.second;
    switch (chart) {
        case 0:
            return p;
        case 1: {
            T ix = inv(x);
            return {ix, y * ix * ix};
        }
        case 2:
            return {x, inv(y)};
        case 3: {
            T ix = inv(x);
            return {ix, x * x * inv(y)};
        }
        default:
            throw std::invalid_argument("chart index out of range");
    }
}

} // namespace

std::pair<Rat, Rat> chart_transform(const std::pair<Rat, Rat>& p, int from_chart, int to_chart) {
    auto inv = [](const Rat& q) {
        if (q == 0) throw std::domain_error("chart_transform: point on the excluded locus");
        return Rat(1) / q;
    };
    return from_chart0(to_chart0(p, from_chart, inv), to_chart, inv);
}

std::pair<LaurentSeries, LaurentSeries> chart_transform(const std::pair<LaurentSeries, LaurentSeries>& s,
                                                        int from_chart, int to_chart) {
    auto inv = [](const LaurentSeries& f) { return f.inverse(); };
    return from_chart0(to_chart0(s, from_chart, inv), to_chart, inv);
}

WProjParam::WProjParam(RatPoly2 x, RatPoly2 y, RatPoly2 z) : X(std::move(x)), Y(std::move(y)), Z(std::move(z)) {
    validate();
}

void WProjParam::validate() const {
    if (X.deg_y() > 0 || Y.deg_y() > 0 || Z.deg_y() > 0)
        throw std::invalid_argument("parametrization components must be univariate in t");
    if (X.is_constant() && Y.is_constant() && Z.is_constant())
        throw std::invalid_argument("constant parametrization");
    RatPoly2 g;
    bool any = false;
    for (const RatPoly2* p : {&X, &Y, &Z}) {
        if (p->is_zero()) continue;
        g = any ? poly_gcd(g, *p) : p->monic_grlex();
        any = true;
    }
    if (!any || !g.is_constant())
        throw std::invalid_argument("parametrization components have a common root");
}

WProjParam dual_param(const WProjParam& phi) {
    RatPoly2 xd = phi.X.partial_x(), yd = phi.Y.partial_x(), zd = phi.Z.partial_x();
    RatPoly2 u = yd * phi.Z - zd * phi.Y;
    RatPoly2 v = zd * phi.X - xd * phi.Z;
    RatPoly2 w = xd * phi.Y - yd * phi.X;
    if (u.is_zero() && v.is_zero() && w.is_zero())
        throw std::domain_error("dual_param: degenerate parametrization");
    // remove common polynomial content
    RatPoly2 g;
    bool any = false;
    for (const RatPoly2* p : {&u, &v, &w}) {
        if (p->is_zero()) continue;
        g = any ? poly_gcd(g, *p) : p->monic_grlex();
        any = true;
    }
    if (!g.is_constant()) {
        u = u.is_zero() ? u : *divides(g, u);
        v = v.is_zero() ? v : *divides(g, v);
        w = w.is_zero() ? w : *divides(g, w);
    }
    WProjParam out;
    out.X = u;
    out.Y = v;
    out.Z = w;
    return out;
}

RatPoly2 substitute_weighted_homogeneous(const RatPoly2& gamma, const RatPoly2& X, const RatPoly2& Y,
                                         const RatPoly2& Z) {
    auto d = weighted_degree(gamma, Weights(1, 2));
    if (!d) return RatPoly2();
    RatPoly2 acc;
    for (const auto& [e, c] : gamma.terms()) {
        long zpow = *d - e.first - 2L * e.second;
        acc += RatPoly2(c) * X.pow(e.first) * Y.pow(e.second) * Z.pow(static_cast<int>(zpow));
    }
    return acc;
}

bool on_curve(const WProjParam& phi, const RatPoly2& gamma) {
    if (phi.Z.is_zero()) throw std::domain_error("on_curve: Z is identically zero");
    return substitute_weighted_homogeneous(gamma, phi.X, phi.Y, phi.Z).is_zero();
}

} // namespace dopkit
