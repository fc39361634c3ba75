#include "dopkit/algdop.hpp"

#include <algorithm>

#include "dopkit/linalg.hpp"

namespace dopkit {

BoundarySpec::BoundarySpec(std::vector<RatPoly2> f) : factors(std::move(f)) { validate(); }

RatPoly2 BoundarySpec::product() const {
    RatPoly2 p{Rat(1)};
    for (const auto& f : factors) p *= f;
    return p;
}

void BoundarySpec::validate() const {
    for (const auto& f : factors) {
        if (f.is_zero()) throw std::invalid_argument("boundary factor is zero");
        if (f.is_constant()) throw std::invalid_argument("boundary factor is constant");
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!poly_gcd(factors[i], factors[j]).is_constant())
                throw std::invalid_argument("boundary factors are not pairwise coprime");
    if (!factors.empty() && !is_squarefree(product()))
        throw std::invalid_argument("boundary product is not square-free");
}

bool CofactorCertificate::degree_bounds_ok(const Weights& w) const {
    auto d1 = weighted_degree(S1, w);
    auto d2 = weighted_degree(S2, w);
    return (!d1 || *d1 <= w.w1) && (!d2 || *d2 <= w.w2);
}

bool check_A1(const Cometric& g, const Weights& w) {
    auto da = weighted_degree(g.a, w);
    auto db = weighted_degree(g.b, w);
    auto dc = weighted_degree(g.c, w);
    return (!da || *da <= 2 * w.w1) && (!db || *db <= w.w1 + w.w2) && (!dc || *dc <= 2 * w.w2);
}

A2A3Result check_A2_A3(const Cometric& g, const BoundarySpec& gamma) {
    A2A3Result res;
    RatPoly2 delta = g.det();
    if (delta.is_zero()) {
        res.status = A2A3Status::zero_determinant;
        return res;
    }
    RatPoly2 G = gamma.product();
    if (!gamma.trivial() && !divides(G, delta)) {
        res.status = A2A3Status::gamma_not_dividing;
        return res;
    }
    RatPoly2 gx = G.partial_x(), gy = G.partial_y();
    RatPoly2 row1 = g.a * gx + g.b * gy;
    RatPoly2 row2 = g.b * gx + g.c * gy;
    auto s1 = divides(G, row1);
    if (!s1) {
        res.status = A2A3Status::a3_fails;
        return res;
    }
    auto s2 = divides(G, row2);
    if (!s2) {
        res.status = A2A3Status::a3_fails;
        return res;
    }
    // the certificate must reproduce the rows exactly
    if (*s1 * G != row1 || *s2 * G != row2) {
        res.status = A2A3Status::a3_fails;
        return res;
    }
    res.status = A2A3Status::ok;
    res.certificate = CofactorCertificate{*s1, *s2};
    return res;
}

namespace {

// Monomials of the (1, w)-box of weighted degree <= bound, graded-lex
// ascending (fixed enumeration order for deterministic bases).
std::vector<Expo> box_monomials(long bound, const Weights& w) {
    std::vector<Expo> v;
    for (int j = 0; w.w2 * j <= bound; ++j)
        for (int i = 0; w.w1 * i + w.w2 * j <= bound; ++i) v.push_back({i, j});
    std::sort(v.begin(), v.end(), [](const Expo& a, const Expo& b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return v;
}

} // namespace

std::vector<MetricSolution> solve_metric(const BoundarySpec& gamma, const Weights& w) {
    RatPoly2 G = gamma.product();
    if (G.is_constant()) throw std::invalid_argument("solve_metric: trivial boundary");
    if (!is_squarefree(G)) throw std::invalid_argument("solve_metric: boundary not square-free");
    RatPoly2 gx = G.partial_x(), gy = G.partial_y();

    const auto mon_a = box_monomials(2 * w.w1, w);
    const auto mon_b = box_monomials(w.w1 + w.w2, w);
    const auto mon_c = box_monomials(2 * w.w2, w);
    const auto mon_s1 = box_monomials(w.w1, w);
    const auto mon_s2 = box_monomials(w.w2, w);

    struct Block {
        const std::vector<Expo>* mons;
        std::size_t offset;
    };
    std::size_t n = 0;
    Block ba{&mon_a, 0};
    n += mon_a.size();
    Block bb{&mon_b, n};
    n += mon_b.size();
    Block bc{&mon_c, n};
    n += mon_c.size();
    Block bs1{&mon_s1, n};
    n += mon_s1.size();
    Block bs2{&mon_s2, n};
    n += mon_s2.size();

    // Equations: coefficients of a*gx + b*gy - S1*G and b*gx + c*gy - S2*G.
    std::map<Expo, std::size_t> eq1, eq2;
    auto touch = [](std::map<Expo, std::size_t>& eq, const std::vector<Expo>& mons, const RatPoly2& mult) {
        for (const auto& m : mons)
            for (const auto& [e, c] : mult.terms())
                eq.try_emplace({m.first + e.first, m.second + e.second}, 0);
    };
    touch(eq1, mon_a, gx);
    touch(eq1, mon_b, gy);
    touch(eq1, mon_s1, G);
    touch(eq2, mon_b, gx);
    touch(eq2, mon_c, gy);
    touch(eq2, mon_s2, G);
    std::size_t rows = 0;
    for (auto& [e, idx] : eq1) idx = rows++;
    for (auto& [e, idx] : eq2) idx = rows++;

    RatMat A(rows, RatVec(n, Rat(0)));
    auto fill = [&](std::map<Expo, std::size_t>& eq, const Block& blk, const RatPoly2& mult, int sign) {
        for (std::size_t k = 0; k < blk.mons->size(); ++k) {
            const Expo& m = (*blk.mons)[k];
            for (const auto& [e, c] : mult.terms()) {
                Expo prod{m.first + e.first, m.second + e.second};
                A[eq.at(prod)][blk.offset + k] += sign > 0 ? c : Rat(-c);
            }
        }
    };
    fill(eq1, ba, gx, +1);
    fill(eq1, bb, gy, +1);
    fill(eq1, bs1, G, -1);
    fill(eq2, bb, gx, +1);
    fill(eq2, bc, gy, +1);
    fill(eq2, bs2, G, -1);

    std::vector<MetricSolution> basis;
    for (const auto& v : nullspace(A)) {
        MetricSolution ms;
        auto build = [&](const Block& blk) {
            RatPoly2 p;
            for (std::size_t k = 0; k < blk.mons->size(); ++k)
                p.set_coeff((*blk.mons)[k].first, (*blk.mons)[k].second, v[blk.offset + k]);
            return p;
        };
        ms.g.a = build(ba);
        ms.g.b = build(bb);
        ms.g.c = build(bc);
        ms.S1 = build(bs1);
        ms.S2 = build(bs2);
        basis.push_back(std::move(ms));
    }
    return basis;
}

BoundarySpec maximal_boundary(const Cometric& g, const std::vector<RatPoly2>& delta_factors) {
    RatPoly2 delta = g.det();
    if (delta.is_zero()) throw std::invalid_argument("maximal_boundary: determinant is zero");
    RatPoly2 prod{Rat(1)};
    for (const auto& f : delta_factors) {
        if (f.is_zero()) throw std::invalid_argument("maximal_boundary: zero factor supplied");
        prod *= f;
    }
    // the multiset must reproduce Delta up to a rational constant
    if (prod.monic_grlex() != delta.monic_grlex())
        throw std::invalid_argument("maximal_boundary: supplied factors do not multiply to det g");

    // distinct non-constant factors up to scalar multiple
    std::vector<RatPoly2> distinct;
    for (const auto& f : delta_factors) {
        if (f.is_constant()) continue;
        RatPoly2 m = f.monic_grlex();
        bool seen = false;
        for (const auto& d : distinct)
            if (d.monic_grlex() == m) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(f);
    }

    std::vector<RatPoly2> passing;
    RatPoly2 gx, gy;
    for (const auto& f : distinct) {
        gx = f.partial_x();
        gy = f.partial_y();
        if (divides(f, g.a * gx + g.b * gy) && divides(f, g.b * gx + g.c * gy))
            passing.push_back(f);
    }
    return BoundarySpec(std::move(passing));
}

ChangeOfVariables ChangeOfVariables::translate(const Rat& beta) {
    ChangeOfVariables c;
    c.kind = Kind::translate;
    c.beta = beta;
    return c;
}

ChangeOfVariables ChangeOfVariables::scale(const Rat& alpha, const Rat& gamma) {
    if (alpha == 0 || gamma == 0) throw std::invalid_argument("degenerate scaling");
    ChangeOfVariables c;
    c.kind = Kind::scale;
    c.alpha = alpha;
    c.gamma = gamma;
    return c;
}

ChangeOfVariables ChangeOfVariables::shear(const RatPoly2& p) {
    if (p.deg_y() > 0) throw std::invalid_argument("shear polynomial must depend on x only");
    ChangeOfVariables c;
    c.kind = Kind::shear;
    c.p = p;
    return c;
}

Cometric apply_change(const Cometric& g, const ChangeOfVariables& ch) {
    using K = ChangeOfVariables::Kind;
    const RatPoly2 X = RatPoly2::x(), Y = RatPoly2::y();
    switch (ch.kind) {
        case K::translate: {
            // T:(x,y)->(x+beta,y); entries evaluated at (X-beta, Y)
            RatPoly2 xs = X - RatPoly2(ch.beta);
            return {g.a.substitute(xs, Y), g.b.substitute(xs, Y), g.c.substitute(xs, Y)};
        }
        case K::scale: {
            // H:(x,y)->(alpha x, gamma y)
            Rat ia = Rat(1) / ch.alpha, ig = Rat(1) / ch.gamma;
            RatPoly2 xs = ia * X, ys = ig * Y;
            return {(ch.alpha * ch.alpha) * g.a.substitute(xs, ys),
                    (ch.alpha * ch.gamma) * g.b.substitute(xs, ys),
                    (ch.gamma * ch.gamma) * g.c.substitute(xs, ys)};
        }
        case K::shear: {
            // S:(x,y)->(x, y+p(x)): (a, p'a+b, p'^2 a + 2 p' b + c) at (X, Y-p(X))
            RatPoly2 dp = ch.p.partial_x();
            RatPoly2 na = g.a;
            RatPoly2 nb = dp * g.a + g.b;
            RatPoly2 nc = dp * dp * g.a + Rat(2) * dp * g.b + g.c;
            RatPoly2 ys = Y - ch.p;
            return {na.substitute(X, ys), nb.substitute(X, ys), nc.substitute(X, ys)};
        }
    }
    throw std::logic_error("unreachable");
}

RatPoly2 apply_change(const RatPoly2& gamma, const ChangeOfVariables& ch) {
    using K = ChangeOfVariables::Kind;
    const RatPoly2 X = RatPoly2::x(), Y = RatPoly2::y();
    switch (ch.kind) {
        case K::translate:
            return gamma.substitute(X - RatPoly2(ch.beta), Y);
        case K::scale:
            return gamma.substitute(Rat(1) / ch.alpha * X, Rat(1) / ch.gamma * Y);
        case K::shear:
            return gamma.substitute(X, Y - ch.p);
    }
    throw std::logic_error("unreachable");
}

} // namespace dopkit
