#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dopkit/algdop.hpp"

using namespace dopkit;

namespace {

RatPoly2 P(const std::string& s) { return parse_poly(s); }

RatPoly2 gamma25() {
    return P("y^3 - 20*x*y^2 + 16*y^2 + 45*x^3*y - 40*x^2*y - 27*x^5 + 25*x^4");
}

Cometric g28() {
    return Cometric(P("y + 8*x - 9*x^2"), P("5*(4*y - 3*x*y - x^2)"), P("-25*(y^2 - 4*x*y + 3*x^3)"));
}

bool proportional(const Cometric& a, const Cometric& b) {
    // find a nonzero coefficient to fix the ratio
    for (const auto& [e, c] : a.a.terms()) {
        Rat cb = b.a.coeff(e.first, e.second);
        if (cb == 0) return false;
        Rat s = c / cb;
        return a.a == s * b.a && a.b == s * b.b && a.c == s * b.c;
    }
    return false;
}

} // namespace

TEST_CASE("check_A1") {
    Weights w12(1, 2);
    CHECK(check_A1(g28(), w12));
    CHECK(!check_A1(Cometric(P("1"), P("0"), P("x^5")), w12));
    // diag(1-x^2, -c02(1-y^2)) passes for any (1, w2): deg_w c = 2 w2
    for (long w2 : {2L, 3L, 5L}) {
        Cometric g(P("1-x^2"), P("0"), P("3*(1-y^2)"));
        CHECK(check_A1(g, Weights(1, w2)));
    }
}

TEST_CASE("check_A2_A3") {
    // (g28, Gamma25): certificate exists with the (1,2) degree bounds
    auto res = check_A2_A3(g28(), BoundarySpec({gamma25()}));
    REQUIRE(res.ok());
    RatPoly2 G = gamma25();
    CHECK(res.certificate->S1 * G == g28().a * G.partial_x() + g28().b * G.partial_y());
    CHECK(res.certificate->S2 * G == g28().b * G.partial_x() + g28().c * G.partial_y());
    CHECK(res.certificate->degree_bounds_ok(Weights(1, 2)));

    // Prop 4.3(ii) with n = 3, c02 = -1: S1 = n
    long n = 3;
    RatPoly2 gam = P("x^3 - y^2");
    Cometric g(P("x"), P("3/2*y"), P("9/4*x^2") + gam);
    auto res2 = check_A2_A3(g, BoundarySpec({gam}));
    REQUIRE(res2.ok());
    CHECK(res2.certificate->S1 == RatPoly2(Rat(n)));

    // identity metric does not pair with Gamma = x
    auto res3 = check_A2_A3(Cometric(P("1"), P("0"), P("1")), BoundarySpec({P("x")}));
    CHECK(res3.status == A2A3Status::gamma_not_dividing);

    // a3 failure distinct from non-division of Delta
    auto res4 = check_A2_A3(Cometric(P("x"), P("0"), P("1")), BoundarySpec({P("x")}));
    CHECK(res4.status == A2A3Status::a3_fails);

    // Delta == 0 reported distinctly
    auto res5 = check_A2_A3(Cometric(P("x"), P("x"), P("x")), BoundarySpec({P("x")}));
    CHECK(res5.status == A2A3Status::zero_determinant);

    // trivial boundary (Omega = R^2)
    auto res6 = check_A2_A3(Cometric(P("1"), P("0"), P("1")), BoundarySpec{});
    CHECK(res6.ok());
    CHECK(res6.certificate->S1.is_zero());
}

TEST_CASE("solve_metric uniqueness for the quintic boundary") {
    auto basis = solve_metric(BoundarySpec({gamma25()}), Weights(1, 2));
    REQUIRE(basis.size() == 1);
    CHECK(proportional(basis[0].g, g28()));
    // certificate identity of the returned S polynomials
    RatPoly2 G = gamma25();
    CHECK(basis[0].g.a * G.partial_x() + basis[0].g.b * G.partial_y() == basis[0].S1 * G);
    CHECK(basis[0].g.b * G.partial_x() + basis[0].g.c * G.partial_y() == basis[0].S2 * G);
    CHECK(check_A1(basis[0].g, Weights(1, 2)));
}

TEST_CASE("solve_metric on y^2 - x^3 spans the three-parameter family") {
    RatPoly2 G = P("y^2 - x^3");
    auto basis = solve_metric(BoundarySpec({G}), Weights(1, 2));
    REQUIRE(basis.size() == 4);
    // base + alpha, beta, mu directions of the family each satisfy eq. (4)
    Cometric base(P("4*y"), P("6*x^2"), P("9*x*y"));
    Cometric adir(P("0"), P("0"), G);
    Cometric bdir(P("4*x^2"), P("6*x*y"), P("9*x^3"));
    Cometric mdir(P("4*x"), P("6*y"), P("9*x^2"));
    for (const Cometric* dir : {&base, &adir, &bdir, &mdir}) {
        CHECK(check_A2_A3(*dir, BoundarySpec({G})).ok());
    }
    // generic family instance (alpha, beta, mu) = (-18, -3/2, 1/2)
    RatPoly2 lin = P("-3/2*x + 1/2");
    Cometric inst(P("4*y") + lin * P("4*x"), P("6*x^2") + lin * P("6*y"),
                  P("9*x*y") + Rat(-18) * G + lin * P("9*x^2"));
    CHECK(check_A2_A3(inst, BoundarySpec({G})).ok());
    for (const auto& ms : basis) {
        CHECK(check_A1(ms.g, Weights(1, 2)));
        CHECK(ms.g.a * G.partial_x() + ms.g.b * G.partial_y() == ms.S1 * G);
        CHECK(ms.g.b * G.partial_x() + ms.g.c * G.partial_y() == ms.S2 * G);
    }
}

TEST_CASE("solve_metric on Gamma = y") {
    // at w = (1,3) the solution space has the Prop 4.4(iii) shape
    auto basis = solve_metric(BoundarySpec({P("y")}), Weights(1, 3));
    CHECK(basis.size() == 10);
    for (const auto& ms : basis) {
        CHECK(ms.g.a.deg_y() <= 0); // a = a0(x)
        CHECK(ms.g.a.deg_x() <= 2);
        for (const auto& [e, c] : ms.g.b.terms()) {
            CHECK(e.second == 1); // b = b1(x) y
            CHECK(e.first <= 1);  // deg b1 <= 1
        }
        for (const auto& [e, c] : ms.g.c.terms()) {
            CHECK(e.second >= 1); // y divides c
            if (e.second == 1)
                CHECK(e.first <= 3);
            else
                CHECK(e.first == 0);
        }
    }
    // at w = (1,2) the (A1) box for a additionally contains y
    auto basis2 = solve_metric(BoundarySpec({P("y")}), Weights(1, 2));
    CHECK(basis2.size() == 10);
    bool a_with_y = false;
    for (const auto& ms : basis2) a_with_y = a_with_y || ms.g.a.coeff(0, 1) != 0;
    CHECK(a_with_y);
}

TEST_CASE("solve_metric dimension is invariant under admissible changes of the boundary") {
    RatPoly2 G = P("y^2 - x^3");
    std::size_t dim = solve_metric(BoundarySpec({G}), Weights(1, 2)).size();
    for (const auto& ch : {ChangeOfVariables::translate(Rat(2)),
                           ChangeOfVariables::scale(Rat(3), rat_frac(-1, 2))}) {
        RatPoly2 Gt = apply_change(G, ch);
        CHECK(solve_metric(BoundarySpec({Gt}), Weights(1, 2)).size() == dim);
    }
}

TEST_CASE("maximal_boundary") {
    // B1: factor list {5, 5, -1, Gamma25} multiplies to -25 Gamma25 = det g28
    auto b = maximal_boundary(g28(), {P("5"), P("5"), P("-1"), gamma25()});
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0] == gamma25());

    // B2: {36, Gamma1, Gamma2} -> Gamma1 * Gamma2
    Cometric gb2(P("4*(2*y - 3*x^2 + x)"), P("6*(y - 3*x*y + 2*x^2)"),
                 P("9*(x^2 + x^3 + 2*x*y - 4*y^2)"));
    RatPoly2 g1 = P("8*y - 3*x^2 - 6*x + 1"), g2 = P("x^3 - y^2");
    auto b2 = maximal_boundary(gb2, {P("36"), g1, g2});
    REQUIRE(b2.factors.size() == 2);
    CHECK(b2.product() == g1 * g2);

    // identity metric: empty factor list, Gamma = 1
    auto b3 = maximal_boundary(Cometric(P("1"), P("0"), P("1")), {});
    CHECK(b3.trivial());
    CHECK(b3.product() == P("1"));

    // wrong factorization rejected
    CHECK_THROWS_AS(maximal_boundary(g28(), {gamma25()}), std::invalid_argument);
}

TEST_CASE("factor monotonicity (each supplied factor passes alone)") {
    Cometric gb2(P("4*(2*y - 3*x^2 + x)"), P("6*(y - 3*x*y + 2*x^2)"),
                 P("9*(x^2 + x^3 + 2*x*y - 4*y^2)"));
    RatPoly2 g1 = P("8*y - 3*x^2 - 6*x + 1"), g2 = P("x^3 - y^2");
    REQUIRE(check_A2_A3(gb2, BoundarySpec({g1, g2})).ok());
    CHECK(check_A2_A3(gb2, BoundarySpec({g1})).ok());
    CHECK(check_A2_A3(gb2, BoundarySpec({g2})).ok());
}

TEST_CASE("weight monotonicity") {
    // a solution whose boxes also fit a larger weight stays a solution
    RatPoly2 gam = P("x^3 - y^2");
    Cometric g(P("x"), P("3/2*y"), P("9/4*x^2") + gam);
    REQUIRE(check_A1(g, Weights(1, 2)));
    REQUIRE(check_A2_A3(g, BoundarySpec({gam})).ok());
    for (long w2 : {3L, 4L, 7L}) {
        CHECK(check_A1(g, Weights(1, w2)));
        auto res = check_A2_A3(g, BoundarySpec({gam}));
        CHECK(res.ok());
        CHECK(res.certificate->degree_bounds_ok(Weights(1, w2)));
    }
}

TEST_CASE("apply_change") {
    const RatPoly2 X = RatPoly2::x(), Y = RatPoly2::y();
    // shear with p = x^2 on the identity
    Cometric id(P("1"), P("0"), P("1"));
    Cometric sheared = apply_change(id, ChangeOfVariables::shear(P("x^2")));
    CHECK(sheared.a == P("1"));
    CHECK(sheared.b == P("2*x"));
    CHECK(sheared.c == P("4*x^2 + 1"));

    // mirror H(1, -1): (a, b, c) -> (a(x,-y), -b(x,-y), c(x,-y))
    Cometric g = g28();
    Cometric m = apply_change(g, ChangeOfVariables::scale(Rat(1), Rat(-1)));
    CHECK(m.a == g.a.substitute(X, -Y));
    CHECK(m.b == -(g.b.substitute(X, -Y)));
    CHECK(m.c == g.c.substitute(X, -Y));

    // translation acts trivially on constants
    Cometric c0(P("2"), P("1/3"), P("5"));
    Cometric t = apply_change(c0, ChangeOfVariables::translate(Rat(7)));
    CHECK(t == c0);

    CHECK_THROWS_AS(ChangeOfVariables::scale(Rat(0), Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(ChangeOfVariables::shear(P("y")), std::invalid_argument);
}

TEST_CASE("certificates survive admissible changes (Prop 2.5b)") {
    RatPoly2 G = gamma25();
    Cometric g = g28();
    std::vector<ChangeOfVariables> changes = {
        ChangeOfVariables::translate(rat_frac(1, 3)),
        ChangeOfVariables::scale(Rat(2), rat_frac(1, 5)),
        ChangeOfVariables::shear(P("x^2 - 3*x")),
    };
    for (const auto& ch : changes) {
        Cometric gt = apply_change(g, ch);
        RatPoly2 Gt = apply_change(G, ch);
        auto res = check_A2_A3(gt, BoundarySpec({Gt}));
        CHECK(res.ok());
        CHECK(check_A1(gt, Weights(1, 2)));
    }
    // determinant transforms by the square of the Jacobian determinant
    ChangeOfVariables h = ChangeOfVariables::scale(Rat(2), Rat(3));
    Cometric gt = apply_change(g, h);
    RatPoly2 expected = Rat(36) * g.det().substitute(rat_frac(1, 2) * RatPoly2::x(),
                                                     rat_frac(1, 3) * RatPoly2::y());
    CHECK(gt.det() == expected);
}
