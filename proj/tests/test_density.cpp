#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dopkit/catalog.hpp"
#include "dopkit/density.hpp"

using namespace dopkit;

namespace {

RatPoly2 P(const std::string& s) { return parse_poly(s); }

// drift reconstructed from a density: L^i = sum_k p_k S^i_(k) + g^i . grad Q
DriftPair drift_of_density(const Cometric& g, const DensitySpec& rho) {
    DriftPair d;
    for (const auto& [fac, p] : rho.factor_exponents) {
        RatPoly2 gx = fac.partial_x(), gy = fac.partial_y();
        auto s1 = divides(fac, g.a * gx + g.b * gy);
        auto s2 = divides(fac, g.b * gx + g.c * gy);
        REQUIRE(s1.has_value());
        REQUIRE(s2.has_value());
        d.L1 += p * *s1;
        d.L2 += p * *s2;
    }
    RatPoly2 qx = rho.Q.partial_x(), qy = rho.Q.partial_y();
    d.L1 += g.a * qx + g.b * qy;
    d.L2 += g.b * qx + g.c * qy;
    return d;
}

bool density_splits(const DensitySpec& rho) {
    for (const auto& [f, p] : rho.factor_exponents)
        if (p != 0 && f.deg_x() > 0 && f.deg_y() > 0) return false;
    for (const auto& [e, c] : rho.Q.terms())
        if (e.first > 0 && e.second > 0) return false;
    return true;
}

} // namespace

TEST_CASE("solve_drift on separable diagonal metrics") {
    // g = diag(1-x^2, -c02 (1-y^2)) with c02 = -1: drifts separate per axis
    Cometric g(P("1 - x^2"), P("0"), P("1 - y^2"));
    auto basis = solve_drift(g, Weights(1, 1));
    CHECK(basis.size() >= 2);
    BoundarySpec bd({P("1-x"), P("1+x"), P("1-y"), P("1+y")});
    for (const auto& d : basis) {
        CHECK(drift_compatible(g, d));
        DensitySpec rho = integrate_drift(g, d, bd);
        CHECK(density_splits(rho)); // Prop 2.8: rho = rho_1(x) rho_2(y)
    }
}

TEST_CASE("solve_drift includes the Gaussian on the flat plane") {
    Cometric id(P("1"), P("0"), P("1"));
    auto basis = solve_drift(id, Weights(1, 1));
    // eq. (7) reduces to d_y L1 = d_x L2
    for (const auto& d : basis) CHECK(d.L1.partial_y() == d.L2.partial_x());
    DriftPair gauss{P("-x"), P("-y")};
    CHECK(drift_compatible(id, gauss));
    DensitySpec rho = integrate_drift(id, gauss, BoundarySpec{});
    CHECK(rho.factor_exponents.empty());
    CHECK(rho.Q == P("-1/2*x^2 - 1/2*y^2")); // matches exp(-(x^2+y^2)/2)
}

TEST_CASE("B3 density recovery (beta = 0)") {
    Bundle b3 = Catalog::instance().instantiate("B3", {{"alpha", Rat(-1)}, {"beta", Rat(0)}});
    auto basis = solve_drift(b3.g, b3.w);
    CHECK(basis.size() == 2); // the (p, q) family and nothing else

    // the theorem's drift at (p, q) = (2, 3), alpha = -1:
    //   L1 = -2x(q-1), L2 = alpha(p-1) Gamma1 + alpha(q-1) y
    Rat al(-1), p(2), q(3);
    RatPoly2 gamma1 = P("y - x^2 + 1");
    DriftPair d;
    d.L1 = Rat(-2) * (q - 1) * RatPoly2::x();
    d.L2 = al * (p - 1) * gamma1 + al * (q - 1) * RatPoly2::y();
    REQUIRE(drift_compatible(b3.g, d));
    DensitySpec rho = integrate_drift(b3.g, d, b3.boundary);
    REQUIRE(rho.factor_exponents.size() == 2);
    CHECK(rho.factor_exponents[0].first == P("-y"));
    CHECK(rho.factor_exponents[0].second == p - 1);
    CHECK(rho.factor_exponents[1].first == gamma1);
    CHECK(rho.factor_exponents[1].second == q - 1);
    CHECK(rho.Q.is_zero());

    // every drift basis element integrates against the same two factors
    for (const auto& gen : basis) {
        DensitySpec ds = integrate_drift(b3.g, gen, b3.boundary);
        CHECK(ds.Q.is_zero());
    }

    // reconstruction: the drift recomputed from rho reproduces the input
    DriftPair back = drift_of_density(b3.g, rho);
    CHECK(back.L1 == d.L1);
    CHECK(back.L2 == d.L2);
}

TEST_CASE("U1 density recovery") {
    for (long n : {1L, 3L}) {
        Bundle u1 = Catalog::instance().instantiate("U1", {{"n", Rat(n)}, {"c02", Rat(-1)}});
        auto basis = solve_drift(u1.g, u1.w);
        CHECK(basis.size() == 2); // parameters (p, lambda)

        // theorem drift at (p, lambda) = (2, 1), c02 = -1:
        //   L1 = (p-1) n - lambda x,  L2 = (-lambda n / 2 + 2 c02 (p-1)) y
        Rat p(2), lambda(1), c02(-1);
        DriftPair d;
        d.L1 = RatPoly2(Rat(n) * (p - 1)) - lambda * RatPoly2::x();
        d.L2 = (-lambda * rat_frac(n, 2) + 2 * c02 * (p - 1)) * RatPoly2::y();
        REQUIRE(drift_compatible(u1.g, d));
        DensitySpec rho = integrate_drift(u1.g, d, u1.boundary);
        REQUIRE(rho.factor_exponents.size() == 1);
        CHECK(rho.factor_exponents[0].first == u1.boundary.factors[0]);
        CHECK(rho.factor_exponents[0].second == p - 1);
        CHECK(rho.Q == P("-x")); // exp(-lambda x)
        CHECK(rho.Q.deg_x() == 1);
        CHECK(rho.Q.deg_y() <= 0);

        DriftPair back = drift_of_density(u1.g, rho);
        CHECK(back.L1 == d.L1);
        CHECK(back.L2 == d.L2);
    }
}

TEST_CASE("integrate_drift error paths") {
    // pole with no factor to absorb it: residue mismatch
    Cometric g(P("x"), P("0"), P("1"));
    DriftPair d{P("1"), P("0")};
    REQUIRE(drift_compatible(g, d));
    CHECK_THROWS_AS(integrate_drift(g, d, BoundarySpec{}), IntegrateError);
    // with the factor supplied the same drift integrates to rho = x
    DensitySpec rho = integrate_drift(g, d, BoundarySpec({P("x")}));
    REQUIRE(rho.factor_exponents.size() == 1);
    CHECK(rho.factor_exponents[0].second == 1);
    CHECK(rho.Q.is_zero());

    // incompatible drift violates the precondition
    Cometric id(P("1"), P("0"), P("1"));
    CHECK_THROWS_AS(integrate_drift(id, DriftPair{P("y"), P("0")}, BoundarySpec{}),
                    std::invalid_argument);
}

TEST_CASE("degree bound of eq. (9)") {
    RatPoly2 delta_b1 = Rat(-25) * P("y^3 - 20*x*y^2 + 16*y^2 + 45*x^3*y - 40*x^2*y - 27*x^5 + 25*x^4");
    CHECK(check_degree_bound_9(delta_b1, P("3"), Weights(1, 2)));  // constant Q
    CHECK(check_degree_bound_9(delta_b1, RatPoly2(), Weights(1, 2)));
    CHECK(!check_degree_bound_9(delta_b1, P("y^3"), Weights(1, 2)));
    // U1: w = (1, n), deg_x(Q Delta) = 1 + (n + 1) <= 2 + 2n
    for (long n : {3L, 5L}) {
        Bundle u1 = Catalog::instance().instantiate("U1", {{"n", Rat(n)}, {"W", Rat(n)}});
        CHECK(u1.g.det().deg_x() == static_cast<int>(n) + 1);
        CHECK(check_degree_bound_9(u1.g.det(), P("-x"), Weights(1, n)));
    }
}

TEST_CASE("integrability tables") {
    const Catalog& cat = Catalog::instance();
    CHECK(cat.integrability_constraints("B1", {{"p", Rat(1)}}).ok());
    CHECK(!cat.integrability_constraints("B1", {{"p", rat_frac(3, 10)}}).ok()); // strict
    CHECK(cat.integrability_constraints("B1", {{"p", rat_frac(1, 2)}}).ok());

    CHECK(cat.integrability_constraints("B2", {{"p", rat_frac(1, 2)}, {"q", rat_frac(1, 2)}}).ok());
    CHECK(!cat.integrability_constraints("B2", {{"p", rat_frac(1, 2)}, {"q", rat_frac(1, 6)}}).ok());

    CHECK(!cat.integrability_constraints("B4", {{"m", Rat(2)}, {"n", Rat(2)}, {"p", Rat(0)}}).ok());
    CHECK(cat.integrability_constraints("B4", {{"m", Rat(2)}, {"n", Rat(2)}, {"p", rat_frac(1, 10)}}).ok());
    // odd case bound p > 1/2 - 1/n
    CHECK(!cat.integrability_constraints("B4", {{"m", Rat(3)}, {"n", Rat(4)}, {"p", rat_frac(1, 4)}}).ok());
    CHECK(cat.integrability_constraints("B4", {{"m", Rat(3)}, {"n", Rat(4)}, {"p", rat_frac(1, 3)}}).ok());

    CHECK(cat.integrability_constraints("B5", {{"n", Rat(3)}, {"r", Rat(1)}, {"p", rat_frac(1, 5)}}).ok());
    CHECK(!cat.integrability_constraints("B5", {{"n", Rat(3)}, {"r", Rat(0)}, {"p", Rat(1)}}).ok());
    CHECK(cat.integrability_constraints("U1", {{"n", Rat(1)}, {"p", rat_frac(1, 10)}, {"lambda", Rat(1)}}).ok());
    CHECK(!cat.integrability_constraints("U1", {{"n", Rat(1)}, {"p", Rat(1)}, {"lambda", Rat(0)}}).ok());

    // Prop 2.9 direction: nonnegative exponents always pass on bounded entries
    CHECK(cat.integrability_constraints("B2", {{"p", Rat(1)}, {"q", Rat(2)}}).ok());
    CHECK(cat.integrability_constraints("B4", {{"m", Rat(2)}, {"n", Rat(4)}, {"p", Rat(1)}, {"q", Rat(3)}}).ok());
    CHECK(cat.integrability_constraints("B5", {{"n", Rat(4)}, {"r", Rat(1)}, {"p", Rat(1)}, {"q", Rat(1)}}).ok());
    CHECK(cat.integrability_constraints("RECT", {}).ok());

    CHECK_THROWS_AS(cat.integrability_constraints("P44.iii", {}), InvalidParam);
}

TEST_CASE("product rule on diagonal product entries") {
    const Catalog& cat = Catalog::instance();
    std::vector<std::pair<std::string, Params>> entries = {
        {"DIM1.laguerre", {}},
        {"DIM1.jacobi", {}},
        {"RECT", {{"alpha", Rat(2)}, {"beta", rat_frac(1, 2)}}},
        {"U2", {{"kind1", Rat(0)}, {"kind2", Rat(2)}}},
        {"U2", {{"kind1", Rat(1)}, {"kind2", Rat(2)}}},
    };
    for (const auto& [id, prm] : entries) {
        Bundle b = cat.instantiate(id, prm);
        auto basis = solve_drift(b.g, b.w);
        for (const auto& d : basis) {
            DensitySpec rho = integrate_drift(b.g, d, b.boundary);
            CHECK(density_splits(rho));
        }
    }
    // the only mixing case: equal constant diagonal (weights equal)
    Cometric id2(P("1"), P("0"), P("1"));
    DriftPair mix{P("-y"), P("-x")};
    CHECK(drift_compatible(id2, mix));
    DensitySpec rho = integrate_drift(id2, mix, BoundarySpec{});
    CHECK(rho.Q == P("-x*y"));
}

TEST_CASE("Prop 2.15 strip bound on U2 entries") {
    // entries whose domain contains the strip R x (-1, 1)
    Bundle b = Catalog::instance().instantiate("U2", {{"kind1", Rat(0)}, {"kind2", Rat(2)}});
    // adjugate rows: hat g_1j = (c, -b)
    RatPoly2 adj11 = b.g.c, adj12 = -b.g.b;
    long m1 = std::max<long>(1 + std::max(adj11.deg_x(), 0),
                             b.w.w2 / b.w.w1 + std::max(adj12.deg_x(), 0));
    CHECK(b.g.det().deg_x() < m1);
}

TEST_CASE("drift identity holds exactly for every returned pair") {
    const Catalog& cat = Catalog::instance();
    for (const auto& [id, prm] : std::vector<std::pair<std::string, Params>>{
             {"B1", {}}, {"B2", {}}, {"B3", {{"alpha", Rat(-2)}, {"beta", Rat(-1)}}},
             {"B4", {{"m", Rat(1)}, {"n", Rat(2)}}}, {"B5", {{"n", Rat(2)}}}}) {
        Bundle b = cat.instantiate(id, prm);
        for (const auto& d : solve_drift(b.g, b.w)) CHECK(drift_compatible(b.g, d));
    }
}
