#include "dopkit/catalog.hpp"

#include "dopkit/jet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace dopkit {

bool DomainSpec::contains(const Rat& x, const Rat& y) const {
    if (bounded && (x < xlo || x > xhi || y < ylo || y > yhi)) return false;
    for (const auto& s : conditions) {
        Rat v = s.poly.evaluate(x, y);
        if (s.sign > 0 ? !(v > 0) : !(v < 0)) return false;
    }
    return true;
}

bool DomainSpec::contains(double x, double y) const {
    if (bounded && (x < rat_to_double(xlo) || x > rat_to_double(xhi) || y < rat_to_double(ylo) ||
                    y > rat_to_double(yhi)))
        return false;
    for (const auto& s : conditions) {
        double v = s.poly.evaluate(x, y);
        if (s.sign > 0 ? !(v > 0) : !(v < 0)) return false;
    }
    return true;
}

DomainSpec DomainSpec::truncated(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const {
    DomainSpec d = *this;
    d.bounded = true;
    d.xlo = x0;
    d.xhi = x1;
    d.ylo = y0;
    d.yhi = y1;
    return d;
}

namespace {

const RatPoly2 X = RatPoly2::x();
const RatPoly2 Y = RatPoly2::y();
RatPoly2 C(long n) { return RatPoly2(Rat(n)); }
RatPoly2 C(const Rat& q) { return RatPoly2(q); }

std::string param_to_string(const ParamValue& v) {
    if (std::holds_alternative<Rat>(v)) return std::get<Rat>(v).get_str();
    return std::get<RatPoly2>(v).to_string();
}

Rat get_rat(const Params& p, const std::string& id, const std::string& name,
            std::optional<Rat> def = std::nullopt) {
    auto it = p.find(name);
    if (it == p.end()) {
        if (def) return *def;
        throw InvalidParam(id + ": missing parameter '" + name + "'");
    }
    if (!std::holds_alternative<Rat>(it->second))
        throw InvalidParam(id + ": parameter '" + name + "' must be rational");
    return std::get<Rat>(it->second);
}

long get_int(const Params& p, const std::string& id, const std::string& name,
             std::optional<long> def = std::nullopt) {
    auto it = p.find(name);
    if (it == p.end()) {
        if (def) return *def;
        throw InvalidParam(id + ": missing parameter '" + name + "'");
    }
    if (!std::holds_alternative<Rat>(it->second) || std::get<Rat>(it->second).get_den() != 1)
        throw InvalidParam(id + ": parameter '" + name + "' must be an integer");
    return std::get<Rat>(it->second).get_num().get_si();
}

RatPoly2 get_poly(const Params& p, const std::string& id, const std::string& name,
                  std::optional<RatPoly2> def = std::nullopt) {
    auto it = p.find(name);
    if (it == p.end()) {
        if (def) return *def;
        throw InvalidParam(id + ": missing parameter '" + name + "'");
    }
    if (std::holds_alternative<Rat>(it->second)) return RatPoly2(std::get<Rat>(it->second));
    RatPoly2 q = std::get<RatPoly2>(it->second);
    if (q.deg_y() > 0) throw InvalidParam(id + ": parameter '" + name + "' must be a polynomial in x");
    return q;
}

void require(bool cond, const std::string& id, const std::string& predicate) {
    if (!cond) throw InvalidParam(id + ": predicate '" + predicate + "' violated");
}

// default weight for the (1,infinity) families: the smallest integer W > 2
// making the (A1) boxes valid for the instance
Weights winf_weights(const Params& p, const std::string& id, long min_w2) {
    long def = std::max<long>(3, min_w2);
    long W = get_int(p, id, "W", def);
    require(W > 2, id, "W > 2");
    require(W >= min_w2, id, "W >= " + std::to_string(min_w2));
    return Weights(1, W);
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

Inequality ineq(std::string text, bool ok) { return Inequality{std::move(text), ok}; }

// rho = Gamma^(p-1) style exponent helper
Rat expo(const Rat& p) { return p - 1; }

// ---- P43 family constructors -------------------------------------------

struct P43iData {
    long m, n;
    Rat c02;
    Weights w;
    RatPoly2 gamma, gamma0;
    Cometric g;
};

P43iData make_p43i(const std::string& id, const Params& prm) {
    P43iData d;
    d.m = get_int(prm, id, "m");
    d.n = get_int(prm, id, "n");
    require(d.m >= 1 && d.n >= 1, id, "m, n >= 1");
    d.c02 = get_rat(prm, id, "c02", Rat(-1));
    d.w = winf_weights(prm, id, ceil_div(d.m + d.n, 2));
    RatPoly2 omx = C(1) - X, opx = C(1) + X;
    d.gamma = omx.pow(static_cast<int>(d.m)) * opx.pow(static_cast<int>(d.n)) - Y * Y;
    RatPoly2 lin = C(rat_frac(d.n - d.m, 2)) - C(rat_frac(d.n + d.m, 2)) * X; // ((n-m)-(n+m)x)/2
    d.g.a = C(1) - X * X;
    d.g.b = lin * Y;
    d.g.c = lin * lin * omx.pow(static_cast<int>(d.m - 1)) * opx.pow(static_cast<int>(d.n - 1)) -
            C(d.c02) * d.gamma;
    d.gamma0 = lin * lin - C(d.c02) * (C(1) - X * X);
    return d;
}

struct P43iiData {
    long n;
    Rat c02;
    Weights w;
    RatPoly2 gamma, gamma0;
    Cometric g;
};

P43iiData make_p43ii(const std::string& id, const Params& prm) {
    P43iiData d;
    d.n = get_int(prm, id, "n");
    require(d.n >= 1, id, "n >= 1");
    d.c02 = get_rat(prm, id, "c02", Rat(-1));
    d.w = winf_weights(prm, id, ceil_div(d.n, 2));
    d.gamma = X.pow(static_cast<int>(d.n)) - Y * Y;
    d.g.a = X;
    d.g.b = C(rat_frac(d.n, 2)) * Y;
    d.g.c = C(rat_frac(d.n * d.n, 4)) * X.pow(static_cast<int>(d.n - 1)) - C(d.c02) * d.gamma;
    d.gamma0 = C(rat_frac(d.n * d.n, 4)) - C(d.c02) * X;
    return d;
}

struct P43iiiData {
    long n, k, x0;
    Rat c02;
    Weights w;
    RatPoly2 gamma2, gamma, gamma0;
    Cometric g;
};

P43iiiData make_p43iii(const std::string& id, const Params& prm) {
    P43iiiData d;
    d.n = get_int(prm, id, "n");
    d.k = get_int(prm, id, "k", 1);
    d.x0 = get_int(prm, id, "x0", 1);
    d.c02 = get_rat(prm, id, "c02", Rat(-1));
    require(d.n >= 0, id, "n >= 0");
    require(d.k == 0 || d.k == 1, id, "k in {0, 1}");
    require(d.x0 == 0 || d.x0 == 1, id, "x0 in {0, 1}");
    require(!(d.n == 0 && d.c02 == 0), id, "(n, c02) != (0, 0)");
    d.w = winf_weights(prm, id, ceil_div(std::max(d.n, 1L), 2));
    RatPoly2 x0mx = C(d.x0) - X;
    d.gamma2 = x0mx.pow(static_cast<int>(d.n)) - Y * Y;
    d.gamma = X.pow(static_cast<int>(d.k)) * d.gamma2;
    d.g.a = X * x0mx;
    d.g.b = C(rat_frac(-d.n, 2)) * X * Y;
    d.g.c = C(rat_frac(d.n * d.n, 4)) * X * x0mx.pow(static_cast<int>(std::max(d.n - 1, 0L))) -
            C(d.c02) * d.gamma2;
    if (d.n == 0) d.g.c = C(Rat(0)) - C(d.c02) * d.gamma2; // n^2/4 term absent
    d.gamma0 = C(rat_frac(d.n * d.n, 4)) * X - C(d.c02) * x0mx;
    return d;
}

// boundary factor lists (real-irreducible splits)
std::vector<RatPoly2> even_split(const RatPoly2& root_part, long half_m, long half_n) {
    // (1-x)^(m/2) (1+x)^(n/2) +- y given the x-part
    (void)root_part;
    RatPoly2 G = (C(1) - X).pow(static_cast<int>(half_m)) * (C(1) + X).pow(static_cast<int>(half_n));
    return {G + Y, G - Y};
}

// ---- shared finishing/verification ---------------------------------------

Bundle finish(Bundle b) {
    b.boundary.validate();
    if (!check_A1(b.g, b.w)) throw std::logic_error(b.id + ": constructed instance violates (A1)");
    auto res = check_A2_A3(b.g, b.boundary);
    if (!res.ok()) throw std::logic_error(b.id + ": constructed instance violates (A2)/(A3)");
    if (!res.certificate->degree_bounds_ok(b.w))
        throw std::logic_error(b.id + ": cofactor degree bound violated");
    if (!b.delta_factors.empty()) {
        RatPoly2 prod{Rat(1)};
        for (const auto& f : b.delta_factors) prod *= f;
        if (prod != b.g.det()) throw std::logic_error(b.id + ": delta factorization side data is wrong");
    }
    return b;
}

BranchGerm germ_t2_tn(long n) {
    return BranchGerm(LaurentSeries::term(2), LaurentSeries::term(static_cast<int>(n)), 64);
}

} // namespace

// ---------------------------------------------------------------------------

Catalog::Catalog() {
    auto add = [this](CatalogEntry e) { entries_.emplace(e.id, std::move(e)); };

    // ---- P43.i ------------------------------------------------------------
    add(CatalogEntry{
        "P43.i",
        "Gamma = (1-x)^m (1+x)^n - y^2 with the Jacobi-like cometric",
        "Prop. 4.3(i)",
        {{"m", "integer >= 1"}, {"n", "integer >= 1"}, {"c02", "rational (default -1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            auto d = make_p43i("P43.i", prm);
            Bundle b;
            b.id = "P43.i";
            b.w = d.w;
            b.g = d.g;
            b.boundary = BoundarySpec({d.gamma});
            b.delta_factors = {d.gamma0, d.gamma};
            b.citation = "Prop. 4.3(i)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    // ---- P43.ii -------------------------------------------------------------
    add(CatalogEntry{
        "P43.ii",
        "Gamma = x^n - y^2 with the Laguerre-like cometric",
        "Prop. 4.3(ii)",
        {{"n", "integer >= 1"}, {"c02", "rational (default -1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            auto d = make_p43ii("P43.ii", prm);
            Bundle b;
            b.id = "P43.ii";
            b.w = d.w;
            b.g = d.g;
            b.boundary = BoundarySpec({d.gamma});
            b.delta_factors = {d.gamma0, d.gamma};
            b.branch_vectors = {germ_t2_tn(d.n)};
            b.citation = "Prop. 4.3(ii)";
            return finish(std::move(b));
        },
        [](const Params& prm) -> std::vector<SingularPoint> {
            long n = get_int(prm, "P43.ii", "n");
            if (n >= 2) return {{Rat(0), Rat(0), "A" + std::to_string(n - 1)}};
            return {};
        },
        nullptr,
        nullptr,
    });

    // ---- P43.iii ------------------------------------------------------------
    add(CatalogEntry{
        "P43.iii",
        "Gamma = x^k ((x0-x)^n - y^2)",
        "Prop. 4.3(iii)",
        {{"n", "integer >= 0"},
         {"k", "0 or 1 (default 1)"},
         {"x0", "0 or 1 (default 1)"},
         {"c02", "rational, (n, c02) != (0, 0) (default -1)"},
         {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            auto d = make_p43iii("P43.iii", prm);
            Bundle b;
            b.id = "P43.iii";
            b.w = d.w;
            b.g = d.g;
            std::vector<RatPoly2> factors;
            if (d.k == 1) factors.push_back(X);
            if (d.n == 0) {
                factors.push_back(C(1) - Y);
                factors.push_back(C(1) + Y);
            } else {
                factors.push_back(d.gamma2);
            }
            b.boundary = BoundarySpec(factors);
            b.delta_factors = {X, d.gamma2, d.gamma0};
            b.citation = "Prop. 4.3(iii)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    // ---- P43.iv -------------------------------------------------------------
    add(CatalogEntry{
        "P43.iv",
        "Gamma = x^k (1-y^2), diagonal cometric",
        "Prop. 4.3(iv)",
        {{"k", "0 or 1 (default 1)"}, {"c02", "rational != 0 (default -1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P43.iv";
            long k = get_int(prm, id, "k", 1);
            Rat c02 = get_rat(prm, id, "c02", Rat(-1));
            require(k == 0 || k == 1, id, "k in {0, 1}");
            require(c02 != 0, id, "c02 != 0");
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, 3);
            b.g = Cometric(X.pow(static_cast<int>(k)), RatPoly2(), C(Rat(-c02)) * (C(1) - Y * Y));
            std::vector<RatPoly2> factors;
            if (k == 1) factors.push_back(X);
            factors.push_back(C(1) - Y);
            factors.push_back(C(1) + Y);
            b.boundary = BoundarySpec(factors);
            b.delta_factors = {C(Rat(-c02)), X.pow(static_cast<int>(k)), C(1) - Y, C(1) + Y};
            if (k == 0) b.delta_factors = {C(Rat(-c02)), C(1) - Y, C(1) + Y};
            b.citation = "Prop. 4.3(iv)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    // ---- P43.v --------------------------------------------------------------
    add(CatalogEntry{
        "P43.v",
        "Gamma = (1-x^2)(1-y^2), diagonal cometric",
        "Prop. 4.3(v)",
        {{"c02", "rational != 0 (default -1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P43.v";
            Rat c02 = get_rat(prm, id, "c02", Rat(-1));
            require(c02 != 0, id, "c02 != 0");
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, 3);
            b.g = Cometric(C(1) - X * X, RatPoly2(), C(Rat(-c02)) * (C(1) - Y * Y));
            b.boundary = BoundarySpec({C(1) - X, C(1) + X, C(1) - Y, C(1) + Y});
            b.delta_factors = {C(Rat(-c02)), C(1) - X, C(1) + X, C(1) - Y, C(1) + Y};
            b.citation = "Prop. 4.3(v)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    // ---- P44 families ---------------------------------------------------------
    add(CatalogEntry{
        "P44.i",
        "Gamma = x^k (x^n y - 1)",
        "Prop. 4.4(i)",
        {{"n", "integer >= 1"}, {"k", "0 or 1 (default 0)"}, {"c0", "nonzero polynomial in x (default 1)"},
         {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P44.i";
            long n = get_int(prm, id, "n");
            long k = get_int(prm, id, "k", 0);
            RatPoly2 c0 = get_poly(prm, id, "c0", RatPoly2(Rat(1)));
            require(n >= 1, id, "n >= 1");
            require(k == 0 || k == 1, id, "k in {0, 1}");
            require(!c0.is_zero(), id, "c0 != 0");
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, n + std::max(c0.deg_x(), 0));
            RatPoly2 gamma1 = X.pow(static_cast<int>(n)) * Y - C(1);
            b.g = Cometric(X * X, C(-n) * X * Y, C(n * n) * Y * Y - c0 * gamma1);
            std::vector<RatPoly2> factors;
            if (k == 1) factors.push_back(X);
            factors.push_back(gamma1);
            b.boundary = BoundarySpec(factors);
            b.delta_factors = {C(-1L), X, X, c0, gamma1};
            b.citation = "Prop. 4.4(i)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    add(CatalogEntry{
        "P44.ii",
        "Gamma = xy - 1",
        "Prop. 4.4(ii)",
        {{"b11", "rational (default 0)"}, {"c0", "polynomial in x (default 1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P44.ii";
            Rat b11 = get_rat(prm, id, "b11", Rat(0));
            RatPoly2 c0 = get_poly(prm, id, "c0", RatPoly2(Rat(1)));
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, 1 + std::max(c0.deg_x(), 0));
            RatPoly2 gamma = X * Y - C(1);
            b.g = Cometric(X * X, C(b11) * gamma - C(1), Y * Y - c0 * gamma);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.boundary = BoundarySpec({gamma});
            auto cof = divides(gamma, b.g.det());
            b.delta_factors = {*cof, gamma};
            b.citation = "Prop. 4.4(ii)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    add(CatalogEntry{
        "P44.iii",
        "Gamma = y, cometric (a0(x), b1(x) y, c02 y^2 + c1(x) y)",
        "Prop. 4.4(iii)",
        {{"a0", "polynomial in x, deg <= 2 (default 1)"},
         {"b1", "polynomial in x, deg <= 1 (default 0)"},
         {"c02", "rational (default 1)"},
         {"c1", "polynomial in x (default 1)"},
         {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P44.iii";
            RatPoly2 a0 = get_poly(prm, id, "a0", RatPoly2(Rat(1)));
            RatPoly2 b1 = get_poly(prm, id, "b1", RatPoly2());
            Rat c02 = get_rat(prm, id, "c02", Rat(1));
            RatPoly2 c1 = get_poly(prm, id, "c1", RatPoly2(Rat(1)));
            require(a0.deg_x() <= 2, id, "deg a0 <= 2");
            require(b1.deg_x() <= 1, id, "deg b1 <= 1");
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, std::max(c1.deg_x(), 1));
            b.g = Cometric(a0, b1 * Y, C(c02) * Y * Y + c1 * Y);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.boundary = BoundarySpec({Y});
            b.citation = "Prop. 4.4(iii)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    add(CatalogEntry{
        "P44.iv",
        "Gamma = x y, cometric (a10 x + a20 x^2, b11 x y, c02 y^2 + c1(x) y)",
        "Prop. 4.4(iv)",
        {{"a10", "rational (default 1)"}, {"a20", "rational (default 0)"}, {"b11", "rational (default 0)"},
         {"c02", "rational (default 1)"}, {"c1", "polynomial in x (default 1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P44.iv";
            Rat a10 = get_rat(prm, id, "a10", Rat(1));
            Rat a20 = get_rat(prm, id, "a20", Rat(0));
            Rat b11 = get_rat(prm, id, "b11", Rat(0));
            Rat c02 = get_rat(prm, id, "c02", Rat(1));
            RatPoly2 c1 = get_poly(prm, id, "c1", RatPoly2(Rat(1)));
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, std::max(c1.deg_x(), 1));
            b.g = Cometric(C(a10) * X + C(a20) * X * X, C(b11) * X * Y, C(c02) * Y * Y + c1 * Y);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.boundary = BoundarySpec({X, Y});
            b.citation = "Prop. 4.4(iv)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    add(CatalogEntry{
        "P44.v",
        "Gamma = (1-x^2) y, cometric (1-x^2, 0, c02 y^2 + c1(x) y)",
        "Prop. 4.4(v)",
        {{"c02", "rational (default 1)"}, {"c1", "polynomial in x (default 1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P44.v";
            Rat c02 = get_rat(prm, id, "c02", Rat(1));
            RatPoly2 c1 = get_poly(prm, id, "c1", RatPoly2(Rat(1)));
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, std::max(c1.deg_x(), 1));
            b.g = Cometric(C(1) - X * X, RatPoly2(), C(c02) * Y * Y + c1 * Y);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.boundary = BoundarySpec({C(1) - X, C(1) + X, Y});
            b.citation = "Prop. 4.4(v)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    add(CatalogEntry{
        "P44.vi",
        "Gamma = 1 - x y, cometric (0, 1-xy, (1-xy) c0(x))",
        "Prop. 4.4(vi)",
        {{"c0", "polynomial in x (default 1)"}, {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "P44.vi";
            RatPoly2 c0 = get_poly(prm, id, "c0", RatPoly2(Rat(1)));
            Bundle b;
            b.id = id;
            b.w = winf_weights(prm, id, 1 + std::max(c0.deg_x(), 0));
            RatPoly2 gamma = C(1) - X * Y;
            b.g = Cometric(RatPoly2(), gamma, gamma * c0);
            b.boundary = BoundarySpec({gamma});
            b.delta_factors = {C(-1L), gamma, gamma};
            b.citation = "Prop. 4.4(vi)";
            return finish(std::move(b));
        },
        nullptr,
        nullptr,
        nullptr,
    });

    // ---- P53 / B1 ------------------------------------------------------------
    auto gamma25 = []() {
        return parse_poly("y^3 - 20*x*y^2 + 16*y^2 + 45*x^3*y - 40*x^2*y - 27*x^5 + 25*x^4");
    };
    auto g28 = []() {
        return Cometric(parse_poly("y + 8*x - 9*x^2"), parse_poly("5*(4*y - 3*x*y - x^2)"),
                        parse_poly("-25*(y^2 - 4*x*y + 3*x^3)"));
    };
    auto b1_singulars = [](const Params&) -> std::vector<SingularPoint> {
        return {{Rat(0), Rat(0), "A4"}, {rat_frac(32, 27), rat_frac(256, 81), "A2"}, {Rat(1), Rat(1), "A1"}};
    };
    add(CatalogEntry{
        "P53",
        "rigid (1,2) solution: irreducible quintic boundary of the dodecahedral quotient",
        "Prop. 5.3",
        {},
        [gamma25, g28](const Params&) {
            Bundle b;
            b.id = "P53";
            b.w = Weights(1, 2);
            b.g = g28();
            b.boundary = BoundarySpec({gamma25()});
            b.delta_factors = {C(-25L), gamma25()};
            b.citation = "Prop. 5.3";
            return finish(std::move(b));
        },
        b1_singulars,
        nullptr,
        nullptr,
    });

    // ---- P55 ------------------------------------------------------------------
    auto make_p55i = [](const std::string& id, const Rat& al, const Rat& be, const Rat& mu) {
        RatPoly2 gamma = Y * Y - X.pow(3);
        RatPoly2 lin = C(be) * X + C(mu);
        Cometric g(C(4L) * Y + lin * C(4L) * X, C(6L) * X * X + lin * C(6L) * Y,
                   C(9L) * X * Y + C(al) * gamma + lin * C(9L) * X * X);
        Bundle b;
        b.id = id;
        b.w = Weights(1, 2);
        b.g = g;
        b.boundary = BoundarySpec({gamma});
        return b;
    };

    add(CatalogEntry{
        "P55.i",
        "Gamma = y^2 - x^3, three-parameter cometric family",
        "Prop. 5.5(i)",
        {{"alpha", "rational (default 0)"}, {"beta", "rational (default 0)"}, {"mu", "rational (default 1)"}},
        [make_p55i](const Params& prm) {
            const std::string id = "P55.i";
            Rat al = get_rat(prm, id, "alpha", Rat(0));
            Rat be = get_rat(prm, id, "beta", Rat(0));
            Rat mu = get_rat(prm, id, "mu", Rat(1));
            Bundle b = make_p55i(id, al, be, mu);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.branch_vectors = {BranchGerm(LaurentSeries::term(2), LaurentSeries::term(3), 64)};
            b.citation = "Prop. 5.5(i)";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> { return {{Rat(0), Rat(0), "A2"}}; },
        nullptr,
        nullptr,
    });

    add(CatalogEntry{
        "P55.ii",
        "Gamma = y (y - x^2)",
        "Prop. 5.5(ii)",
        {{"alpha", "rational (default 1)"}, {"beta", "rational (default 0)"}, {"mu", "0 or 1 (default 0)"}},
        [](const Params& prm) {
            const std::string id = "P55.ii";
            Rat al = get_rat(prm, id, "alpha", Rat(1));
            Rat be = get_rat(prm, id, "beta", Rat(0));
            Rat mu = get_rat(prm, id, "mu", Rat(0));
            require(mu == 0 || mu == 1, id, "mu in {0, 1}");
            require(!(al == 0 && be - be * be == 0 && mu == 0), id, "(alpha, beta-beta^2, mu) != (0, 0, 0)");
            RatPoly2 par = Y - X * X;
            RatPoly2 lin = C(be) * X + C(mu);
            Bundle b;
            b.id = id;
            b.w = Weights(1, 2);
            b.g = Cometric(par + lin * X, lin * C(2L) * Y, C(al) * Y * par + lin * C(4L) * X * Y);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.boundary = BoundarySpec({Y, par});
            b.branch_vectors = {BranchGerm(LaurentSeries::term(1), LaurentSeries::term(2), 64)};
            b.citation = "Prop. 5.5(ii)";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> { return {{Rat(0), Rat(0), "A3"}}; },
        nullptr,
        nullptr,
    });

    auto make_p55iii = [](const std::string& id, const Rat& al, const Rat& be) {
        RatPoly2 par = Y - X * X + C(1);
        Bundle b;
        b.id = id;
        b.w = Weights(1, 2);
        b.g = Cometric(par + C(be) * (X * X - C(1)), C(be) * C(2L) * X * Y,
                       C(al) * Y * par + C(be) * C(4L) * X * X * Y);
        return b;
    };

    add(CatalogEntry{
        "P55.iii",
        "Gamma = y (y - x^2 + 1)",
        "Prop. 5.5(iii)",
        {{"alpha", "rational (default -1)"}, {"beta", "rational (default 0)"}},
        [make_p55iii](const Params& prm) {
            const std::string id = "P55.iii";
            Rat al = get_rat(prm, id, "alpha", Rat(-1));
            Rat be = get_rat(prm, id, "beta", Rat(0));
            require(!(al == 0 && be - be * be == 0), id, "(alpha, beta-beta^2) != (0, 0)");
            Bundle b = make_p55iii(id, al, be);
            require(!b.g.det().is_zero(), id, "det g != 0");
            b.boundary = BoundarySpec({Y, Y - X * X + C(1)});
            b.citation = "Prop. 5.5(iii)";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> {
            return {{Rat(1), Rat(0), "A1"}, {Rat(-1), Rat(0), "A1"}};
        },
        nullptr,
        nullptr,
    });

    // ---- P57 -------------------------------------------------------------------
    add(CatalogEntry{
        "P57",
        "reducible cubic boundary: cuspidal cubic with cubically tangent parabola",
        "Prop. 5.7",
        {},
        [make_p55i](const Params&) {
            Bundle b = make_p55i("P57", Rat(-18), rat_frac(-3, 2), rat_frac(1, 2));
            RatPoly2 gamma1 = parse_poly("8*y - 3*x^2 - 6*x + 1");
            RatPoly2 gamma2 = Y * Y - X.pow(3);
            b.boundary = BoundarySpec({gamma1, gamma2});
            b.delta_factors = {C(-9L), gamma1, gamma2};
            b.branch_vectors = {BranchGerm(LaurentSeries::term(2), LaurentSeries::term(3), 64)};
            b.citation = "Prop. 5.7";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> {
            return {{rat_frac(1, 9), rat_frac(-1, 27), "A1"}, {Rat(0), Rat(0), "A2"}, {Rat(1), Rat(1), "A5"}};
        },
        nullptr,
        nullptr,
    });

    // ---- B1 ----------------------------------------------------------------------
    add(CatalogEntry{
        "B1",
        "dodecahedral quotient (bounded (1,2) solution)",
        "Thm. 6.1(B1)",
        {{"p", "rational, integrable when p > 3/10 (default 1)"}},
        [gamma25, g28](const Params& prm) {
            const std::string id = "B1";
            Rat p = get_rat(prm, id, "p", Rat(1));
            Bundle b;
            b.id = id;
            b.w = Weights(1, 2);
            b.g = g28();
            b.boundary = BoundarySpec({RatPoly2() - gamma25()});
            // det g = -25 Gamma is positive where g is positive definite, so the
            // boundary generator oriented positively on Omega is -Gamma. The
            // parabola y = x^2 separates Omega from the other negative
            // components: Gamma(x, x^2) = x^4 (x-1)^2 >= 0, so the parabola
            // never meets {Gamma < 0} and touches the closure only at the
            // A4 point (0,0) and the node (1,1).
            RatPoly2 oriented = RatPoly2() - gamma25();
            b.delta_factors = {C(25L), oriented};
            DomainSpec dom;
            dom.conditions = {{oriented, +1}, {Y - X * X, +1}};
            dom.bounded = true;
            dom.xlo = Rat(0);
            dom.xhi = rat_frac(32, 27);
            dom.ylo = Rat(0);
            dom.yhi = rat_frac(256, 81);
            dom.x_breaks = {Rat(1)};
            b.domain = dom;
            DensitySpec rho;
            rho.factor_exponents = {{oriented, expo(p)}};
            b.density = rho;
            b.citation = "Thm. 6.1(B1)";
            return finish(std::move(b));
        },
        b1_singulars,
        [](const Params& prm) {
            Rat p = get_rat(prm, "B1", "p", Rat(1));
            IntegrabilityReport r;
            r.inequalities = {ineq("p > 3/10", p > rat_frac(3, 10))};
            return r;
        },
        nullptr,
    });

    // ---- B2 -----------------------------------------------------------------------
    add(CatalogEntry{
        "B2",
        "cuspidal cubic with cubically tangent parabola (bounded (1,2) solution)",
        "Thm. 6.1(B2)",
        {{"p", "rational > 0 (default 1)"}, {"q", "rational > 1/6 (default 1)"}},
        [](const Params& prm) {
            const std::string id = "B2";
            Rat p = get_rat(prm, id, "p", Rat(1));
            Rat q = get_rat(prm, id, "q", Rat(1));
            Bundle b;
            b.id = id;
            b.w = Weights(1, 2);
            b.g = Cometric(parse_poly("4*(2*y - 3*x^2 + x)"), parse_poly("6*(y - 3*x*y + 2*x^2)"),
                           parse_poly("9*(x^2 + x^3 + 2*x*y - 4*y^2)"));
            RatPoly2 gamma1 = parse_poly("8*y - 3*x^2 - 6*x + 1");
            RatPoly2 gamma2 = X.pow(3) - Y * Y;
            b.boundary = BoundarySpec({gamma1, gamma2});
            b.delta_factors = {C(36L), gamma1, gamma2};
            DomainSpec dom;
            dom.conditions = {{gamma1, +1}, {gamma2, +1}};
            dom.bounded = true;
            dom.xlo = Rat(0);
            dom.xhi = Rat(1);
            dom.ylo = rat_frac(-1, 20);
            dom.yhi = Rat(1);
            dom.x_breaks = {rat_frac(1, 9)};
            b.domain = dom;
            DensitySpec rho;
            rho.factor_exponents = {{gamma1, expo(p)}, {gamma2, expo(q)}};
            b.density = rho;
            b.branch_vectors = {BranchGerm(LaurentSeries::term(2), LaurentSeries::term(3), 64)};
            b.citation = "Thm. 6.1(B2)";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> {
            return {{rat_frac(1, 9), rat_frac(-1, 27), "A1"}, {Rat(0), Rat(0), "A2"}, {Rat(1), Rat(1), "A5"}};
        },
        [](const Params& prm) {
            Rat p = get_rat(prm, "B2", "p", Rat(1));
            Rat q = get_rat(prm, "B2", "q", Rat(1));
            IntegrabilityReport r;
            r.inequalities = {ineq("p > 0", p > 0), ineq("q > 1/6", q > rat_frac(1, 6)),
                              ineq("p + q > 2/3", p + q > rat_frac(2, 3))};
            return r;
        },
        nullptr,
    });

    // ---- B3 -------------------------------------------------------------------------
    add(CatalogEntry{
        "B3",
        "parabolic biangle (bounded (1,2) solution)",
        "Thm. 6.1(B3)",
        {{"alpha", "rational < 0 (default -1)"}, {"beta", "rational <= 0 (default 0)"},
         {"p", "rational > 0 (default 1)"}, {"q", "rational > 0 (default 1)"}},
        [make_p55iii](const Params& prm) {
            const std::string id = "B3";
            Rat al = get_rat(prm, id, "alpha", Rat(-1));
            Rat be = get_rat(prm, id, "beta", Rat(0));
            Rat p = get_rat(prm, id, "p", Rat(1));
            Rat q = get_rat(prm, id, "q", Rat(1));
            require(al < 0, id, "alpha < 0");
            require(be <= 0, id, "beta <= 0");
            Bundle b = make_p55iii(id, al, be);
            RatPoly2 my = RatPoly2() - Y; // -y, positive on Omega
            RatPoly2 gamma1 = Y - X * X + C(1);
            b.boundary = BoundarySpec({my, gamma1});
            // Delta = y Gamma0 Gamma1 with Gamma0 of eq. (31)
            RatPoly2 gamma0 = C(al) * Y + C((4 * be - al) * (1 - be)) * X * X + C(al * (1 - be));
            b.delta_factors = {C(-1L), my, gamma0, gamma1};
            DomainSpec dom;
            dom.conditions = {{my, +1}, {gamma1, +1}};
            dom.bounded = true;
            dom.xlo = Rat(-1);
            dom.xhi = Rat(1);
            dom.ylo = Rat(-1);
            dom.yhi = Rat(0);
            b.domain = dom;
            DensitySpec rho;
            rho.factor_exponents = {{my, expo(p)}, {gamma1, expo(q)}};
            b.density = rho;
            b.citation = "Thm. 6.1(B3)";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> {
            return {{Rat(1), Rat(0), "A1"}, {Rat(-1), Rat(0), "A1"}};
        },
        [](const Params& prm) {
            Rat p = get_rat(prm, "B3", "p", Rat(1));
            Rat q = get_rat(prm, "B3", "q", Rat(1));
            IntegrabilityReport r;
            r.inequalities = {ineq("p > 0", p > 0), ineq("q > 0", q > 0)};
            return r;
        },
        [](const Params& prm) {
            Rat al = get_rat(prm, "B3", "alpha", Rat(-1));
            Rat be = get_rat(prm, "B3", "beta", Rat(0));
            return al == 4 * be || al == 4 * be - 4;
        },
    });

    // ---- B4 --------------------------------------------------------------------------
    add(CatalogEntry{
        "B4",
        "bounded (1,infinity) solution on (1-x)^m (1+x)^n > y^2",
        "Thm. 6.2(B4)",
        {{"m", "integer >= 1"}, {"n", "integer >= 1"}, {"c02", "rational < 0 (default -1)"},
         {"p", "rational (default 1)"}, {"q", "rational (default p; used when m, n both even)"},
         {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "B4";
            auto d = make_p43i(id, prm);
            require(d.c02 < 0, id, "c02 < 0");
            Rat p = get_rat(prm, id, "p", Rat(1));
            Rat q = get_rat(prm, id, "q", p);
            Bundle b;
            b.id = id;
            b.w = d.w;
            b.g = d.g;
            const bool both_even = d.m % 2 == 0 && d.n % 2 == 0;
            DensitySpec rho;
            std::vector<RatPoly2> factors;
            if (both_even) {
                factors = even_split(RatPoly2(), d.m / 2, d.n / 2);
                rho.factor_exponents = {{factors[0], expo(p)}, {factors[1], expo(q)}};
            } else {
                factors = {d.gamma};
                rho.factor_exponents = {{d.gamma, expo(p)}};
            }
            b.boundary = BoundarySpec(factors);
            b.delta_factors = {d.gamma0};
            for (const auto& f : factors) b.delta_factors.push_back(f);
            DomainSpec dom;
            dom.conditions.push_back({d.gamma, +1});
            dom.bounded = true;
            dom.xlo = Rat(-1);
            dom.xhi = Rat(1);
            Rat ylim = rat_pow(Rat(2), static_cast<unsigned>(ceil_div(d.m + d.n, 2)));
            dom.ylo = -ylim;
            dom.yhi = ylim;
            b.domain = dom;
            b.density = rho;
            b.citation = "Thm. 6.2(B4)";
            return finish(std::move(b));
        },
        [](const Params& prm) -> std::vector<SingularPoint> {
            long m = get_int(prm, "B4", "m");
            long n = get_int(prm, "B4", "n");
            std::vector<SingularPoint> s;
            if (m >= 2) s.push_back({Rat(1), Rat(0), "A" + std::to_string(m - 1)});
            if (n >= 2) s.push_back({Rat(-1), Rat(0), "A" + std::to_string(n - 1)});
            return s;
        },
        [](const Params& prm) {
            const std::string id = "B4";
            long m = get_int(prm, id, "m");
            long n = get_int(prm, id, "n");
            Rat p = get_rat(prm, id, "p", Rat(1));
            IntegrabilityReport r;
            if (m % 2 == 0 && n % 2 == 0) {
                Rat q = get_rat(prm, id, "q", p);
                Rat bound = std::max(Rat(Rat(1) - rat_frac(2, n)), Rat(Rat(1) - rat_frac(2, m)));
                r.inequalities = {ineq("p > 0", p > 0), ineq("q > 0", q > 0),
                                  ineq("p + q > max(1-2/n, 1-2/m)", p + q > bound)};
            } else {
                Rat bound = std::max(Rat(rat_frac(1, 2) - rat_frac(1, n)), Rat(rat_frac(1, 2) - rat_frac(1, m)));
                r.inequalities = {ineq("p > max(1/2-1/n, 1/2-1/m)", p > bound)};
            }
            return r;
        },
        nullptr,
    });

    // ---- B5 ---------------------------------------------------------------------------
    add(CatalogEntry{
        "B5",
        "bounded (1,infinity) solution on x ((1-x)^n - y^2) > 0",
        "Thm. 6.2(B5)",
        {{"n", "integer >= 1"}, {"c02", "rational <= 0 (default -1)"}, {"r", "rational (default 1)"},
         {"p", "rational (default 1)"}, {"q", "rational (default p; used when n even)"},
         {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "B5";
            Params alg = prm;
            alg["k"] = Rat(1);
            alg["x0"] = Rat(1);
            auto d = make_p43iii(id, alg);
            require(d.n >= 1, id, "n >= 1");
            require(d.c02 <= 0, id, "c02 <= 0");
            Rat rr = get_rat(prm, id, "r", Rat(1));
            Rat p = get_rat(prm, id, "p", Rat(1));
            Rat q = get_rat(prm, id, "q", p);
            Bundle b;
            b.id = id;
            b.w = d.w;
            b.g = d.g;
            const bool even = d.n % 2 == 0;
            DensitySpec rho;
            std::vector<RatPoly2> factors{X};
            rho.factor_exponents = {{X, expo(rr)}};
            if (even) {
                RatPoly2 G = (C(1) - X).pow(static_cast<int>(d.n / 2));
                factors.push_back(G + Y);
                factors.push_back(G - Y);
                rho.factor_exponents.push_back({G + Y, expo(p)});
                rho.factor_exponents.push_back({G - Y, expo(q)});
            } else {
                factors.push_back(d.gamma2);
                rho.factor_exponents.push_back({d.gamma2, expo(p)});
            }
            b.boundary = BoundarySpec(factors);
            b.delta_factors = {d.gamma0};
            for (const auto& f : factors) b.delta_factors.push_back(f);
            DomainSpec dom;
            dom.conditions = {{X, +1}, {d.gamma2, +1}};
            dom.bounded = true;
            dom.xlo = Rat(0);
            dom.xhi = Rat(1);
            dom.ylo = Rat(-1);
            dom.yhi = Rat(1);
            b.domain = dom;
            b.density = rho;
            b.citation = "Thm. 6.2(B5)";
            return finish(std::move(b));
        },
        [](const Params& prm) -> std::vector<SingularPoint> {
            long n = get_int(prm, "B5", "n");
            std::vector<SingularPoint> s = {{Rat(0), Rat(1), "A1"}, {Rat(0), Rat(-1), "A1"}};
            if (n >= 2) s.push_back({Rat(1), Rat(0), "A" + std::to_string(n - 1)});
            return s;
        },
        [](const Params& prm) {
            const std::string id = "B5";
            long n = get_int(prm, id, "n");
            Rat rr = get_rat(prm, id, "r", Rat(1));
            Rat p = get_rat(prm, id, "p", Rat(1));
            IntegrabilityReport r;
            r.inequalities.push_back(ineq("r > 0", rr > 0));
            if (n % 2 == 0) {
                Rat q = get_rat(prm, id, "q", p);
                r.inequalities.push_back(ineq("p > 0", p > 0));
                r.inequalities.push_back(ineq("q > 0", q > 0));
                r.inequalities.push_back(ineq("p + q > 1-2/n", p + q > Rat(1) - rat_frac(2, n)));
            } else {
                r.inequalities.push_back(ineq("p > max(0, 1/2-1/n)", p > std::max(Rat(0), Rat(rat_frac(1, 2) - rat_frac(1, n)))));
            }
            return r;
        },
        nullptr,
    });

    // ---- U1 ----------------------------------------------------------------------------
    add(CatalogEntry{
        "U1",
        "unbounded (1,infinity) solution on x^n > y^2, x > 0",
        "Thm. 6.4(U1)",
        {{"n", "integer >= 1"}, {"c02", "rational <= 0 (default -1)"}, {"p", "rational (default 1)"},
         {"q", "rational (default p; used when n even)"}, {"lambda", "rational > 0 (default 1)"},
         {"W", "integer > 2 (optional)"}},
        [](const Params& prm) {
            const std::string id = "U1";
            auto d = make_p43ii(id, prm);
            require(d.c02 <= 0, id, "c02 <= 0");
            Rat p = get_rat(prm, id, "p", Rat(1));
            Rat q = get_rat(prm, id, "q", p);
            Rat lambda = get_rat(prm, id, "lambda", Rat(1));
            Bundle b;
            b.id = id;
            b.w = d.w;
            b.g = d.g;
            const bool even = d.n % 2 == 0;
            DensitySpec rho;
            std::vector<RatPoly2> factors;
            if (even) {
                RatPoly2 G = X.pow(static_cast<int>(d.n / 2));
                factors = {G + Y, G - Y};
                rho.factor_exponents = {{G + Y, expo(p)}, {G - Y, expo(q)}};
            } else {
                factors = {d.gamma};
                rho.factor_exponents = {{d.gamma, expo(p)}};
            }
            rho.Q = C(Rat(-lambda)) * X;
            b.boundary = BoundarySpec(factors);
            b.delta_factors = {d.gamma0};
            for (const auto& f : factors) b.delta_factors.push_back(f);
            DomainSpec dom;
            dom.conditions = {{X, +1}, {d.gamma, +1}};
            dom.bounded = false;
            b.domain = dom;
            b.density = rho;
            b.branch_vectors = {germ_t2_tn(d.n)};
            b.citation = "Thm. 6.4(U1)";
            return finish(std::move(b));
        },
        [](const Params& prm) -> std::vector<SingularPoint> {
            long n = get_int(prm, "U1", "n");
            if (n >= 2) return {{Rat(0), Rat(0), "A" + std::to_string(n - 1)}};
            return {};
        },
        [](const Params& prm) {
            const std::string id = "U1";
            long n = get_int(prm, id, "n");
            Rat p = get_rat(prm, id, "p", Rat(1));
            Rat lambda = get_rat(prm, id, "lambda", Rat(1));
            IntegrabilityReport r;
            r.inequalities.push_back(ineq("lambda > 0", lambda > 0));
            if (n % 2 == 0) {
                Rat q = get_rat(prm, id, "q", p);
                r.inequalities.push_back(ineq("p > 0", p > 0));
                r.inequalities.push_back(ineq("q > 0", q > 0));
                r.inequalities.push_back(ineq("p + q > 1-2/n", p + q > Rat(1) - rat_frac(2, n)));
            } else {
                r.inequalities.push_back(ineq("p > max(0, 1/2-1/n)", p > std::max(Rat(0), Rat(rat_frac(1, 2) - rat_frac(1, n)))));
            }
            return r;
        },
        nullptr,
    });

    // ---- products: U2, RECT, DIM1 ----------------------------------------------------------
    struct Axis1D {
        RatPoly2 metric;         // g^{ii}(v) in the axis variable
        std::vector<RatPoly2> factors; // oriented boundary factors
        std::vector<Rat> exponents;
        RatPoly2 Q;
        std::vector<DomainSpec::Sign> signs;
        bool bounded;
        Rat lo, hi;
        std::vector<Inequality> table;
    };

    // axis variable is passed in as x or y
    auto axis_1d = [](const std::string& id, long kind, const RatPoly2& v, const std::string& pname,
                      const std::string& qname, const Params& prm) -> Axis1D {
        Axis1D ax;
        switch (kind) {
            case 0: { // hermite
                ax.metric = C(1);
                ax.Q = C(rat_frac(-1, 2)) * v * v;
                ax.bounded = false;
                break;
            }
            case 1: { // laguerre
                Rat a = get_rat(prm, id, pname, Rat(1));
                ax.metric = v;
                ax.factors = {v};
                ax.exponents = {expo(a)};
                ax.Q = RatPoly2() - v;
                ax.signs = {{v, +1}};
                ax.bounded = false;
                ax.table = {ineq(pname + " > 0", a > 0)};
                break;
            }
            case 2: { // jacobi
                Rat p = get_rat(prm, id, pname, Rat(1));
                Rat q = get_rat(prm, id, qname, Rat(1));
                ax.metric = C(1) - v * v;
                ax.factors = {C(1) - v, C(1) + v};
                ax.exponents = {expo(p), expo(q)};
                ax.signs = {{C(1) - v, +1}, {C(1) + v, +1}};
                ax.bounded = true;
                ax.lo = Rat(-1);
                ax.hi = Rat(1);
                ax.table = {ineq(pname + " > 0", p > 0), ineq(qname + " > 0", q > 0)};
                break;
            }
            default:
                throw InvalidParam(id + ": kind must be 0 (hermite), 1 (laguerre) or 2 (jacobi)");
        }
        return ax;
    };

    auto product_bundle = [axis_1d](const std::string& id, long kind1, long kind2, const Rat& sx,
                                    const Rat& sy, const Params& prm, const Weights& w) {
        Axis1D ax = axis_1d(id, kind1, X, "p1", "q1", prm);
        Axis1D ay = axis_1d(id, kind2, Y, "p2", "q2", prm);
        Bundle b;
        b.id = id;
        b.w = w;
        b.g = Cometric(C(sx) * ax.metric, RatPoly2(), C(sy) * ay.metric);
        std::vector<RatPoly2> factors = ax.factors;
        factors.insert(factors.end(), ay.factors.begin(), ay.factors.end());
        b.boundary = BoundarySpec(factors);
        DensitySpec rho;
        for (std::size_t i = 0; i < ax.factors.size(); ++i)
            rho.factor_exponents.push_back({ax.factors[i], ax.exponents[i]});
        for (std::size_t i = 0; i < ay.factors.size(); ++i)
            rho.factor_exponents.push_back({ay.factors[i], ay.exponents[i]});
        rho.Q = ax.Q + ay.Q;
        b.density = rho;
        DomainSpec dom;
        dom.conditions = ax.signs;
        dom.conditions.insert(dom.conditions.end(), ay.signs.begin(), ay.signs.end());
        dom.bounded = ax.bounded && ay.bounded;
        if (dom.bounded) {
            dom.xlo = ax.lo;
            dom.xhi = ax.hi;
            dom.ylo = ay.lo;
            dom.yhi = ay.hi;
        }
        b.domain = dom;
        b.delta_factors = {C(sx * sy)};
        for (const auto& f : ax.factors) b.delta_factors.push_back(f);
        for (const auto& f : ay.factors) b.delta_factors.push_back(f);
        return b;
    };

    auto product_table = [axis_1d](const std::string& id, long kind1, long kind2, const Params& prm) {
        IntegrabilityReport r;
        Axis1D ax = axis_1d(id, kind1, X, "p1", "q1", prm);
        Axis1D ay = axis_1d(id, kind2, Y, "p2", "q2", prm);
        r.inequalities = ax.table;
        r.inequalities.insert(r.inequalities.end(), ay.table.begin(), ay.table.end());
        return r;
    };

    add(CatalogEntry{
        "U2",
        "product of two one-dimensional solutions (at least one unbounded in use)",
        "Thm. 6.4(U2)",
        {{"kind1", "0=hermite, 1=laguerre, 2=jacobi"}, {"kind2", "0=hermite, 1=laguerre, 2=jacobi"},
         {"alpha", "rational > 0 scale of the x block (default 1)"},
         {"beta", "rational > 0 scale of the y block (default 1)"},
         {"p1", "rational (laguerre/jacobi x, default 1)"}, {"q1", "rational (jacobi x, default 1)"},
         {"p2", "rational (laguerre/jacobi y, default 1)"}, {"q2", "rational (jacobi y, default 1)"},
         {"W", "integer > 2 (optional)"}},
        [product_bundle](const Params& prm) {
            const std::string id = "U2";
            long k1 = get_int(prm, id, "kind1");
            long k2 = get_int(prm, id, "kind2");
            Rat sx = get_rat(prm, id, "alpha", Rat(1));
            Rat sy = get_rat(prm, id, "beta", Rat(1));
            require(sx > 0 && sy > 0, id, "alpha, beta > 0");
            Bundle b = product_bundle(id, k1, k2, sx, sy, prm, winf_weights(prm, id, 3));
            b.citation = "Thm. 6.4(U2)";
            return finish(std::move(b));
        },
        nullptr,
        [product_table](const Params& prm) {
            return product_table("U2", get_int(prm, "U2", "kind1"), get_int(prm, "U2", "kind2"), prm);
        },
        nullptr,
    });

    add(CatalogEntry{
        "RECT",
        "rectangle with the two-parameter diagonal cometric",
        "Remark 6.5",
        {{"alpha", "rational > 0 (default 1)"}, {"beta", "rational > 0 (default 1)"},
         {"p1", "rational (default 1)"}, {"q1", "rational (default 1)"},
         {"p2", "rational (default 1)"}, {"q2", "rational (default 1)"}},
        [product_bundle](const Params& prm) {
            const std::string id = "RECT";
            Rat sx = get_rat(prm, id, "alpha", Rat(1));
            Rat sy = get_rat(prm, id, "beta", Rat(1));
            require(sx > 0 && sy > 0, id, "alpha, beta > 0");
            Bundle b = product_bundle(id, 2, 2, sx, sy, prm, Weights(1, 1));
            b.citation = "Remark 6.5";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> { return {}; },
        [product_table](const Params& prm) { return product_table("RECT", 2, 2, prm); },
        nullptr,
    });

    add(CatalogEntry{
        "DIM1.hermite",
        "Hermite x Hermite product (Gaussian on the plane)",
        "Remark 1.1",
        {},
        [product_bundle](const Params& prm) {
            Bundle b = product_bundle("DIM1.hermite", 0, 0, Rat(1), Rat(1), prm, Weights(1, 1));
            b.citation = "Remark 1.1";
            return finish(std::move(b));
        },
        nullptr,
        [](const Params&) { return IntegrabilityReport{}; },
        nullptr,
    });

    add(CatalogEntry{
        "DIM1.laguerre",
        "Laguerre x Laguerre product on the positive quadrant",
        "Remark 1.1",
        {{"p1", "rational > 0 (default 1)"}, {"p2", "rational > 0 (default 1)"}},
        [product_bundle](const Params& prm) {
            Bundle b = product_bundle("DIM1.laguerre", 1, 1, Rat(1), Rat(1), prm, Weights(1, 1));
            b.citation = "Remark 1.1";
            return finish(std::move(b));
        },
        nullptr,
        [product_table](const Params& prm) { return product_table("DIM1.laguerre", 1, 1, prm); },
        nullptr,
    });

    add(CatalogEntry{
        "DIM1.jacobi",
        "Jacobi x Jacobi product on the square",
        "Remark 1.1",
        {{"p1", "rational > 0 (default 1)"}, {"q1", "rational > 0 (default 1)"},
         {"p2", "rational > 0 (default 1)"}, {"q2", "rational > 0 (default 1)"}},
        [product_bundle](const Params& prm) {
            Bundle b = product_bundle("DIM1.jacobi", 2, 2, Rat(1), Rat(1), prm, Weights(1, 1));
            b.citation = "Remark 1.1";
            return finish(std::move(b));
        },
        [](const Params&) -> std::vector<SingularPoint> { return {}; },
        [product_table](const Params& prm) { return product_table("DIM1.jacobi", 2, 2, prm); },
        nullptr,
    });
}

const Catalog& Catalog::instance() {
    static Catalog c;
    return c;
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> v;
    for (const auto& [id, e] : entries_) v.push_back(id);
    return v;
}

bool Catalog::has(const std::string& id) const { return entries_.count(id) > 0; }

const CatalogEntry& Catalog::entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw InvalidParam("unknown catalog entry '" + id + "'");
    return it->second;
}

Bundle Catalog::instantiate(const std::string& id, const Params& params) const {
    return entry(id).make(params);
}

std::vector<SingularPoint> Catalog::singular_points(const std::string& id, const Params& params) const {
    const CatalogEntry& e = entry(id);
    if (!e.singular) throw InvalidParam(id + ": entry carries no singularity data");
    auto pts = e.singular(params);
    // exact verification: each point kills Gamma and both partials
    Bundle b = e.make(params);
    RatPoly2 G = b.boundary.product();
    RatPoly2 gx = G.partial_x(), gy = G.partial_y();
    for (const auto& s : pts) {
        if (G.evaluate(s.x, s.y) != 0 || gx.evaluate(s.x, s.y) != 0 || gy.evaluate(s.x, s.y) != 0)
            throw std::logic_error(id + ": singular point table is inconsistent");
    }
    return pts;
}

IntegrabilityReport Catalog::integrability_constraints(const std::string& id, const Params& params) const {
    const CatalogEntry& e = entry(id);
    if (!e.integrability) throw InvalidParam(id + ": entry carries no integrability table");
    return e.integrability(params);
}

Rat curvature(const Bundle& bundle, const Rat& x, const Rat& y) {
    if (bundle.domain && !bundle.domain->contains(x, y))
        throw std::invalid_argument(bundle.id + ": curvature point outside Omega");
    // scalar curvature R = 2K, the convention of the constant-curvature tables
    return scalar_curvature(bundle.g, x, y);
}

Rat curvature_closed_form(long n, int k, const Rat& lambda, const Rat& alpha, const Rat& x) {
    Rat n2(n * n);
    Rat xk = rat_pow(x, static_cast<unsigned>(k));
    Rat denom = (n2 + alpha) * xk - alpha;
    return -lambda * n2 * (2 * (n2 + alpha) * xk + alpha) / (denom * denom);
}

RealizationImage realization_map(long m, long n, const std::array<double, 4>& z) {
    double norm2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3];
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("realization_map: input is not on the unit sphere");
    std::complex<double> z1(z[0], z[1]), z2(z[2], z[3]);
    std::complex<double> t(1.0, 0.0);
    for (long i = 0; i < n; ++i) t *= z1;
    std::complex<double> c2 = std::conj(z2);
    for (long i = 0; i < m; ++i) t *= c2;
    RealizationImage img;
    img.X = std::norm(z1);
    img.Y = t.real();
    img.x = 2.0 * img.X - 1.0;
    img.y = std::pow(2.0, 0.5 * static_cast<double>(m + n)) * img.Y;
    return img;
}

} // namespace dopkit
