#include "dopkit/density.hpp"

#include <algorithm>

#include "dopkit/linalg.hpp"

namespace dopkit {

namespace {

// Assembles polynomial identities that are linear in a set of scalar
// unknowns: sum_k u_k * M_k + R = 0, coefficient-wise.
struct PolyLinearSystem {
    std::vector<std::map<Expo, std::size_t>> eq_index; // per identity
    RatMat A;
    RatVec rhs;
    std::size_t unknowns;

    explicit PolyLinearSystem(std::size_t n_unknowns) : unknowns(n_unknowns) {}

    std::size_t add_identity() {
        eq_index.emplace_back();
        return eq_index.size() - 1;
    }

    // register support so rows exist even when coefficients cancel
    void touch(std::size_t id, const RatPoly2& p) {
        for (const auto& [e, c] : p.terms()) eq_index[id].try_emplace(e, 0);
    }

    void finalize_rows() {
        std::size_t rows = 0;
        for (auto& m : eq_index)
            for (auto& [e, idx] : m) idx = rows++;
        A.assign(rows, RatVec(unknowns, Rat(0)));
        rhs.assign(rows, Rat(0));
    }

    void add_coeff(std::size_t id, const RatPoly2& p, std::size_t unknown) {
        for (const auto& [e, c] : p.terms()) A[eq_index[id].at(e)][unknown] += c;
    }

    void add_rhs(std::size_t id, const RatPoly2& p) {
        for (const auto& [e, c] : p.terms()) rhs[eq_index[id].at(e)] += c;
    }
};

std::vector<Expo> box_monomials_w(long bound, const Weights& w) {
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

bool drift_compatible(const Cometric& g, const DriftPair& d) {
    RatPoly2 delta = g.det();
    RatPoly2 nx = g.c * d.L1 - g.b * d.L2;
    RatPoly2 ny = g.a * d.L2 - g.b * d.L1;
    RatPoly2 lhs = delta * (nx.partial_y() - ny.partial_x());
    RatPoly2 rhs = nx * delta.partial_y() - ny * delta.partial_x();
    return lhs == rhs;
}

std::vector<DriftPair> solve_drift(const Cometric& g, const Weights& w) {
    RatPoly2 delta = g.det();
    if (delta.is_zero()) throw std::invalid_argument("solve_drift: determinant is identically zero");

    const auto mon1 = box_monomials_w(w.w1, w);
    const auto mon2 = box_monomials_w(w.w2, w);
    std::size_t n = mon1.size() + mon2.size();

    // identity: Delta*(d_y N_x - d_x N_y) - N_x d_y Delta + N_y d_x Delta = 0,
    // N_x = c L1 - b L2, N_y = a L2 - b L1; linear in the L coefficients.
    auto contrib_L1 = [&](const RatPoly2& mono) {
        RatPoly2 nx = g.c * mono;
        RatPoly2 ny = -(g.b * mono);
        return delta * (nx.partial_y() - ny.partial_x()) - nx * delta.partial_y() + ny * delta.partial_x();
    };
    auto contrib_L2 = [&](const RatPoly2& mono) {
        RatPoly2 nx = -(g.b * mono);
        RatPoly2 ny = g.a * mono;
        return delta * (nx.partial_y() - ny.partial_x()) - nx * delta.partial_y() + ny * delta.partial_x();
    };

    PolyLinearSystem sys(n);
    std::size_t id = sys.add_identity();
    std::vector<RatPoly2> cols;
    cols.reserve(n);
    for (const auto& m : mon1) cols.push_back(contrib_L1(RatPoly2::monomial(m.first, m.second)));
    for (const auto& m : mon2) cols.push_back(contrib_L2(RatPoly2::monomial(m.first, m.second)));
    for (const auto& p : cols) sys.touch(id, p);
    sys.finalize_rows();
    for (std::size_t k = 0; k < n; ++k) sys.add_coeff(id, cols[k], k);

    std::vector<DriftPair> basis;
    for (const auto& v : nullspace(sys.A)) {
        DriftPair d;
        for (std::size_t k = 0; k < mon1.size(); ++k)
            d.L1.set_coeff(mon1[k].first, mon1[k].second, v[k]);
        for (std::size_t k = 0; k < mon2.size(); ++k)
            d.L2.set_coeff(mon2[k].first, mon2[k].second, v[mon1.size() + k]);
        basis.push_back(std::move(d));
    }
    return basis;
}

namespace {

// monomial box [0..dx] x [0..dy]
std::vector<Expo> rect_box(int dx, int dy) {
    std::vector<Expo> v;
    for (int j = 0; j <= dy; ++j)
        for (int i = 0; i <= dx; ++i) v.push_back({i, j});
    return v;
}

struct LogDecomposition {
    bool solved = false;
    RatVec solution; // residues then Q (or U) coefficients
};

} // namespace

DensitySpec integrate_drift(const Cometric& g, const DriftPair& d, const BoundarySpec& gamma) {
    if (!drift_compatible(g, d))
        throw std::invalid_argument("integrate_drift: drift does not satisfy the compatibility identity");
    RatPoly2 delta = g.det();
    if (delta.is_zero()) throw std::invalid_argument("integrate_drift: determinant is identically zero");

    const auto& factors = gamma.factors;
    const std::size_t s = factors.size();

    RatPoly2 P{Rat(1)};
    for (const auto& f : factors) P *= f;
    std::vector<RatPoly2> cof(s, RatPoly2(Rat(1))); // P / Gamma_k
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < s; ++l)
            if (l != k) cof[k] *= factors[l];

    RatPoly2 nx = g.c * d.L1 - g.b * d.L2;
    RatPoly2 ny = g.a * d.L2 - g.b * d.L1;
    RatPoly2 dp = delta * P;

    RatPoly2 nxp = nx * P, nyp = ny * P;
    std::vector<RatPoly2> logx(s), logy(s);
    for (std::size_t k = 0; k < s; ++k) {
        logx[k] = delta * factors[k].partial_x() * cof[k];
        logy[k] = delta * factors[k].partial_y() * cof[k];
    }

    // degree box for Q: wide enough for any solution of the identities
    auto degx = [](const RatPoly2& p) { return std::max(p.deg_x(), 0); };
    auto degy = [](const RatPoly2& p) { return std::max(p.deg_y(), 0); };
    int mx = std::max(degx(nxp), degx(nyp));
    int my = std::max(degy(nxp), degy(nyp));
    for (std::size_t k = 0; k < s; ++k) {
        mx = std::max({mx, degx(logx[k]), degx(logy[k])});
        my = std::max({my, degy(logx[k]), degy(logy[k])});
    }
    int qx = std::max(mx - degx(dp), 0) + 1;
    int qy = std::max(my - degy(dp), 0) + 1;
    auto qmons = rect_box(qx, qy);
    // drop the constant term: Q is normalized with Q(0,0) = 0
    qmons.erase(std::remove(qmons.begin(), qmons.end(), Expo{0, 0}), qmons.end());

    // joint system: residues p_k and Q coefficients
    {
        PolyLinearSystem sys(s + qmons.size());
        std::size_t ex = sys.add_identity();
        std::size_t ey = sys.add_identity();
        sys.touch(ex, nxp);
        sys.touch(ey, nyp);
        for (std::size_t k = 0; k < s; ++k) {
            sys.touch(ex, logx[k]);
            sys.touch(ey, logy[k]);
        }
        for (const auto& m : qmons) {
            RatPoly2 mono = RatPoly2::monomial(m.first, m.second);
            sys.touch(ex, dp * mono.partial_x());
            sys.touch(ey, dp * mono.partial_y());
        }
        sys.finalize_rows();
        for (std::size_t k = 0; k < s; ++k) {
            sys.add_coeff(ex, logx[k], k);
            sys.add_coeff(ey, logy[k], k);
        }
        for (std::size_t q = 0; q < qmons.size(); ++q) {
            RatPoly2 mono = RatPoly2::monomial(qmons[q].first, qmons[q].second);
            sys.add_coeff(ex, dp * mono.partial_x(), s + q);
            sys.add_coeff(ey, dp * mono.partial_y(), s + q);
        }
        sys.add_rhs(ex, nxp);
        sys.add_rhs(ey, nyp);

        RatVec sol;
        if (solve_linear(sys.A, sys.rhs, sol)) {
            DensitySpec out;
            for (std::size_t k = 0; k < s; ++k) out.factor_exponents.push_back({factors[k], sol[k]});
            RatPoly2 Q;
            for (std::size_t q = 0; q < qmons.size(); ++q)
                Q.set_coeff(qmons[q].first, qmons[q].second, sol[s + q]);
            out.Q = Q;
            return out;
        }
    }

    // diagnosis: solve each component independently with a free polynomial
    // remainder; failure there means the factor list cannot absorb the poles
    auto component_solvable = [&](const RatPoly2& np, const std::vector<RatPoly2>& logs) {
        auto umons = rect_box(qx, qy);
        PolyLinearSystem sys(s + umons.size());
        std::size_t e = sys.add_identity();
        sys.touch(e, np);
        for (std::size_t k = 0; k < s; ++k) sys.touch(e, logs[k]);
        for (const auto& m : umons) sys.touch(e, dp * RatPoly2::monomial(m.first, m.second));
        sys.finalize_rows();
        for (std::size_t k = 0; k < s; ++k) sys.add_coeff(e, logs[k], k);
        for (std::size_t u = 0; u < umons.size(); ++u)
            sys.add_coeff(e, dp * RatPoly2::monomial(umons[u].first, umons[u].second), s + u);
        sys.add_rhs(e, np);
        RatVec sol;
        return solve_linear(sys.A, sys.rhs, sol);
    };
    if (!component_solvable(nxp, logx) || !component_solvable(nyp, logy))
        throw IntegrateError("integrate_drift: residue mismatch, supplied factors are insufficient");
    throw IntegrateError("integrate_drift: non-integrable rational part (dQ is not closed)");
}

bool check_degree_bound_9(const RatPoly2& delta, const RatPoly2& Q, const Weights& w) {
    RatPoly2 qd = Q * delta;
    if (qd.is_zero()) return true;
    long cap = 2 * (w.w1 + w.w2);
    return w.w1 * qd.deg_x() <= cap && w.w2 * qd.deg_y() <= cap;
}

} // namespace dopkit
