#include "dopkit/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace dopkit {

FiltrationBasis filtration_basis(const Weights& w, long n) {
    FiltrationBasis b;
    b.w = w;
    b.cutoff = n;
    for (int j = 0; w.w2 * j <= n; ++j)
        for (int i = 0; w.w1 * i + w.w2 * j <= n; ++i) b.monomials.push_back({i, j});
    std::sort(b.monomials.begin(), b.monomials.end(), [&](const Expo& a, const Expo& c) {
        long da = w.w1 * a.first + w.w2 * a.second;
        long dc = w.w1 * c.first + w.w2 * c.second;
        if (da != dc) return da < dc;
        return a.first < c.first;
    });
    for (const auto& m : b.monomials) b.degrees.push_back(w.w1 * m.first + w.w2 * m.second);
    return b;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
}

// All real roots of the sign-condition polynomials along the vertical line
// x = x0, restricted to [ylo, yhi]. Each condition specializes to a
// univariate polynomial in y; its roots come from the companion matrix (the
// catalog boundaries have deg_y <= 3, but any degree works), polished by
// bisection so near-tangent root pairs are not lost.
std::vector<double> section_cuts(const DomainSpec& omega, double x0, double ylo, double yhi) {
    std::vector<double> cuts = {ylo, yhi};
    for (const auto& cond : omega.conditions) {
        // coefficients of the y-specialization
        int dy = std::max(cond.poly.deg_y(), 0);
        std::vector<double> c(static_cast<std::size_t>(dy) + 1, 0.0);
        for (const auto& [e, q] : cond.poly.terms()) {
            double t = rat_to_double(q);
            for (int i = 0; i < e.first; ++i) t *= x0;
            c[static_cast<std::size_t>(e.second)] += t;
        }
        while (c.size() > 1 && c.back() == 0.0) c.pop_back();
        int deg = static_cast<int>(c.size()) - 1;
        if (deg < 1) continue;
        std::vector<double> roots;
        if (deg == 1) {
            roots.push_back(-c[0] / c[1]);
        } else {
            Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
            for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
            for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();
            Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
            double scale = std::max(std::abs(ylo), std::abs(yhi)) + 1.0;
            for (int i = 0; i < deg; ++i) {
                std::complex<double> r = es.eigenvalues()(i);
                if (std::abs(r.imag()) < 1e-9 * scale) roots.push_back(r.real());
            }
        }
        auto f = [&](double y) {
            double acc = 0.0;
            for (std::size_t k = c.size(); k-- > 0;) acc = acc * y + c[k];
            return acc;
        };
        for (double r : roots) {
            // polish by bisection on a small bracket when the sign changes
            double h = 1e-7 * (std::abs(r) + 1.0);
            double a = r - h, b = r + h;
            double fa = f(a), fb = f(b);
            if (f(r) == 0.0) {
                // exact already
            } else if (fa == 0.0) {
                r = a;
            } else if (fb == 0.0) {
                r = b;
            } else if (fa * fb < 0.0) {
                for (int it = 0; it < 60; ++it) {
                    double m = 0.5 * (a + b), fm = f(m);
                    if (fm == 0.0) {
                        a = b = m;
                        break;
                    }
                    if (fa * fm < 0.0)
                        b = m;
                    else {
                        a = m;
                        fa = fm;
                    }
                }
                r = 0.5 * (a + b);
            }
            if (r < ylo || r > yhi) continue;
            cuts.push_back(r);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

double density_at(const DensitySpec& rho, double x, double y) {
    double v = 1.0;
    for (const auto& [f, p] : rho.factor_exponents) {
        double base = f.evaluate(x, y);
        double e = rat_to_double(p);
        if (e == 0.0) continue;
        if (base <= 0.0) return std::nan("");
        v *= std::pow(base, e);
    }
    if (!rho.Q.is_zero()) v *= std::exp(rho.Q.evaluate(x, y));
    return v;
}

} // namespace

QuadratureRule build_quadrature(const DomainSpec& omega, const DensitySpec& rho, int order) {
    if (!omega.bounded)
        throw std::invalid_argument("build_quadrature: domain is unbounded (use a truncated copy)");
    if (order < 2) throw std::invalid_argument("build_quadrature: order must be >= 2");
    for (const auto& [f, p] : rho.factor_exponents)
        if (p < 0)
            throw std::invalid_argument(
                "build_quadrature: negative factor exponent (singular edge); symbolic use only");

    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);

    // outer slices: box ends plus interior breaks
    std::vector<double> breaks = {rat_to_double(omega.xlo), rat_to_double(omega.xhi)};
    for (const auto& b : omega.x_breaks) {
        double v = rat_to_double(b);
        if (v > breaks.front() && v < breaks.back()) breaks.push_back(v);
    }
    std::sort(breaks.begin(), breaks.end());

    QuadratureRule rule;
    rule.order = order;
    rule.outer_slices = static_cast<int>(breaks.size()) - 1;
    double ylo = rat_to_double(omega.ylo), yhi = rat_to_double(omega.yhi);

    // Outer panels per slice, geometrically graded toward both slice ends so
    // algebraic endpoint behavior of the section width (cusps, tangencies)
    // converges far below the Gauss order's analytic rate.
    static const double kFractions[] = {0.0,        1.0 / 1024, 1.0 / 256, 1.0 / 64, 1.0 / 16,
                                        1.0 / 4,    1.0 / 2,    3.0 / 4,   15.0 / 16, 63.0 / 64,
                                        255.0 / 256, 1023.0 / 1024, 1.0};
    const std::size_t kPanels = sizeof(kFractions) / sizeof(kFractions[0]) - 1;

    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        double a = breaks[s], b = breaks[s + 1];
        if (b - a <= 0.0) continue;
        for (std::size_t pnl = 0; pnl < kPanels; ++pnl) {
            double pa = a + (b - a) * kFractions[pnl];
            double pb = a + (b - a) * kFractions[pnl + 1];
            double half = 0.5 * (pb - pa), mid = 0.5 * (pa + pb);
            for (int i = 0; i < order; ++i) {
                double x0 = mid + half * gx[static_cast<std::size_t>(i)];
                double wx = half * gw[static_cast<std::size_t>(i)];
                auto cuts = section_cuts(omega, x0, ylo, yhi);
                for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
                    double lo = cuts[c], hi = cuts[c + 1];
                    // guard: pull the interval inward so every node passes an
                    // exact rational membership check
                    double guard = 1e-13 * (hi - lo + 1.0);
                    lo += guard;
                    hi -= guard;
                    if (hi - lo < 1e-13) continue;
                    double ymid = 0.5 * (lo + hi);
                    if (!omega.contains(x0, ymid)) continue;
                    double yhalf = 0.5 * (hi - lo);
                    Rat xq(x0);
                    for (int j = 0; j < order; ++j) {
                        double y0 = ymid + yhalf * gx[static_cast<std::size_t>(j)];
                        double wy = yhalf * gw[static_cast<std::size_t>(j)];
                        // exact membership: drop stray boundary nodes the float
                        // root estimates let through
                        if (!omega.contains(xq, Rat(y0))) continue;
                        double d = density_at(rho, x0, y0);
                        if (std::isnan(d)) continue;
                        rule.nodes.push_back({x0, y0, wx * wy * d});
                    }
                }
            }
        }
    }
    double mass = 0.0;
    for (const auto& n : rule.nodes) mass += n.weight;
    rule.mass = mass;
    return rule;
}

bool node_inside_exact(const DomainSpec& omega, double x, double y) {
    // floats converted exactly to rationals; sign checks are then exact
    return omega.contains(Rat(x), Rat(y));
}

RatPoly2 apply_L(const Cometric& g, const DensitySpec& rho, const RatPoly2& f) {
    RatPoly2 fx = f.partial_x(), fy = f.partial_y();
    RatPoly2 fxx = fx.partial_x(), fxy = fx.partial_y(), fyy = fy.partial_y();

    // drift b^i = d_x g^i1 + d_y g^i2 + sum_k p_k S^i_(k) + g^i. grad Q
    RatPoly2 b1 = g.a.partial_x() + g.b.partial_y();
    RatPoly2 b2 = g.b.partial_x() + g.c.partial_y();
    for (const auto& [fac, p] : rho.factor_exponents) {
        if (p == 0) continue;
        RatPoly2 gx = fac.partial_x(), gy = fac.partial_y();
        auto s1 = divides(fac, g.a * gx + g.b * gy);
        auto s2 = divides(fac, g.b * gx + g.c * gy);
        if (!s1 || !s2)
            throw std::invalid_argument("apply_L: density factor violates (A3); L does not preserve polynomials");
        b1 += p * *s1;
        b2 += p * *s2;
    }
    if (!rho.Q.is_zero()) {
        RatPoly2 qx = rho.Q.partial_x(), qy = rho.Q.partial_y();
        b1 += g.a * qx + g.b * qy;
        b2 += g.b * qx + g.c * qy;
    }
    return g.a * fxx + Rat(2) * g.b * fxy + g.c * fyy + b1 * fx + b2 * fy;
}

InvarianceResult filtration_invariance(const Cometric& g, const DensitySpec& rho, const Weights& w, long n) {
    InvarianceResult res;
    res.basis = filtration_basis(w, n);
    std::size_t N = res.basis.size();
    res.matrix.assign(N, RatVec(N, Rat(0)));
    std::map<Expo, std::size_t> index;
    for (std::size_t k = 0; k < N; ++k) index[res.basis.monomials[k]] = k;
    res.invariant = true;
    for (std::size_t col = 0; col < N; ++col) {
        const Expo& m = res.basis.monomials[col];
        RatPoly2 img = apply_L(g, rho, RatPoly2::monomial(m.first, m.second));
        long dm = res.basis.degrees[col];
        for (const auto& [e, coeff] : img.terms()) {
            long de = w.w1 * e.first + w.w2 * e.second;
            if (de > dm) {
                if (res.invariant) {
                    res.invariant = false;
                    res.witness = m;
                }
                continue;
            }
            res.matrix[index.at(e)][col] = coeff;
        }
        if (!res.invariant && res.witness) break;
    }
    return res;
}

namespace {

// deterministic inner product: fixed node order, sequential summation
double dot(const std::vector<double>& u, const std::vector<double>& v, const QuadratureRule& rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.nodes[i].weight * u[i] * v[i];
    return acc;
}

std::vector<double> evaluate_at_nodes(const RatPoly2& p, const QuadratureRule& rule) {
    std::vector<double> v(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) v[i] = p.evaluate(rule.nodes[i].x, rule.nodes[i].y);
    return v;
}

} // namespace

GramSchmidtResult gram_schmidt(const FiltrationBasis& basis, const QuadratureRule& rule) {
    std::size_t N = basis.size();
    std::size_t M = rule.nodes.size();
    if (M < N) throw std::invalid_argument("gram_schmidt: quadrature rule has fewer nodes than basis size");

    std::vector<std::vector<double>> q(N, std::vector<double>(M));
    // R such that monomial_k = sum_j R[j][k] q_j
    std::vector<std::vector<double>> R(N, std::vector<double>(N, 0.0));
    GramSchmidtResult out;

    for (std::size_t k = 0; k < N; ++k) {
        RatPoly2 mono = RatPoly2::monomial(basis.monomials[k].first, basis.monomials[k].second);
        std::vector<double> v = evaluate_at_nodes(mono, rule);
        // modified Gram-Schmidt with one reorthogonalization pass
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                double r = dot(q[j], v, rule);
                R[j][k] += r;
                for (std::size_t i = 0; i < M; ++i) v[i] -= r * q[j][i];
            }
        }
        double nrm2 = dot(v, v, rule);
        if (!(nrm2 > 0.0))
            throw std::runtime_error("gram_schmidt: Gram matrix numerically singular at column " +
                                     std::to_string(k));
        double nrm = std::sqrt(nrm2);
        R[k][k] = nrm;
        for (std::size_t i = 0; i < M; ++i) q[k][i] = v[i] / nrm;
        q[k].shrink_to_fit();
    }

    // invert R (upper triangular, positive diagonal) to get coefficients
    out.coeffs.assign(N, std::vector<double>(N, 0.0));
    for (std::size_t k = 0; k < N; ++k) {
        out.coeffs[k][k] = 1.0 / R[k][k];
        for (std::size_t j = k + 1; j < N; ++j) {
            double acc = 0.0;
            for (std::size_t l = k; l < j; ++l) acc += out.coeffs[k][l] * R[l][j];
            out.coeffs[k][j] = -acc / R[j][j];
        }
    }

    double residual = 0.0, cond = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            double gij = dot(q[i], q[j], rule);
            residual = std::max(residual, std::abs(gij - (i == j ? 1.0 : 0.0)));
        }
        cond = std::max(cond, R[i][i]);
    }
    for (std::size_t i = 0; i < N; ++i) cond = std::max(cond, 1.0 / R[i][i]);
    out.gram_residual = residual;
    out.condition_estimate = cond;
    return out;
}

double symmetry_defect(const Cometric& g, const DensitySpec& rho, const Weights& w, long n,
                       const QuadratureRule& rule) {
    FiltrationBasis basis = filtration_basis(w, n);
    std::size_t N = basis.size();
    std::vector<std::vector<double>> f(N), lf(N);
    for (std::size_t k = 0; k < N; ++k) {
        RatPoly2 mono = RatPoly2::monomial(basis.monomials[k].first, basis.monomials[k].second);
        f[k] = evaluate_at_nodes(mono, rule);
        lf[k] = evaluate_at_nodes(apply_L(g, rho, mono), rule);
    }
    double defect = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            double a = dot(f[i], lf[j], rule);
            double b = dot(f[j], lf[i], rule);
            defect = std::max(defect, std::abs(a - b) / std::max(1.0, std::abs(a)));
        }
    return defect;
}

EigenResult eigenstructure(const Cometric& g, const DensitySpec& rho, const Weights& w, long n) {
    InvarianceResult inv = filtration_invariance(g, rho, w, n);
    if (!inv.invariant)
        throw std::invalid_argument("eigenstructure: filtration is not invariant under L");
    EigenResult out;
    out.basis = inv.basis;
    std::size_t N = inv.basis.size();

    Eigen::MatrixXd M(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rat_to_double(inv.matrix[i][j]);

    // degree blocks
    std::vector<std::pair<std::size_t, std::size_t>> ranges; // [lo, hi)
    std::size_t lo = 0;
    for (std::size_t i = 1; i <= N; ++i) {
        if (i == N || inv.basis.degrees[i] != inv.basis.degrees[lo]) {
            ranges.push_back({lo, i});
            lo = i;
        }
    }

    for (auto [blo, bhi] : ranges) {
        EigenBlock blk;
        blk.degree = inv.basis.degrees[blo];
        for (std::size_t i = blo; i < bhi; ++i) blk.indices.push_back(i);
        Eigen::Index bs = static_cast<Eigen::Index>(bhi - blo);
        Eigen::MatrixXd D = M.block(static_cast<Eigen::Index>(blo), static_cast<Eigen::Index>(blo), bs, bs);
        Eigen::EigenSolver<Eigen::MatrixXd> es(D);
        for (Eigen::Index k = 0; k < bs; ++k) {
            std::complex<double> lambda = es.eigenvalues()(k);
            blk.eigenvalues.push_back(lambda);
            out.max_imag = std::max(out.max_imag, std::abs(lambda.imag()));
            // eigenvector on the block, then back-substitute through lower blocks
            std::vector<double> full(N, 0.0);
            for (Eigen::Index r = 0; r < bs; ++r) full[blo + static_cast<std::size_t>(r)] = es.eigenvectors()(r, k).real();
            double lam = lambda.real();
            for (auto it = ranges.rbegin(); it != ranges.rend(); ++it) {
                auto [alo, ahi] = *it;
                if (alo >= blo) continue; // only strictly lower blocks
                Eigen::Index as = static_cast<Eigen::Index>(ahi - alo);
                Eigen::VectorXd rhs = Eigen::VectorXd::Zero(as);
                for (Eigen::Index r = 0; r < as; ++r)
                    for (std::size_t cidx = ahi; cidx < N; ++cidx)
                        rhs(r) -= M(static_cast<Eigen::Index>(alo) + r, static_cast<Eigen::Index>(cidx)) * full[cidx];
                Eigen::MatrixXd A = M.block(static_cast<Eigen::Index>(alo), static_cast<Eigen::Index>(alo), as, as) -
                                    lam * Eigen::MatrixXd::Identity(as, as);
                Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
                Eigen::VectorXd sol = lu.solve(rhs);
                // a resonant lower block (lam also an eigenvalue there) is fine
                // as long as the system stays consistent
                double scale = rhs.norm() + A.norm() + 1.0;
                if ((A * sol - rhs).norm() > 1e-8 * scale) {
                    blk.defective = true;
                    break;
                }
                for (Eigen::Index r = 0; r < as; ++r) full[alo + static_cast<std::size_t>(r)] = sol(r);
            }
            blk.eigenvectors.push_back(std::move(full));
        }
        out.blocks.push_back(std::move(blk));
    }
    return out;
}

} // namespace dopkit
