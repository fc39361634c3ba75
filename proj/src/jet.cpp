#include "dopkit/jet.hpp"

namespace dopkit {

Jet2<Rat> poly_jet(const RatPoly2& p, const Rat& x, const Rat& y) {
    Jet2<Rat> j;
    j.f = p.evaluate(x, y);
    RatPoly2 px = p.partial_x(), py = p.partial_y();
    j.fx = px.evaluate(x, y);
    j.fy = py.evaluate(x, y);
    j.fxx = px.partial_x().evaluate(x, y);
    j.fxy = px.partial_y().evaluate(x, y);
    j.fyy = py.partial_y().evaluate(x, y);
    return j;
}

Jet2<double> poly_jet(const RatPoly2& p, double x, double y) {
    Jet2<double> j;
    j.f = p.evaluate(x, y);
    RatPoly2 px = p.partial_x(), py = p.partial_y();
    j.fx = px.evaluate(x, y);
    j.fy = py.evaluate(x, y);
    j.fxx = px.partial_x().evaluate(x, y);
    j.fxy = px.partial_y().evaluate(x, y);
    j.fyy = py.partial_y().evaluate(x, y);
    return j;
}

namespace {

template <typename T>
T det3(const T m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Brioschi formula on the metric E dx^2 + 2F dx dy + G dy^2 with
// (E, F, G) = (c, -b, a) / det g.
template <typename T>
T brioschi(const Jet2<T>& E, const Jet2<T>& F, const Jet2<T>& G) {
    T half = T(1) / T(2);
    T m1[3][3] = {
        {-half * E.fyy + F.fxy - half * G.fxx, half * E.fx, F.fx - half * E.fy},
        {F.fy - half * G.fx, E.f, F.f},
        {half * G.fy, F.f, G.f},
    };
    T m2[3][3] = {
        {T(0), half * E.fy, half * G.fx},
        {half * E.fy, E.f, F.f},
        {half * G.fx, F.f, G.f},
    };
    T disc = E.f * G.f - F.f * F.f;
    return (det3(m1) - det3(m2)) / (disc * disc);
}

} // namespace

Rat gaussian_curvature(const Cometric& g, const Rat& x, const Rat& y) {
    Jet2<Rat> A = poly_jet(g.a, x, y);
    Jet2<Rat> B = poly_jet(g.b, x, y);
    Jet2<Rat> C = poly_jet(g.c, x, y);
    Jet2<Rat> D = A * C - B * B;
    if (D.f == 0) throw std::domain_error("gaussian_curvature: det g vanishes at the point");
    Jet2<Rat> E = C / D, F = -B / D, G = A / D;
    return brioschi(E, F, G);
}

Rat scalar_curvature(const Cometric& g, const Rat& x, const Rat& y) {
    return 2 * gaussian_curvature(g, x, y);
}

double scalar_curvature(const Cometric& g, double x, double y) {
    return 2.0 * gaussian_curvature(g, x, y);
}

double gaussian_curvature(const Cometric& g, double x, double y) {
    Jet2<double> A = poly_jet(g.a, x, y);
    Jet2<double> B = poly_jet(g.b, x, y);
    Jet2<double> C = poly_jet(g.c, x, y);
    Jet2<double> D = A * C - B * B;
    if (D.f == 0) throw std::domain_error("gaussian_curvature: det g vanishes at the point");
    Jet2<double> E = C / D, F = -B / D, G = A / D;
    return brioschi(E, F, G);
}

} // namespace dopkit
