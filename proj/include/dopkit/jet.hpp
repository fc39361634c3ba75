#pragma once

#include "dopkit/algdop.hpp"
#include "dopkit/poly.hpp"

namespace dopkit {

// Second-order jet (value and partials through order 2) of a function at a
// point. Arithmetic follows the calculus rules, so rational functions of
// polynomials can be differentiated exactly by evaluating jets.
template <typename T>
struct Jet2 {
    T f{}, fx{}, fy{}, fxx{}, fxy{}, fyy{};

    static Jet2 constant(const T& c) { return {c, T{}, T{}, T{}, T{}, T{}}; }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        return {a.f + b.f, a.fx + b.fx, a.fy + b.fy, a.fxx + b.fxx, a.fxy + b.fxy, a.fyy + b.fyy};
    }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) {
        return {a.f - b.f, a.fx - b.fx, a.fy - b.fy, a.fxx - b.fxx, a.fxy - b.fxy, a.fyy - b.fyy};
    }
    Jet2 operator-() const { return {-f, -fx, -fy, -fxx, -fxy, -fyy}; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.f = a.f * b.f;
        r.fx = a.fx * b.f + a.f * b.fx;
        r.fy = a.fy * b.f + a.f * b.fy;
        r.fxx = a.fxx * b.f + a.fx * b.fx + a.fx * b.fx + a.f * b.fxx;
        r.fxy = a.fxy * b.f + a.fx * b.fy + a.fy * b.fx + a.f * b.fxy;
        r.fyy = a.fyy * b.f + a.fy * b.fy + a.fy * b.fy + a.f * b.fyy;
        return r;
    }
    // u / v with v.f != 0 (caller checks)
    friend Jet2 operator/(const Jet2& u, const Jet2& v) {
        Jet2 q;
        q.f = u.f / v.f;
        q.fx = (u.fx - q.f * v.fx) / v.f;
        q.fy = (u.fy - q.f * v.fy) / v.f;
        q.fxx = (u.fxx - q.fx * v.fx - q.fx * v.fx - q.f * v.fxx) / v.f;
        q.fxy = (u.fxy - q.fx * v.fy - q.fy * v.fx - q.f * v.fxy) / v.f;
        q.fyy = (u.fyy - q.fy * v.fy - q.fy * v.fy - q.f * v.fyy) / v.f;
        return q;
    }
};

Jet2<Rat> poly_jet(const RatPoly2& p, const Rat& x, const Rat& y);
Jet2<double> poly_jet(const RatPoly2& p, double x, double y);

// Gaussian curvature of the Riemannian metric (g_ij) = g^{-1} at a point,
// by the Brioschi formula with exact symbolic derivatives. Throws
// std::domain_error when det g vanishes at the point.
Rat gaussian_curvature(const Cometric& g, const Rat& x, const Rat& y);
double gaussian_curvature(const Cometric& g, double x, double y); // float fast path

// Scalar curvature R = 2K of the same metric (the convention of the curvature
// tables for the constant-curvature families).
Rat scalar_curvature(const Cometric& g, const Rat& x, const Rat& y);
double scalar_curvature(const Cometric& g, double x, double y);

} // namespace dopkit
