#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dopkit/rational.hpp"

namespace dopkit {

using Expo = std::pair<int, int>; // (i, j) for x^i y^j

// Sparse bivariate polynomial over Q. Canonical form: no zero coefficients
// are ever stored, so operator== on the term map is structural equality.
class RatPoly2 {
public:
    using TermMap = std::map<Expo, Rat>;

    RatPoly2() = default;
    explicit RatPoly2(const Rat& c);
    explicit RatPoly2(long c);

    static RatPoly2 monomial(int i, int j, const Rat& c = Rat(1));
    static RatPoly2 x() { return monomial(1, 0); }
    static RatPoly2 y() { return monomial(0, 1); }
    static RatPoly2 constant(const Rat& c) { return RatPoly2(c); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; the whole value when is_constant().
    Rat constant_value() const;

    Rat coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rat& c);

    int deg_x() const; // -1 for the zero polynomial
    int deg_y() const;
    int ord_x() const; // min exponent over the support; -1 for zero
    int ord_y() const;
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }

    RatPoly2 operator-() const;
    RatPoly2& operator+=(const RatPoly2& o);
    RatPoly2& operator-=(const RatPoly2& o);
    RatPoly2& operator*=(const RatPoly2& o);
    RatPoly2& operator*=(const Rat& c);

    friend RatPoly2 operator+(RatPoly2 a, const RatPoly2& b) { return a += b; }
    friend RatPoly2 operator-(RatPoly2 a, const RatPoly2& b) { return a -= b; }
    friend RatPoly2 operator*(RatPoly2 a, const RatPoly2& b) { return a *= b; }
    friend RatPoly2 operator*(RatPoly2 a, const Rat& c) { return a *= c; }
    friend RatPoly2 operator*(const Rat& c, RatPoly2 a) { return a *= c; }

    bool operator==(const RatPoly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const RatPoly2& o) const { return terms_ != o.terms_; }

    RatPoly2 pow(int e) const; // throws on negative exponent

    RatPoly2 partial_x() const;
    RatPoly2 partial_y() const;

    Rat evaluate(const Rat& x, const Rat& y) const;
    double evaluate(double x, double y) const;

    // Composition p(px(x,y), py(x,y)); exact.
    RatPoly2 substitute(const RatPoly2& px, const RatPoly2& py) const;

    // Leading term in graded-lex order with x > y (ties broken toward x).
    Expo leading_monomial_grlex() const; // requires nonzero
    Rat leading_coeff_grlex() const;

    // Content of the integer-cleared form and sign normalization helpers.
    RatPoly2 monic_grlex() const; // divide by leading grlex coefficient; zero stays zero

    std::string to_string() const; // canonical text form, graded-lex descending

private:
    void trim(); // drop zero coefficients
    TermMap terms_;
};

// Normalized positive weight pair: coprime positive integers obtained from
// any positive rational pair by clearing denominators and dividing the gcd.
struct Weights {
    long w1 = 1;
    long w2 = 1;

    Weights() = default;
    Weights(long a, long b);            // must be positive; normalized
    static Weights from_rationals(const Rat& a, const Rat& b);

    bool operator==(const Weights& o) const { return w1 == o.w1 && w2 == o.w2; }
};

// max over the support of w1*i + w2*j; nullopt encodes -infinity (zero poly).
std::optional<long> weighted_degree(const RatPoly2& p, const Weights& w);

struct NewtonPolygon {
    // Extreme points of the support hull, counterclockwise, starting from the
    // lexicographically smallest vertex.
    std::vector<Expo> vertices;
    bool operator==(const NewtonPolygon& o) const { return vertices == o.vertices; }
};

NewtonPolygon newton_polygon(const RatPoly2& p); // throws on zero polynomial

// Exact divisibility: returns q with q*d == p, or nullopt. Solves the linear
// system for q's coefficients over the exponent box of p minus d, then
// verifies by back-multiplication.
std::optional<RatPoly2> divides(const RatPoly2& d, const RatPoly2& p);

// GCD via subresultant PRS in y over Q[x] combined with content gcds.
// Result is normalized monic under graded-lex (x > y).
RatPoly2 poly_gcd(const RatPoly2& p, const RatPoly2& q);

bool is_squarefree(const RatPoly2& p); // throws on zero polynomial

// Text format parser: integer/rational coefficients, variables x,y and
// operators + - * ^ (plus parentheses). Throws ParseError with a position.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

RatPoly2 parse_poly(const std::string& text);

} // namespace dopkit
