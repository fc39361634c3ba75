#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dopkit/algdop.hpp"
#include "dopkit/density.hpp"
#include "dopkit/poly.hpp"
#include "dopkit/series.hpp"

namespace dopkit {

// parameters are exact rationals or polynomials in x (for the P44 families)
using ParamValue = std::variant<Rat, RatPoly2>;
using Params = std::map<std::string, ParamValue>;

struct InvalidParam : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Domain Omega as sign conditions plus a bounding box for bounded entries.
struct DomainSpec {
    struct Sign {
        RatPoly2 poly;
        int sign; // +1: poly > 0 required, -1: poly < 0
    };
    std::vector<Sign> conditions;
    bool bounded = false;
    Rat xlo, xhi, ylo, yhi;    // valid when bounded
    std::vector<Rat> x_breaks; // interior corner abscissae (quadrature slices)

    bool contains(const Rat& x, const Rat& y) const;  // exact membership
    bool contains(double x, double y) const;          // float membership
    DomainSpec truncated(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) const;
};

struct SingularPoint {
    Rat x, y;
    std::string type; // metadata label: A1, A2, A4, A5, D5, ...
};

// Fully instantiated solution data for one catalog entry.
struct Bundle {
    std::string id;
    Weights w;
    Cometric g;
    BoundarySpec boundary;
    std::optional<DomainSpec> domain;
    std::optional<DensitySpec> density;
    std::vector<RatPoly2> delta_factors; // multiset, product = det g (constants included)
    std::vector<BranchGerm> branch_vectors;
    std::string citation;
};

struct ParamSpec {
    std::string name;
    std::string domain; // human-readable constraint, e.g. "integer >= 1"
};

struct CatalogEntry {
    std::string id;
    std::string summary;
    std::string citation;
    std::vector<ParamSpec> params;
    std::function<Bundle(const Params&)> make;
    std::function<std::vector<SingularPoint>(const Params&)> singular; // null: no data
    std::function<IntegrabilityReport(const Params&)> integrability;   // null: no table
    std::function<bool(const Params&)> reducible_11;                   // null: no flag
};

class Catalog {
public:
    static const Catalog& instance();

    std::vector<std::string> ids() const;
    bool has(const std::string& id) const;
    const CatalogEntry& entry(const std::string& id) const; // throws on unknown id

    // Construct and exactly verify (A1)-(A3) and the Delta factorization.
    Bundle instantiate(const std::string& id, const Params& params) const;

    std::vector<SingularPoint> singular_points(const std::string& id, const Params& params) const;
    IntegrabilityReport integrability_constraints(const std::string& id, const Params& params) const;

private:
    Catalog();
    std::map<std::string, CatalogEntry> entries_;
};

// Curvature of an instantiated entry at an interior rational point, in the
// scalar convention R = 2K used by the constant-curvature tables (exact;
// throws when the point is outside Omega or det g vanishes there).
Rat curvature(const Bundle& bundle, const Rat& x, const Rat& y);

// The closed-form curvature of the constant-curvature families:
// K(x) = -l n^2 (2 (n^2+al) x^k + al) / ((n^2+al) x^k - al)^2.
Rat curvature_closed_form(long n, int k, const Rat& lambda, const Rat& alpha, const Rat& x);

// S^3 -> plane realization: z = (z1, z2) in C^2 with |z| = 1 within 1e-12.
struct RealizationImage {
    double X, Y; // (|z1|^2, Re(z1^n conj(z2)^m))
    double x, y; // affine normalization (2X - 1, 2^((m+n)/2) Y)
};
RealizationImage realization_map(long m, long n, const std::array<double, 4>& z);

} // namespace dopkit
