#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "dopkit/rational.hpp"

namespace dopkit {

// Truncated Laurent series in t with exact rational coefficients. Terms with
// exponent <= known_to are exact; anything beyond is unknown. Stored terms
// never have zero coefficients.
class LaurentSeries {
public:
    LaurentSeries() = default; // zero series, known everywhere
    explicit LaurentSeries(const Rat& c);

    static LaurentSeries term(int expo, const Rat& c = Rat(1));
    static LaurentSeries t() { return term(1); }

    // window: exponents <= known_to are certified. The default is "exact", a
    // series with no unknown tail (a Laurent polynomial).
    static constexpr int kExact = 1 << 28;

    int known_to() const { return known_to_; }
    void restrict_known(int k) { known_to_ = std::min(known_to_, k); truncate(); }

    bool is_zero_certified() const { return terms_.empty(); } // zero on the whole window
    bool has_terms() const { return !terms_.empty(); }

    // order of the series: smallest exponent with nonzero coefficient.
    // nullopt when no nonzero coefficient is known.
    std::optional<int> order() const;

    Rat coeff(int e) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries pow(int e) const; // e >= 0
    LaurentSeries derivative() const;
    // multiplicative inverse; throws when no nonzero leading term is certified
    LaurentSeries inverse() const;

    const std::map<int, Rat>& terms() const { return terms_; }

    std::string to_string() const;

private:
    void truncate(); // drop terms beyond known_to_
    std::map<int, Rat> terms_;
    int known_to_ = kExact;
};

// A parametrized germ (xi(t), eta(t)), exact up to t^trunc_order.
struct BranchGerm {
    LaurentSeries xi;
    LaurentSeries eta;
    int trunc_order = 64;

    BranchGerm() = default;
    BranchGerm(LaurentSeries x, LaurentSeries e, int order = 64);
};

} // namespace dopkit
