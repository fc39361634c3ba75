#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace dopkit {

// Exact rational scalar used everywhere in the symbolic kernel.
using Rat = mpq_class;

// Parses "num", "num/den" or a decimal-free integer string. Throws
// std::invalid_argument on malformed input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// mpq_class's two-argument constructor does not canonicalize; this does.
inline Rat rat_frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_pow(const Rat& q, unsigned e) {
    Rat r(1);
    Rat base = q;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

} // namespace dopkit
