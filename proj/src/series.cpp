#include "dopkit/series.hpp"

#include <algorithm>
#include <sstream>

namespace dopkit {

LaurentSeries::LaurentSeries(const Rat& c) {
    if (c != 0) terms_[0] = c;
}

LaurentSeries LaurentSeries::term(int expo, const Rat& c) {
    LaurentSeries s;
    if (c != 0) s.terms_[expo] = c;
    return s;
}

std::optional<int> LaurentSeries::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Rat LaurentSeries::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentSeries::truncate() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first > known_to_ || it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    r.known_to_ = std::min(a.known_to_, b.known_to_);
    r.terms_ = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, fresh] = r.terms_.try_emplace(e, c);
        if (!fresh) it->second += c;
    }
    r.truncate();
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

namespace {
int cap_window(long v) {
    return v >= LaurentSeries::kExact ? LaurentSeries::kExact : static_cast<int>(v);
}
} // namespace

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r;
    // The unknown tail of one factor meets the other factor at its order, so
    // the product is certified through min(K_a + ord b, K_b + ord a).
    const bool az = a.terms_.empty(), bz = b.terms_.empty();
    if (az && bz) {
        r.known_to_ = cap_window(static_cast<long>(a.known_to_) + b.known_to_ + 1);
        return r;
    }
    if (az) {
        r.known_to_ = cap_window(static_cast<long>(a.known_to_) + *b.order());
        return r;
    }
    if (bz) {
        r.known_to_ = cap_window(static_cast<long>(b.known_to_) + *a.order());
        return r;
    }
    r.known_to_ = cap_window(std::min(static_cast<long>(a.known_to_) + *b.order(),
                                      static_cast<long>(b.known_to_) + *a.order()));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, fresh] = r.terms_.try_emplace(ea + eb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.truncate();
    return r;
}

LaurentSeries LaurentSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("LaurentSeries::pow: negative exponent");
    LaurentSeries r(Rat(1));
    LaurentSeries base = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries r;
    r.known_to_ = known_to_ == kExact ? kExact : known_to_ - 1;
    for (const auto& [e, c] : terms_)
        if (e != 0) r.terms_[e - 1] = c * Rat(e);
    r.truncate();
    return r;
}

LaurentSeries LaurentSeries::inverse() const {
    if (terms_.empty()) throw std::domain_error("inverse of (certified-)zero series");
    int m = *order();
    // f = c t^m (1 + u), invert the unit part iteratively.
    Rat lead = terms_.begin()->second;
    // size of the window for the unit part
    int width = known_to_ == kExact ? 64 : known_to_ - m;
    LaurentSeries u; // = f / (c t^m) - 1, ord >= 1 after shift
    u.known_to_ = width;
    for (const auto& [e, c] : terms_) {
        if (e == m) continue;
        if (e - m <= width) u.terms_[e - m] = c / lead;
    }
    LaurentSeries inv_unit(Rat(1));
    inv_unit.known_to_ = width;
    if (!u.terms_.empty()) {
        LaurentSeries p(Rat(1));
        p.known_to_ = width;
        int ord_u = *u.order();
        for (int k = 1; k * ord_u <= width; ++k) {
            p = p * u;
            inv_unit = (k % 2 ? inv_unit - p : inv_unit + p);
        }
    }
    // result = (1/c) t^{-m} * inv_unit
    LaurentSeries r = LaurentSeries::term(-m, Rat(1) / lead) * inv_unit;
    if (known_to_ == kExact && terms_.size() == 1) r.known_to_ = kExact; // exact monomial
    return r;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*t^" << e;
        first = false;
    }
    if (first) os << "0";
    if (known_to_ != kExact) os << " + O(t^" << (known_to_ + 1) << ")";
    return os.str();
}

BranchGerm::BranchGerm(LaurentSeries x, LaurentSeries e, int order) : xi(std::move(x)), eta(std::move(e)), trunc_order(order) {
    if (!xi.has_terms() && !eta.has_terms())
        throw std::invalid_argument("branch germ must have a nonconstant coordinate");
    xi.restrict_known(trunc_order);
    eta.restrict_known(trunc_order);
}

} // namespace dopkit
