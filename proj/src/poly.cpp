#include "dopkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dopkit {

RatPoly2::RatPoly2(const Rat& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

RatPoly2::RatPoly2(long c) {
    if (c != 0) terms_[{0, 0}] = Rat(c);
}

RatPoly2 RatPoly2::monomial(int i, int j, const Rat& c) {
    RatPoly2 p;
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
}

bool RatPoly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0});
}

Rat RatPoly2::constant_value() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat RatPoly2::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void RatPoly2::set_coeff(int i, int j, const Rat& c) {
    if (c == 0)
        terms_.erase({i, j});
    else
        terms_[{i, j}] = c;
}

int RatPoly2::deg_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int RatPoly2::deg_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

int RatPoly2::ord_x() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) d = std::min(d, e.first);
    return d;
}

int RatPoly2::ord_y() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) d = std::min(d, e.second);
    return d;
}

int RatPoly2::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

void RatPoly2::trim() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

RatPoly2 RatPoly2::operator-() const {
    RatPoly2 r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

RatPoly2& RatPoly2::operator+=(const RatPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

RatPoly2& RatPoly2::operator-=(const RatPoly2& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

RatPoly2& RatPoly2::operator*=(const RatPoly2& o) {
    TermMap out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo e{ea.first + eb.first, ea.second + eb.second};
            auto [it, fresh] = out.try_emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    terms_ = std::move(out);
    trim();
    return *this;
}

RatPoly2& RatPoly2::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

RatPoly2 RatPoly2::pow(int e) const {
    if (e < 0) throw std::invalid_argument("RatPoly2::pow: negative exponent");
    RatPoly2 r{Rat(1)};
    RatPoly2 base = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1u;
    }
    return r;
}

RatPoly2 RatPoly2::partial_x() const {
    RatPoly2 r;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) r.terms_[{e.first - 1, e.second}] = c * Rat(e.first);
    return r;
}

RatPoly2 RatPoly2::partial_y() const {
    RatPoly2 r;
    for (const auto& [e, c] : terms_)
        if (e.second > 0) r.terms_[{e.first, e.second - 1}] = c * Rat(e.second);
    return r;
}

Rat RatPoly2::evaluate(const Rat& x, const Rat& y) const {
    // Horner in y with cached powers of x.
    Rat acc(0);
    int dx = std::max(deg_x(), 0);
    std::vector<Rat> xp(static_cast<std::size_t>(dx) + 1, Rat(1));
    for (int i = 1; i <= dx; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
    std::vector<Rat> ycoef; // coefficient of y^j as evaluated poly in x
    int dy = deg_y();
    ycoef.assign(static_cast<std::size_t>(std::max(dy, 0)) + 1, Rat(0));
    for (const auto& [e, c] : terms_) ycoef[static_cast<std::size_t>(e.second)] += c * xp[static_cast<std::size_t>(e.first)];
    for (int j = dy; j >= 0; --j) acc = acc * y + ycoef[static_cast<std::size_t>(j)];
    return acc;
}

double RatPoly2::evaluate(double x, double y) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < e.first; ++i) t *= x;
        for (int j = 0; j < e.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

RatPoly2 RatPoly2::substitute(const RatPoly2& px, const RatPoly2& py) const {
    RatPoly2 out;
    // group by j to reuse powers of py
    int dy = deg_y();
    std::vector<RatPoly2> rows(static_cast<std::size_t>(std::max(dy, 0)) + 1);
    for (const auto& [e, c] : terms_) rows[static_cast<std::size_t>(e.second)] += monomial(e.first, 0, c);
    RatPoly2 ypow{Rat(1)};
    for (int j = 0; j <= dy; ++j) {
        const RatPoly2& row = rows[static_cast<std::size_t>(j)];
        if (!row.is_zero()) {
            // Horner in x on the row
            int dx = row.deg_x();
            RatPoly2 acc;
            for (int i = dx; i >= 0; --i) {
                acc *= px;
                Rat c = row.coeff(i, 0);
                if (c != 0) acc += RatPoly2(c);
            }
            out += acc * ypow;
        }
        if (j < dy) ypow *= py;
    }
    return out;
}

namespace {
// graded-lex with x > y: higher total degree first, then higher i.
bool grlex_less(const Expo& a, const Expo& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
}
} // namespace

Expo RatPoly2::leading_monomial_grlex() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    Expo best = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        if (grlex_less(best, e)) best = e;
    return best;
}

Rat RatPoly2::leading_coeff_grlex() const { return coeff(leading_monomial_grlex().first, leading_monomial_grlex().second); }

RatPoly2 RatPoly2::monic_grlex() const {
    if (terms_.empty()) return *this;
    Rat lc = leading_coeff_grlex();
    RatPoly2 r = *this;
    Rat inv = Rat(1) / lc;
    for (auto& [e, c] : r.terms_) c *= inv;
    return r;
}

std::string RatPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Expo, Rat>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        Rat ac = rat_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool hasvar = e.first > 0 || e.second > 0;
        if (ac != 1 || !hasvar) {
            os << ac.get_str();
            if (hasvar) os << "*";
        }
        if (e.first > 0) {
            os << "x";
            if (e.first > 1) os << "^" << e.first;
            if (e.second > 0) os << "*";
        }
        if (e.second > 0) {
            os << "y";
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

Weights::Weights(long a, long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("weights must be positive");
    long g = std::gcd(a, b);
    w1 = a / g;
    w2 = b / g;
}

Weights Weights::from_rationals(const Rat& a, const Rat& b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("weights must be positive");
    // clear denominators: multiply both by lcm of denominators
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    mpz_class n1 = a.get_num() * (l / a.get_den());
    mpz_class n2 = b.get_num() * (l / b.get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
    n1 /= g;
    n2 /= g;
    if (!n1.fits_slong_p() || !n2.fits_slong_p())
        throw std::invalid_argument("normalized weights too large");
    Weights w;
    w.w1 = n1.get_si();
    w.w2 = n2.get_si();
    return w;
}

std::optional<long> weighted_degree(const RatPoly2& p, const Weights& w) {
    if (p.is_zero()) return std::nullopt;
    long best = 0;
    bool any = false;
    for (const auto& [e, c] : p.terms()) {
        long d = w.w1 * e.first + w.w2 * e.second;
        if (!any || d > best) best = d;
        any = true;
    }
    return best;
}

namespace {
long cross(const Expo& o, const Expo& a, const Expo& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
}
} // namespace

NewtonPolygon newton_polygon(const RatPoly2& p) {
    if (p.is_zero()) throw std::domain_error("newton_polygon of zero polynomial");
    std::vector<Expo> pts;
    pts.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) pts.push_back(e);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    NewtonPolygon np;
    if (pts.size() == 1) {
        np.vertices = pts;
        return np;
    }
    // Andrew monotone chain; strict turns only, so collinear interior points drop out.
    std::vector<Expo> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& pt : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
        hull[k++] = pt;
    }
    std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    // rotate so the lexicographically smallest vertex comes first
    auto mn = std::min_element(hull.begin(), hull.end());
    std::rotate(hull.begin(), mn, hull.end());
    np.vertices = std::move(hull);
    return np;
}

std::optional<RatPoly2> divides(const RatPoly2& d, const RatPoly2& p) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return RatPoly2();
    // Exponent box of the candidate quotient.
    int ilo = p.ord_x() - d.ord_x(), ihi = p.deg_x() - d.deg_x();
    int jlo = p.ord_y() - d.ord_y(), jhi = p.deg_y() - d.deg_y();
    if (ilo < 0) ilo = 0;
    if (jlo < 0) jlo = 0;
    if (ihi < ilo || jhi < jlo) return std::nullopt;

    // Unknown q over the box; match coefficients of q*d against p. Equations
    // are indexed by the support of the product box.
    std::vector<Expo> qmon;
    for (int i = ilo; i <= ihi; ++i)
        for (int j = jlo; j <= jhi; ++j) qmon.push_back({i, j});

    std::map<Expo, std::size_t> eqidx;
    for (const auto& e : qmon)
        for (const auto& [ed, cd] : d.terms()) {
            Expo prod{e.first + ed.first, e.second + ed.second};
            eqidx.try_emplace(prod, eqidx.size());
        }
    for (const auto& [e, c] : p.terms()) eqidx.try_emplace(e, eqidx.size());

    std::size_t m = eqidx.size(), n = qmon.size();
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t col = 0; col < n; ++col)
        for (const auto& [ed, cd] : d.terms()) {
            Expo prod{qmon[col].first + ed.first, qmon[col].second + ed.second};
            A[eqidx[prod]][col] += cd;
        }
    for (const auto& [e, c] : p.terms()) A[eqidx[e]][n] = c;

    // Gaussian elimination on the augmented system.
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && A[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(A[row], A[sel]);
        Rat inv = Rat(1) / A[row][col];
        for (std::size_t k = col; k <= n; ++k) A[row][k] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r != row && A[r][col] != 0) {
                Rat f = A[r][col];
                for (std::size_t k = col; k <= n; ++k) A[r][k] -= f * A[row][k];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (A[r][n] != 0) return std::nullopt; // inconsistent
    RatPoly2 q;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        q.set_coeff(qmon[pivot_col[r]].first, qmon[pivot_col[r]].second, A[r][n]);
    // verify by back-multiplication (free variables, if any, were set to zero)
    if (q * d != p) return std::nullopt;
    return q;
}

namespace {

// Univariate view: polynomial in one variable with RatPoly2 coefficients in
// the other. We only need y-major recursion with Q[x] coefficients.
using YCoeffs = std::vector<RatPoly2>; // index = power of y

YCoeffs to_y_coeffs(const RatPoly2& p) {
    YCoeffs c(static_cast<std::size_t>(std::max(p.deg_y(), 0)) + 1);
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e.second)] += RatPoly2::monomial(e.first, 0, v);
    if (p.is_zero()) c.clear();
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

RatPoly2 from_y_coeffs(const YCoeffs& c) {
    RatPoly2 p;
    for (std::size_t j = 0; j < c.size(); ++j) p += c[j] * RatPoly2::monomial(0, static_cast<int>(j));
    return p;
}

// gcd of univariate polynomials in x (deg_y == 0), primitive PRS.
RatPoly2 gcd_univar_x(RatPoly2 a, RatPoly2 b) {
    auto content_free = [](const RatPoly2& p) { return p.monic_grlex(); };
    a = content_free(a);
    b = content_free(b);
    while (!b.is_zero()) {
        // remainder of a by b in Q[x]
        RatPoly2 r = a;
        while (!r.is_zero() && r.deg_x() >= b.deg_x()) {
            int k = r.deg_x() - b.deg_x();
            Rat f = r.coeff(r.deg_x(), 0) / b.coeff(b.deg_x(), 0);
            r -= RatPoly2::monomial(k, 0, f) * b;
        }
        a = b;
        b = content_free(r);
    }
    return content_free(a);
}

// content of p viewed in Q[x][y]: gcd of the x-coefficients.
RatPoly2 content_y(const RatPoly2& p) {
    YCoeffs c = to_y_coeffs(p);
    RatPoly2 g;
    for (const auto& ci : c) {
        if (ci.is_zero()) continue;
        g = g.is_zero() ? ci.monic_grlex() : gcd_univar_x(g, ci);
        if (g.is_constant()) return RatPoly2(Rat(1));
    }
    return g.is_zero() ? RatPoly2(Rat(1)) : g;
}

// pseudo-remainder of a by b in y over Q[x]: lc_y(b)^(da-db+1) * a = q*b + r.
RatPoly2 prem_y(const RatPoly2& a, const RatPoly2& b) {
    YCoeffs B = to_y_coeffs(b);
    int db = static_cast<int>(B.size()) - 1;
    RatPoly2 lb = B[static_cast<std::size_t>(db)];
    RatPoly2 r = a;
    int e = a.deg_y() - db + 1;
    while (!r.is_zero() && r.deg_y() >= db) {
        YCoeffs R = to_y_coeffs(r);
        int dr = static_cast<int>(R.size()) - 1;
        RatPoly2 lead = R[static_cast<std::size_t>(dr)];
        r = r * lb - lead * b * RatPoly2::monomial(0, dr - db);
        --e;
    }
    if (e > 0 && !r.is_zero()) r = r * lb.pow(e);
    return r;
}

} // namespace

RatPoly2 poly_gcd(const RatPoly2& p, const RatPoly2& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    if (p.is_zero()) return q.monic_grlex();
    if (q.is_zero()) return p.monic_grlex();
    if (p.is_constant() || q.is_constant()) return RatPoly2(Rat(1));

    // Both univariate in x only.
    if (p.deg_y() == 0 && q.deg_y() == 0) return gcd_univar_x(p, q).monic_grlex();
    if (p.deg_y() == 0) return gcd_univar_x(p, content_y(q)).monic_grlex();
    if (q.deg_y() == 0) return gcd_univar_x(q, content_y(p)).monic_grlex();

    RatPoly2 cp = content_y(p), cq = content_y(q);
    RatPoly2 cg = gcd_univar_x(cp, cq);
    RatPoly2 a = *divides(cp, p), b = *divides(cq, q); // primitive parts
    if (a.deg_y() < b.deg_y()) std::swap(a, b);

    // Subresultant PRS in y over Q[x].
    RatPoly2 g{Rat(1)}, h{Rat(1)};
    while (true) {
        int delta = a.deg_y() - b.deg_y();
        RatPoly2 r = prem_y(a, b);
        if (r.is_zero()) break;
        if (r.deg_y() == 0) {
            b = RatPoly2(Rat(1));
            break;
        }
        RatPoly2 denom = g * h.pow(delta);
        auto rq = divides(denom, r); // exact for a subresultant PRS
        a = b;
        b = rq ? *rq : r;
        g = to_y_coeffs(a).back();
        if (delta >= 1) {
            auto hq = divides(h.pow(delta - 1), g.pow(delta));
            h = hq ? *hq : g.pow(delta);
        }
    }
    RatPoly2 ppb = b.is_constant() ? RatPoly2(Rat(1)) : *divides(content_y(b), b);
    return (cg * ppb).monic_grlex();
}

bool is_squarefree(const RatPoly2& p) {
    if (p.is_zero()) throw std::domain_error("is_squarefree of zero polynomial");
    if (p.is_constant()) return true;
    RatPoly2 g = poly_gcd(p, p.partial_x());
    if (!g.is_constant()) {
        g = poly_gcd(g, p.partial_y());
        return g.is_constant();
    }
    return true;
}

// ---------------------------------------------------------------------------
// text parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    RatPoly2 parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        RatPoly2 acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    RatPoly2 parse_term() {
        RatPoly2 acc = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*'))
                acc *= parse_factor();
            else
                break;
        }
        return acc;
    }

    RatPoly2 parse_factor() {
        RatPoly2 base = parse_atom();
        skip_ws();
        if (accept('^')) {
            long e = parse_integer();
            if (e < 0) throw ParseError("negative exponent", pos);
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected integer", pos);
        return std::stol(s.substr(start, pos - start));
    }

    RatPoly2 parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatPoly2 e = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos);
            return e;
        }
        if (c == 'x') {
            ++pos;
            return RatPoly2::x();
        }
        if (c == 'y') {
            ++pos;
            return RatPoly2::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class num(s.substr(start, pos - start));
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == dstart) throw ParseError("expected denominator", pos);
                mpz_class den(s.substr(dstart, pos - dstart));
                if (den == 0) throw ParseError("zero denominator", dstart);
                Rat q(num, den);
                q.canonicalize();
                return RatPoly2(q);
            }
            return RatPoly2(Rat(num));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

} // namespace

RatPoly2 parse_poly(const std::string& text) {
    Parser p(text);
    RatPoly2 r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return r;
}

} // namespace dopkit
