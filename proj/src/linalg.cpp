#include "dopkit/linalg.hpp"

#include <stdexcept>

namespace dopkit {

namespace {

struct Echelon {
    std::vector<std::vector<mpz_class>> m; // row echelon, integer entries
    std::vector<std::size_t> pivot_cols;   // per pivot row
    std::size_t cols = 0;
};

// Fraction-free Bareiss elimination on the integer-cleared copy of A.
// Pivoting is by fixed column order: the first row with a nonzero entry in
// the current column is chosen, which keeps results deterministic.
Echelon bareiss(const RatMat& a) {
    Echelon e;
    std::size_t rows = a.size();
    e.cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != e.cols) throw std::invalid_argument("nullspace: ragged matrix");

    e.m.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (const auto& q : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        e.m[i].resize(e.cols);
        for (std::size_t j = 0; j < e.cols; ++j)
            e.m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    }

    mpz_class prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && e.m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != row) std::swap(e.m[sel], e.m[row]);
        const mpz_class pivot = e.m[row][col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < e.cols; ++j) {
                mpz_class t = e.m[i][j] * pivot - e.m[i][col] * e.m[row][j];
                mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e.m[i][col] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

std::size_t rank(const RatMat& a) { return bareiss(a).pivot_cols.size(); }

std::vector<RatVec> nullspace(const RatMat& a) {
    Echelon e = bareiss(a);
    std::size_t n = e.cols;
    std::size_t r = e.pivot_cols.size();

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n, Rat(0));
        v[f] = 1;
        // back substitution over the echelon rows
        for (std::size_t k = r; k-- > 0;) {
            std::size_t pc = e.pivot_cols[k];
            Rat acc(0);
            for (std::size_t j = pc + 1; j < n; ++j)
                if (e.m[k][j] != 0 && v[j] != 0) acc += Rat(e.m[k][j]) * v[j];
            v[pc] = -acc / Rat(e.m[k][pc]);
        }
        // primitive integer form, free coordinate positive
        mpz_class l(1);
        for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        mpz_class g(0);
        std::vector<mpz_class> iv(n);
        for (std::size_t j = 0; j < n; ++j) {
            iv[j] = v[j].get_num() * (l / v[j].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
        }
        if (g == 0) g = 1;
        for (std::size_t j = 0; j < n; ++j) v[j] = Rat(iv[j] / g);
        if (v[f] < 0)
            for (auto& q : v) q = -q;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_linear(const RatMat& a, const RatVec& b, RatVec& x) {
    std::size_t rows = a.size();
    std::size_t n = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_linear: size mismatch");
    RatMat aug(rows, RatVec(n + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    // rational Gauss-Jordan on the augmented matrix
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && aug[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(aug[sel], aug[row]);
        Rat inv = Rat(1) / aug[row][col];
        for (std::size_t j = col; j <= n; ++j) aug[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != row && aug[i][col] != 0) {
                Rat f = aug[i][col];
                for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
            }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (aug[i][n] != 0) return false;
    x.assign(n, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][n];
    return true;
}

} // namespace dopkit
