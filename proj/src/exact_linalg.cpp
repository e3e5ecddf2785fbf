#include "uinv/exact_linalg.hpp"

#include <stdexcept>

namespace uinv {

namespace {

using IntRow = std::vector<Integer>;

// Scale a rational row to integers and strip the content.
IntRow integerize(const RatRow& row) {
    Integer l(1);
    for (const auto& r : row)
        if (!r.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
    IntRow out(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
        Rational v = row[j] * Rational(l);
        out[j] = v.num();  // denominator is 1 by construction
    }
    Integer g(0);
    for (const auto& x : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

void strip_content(IntRow& row) {
    Integer g(0);
    for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Echelon rref(RatMatrix m) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("rref: ragged matrix");

    std::vector<IntRow> w;
    w.reserve(rows);
    for (const auto& r : m) w.push_back(integerize(r));

    std::vector<int> pivots;
    size_t pivrow = 0;
    for (size_t col = 0; col < cols && pivrow < rows; ++col) {
        size_t sel = pivrow;
        while (sel < rows && w[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(w[pivrow], w[sel]);
        const Integer p = w[pivrow][col];
        for (size_t r = pivrow + 1; r < rows; ++r) {
            if (w[r][col] == 0) continue;
            const Integer q = w[r][col];
            for (size_t j = col; j < cols; ++j) w[r][j] = w[r][j] * p - q * w[pivrow][j];
            strip_content(w[r]);
        }
        pivots.push_back(static_cast<int>(col));
        ++pivrow;
    }

    // rational back-substitution to reduced form
    RatMatrix out(pivots.size(), RatRow(cols, Rational(0)));
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < cols; ++j) out[r][j] = Rational(w[r][j]);
    for (size_t r = pivots.size(); r-- > 0;) {
        size_t pc = static_cast<size_t>(pivots[r]);
        Rational inv = Rational(1) / out[r][pc];
        for (size_t j = pc; j < cols; ++j) out[r][j] *= inv;
        for (size_t above = 0; above < r; ++above) {
            Rational f = out[above][pc];
            if (f.is_zero()) continue;
            for (size_t j = pc; j < cols; ++j) out[above][j] -= f * out[r][j];
        }
    }
    return Echelon{std::move(out), std::move(pivots)};
}

int rank(RatMatrix m) { return rref(std::move(m)).rank(); }

RatMatrix nullspace(const RatMatrix& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;

    RatMatrix basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatRow v(cols, Rational(0));
        v[free] = Rational(1);
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[static_cast<size_t>(e.pivot_cols[r])] = -e.rref[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const Echelon& e, RatRow v) {
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
        size_t pc = static_cast<size_t>(e.pivot_cols[r]);
        Rational f = v[pc];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * e.rref[r][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool same_row_span(const RatMatrix& a, const RatMatrix& b) {
    Echelon ea = rref(a);
    Echelon eb = rref(b);
    if (ea.rank() != eb.rank()) return false;
    for (const auto& row : b)
        if (!in_row_span(ea, row)) return false;
    return true;
}

}  // namespace uinv
