#include "uinv/jacobian.hpp"

#include <stdexcept>

#include "uinv/exact_linalg.hpp"

namespace uinv {

int symbolic_rank(std::vector<std::vector<Polynomial>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    const int n = m[0][0].variable_count();
    // Fraction-free elimination: after each step the entries are minors of the
    // original matrix, so division by the previous pivot is exact.
    Polynomial prev = Polynomial::constant(n, Rational(1));
    size_t pivrow = 0;
    for (size_t col = 0; col < cols && pivrow < rows; ++col) {
        size_t sel = pivrow;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pivrow], m[sel]);
        const Polynomial piv = m[pivrow][col];
        for (size_t r = pivrow + 1; r < rows; ++r) {
            for (size_t j = col + 1; j < cols; ++j)
                m[r][j] = divide_exact(m[r][j] * piv - m[r][col] * m[pivrow][j], prev);
            m[r][col] = Polynomial::zero(n);
        }
        prev = piv;
        ++pivrow;
    }
    return static_cast<int>(pivrow);
}

JacobianReport jacobian_rank_report(const std::vector<Polynomial>& ps) {
    if (ps.empty()) throw std::invalid_argument("jacobian: empty polynomial list");
    const int n = ps[0].variable_count();
    for (const auto& p : ps)
        if (p.variable_count() != n) throw std::invalid_argument("jacobian: mixed variable counts");
    const int k = static_cast<int>(ps.size());
    if (k > n) return {false, true, false};

    std::vector<std::vector<Polynomial>> jac(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) jac[static_cast<size_t>(i)].push_back(ps[static_cast<size_t>(i)].derivative(j));

    for (int t = 1; t <= 3; ++t) {
        std::vector<Rational> point;
        point.reserve(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) {
            Integer v;
            mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(t));
            point.emplace_back(v);
        }
        RatMatrix sample(static_cast<size_t>(k), RatRow(static_cast<size_t>(n)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                sample[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    jac[static_cast<size_t>(i)][static_cast<size_t>(j)].evaluate(point);
        if (rank(std::move(sample)) == k) return {true, false, false};
    }
    return {symbolic_rank(std::move(jac)) == k, false, true};
}

bool jacobian_independent(const std::vector<Polynomial>& ps) {
    return jacobian_rank_report(ps).independent;
}

}  // namespace uinv
