#include "uinv/tables.hpp"

#include <stdexcept>

namespace uinv {

Integer binomial(long a, long b) {
    if (b < 0 || b > a) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

namespace {

std::optional<CoeffFault> g_fault;

Rational fault_delta(CoeffKind kind, int k, int i, int j) {
    if (g_fault && g_fault->kind == kind && g_fault->k == k && g_fault->i == i && g_fault->j == j)
        return g_fault->delta;
    return Rational(0);
}

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

void inject_coeff_fault(const CoeffFault& fault) { g_fault = fault; }
void clear_coeff_fault() { g_fault.reset(); }

Rational lambda_coeff(int k, int i, int j) {
    if (k < 1) throw std::invalid_argument("lambda_coeff: k must be >= 1");
    Rational v = sign_pow(k - i) * Rational(Integer(binomial(k - i, j - k) + binomial(k - i - 1, j - k - 1)));
    return v + fault_delta(CoeffKind::Lambda, k, i, j);
}

Rational mu_coeff(int k, int i) {
    if (k < 1) throw std::invalid_argument("mu_coeff: k must be >= 1");
    Rational v = sign_pow(k - 1) * Rational(Integer(binomial(k, i - k) + binomial(k - 1, i - k - 1)));
    return v + fault_delta(CoeffKind::Mu, k, i, 0);
}

Rational alpha_coeff(int k, int i, int j) {
    if (k < 1) throw std::invalid_argument("alpha_coeff: k must be >= 1");
    Integer b = Integer(2 * binomial(k - i - 1, j - k - 1)) + Integer(3 * binomial(k - i - 1, j - k - 2)) +
                Integer((k - i - 1) * Integer(binomial(k - i, j - k - 1) + binomial(k - i - 1, j - k - 2)));
    return sign_pow(k - i) * Rational(b) + fault_delta(CoeffKind::Alpha, k, i, j);
}

Rational beta_coeff(int k, int j) {
    if (k < 1) throw std::invalid_argument("beta_coeff: k must be >= 1");
    Rational v = alpha_coeff(k, 1, j - 1) + alpha_coeff(k, 1, j) + mu_coeff(k, j - 1);
    return v + fault_delta(CoeffKind::Beta, k, j, 0);
}

CoefficientTable coeff_table(CoeffKind kind, int k) {
    int kmin = (kind == CoeffKind::Alpha || kind == CoeffKind::Beta) ? 2 : 1;
    if (k < kmin) throw std::invalid_argument("coeff_table: k out of range for kind");
    CoefficientTable t{kind, k, {}};
    switch (kind) {
        case CoeffKind::Lambda:
            for (int i = 1; i <= k - 1; ++i)
                for (int j = k; j <= 2 * k - i; ++j) t.entries[{i, j}] = lambda_coeff(k, i, j);
            break;
        case CoeffKind::Mu:
            for (int i = k; i <= 2 * k; ++i) t.entries[{i, 0}] = mu_coeff(k, i);
            break;
        case CoeffKind::Alpha:
            for (int i = 1; i <= k - 1; ++i)
                for (int j = k + 1; j <= 2 * k - i + 1; ++j) t.entries[{i, j}] = alpha_coeff(k, i, j);
            break;
        case CoeffKind::Beta:
            for (int j = k + 1; j <= 2 * k + 1; ++j) t.entries[{j, 0}] = beta_coeff(k, j);
            break;
    }
    return t;
}

bool check_quadratic_system(int k, int n) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("check_quadratic_system: need n >= 2k >= 2");
    // Full upper-triangular picture of u_k in n variables. The closed form for
    // lambda extends to the diagonal: lambda_{k,k} = 1 is the x_k^2 coefficient.
    auto lam = [&](int i, int j) { return lambda_coeff(k, i, j); };
    auto diag = [&](int i) { return lambda_coeff(k, i, i); };
    auto mu = [&](int i) { return mu_coeff(k, i); };

    // last column of the matrix vanishes
    for (int i = 1; i <= n - 1; ++i)
        if (!lam(i, n).is_zero()) return false;
    // mu equations
    if (mu(1) != diag(1)) return false;
    if (n >= 2 && mu(2) != Rational(2) * diag(1) + lam(1, 2)) return false;
    for (int j = 3; j <= n; ++j)
        if (mu(j) != lam(1, j - 1) + lam(1, j)) return false;
    // lambda_{2,3} + lambda_{1,3} + 2 lambda_2 = 0
    if (n >= 3 && !(lam(2, 3) + lam(1, 3) + Rational(2) * diag(2)).is_zero()) return false;
    // lambda_{j,j+1} + lambda_{j+1} = 0
    for (int j = 1; j <= n - 1; ++j)
        if (!(lam(j, j + 1) + diag(j + 1)).is_zero()) return false;
    // lambda_{i+1,j} + lambda_{i,j+1} + lambda_{i+1,j+1} = 0
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            if (!(lam(i + 1, j) + lam(i, j + 1) + lam(i + 1, j + 1)).is_zero()) return false;
    // lambda_{i,i+2} + lambda_{i+1,i+2} + 2 lambda_{i+1} = 0
    for (int i = 2; i <= n - 2; ++i)
        if (!(lam(i, i + 2) + lam(i + 1, i + 2) + Rational(2) * diag(i + 1)).is_zero()) return false;
    return true;
}

bool check_alpha_beta_recursions(int k) {
    if (k < 2) throw std::invalid_argument("check_alpha_beta_recursions: need k >= 2");
    // boundary row
    if (alpha_coeff(k, k - 1, k + 1) != Rational(-2)) return false;
    if (alpha_coeff(k, k - 1, k + 2) != Rational(-3)) return false;
    if (!alpha_coeff(k, 1, 2 * k + 1).is_zero()) return false;
    // interior rows, scanned a little beyond the window to catch stray values
    for (int i = 1; i <= k - 2; ++i)
        for (int j = k; j <= 2 * k + 2; ++j) {
            Rational lhs = alpha_coeff(k, i, j);
            Rational rhs = Rational(-1) * (alpha_coeff(k, i + 1, j - 1) + alpha_coeff(k, i + 1, j)) +
                           lambda_coeff(k, i, j - 1);
            if (lhs != rhs) return false;
        }
    for (int j = k + 1; j <= 2 * k + 1; ++j) {
        Rational expect = alpha_coeff(k, 1, j - 1) + alpha_coeff(k, 1, j) + mu_coeff(k, j - 1);
        if (beta_coeff(k, j) != expect) return false;
    }
    return true;
}

bool check_alpha_boundary_diagonals(int k) {
    if (k < 2) throw std::invalid_argument("check_alpha_boundary_diagonals: need k >= 2");
    for (int i = 1; i <= k - 1; ++i) {
        if (alpha_coeff(k, i, 2 * k + 1 - i) != sign_pow(k - i) * Rational(1 + 2 * (k - i))) return false;
        if (alpha_coeff(k, i, k + 1) != sign_pow(k - i) * Rational(k - i + 1)) return false;
    }
    return true;
}

bool recurrence_check(const RecurrenceSpec& spec, const TableFn& lambda, int c) {
    if (c < 0 || spec.row_lo + c > spec.row_hi)
        throw std::invalid_argument("recurrence_check: shift exceeds the row interval");
    auto mu = spec.mu ? spec.mu : TableFn([](int, int) { return Rational(0); });
    bool mu_is_zero = !spec.mu;

    // hypothesis relation on consecutive rows
    for (int i = spec.row_lo; i <= spec.row_hi - 1; ++i)
        for (int j = spec.col_lo; j <= spec.col_hi; ++j) {
            Rational rhs = spec.delta * (lambda(i + 1, j - 1) + lambda(i + 1, j)) + mu(i, j - 1);
            if (lambda(i, j) != rhs) return false;
        }

    for (int i = spec.row_lo; i + c <= spec.row_hi; ++i)
        for (int j = spec.col_lo; j <= spec.col_hi; ++j) {
            Rational lead(0);
            for (int d = 0; d <= c; ++d) lead += Rational(binomial(c, d)) * lambda(i + c, j - d);
            lead = pow(spec.delta, c) * lead;

            Rational tail(0);
            for (int cp = 0; cp <= c - 1; ++cp) {
                Rational inner(0);
                for (int dp = 0; dp <= cp; ++dp)
                    inner += Rational(binomial(cp, dp)) * mu(i + cp, j - 1 - dp);
                tail += pow(spec.delta, cp) * inner;
            }
            if (lambda(i, j) != lead + tail) return false;
            if (mu_is_zero && lambda(i, j) != lead) return false;

            if (spec.gamma) {
                Rational ratio = spec.delta / *spec.gamma;
                Rational geom(0);
                for (int l = 0; l <= c - 1; ++l) geom += pow(ratio, l);
                if (lambda(i, j) != lead + geom * mu(i, j - 1)) return false;
            }
        }

    if (spec.gamma) {
        // mu must obey its own one-step recursion on the same rows
        for (int i = spec.row_lo; i <= spec.row_hi - 1; ++i)
            for (int j = spec.col_lo; j <= spec.col_hi; ++j)
                if (mu(i, j) != *spec.gamma * (mu(i + 1, j - 1) + mu(i + 1, j))) return false;
    }
    return true;
}

Integer nested_sum(int c, int k) {
    if (k < 0) throw std::invalid_argument("nested_sum: k must be >= 0");
    if (k == 0) return Integer(1);
    Integer total(0);
    for (int c1 = 0; c1 <= c - 1; ++c1) total += nested_sum(c1, k - 1);
    return total;
}

}  // namespace uinv
