#include <doctest.h>

#include "uinv/exact_linalg.hpp"
#include "uinv/phi.hpp"

using namespace uinv;

TEST_CASE("phi values") {
    CHECK(phi(0, PhiDirection::Plus) == Polynomial::constant(1, 1));
    CHECK(phi(0, PhiDirection::Minus) == Polynomial::constant(1, 1));
    CHECK(phi(2, PhiDirection::Minus) == Polynomial::parse("1/2*x1^2 - 1/2*x1", 1));
    CHECK(phi(2, PhiDirection::Plus) == Polynomial::parse("1/2*x1^2 + 1/2*x1", 1));
    CHECK_THROWS_AS(phi(-1, PhiDirection::Plus), std::invalid_argument);
}

TEST_CASE("shift identities up to degree 20") {
    for (int i = 1; i <= 20; ++i) {
        Polynomial plus = phi(i, PhiDirection::Plus);
        Polynomial minus = phi(i, PhiDirection::Minus);
        // (1 - sigma) phi_i = phi_{i-1}
        CHECK(plus - shift_x1(plus, Rational(-1)) == phi(i - 1, PhiDirection::Plus));
        // (1 - sigma) phi_{-i} = sigma(phi_{-i+1})
        CHECK(minus - shift_x1(minus, Rational(-1)) ==
              shift_x1(phi(i - 1, PhiDirection::Minus), Rational(-1)));
        // phi_{-i}(-x) = (-1)^i phi_i(x)
        Polynomial neg = minus.substitute({-Polynomial::variable(1, 0)});
        CHECK(neg == (i % 2 == 0 ? plus : -plus));
        // sigma^{i-1}(phi_i) = phi_{-i}
        Polynomial shifted = plus;
        for (int r = 0; r < i - 1; ++r) shifted = shift_x1(shifted, Rational(-1));
        CHECK(shifted == minus);
    }
}

TEST_CASE("both phi families are bases") {
    for (int d : {5, 12, 20}) {
        for (auto dir : {PhiDirection::Plus, PhiDirection::Minus}) {
            RatMatrix m;
            for (int i = 0; i <= d; ++i) {
                RatRow row(static_cast<size_t>(d) + 1, Rational(0));
                Polynomial p = phi(i, dir);
                for (const auto& [mono, c] : p.terms()) row[static_cast<size_t>(mono[0])] = c;
                m.push_back(std::move(row));
            }
            CHECK(rank(std::move(m)) == d + 1);
        }
    }
}

TEST_CASE("exponential series") {
    for (int size = 1; size <= 10; ++size) {
        CHECK((exp_series(ExpSign::Plus, size) * exp_series(ExpSign::Minus, size)).is_identity());
        CHECK((exp_series(ExpSign::Minus, size) * exp_series(ExpSign::Plus, size)).is_identity());
    }
    CHECK(exp_series(ExpSign::Plus, 4).coeff(1) == Polynomial::variable(1, 0));
    CHECK_THROWS_AS(exp_series(ExpSign::Plus, 0), std::invalid_argument);

    // (1 - sigma) E = Theta sigma(E) at the truncated level
    for (int size : {3, 6, 9}) {
        NilpotentSeries e = exp_series(ExpSign::Plus, size);
        NilpotentSeries lhs = e - e.coeff_shifted(Rational(-1));
        NilpotentSeries rhs = e.coeff_shifted(Rational(-1)).theta_shifted();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lambda matrix and its inverse") {
    for (int size = 1; size <= 10; ++size) {
        CHECK((lambda_matrix(size) * lambda_inverse(size)).is_identity());
        CHECK((lambda_inverse(size) * lambda_matrix(size)).is_identity());
        CHECK(lambda_matrix(size).is_unit_triangular());
    }
    // size 2 by hand: the order-1 coefficients cancel
    NilpotentSeries prod = lambda_matrix(2) * lambda_inverse(2);
    CHECK(prod.coeff(1).is_zero());
    CHECK_THROWS_AS(lambda_matrix(0), std::invalid_argument);
}

TEST_CASE("vanishing sums") {
    CHECK(check_vanishing_sums(1, 5));
    CHECK(check_vanishing_sums(3, 5));
    CHECK(check_vanishing_sums(2, 1));  // truncated away, holds vacuously
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 10; ++n) CHECK(check_vanishing_sums(k, n));
    CHECK_THROWS_AS(check_vanishing_sums(0, 1), std::invalid_argument);
}

TEST_CASE("eta entries match the closed form") {
    auto eta = eta_vector(10);  // throws internally on mismatch
    CHECK(eta.size() == 10);
    CHECK(eta[0] == -shift_x1(phi(2, PhiDirection::Minus), Rational(1)));
    CHECK(eta[0] == Polynomial::parse("-1/2*x1^2 - 1/2*x1", 1));
    CHECK(eta[1] == Rational(-2) * shift_x1(phi(3, PhiDirection::Minus), Rational(1)));
}

TEST_CASE("power law") {
    Polynomial a = Polynomial::variable(2, 0);
    Polynomial b = Polynomial::variable(2, 1);
    for (int size = 1; size <= 8; ++size) {
        NilpotentSeries ea = exp_series_at(ExpSign::Plus, size, a);
        NilpotentSeries eb = exp_series_at(ExpSign::Plus, size, b);
        NilpotentSeries eab = exp_series_at(ExpSign::Plus, size, a + b);
        CHECK(ea * eb == eab);
    }
}
