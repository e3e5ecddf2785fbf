#pragma once

#include <vector>

#include "uinv/polynomial.hpp"

namespace uinv {

enum class PhiDirection { Plus, Minus };

/// Rising/falling factorial basis adapted to the shift sigma(x) = x - 1:
/// phi_0 = 1, phi_i = x(x+1)...(x+i-1)/i!, phi_{-i} = x(x-1)...(x-i+1)/i!.
/// Direction Plus gives phi_i, Minus gives phi_{-i}; both as univariate
/// polynomials in x1.
Polynomial phi(int i, PhiDirection direction);

/// phi evaluated at an arbitrary polynomial argument.
Polynomial phi_at(int i, PhiDirection direction, const Polynomial& arg);

/// Substitutes x1 -> x1 + c in a polynomial (c = -1 is the shift sigma,
/// c = +1 its inverse).
Polynomial shift_x1(const Polynomial& p, const Rational& c);

/// Truncated series sum_i c_i Theta^i with Theta the lower shift matrix of
/// size `size`, so Theta^size = 0. The matrix is never materialized:
/// multiplication is convolution of the coefficient vectors, truncated.
class NilpotentSeries {
public:
    NilpotentSeries(int size, int coeff_nvars);

    static NilpotentSeries identity(int size, int coeff_nvars = 1);

    int size() const { return static_cast<int>(coeff_.size()); }
    int coeff_variable_count() const { return nvars_; }
    const Polynomial& coeff(int i) const { return coeff_.at(static_cast<size_t>(i)); }
    void set_coeff(int i, Polynomial p);

    bool is_identity() const;
    bool is_unit_triangular() const { return coeff_.front() == Polynomial::constant(nvars_, Rational(1)); }

    NilpotentSeries operator*(const NilpotentSeries& o) const;
    NilpotentSeries operator-(const NilpotentSeries& o) const;
    /// Left-multiplication by Theta: shifts all coefficients up one slot.
    NilpotentSeries theta_shifted() const;
    /// Applies x1 -> x1 + c to every coefficient.
    NilpotentSeries coeff_shifted(const Rational& c) const;

    friend bool operator==(const NilpotentSeries& a, const NilpotentSeries& b) {
        return a.coeff_ == b.coeff_;
    }

private:
    int nvars_;
    std::vector<Polynomial> coeff_;
};

enum class ExpSign { Plus, Minus };

/// Truncated sigma-exponential: E = sum phi_{-i} Theta^i for Plus,
/// E(-x) = sum (-1)^i phi_i Theta^i for Minus. E(x) E(-x) = 1.
NilpotentSeries exp_series(ExpSign sign, int size);

/// Same at a polynomial argument (used for the power law E(x1)E(x2) = E(x1+x2)).
NilpotentSeries exp_series_at(ExpSign sign, int size, const Polynomial& arg);

/// Lambda = sum (-1)^i phi_i Theta^i and its inverse sum phi_{-i} Theta^i.
NilpotentSeries lambda_matrix(int size);
NilpotentSeries lambda_inverse(int size);

/// Checks sum_{i+j=k} (-1)^i phi_i phi_{-j} = 0, both the unbounded-index form
/// and the form bounded by i, j <= n.
bool check_vanishing_sums(int k, int n);

/// Computes Lambda^{-1} Phi with Phi = (-phi_2, phi_3, ..., (-1)^{n-1} phi_n)^t
/// and verifies each entry against the closed form -i sigma^{-1}(phi_{-i-1}).
std::vector<Polynomial> eta_vector(int size);

}  // namespace uinv
