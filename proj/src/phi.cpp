#include "uinv/phi.hpp"

namespace uinv {

Polynomial phi_at(int i, PhiDirection direction, const Polynomial& arg) {
    if (i < 0) throw std::invalid_argument("phi: index must be >= 0");
    int nv = arg.variable_count();
    Polynomial acc = Polynomial::constant(nv, Rational(1));
    Integer fact(1);
    for (int r = 0; r < i; ++r) {
        Rational offset = direction == PhiDirection::Plus ? Rational(r) : Rational(-r);
        acc = acc * (arg + Polynomial::constant(nv, offset));
        fact *= (r + 1);
    }
    return Rational(Integer(1), fact) * acc;
}

Polynomial phi(int i, PhiDirection direction) {
    return phi_at(i, direction, Polynomial::variable(1, 0));
}

Polynomial shift_x1(const Polynomial& p, const Rational& c) {
    Polynomial image = Polynomial::variable(p.variable_count(), 0) +
                       Polynomial::constant(p.variable_count(), c);
    return p.substitute_one(0, image);
}

NilpotentSeries::NilpotentSeries(int size, int coeff_nvars) : nvars_(coeff_nvars) {
    if (size < 1) throw std::invalid_argument("NilpotentSeries: size must be >= 1");
    coeff_.assign(static_cast<size_t>(size), Polynomial::zero(coeff_nvars));
}

NilpotentSeries NilpotentSeries::identity(int size, int coeff_nvars) {
    NilpotentSeries s(size, coeff_nvars);
    s.coeff_[0] = Polynomial::constant(coeff_nvars, Rational(1));
    return s;
}

void NilpotentSeries::set_coeff(int i, Polynomial p) {
    if (p.variable_count() != nvars_)
        throw std::invalid_argument("NilpotentSeries: coefficient ring mismatch");
    coeff_.at(static_cast<size_t>(i)) = std::move(p);
}

bool NilpotentSeries::is_identity() const { return *this == identity(size(), nvars_); }

NilpotentSeries NilpotentSeries::operator*(const NilpotentSeries& o) const {
    if (size() != o.size() || nvars_ != o.nvars_)
        throw std::invalid_argument("NilpotentSeries: size or ring mismatch");
    NilpotentSeries r(size(), nvars_);
    for (int k = 0; k < size(); ++k) {
        Polynomial c(nvars_);
        for (int i = 0; i <= k; ++i) c += coeff_[static_cast<size_t>(i)] * o.coeff_[static_cast<size_t>(k - i)];
        r.coeff_[static_cast<size_t>(k)] = std::move(c);
    }
    return r;
}

NilpotentSeries NilpotentSeries::operator-(const NilpotentSeries& o) const {
    if (size() != o.size() || nvars_ != o.nvars_)
        throw std::invalid_argument("NilpotentSeries: size or ring mismatch");
    NilpotentSeries r(size(), nvars_);
    for (int k = 0; k < size(); ++k)
        r.coeff_[static_cast<size_t>(k)] = coeff_[static_cast<size_t>(k)] - o.coeff_[static_cast<size_t>(k)];
    return r;
}

NilpotentSeries NilpotentSeries::theta_shifted() const {
    NilpotentSeries r(size(), nvars_);
    for (int k = 1; k < size(); ++k) r.coeff_[static_cast<size_t>(k)] = coeff_[static_cast<size_t>(k - 1)];
    return r;
}

NilpotentSeries NilpotentSeries::coeff_shifted(const Rational& c) const {
    NilpotentSeries r(size(), nvars_);
    for (int k = 0; k < size(); ++k) r.coeff_[static_cast<size_t>(k)] = shift_x1(coeff_[static_cast<size_t>(k)], c);
    return r;
}

NilpotentSeries exp_series_at(ExpSign sign, int size, const Polynomial& arg) {
    NilpotentSeries s(size, arg.variable_count());
    for (int i = 0; i < size; ++i) {
        if (sign == ExpSign::Plus) {
            s.set_coeff(i, phi_at(i, PhiDirection::Minus, arg));
        } else {
            Polynomial c = phi_at(i, PhiDirection::Plus, arg);
            if (i % 2 == 1) c = -c;
            s.set_coeff(i, std::move(c));
        }
    }
    return s;
}

NilpotentSeries exp_series(ExpSign sign, int size) {
    return exp_series_at(sign, size, Polynomial::variable(1, 0));
}

NilpotentSeries lambda_matrix(int size) {
    NilpotentSeries s(size, 1);
    for (int i = 0; i < size; ++i) {
        Polynomial c = phi(i, PhiDirection::Plus);
        if (i % 2 == 1) c = -c;
        s.set_coeff(i, std::move(c));
    }
    return s;
}

NilpotentSeries lambda_inverse(int size) {
    NilpotentSeries s(size, 1);
    for (int i = 0; i < size; ++i) s.set_coeff(i, phi(i, PhiDirection::Minus));
    return s;
}

bool check_vanishing_sums(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("check_vanishing_sums: need k, n >= 1");
    Polynomial unbounded(1);
    for (int i = 0; i <= k; ++i) {
        Polynomial term = phi(i, PhiDirection::Plus) * phi(k - i, PhiDirection::Minus);
        if (i % 2 == 1) term = -term;
        unbounded += term;
    }
    if (!unbounded.is_zero()) return false;
    // The bounded form is the Theta^k coefficient of the product of the two
    // series truncated at Theta^{n+1}; for k > n that coefficient is truncated
    // away and the statement holds vacuously.
    if (k > n) return true;
    Polynomial bounded(1);
    for (int i = std::max(0, k - n); i <= std::min(k, n); ++i) {
        Polynomial term = phi(i, PhiDirection::Plus) * phi(k - i, PhiDirection::Minus);
        if (i % 2 == 1) term = -term;
        bounded += term;
    }
    return bounded.is_zero();
}

std::vector<Polynomial> eta_vector(int size) {
    if (size < 1) throw std::invalid_argument("eta_vector: size must be >= 1");
    // Lambda^{-1} is the size x size lower-triangular Toeplitz matrix with
    // entries phi_{-(row-col)}; Phi_j = (-1)^j phi_{j+1}.
    std::vector<Polynomial> eta;
    eta.reserve(static_cast<size_t>(size));
    for (int i = 1; i <= size; ++i) {
        Polynomial entry(1);
        for (int j = 1; j <= i; ++j) {
            Polynomial term = phi(i - j, PhiDirection::Minus) * phi(j + 1, PhiDirection::Plus);
            if (j % 2 == 1) term = -term;
            entry += term;
        }
        Polynomial expected = Rational(-i) * shift_x1(phi(i + 1, PhiDirection::Minus), Rational(1));
        if (entry != expected)
            throw std::logic_error("eta_vector: entry does not match the closed form");
        eta.push_back(std::move(entry));
    }
    return eta;
}

}  // namespace uinv
