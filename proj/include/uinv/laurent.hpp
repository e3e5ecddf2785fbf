#pragma once

#include <map>
#include <string>

#include "uinv/polynomial.hpp"

namespace uinv {

/// Element of R[x1, x1^-1] where R is a polynomial ring: a finite map from
/// x1-powers (possibly negative) to nonzero coefficient polynomials.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int coeff_nvars) : nvars_(coeff_nvars) {}

    static LaurentPolynomial from_part(int power, const Polynomial& part) {
        LaurentPolynomial l(part.variable_count());
        if (!part.is_zero()) l.parts_.emplace(power, part);
        return l;
    }

    int coeff_variable_count() const { return nvars_; }
    bool is_zero() const { return parts_.empty(); }
    const std::map<int, Polynomial>& parts() const { return parts_; }

    int min_power() const;
    int max_power() const;
    Polynomial part(int power) const;

    void add_part(int power, const Polynomial& p);

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += -b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Multiplication by x1^k; exact and invertible.
    LaurentPolynomial shifted(int k) const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    /// Canonical text: parts in descending x1-power, terms in the coefficient
    /// ring's canonical order, the x1 factor printed via x1_name.
    std::string str(const std::string& x1_name, const VarNamer& coeff_namer) const;

private:
    int nvars_;
    std::map<int, Polynomial> parts_;
};

}  // namespace uinv
