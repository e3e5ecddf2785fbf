#pragma once

#include <vector>

#include "uinv/polynomial.hpp"

namespace uinv {

/// Algebra automorphism x |-> Ax + b of K[x1..xn] with A unipotent lower
/// triangular, so the inverse always exists and is of the same shape.
class UnipotentAffineMap {
public:
    UnipotentAffineMap(std::vector<std::vector<Rational>> matrix, std::vector<Rational> translation);

    /// x1 -> x1 - 1, x_i -> x_i + x_{i-1}: the Jordan matrix with translation -e1.
    static UnipotentAffineMap affine_jordan(int n);
    /// x1 -> x1, x_i -> x_i + x_{i-1}: the Jordan matrix, no translation.
    /// Preserves each graded component.
    static UnipotentAffineMap graded_jordan(int n_plus_1);
    static UnipotentAffineMap identity(int n);

    int variable_count() const { return n_; }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
    const std::vector<Rational>& translation() const { return translation_; }
    bool has_translation() const;

    /// Image of variable i (0-based) as a degree <= 1 polynomial.
    Polynomial variable_image(int i) const;

    Polynomial apply(const Polynomial& p) const;
    UnipotentAffineMap inverse() const;
    UnipotentAffineMap compose(const UnipotentAffineMap& inner) const;

    /// The sigma-derivation d = 1 - sigma. Satisfies the twisted Leibniz law
    /// d(fg) = d(f) g + sigma(f) d(g).
    Polynomial delta(const Polynomial& p) const;
    bool is_invariant(const Polynomial& p) const { return delta(p).is_zero(); }

    friend bool operator==(const UnipotentAffineMap& a, const UnipotentAffineMap& b) {
        return a.matrix_ == b.matrix_ && a.translation_ == b.translation_;
    }

private:
    int n_;
    std::vector<std::vector<Rational>> matrix_;
    std::vector<Rational> translation_;
};

UnipotentAffineMap make_affine_jordan(int n);
UnipotentAffineMap make_graded_jordan(int n_plus_1);

}  // namespace uinv
