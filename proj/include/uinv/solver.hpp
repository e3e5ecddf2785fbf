#pragma once

#include <map>
#include <vector>

#include "uinv/affine_map.hpp"
#include "uinv/exact_linalg.hpp"
#include "uinv/monomial.hpp"
#include "uinv/polynomial.hpp"

namespace uinv {

enum class SolveMode { Filtered, Graded };

/// All monomials in n variables of total degree <= d (Filtered) or == d
/// (Graded), in canonical order.
std::vector<Monomial> enumerate_monomials(int n, int d, SolveMode mode);

/// The operator d = 1 - sigma written on a monomial basis: one sparse column
/// per basis element (row index -> coefficient). d maps the degree-bounded
/// space into itself for any filtration-preserving map, and each graded
/// component into itself when the translation vanishes.
struct LinearSystem {
    std::vector<Monomial> basis;
    std::vector<std::map<int, Rational>> columns;
};

LinearSystem build_delta_system(const UnipotentAffineMap& map, int d, SolveMode mode, int threads = 1);

/// Deterministic basis of ker(1 - sigma) on the bounded space: canonical
/// kernel of the exact reduced echelon form.
struct InvariantBasis {
    int variable_count;
    int degree_bound;
    SolveMode mode;
    std::vector<Polynomial> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
    bool contains(const Polynomial& p) const;
    bool spans_same(const std::vector<Polynomial>& other) const;
};

InvariantBasis solve_filtered(const UnipotentAffineMap& map, int d, int threads = 1);
/// Homogeneous degree-d invariants; requires a translation-free map.
InvariantBasis solve_graded(const UnipotentAffineMap& map, int d, int threads = 1);

/// Kernel dimensions for d = 0..d_max.
std::vector<int> dimension_table(const UnipotentAffineMap& map, int d_max, SolveMode mode,
                                 int threads = 1);

}  // namespace uinv
