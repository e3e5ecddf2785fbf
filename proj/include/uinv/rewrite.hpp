#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uinv/generators.hpp"
#include "uinv/laurent.hpp"
#include "uinv/polynomial.hpp"

namespace uinv {

/// A polynomial rewritten over the free generators: variable 0 is X1 (the
/// residual x1), variable j is the symbol T_{j+1}, where T_{2k} stands for u_k
/// and T_{2k+1} for v_k. Back-substitution reproduces the input exactly;
/// invariants have residual_x1_degree = 0.
struct RewriteResult {
    int n;
    Polynomial expression;
    int residual_x1_degree;

    std::string str() const;
};

/// Expresses any f in K[x1, T2..Tn] by triangular elimination: for j = n down
/// to 2, x_j is solved from its generator, whose top variable x_j occurs
/// linearly with the known leading coefficient. Non-invariant inputs are legal
/// and keep X1.
RewriteResult rewrite_affine(const Polynomial& f, int n);

/// Substitutes x1 for X1 and the generator polynomials for the T-symbols.
Polynomial rewrite_back_substitute(const RewriteResult& r);

/// Passage to z_i = -x_{i+1}/x1: a homogeneous f of degree d becomes the
/// single Laurent part x1^d * g(z) with g = (-1)^d f(-1, z).
LaurentPolynomial dehomogenize(const Polynomial& f);

/// Inverse of dehomogenize for Laurent elements that are actually polynomial
/// (every part has power >= its z-degree).
Polynomial rehomogenize(const LaurentPolynomial& l);

/// A homogeneous graded invariant over the localization: Laurent in X1 with
/// symbols P1..Pm, Q1..Qmu, where P_k stands for x1^2 u_k(z) and Q_k for
/// x1^3 v_k(z).
struct GradedRewriteResult {
    int n;
    LaurentPolynomial expression;

    std::string str() const;
};

/// Routes through dehomogenize -> rewrite_affine -> rehomogenization of the
/// symbols; requires a homogeneous invariant of the graded map.
GradedRewriteResult rewrite_graded(const Polynomial& f);

/// Replaces the symbols by the actual generators after clearing negative X1
/// powers; returns the polynomial together with the cleared power s, so the
/// result equals x1^s * f.
std::pair<Polynomial, int> graded_back_substitute(const GradedRewriteResult& r);

/// Expands both sides of the defining relation from the explicit generators:
/// x1^2 s = q1^2 + 3 x1 p1 q1 - p1^3 + 2 x1^2 p1^2          (n = 3)
/// x1^3 t = q1^2 - p1^3 + 3 x1 p1 q1 + 2 x1^2 p1^2 + 3 x1^2 p1 p2   (n = 4)
bool verify_relation(int n);

/// Monomials in the named generators spanning the degree-i slice of the graded
/// invariant algebra, for n = 1..4. Verified linearly independent by exact
/// rank before returning.
std::vector<Polynomial> graded_basis(int n, int i);

enum class UVKind { U, V };

/// Substitutes z1 -> 0, z_i -> y_i into the generator and compares with the
/// original.
bool check_u_in_y(int n, int k, UVKind kind);

/// For a homogeneous invariant f of the graded map, f(-1, z) equals
/// f(-1, 0, y_2(z), ..., y_n(z)).
bool check_localization_identity(const Polynomial& f);

}  // namespace uinv
