#pragma once

#include <string>
#include <vector>

#include "uinv/polynomial.hpp"
#include "uinv/tables.hpp"

namespace uinv {

/// y_{i+1} = sum_{j=1}^{i} phi_{-(i-j)}(x1) x_{j+1} + i sigma^{-1}(phi_{-i-1}(x1)),
/// for 1 <= i <= n-1; degree i+1. Together with x1 these generate the whole
/// ring, and each is invariant under the affine Jordan map.
Polynomial y_generator(int n, int i);

/// Quadratic invariant u_k = x_k^2 + sum lambda_{i,j} x_i x_j + sum mu_i x_i,
/// for 1 <= k <= floor(n/2).
Polynomial u_generator(int n, int k);

/// Cubic invariant v_k for 1 <= k <= floor((n-1)/2). v_1 = x1^3 + 3 x1 x2 -
/// x1 + 3 x3; for k >= 2, v_k = x1 u_k + x_k x_{k+1} + sum alpha_{i,j} x_i x_j
/// + sum beta_i x_i.
Polynomial v_generator(int n, int k);

/// Homogenization through z_i = -x_{i+1}/x1: returns x1^degree * g(z) as a
/// polynomial in n+1 variables. Requires deg(g) <= degree.
Polynomial rehomogenize_z(const Polynomial& g, int degree);

enum class GradedKind { P, Q };

/// Homogeneous invariants of the graded Jordan map on n+1 variables:
/// p_k = x1^2 u_k(z) (degree 2) and q_k (degree 3). q_1 carries an extra x1^3
/// term on top of x1^3 v_1(z); q_k = x1^3 v_k(z) for k >= 2. Both the
/// z-substitution route and the explicit expansion are computed and must
/// agree.
Polynomial graded_generator(GradedKind kind, int n, int k);

/// x1^3 v_k(z) for every k >= 1; the uniform family behind the rewrite
/// engine's Q-symbols and the defining relations.
Polynomial q_hat(int n, int k);

/// theta = v1^2 - u1^3 + 3 v1 u1 + 2 u1^2 in three z-variables (degree 4).
Polynomial theta();
/// theta~ = theta + 3 u1 u2 in four z-variables; the degree-4 forms cancel,
/// leaving degree 3.
Polynomial theta_tilde();

enum class MapCase { Affine, Graded };

struct NamedGenerator {
    std::string name;
    Polynomial poly;
    int degree;
};

struct GeneratorSet {
    MapCase map_case;
    int n;
    std::vector<NamedGenerator> members;

    const Polynomial& at(const std::string& name) const;
    bool has(const std::string& name) const;
};

/// Generating sets of the graded invariant algebra on n+1 variables for
/// n = 1..4: {x1}, {x1, p1}, {x1, p1, q1, s}, {x1, p1, q1, p2, t}, where here
/// q1 = x1^3 v1(z), s = x1^4 theta(z) and t = x1^3 theta~(z).
GeneratorSet special_generators(int n);

/// The free generators u_1..u_m, v_1..v_mu of the affine invariant ring.
GeneratorSet affine_generator_set(int n);

/// Degree-5 invariant w_k = v_k^2 - u_1 u_k^2 for n >= 5, 2 <= k <= mu_count(n).
Polynomial w_generator(int n, int k);

/// f_{i+1} = x1^{i+1} y_{i+1}(z): a homogeneous invariant of the graded map on
/// n+1 variables, for 1 <= i <= n-1.
Polynomial f_generator(int n, int i);

}  // namespace uinv
