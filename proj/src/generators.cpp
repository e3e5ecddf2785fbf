#include "uinv/generators.hpp"

#include <stdexcept>

#include "uinv/phi.hpp"

namespace uinv {

Polynomial y_generator(int n, int i) {
    if (n < 2) throw std::invalid_argument("y_generator: need n >= 2");
    if (i < 1 || i > n - 1) throw std::invalid_argument("y_generator: index out of range");
    Polynomial y(n);
    for (int j = 1; j <= i; ++j)
        y += phi(i - j, PhiDirection::Minus).embedded(n) * Polynomial::variable(n, j);
    y += Rational(i) * shift_x1(phi(i + 1, PhiDirection::Minus), Rational(1)).embedded(n);
    return y;
}

Polynomial u_generator(int n, int k) {
    if (n < 2) throw std::invalid_argument("u_generator: need n >= 2");
    if (k < 1 || 2 * k > n) throw std::invalid_argument("u_generator: k out of range");
    Polynomial u = Polynomial::variable(n, k - 1).pow(2);
    for (int i = 1; i <= k - 1; ++i)
        for (int j = k; j <= 2 * k - i; ++j)
            u += lambda_coeff(k, i, j) * (Polynomial::variable(n, i - 1) * Polynomial::variable(n, j - 1));
    for (int i = k; i <= 2 * k; ++i) u += mu_coeff(k, i) * Polynomial::variable(n, i - 1);
    return u;
}

Polynomial v_generator(int n, int k) {
    if (n < 3) throw std::invalid_argument("v_generator: need n >= 3");
    if (k < 1 || 2 * k + 1 > n) throw std::invalid_argument("v_generator: k out of range");
    if (k == 1) {
        Polynomial x1 = Polynomial::variable(n, 0);
        return x1.pow(3) + Rational(3) * (x1 * Polynomial::variable(n, 1)) - x1 +
               Rational(3) * Polynomial::variable(n, 2);
    }
    Polynomial v = Polynomial::variable(n, 0) * u_generator(n, k);
    v += Polynomial::variable(n, k - 1) * Polynomial::variable(n, k);
    for (int i = 1; i <= k - 1; ++i)
        for (int j = k + 1; j <= 2 * k - i + 1; ++j)
            v += alpha_coeff(k, i, j) * (Polynomial::variable(n, i - 1) * Polynomial::variable(n, j - 1));
    for (int i = k + 1; i <= 2 * k + 1; ++i) v += beta_coeff(k, i) * Polynomial::variable(n, i - 1);
    return v;
}

Polynomial rehomogenize_z(const Polynomial& g, int degree) {
    auto d = g.degree();
    if (d && *d > degree) throw std::invalid_argument("rehomogenize_z: degree too small for g");
    int n = g.variable_count();
    Polynomial r(n + 1);
    for (const auto& [m, c] : g.terms()) {
        Monomial hm(n + 1);
        int total = m.degree();
        hm[0] = degree - total;
        for (int i = 0; i < n; ++i) hm[i + 1] = m[i];
        Rational coeff = (total % 2 == 0) ? c : -c;
        r += Polynomial::term(hm, coeff);
    }
    return r;
}

namespace {

// Explicit expansion of p_k from the coefficient tables.
Polynomial p_explicit(int n, int k) {
    int nv = n + 1;
    Polynomial p = Polynomial::variable(nv, k).pow(2);
    for (int i = 1; i <= k - 1; ++i)
        for (int j = k; j <= 2 * k - i; ++j)
            p += lambda_coeff(k, i, j) * (Polynomial::variable(nv, i) * Polynomial::variable(nv, j));
    Polynomial lin(nv);
    for (int i = k; i <= 2 * k; ++i) lin += mu_coeff(k, i) * Polynomial::variable(nv, i);
    p -= Polynomial::variable(nv, 0) * lin;
    return p;
}

// Explicit expansion of q_k (k >= 2) from the coefficient tables.
Polynomial q_explicit(int n, int k) {
    int nv = n + 1;
    Polynomial x1 = Polynomial::variable(nv, 0);
    Polynomial q = -(Polynomial::variable(nv, 1) * p_explicit(n, k));
    q += x1 * (Polynomial::variable(nv, k) * Polynomial::variable(nv, k + 1));
    Polynomial quad(nv);
    for (int i = 1; i <= k - 1; ++i)
        for (int j = k + 1; j <= 2 * k - i + 1; ++j)
            quad += alpha_coeff(k, i, j) * (Polynomial::variable(nv, i) * Polynomial::variable(nv, j));
    q += x1 * quad;
    Polynomial lin(nv);
    for (int i = k + 1; i <= 2 * k + 1; ++i) lin += beta_coeff(k, i) * Polynomial::variable(nv, i);
    q -= x1.pow(2) * lin;
    return q;
}

}  // namespace

Polynomial q_hat(int n, int k) { return rehomogenize_z(v_generator(n, k), 3); }

Polynomial graded_generator(GradedKind kind, int n, int k) {
    if (kind == GradedKind::P) {
        if (n < 2 || k < 1 || k > quadratic_count(n))
            throw std::invalid_argument("graded_generator: k out of range for p");
        Polynomial via_z = rehomogenize_z(u_generator(n, k), 2);
        Polynomial direct = p_explicit(n, k);
        if (via_z != direct) throw std::logic_error("graded_generator: p_k routes disagree");
        return via_z;
    }
    if (n < 3 || k < 1 || k > mu_count(n))
        throw std::invalid_argument("graded_generator: k out of range for q");
    if (k == 1) {
        // q_1 carries an extra x1^3 on top of x1^3 v_1(z)
        return Polynomial::variable(n + 1, 0).pow(3) + q_hat(n, 1);
    }
    Polynomial via_z = q_hat(n, k);
    Polynomial direct = q_explicit(n, k);
    if (via_z != direct) throw std::logic_error("graded_generator: q_k routes disagree");
    return via_z;
}

Polynomial theta() {
    Polynomial u1 = u_generator(3, 1);
    Polynomial v1 = v_generator(3, 1);
    return v1.pow(2) - u1.pow(3) + Rational(3) * (v1 * u1) + Rational(2) * u1.pow(2);
}

Polynomial theta_tilde() {
    Polynomial t = theta().embedded(4);
    t += Rational(3) * (u_generator(4, 1) * u_generator(4, 2));
    return t;
}

const Polynomial& GeneratorSet::at(const std::string& name) const {
    for (const auto& g : members)
        if (g.name == name) return g.poly;
    throw std::invalid_argument("GeneratorSet: no generator named '" + name + "'");
}

bool GeneratorSet::has(const std::string& name) const {
    for (const auto& g : members)
        if (g.name == name) return true;
    return false;
}

GeneratorSet special_generators(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("special_generators: only n = 1..4 are supported");
    GeneratorSet set{MapCase::Graded, n, {}};
    int nv = n + 1;
    set.members.push_back({"x1", Polynomial::variable(nv, 0), 1});
    if (n >= 2) set.members.push_back({"p1", graded_generator(GradedKind::P, n, 1), 2});
    if (n >= 3) set.members.push_back({"q1", q_hat(n, 1), 3});
    if (n == 3) set.members.push_back({"s", rehomogenize_z(theta(), 4), 4});
    if (n == 4) {
        set.members.push_back({"p2", graded_generator(GradedKind::P, n, 2), 2});
        set.members.push_back({"t", rehomogenize_z(theta_tilde(), 3), 3});
    }
    return set;
}

GeneratorSet affine_generator_set(int n) {
    if (n < 2) throw std::invalid_argument("affine_generator_set: need n >= 2");
    GeneratorSet set{MapCase::Affine, n, {}};
    for (int k = 1; k <= quadratic_count(n); ++k)
        set.members.push_back({"u" + std::to_string(k), u_generator(n, k), 2});
    for (int k = 1; k <= mu_count(n); ++k)
        set.members.push_back({"v" + std::to_string(k), v_generator(n, k), 3});
    return set;
}

Polynomial w_generator(int n, int k) {
    if (n < 5) throw std::invalid_argument("w_generator: need n >= 5");
    if (k < 2 || k > mu_count(n)) throw std::invalid_argument("w_generator: k out of range");
    Polynomial u1 = u_generator(n, 1);
    Polynomial uk = u_generator(n, k);
    return v_generator(n, k).pow(2) - u1 * uk.pow(2);
}

Polynomial f_generator(int n, int i) {
    return rehomogenize_z(y_generator(n, i), i + 1);
}

}  // namespace uinv
