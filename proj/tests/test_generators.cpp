#include <doctest.h>

#include "uinv/affine_map.hpp"
#include "uinv/generators.hpp"
#include "uinv/phi.hpp"

using namespace uinv;

TEST_CASE("y generators") {
    CHECK(y_generator(2, 1) == Polynomial::parse("x2 + 1/2*x1*(x1+1)", 2));
    CHECK(y_generator(3, 2) == Polynomial::parse("x3 + x1*x2 + 1/3*x1^3 - 1/3*x1", 3));
    CHECK(*y_generator(8, 7).degree() == 8);
    CHECK_THROWS_AS(y_generator(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(y_generator(3, 0), std::invalid_argument);
    for (int n = 2; n <= 6; ++n) {
        auto sigma = make_affine_jordan(n);
        for (int i = 1; i <= n - 1; ++i) CHECK(sigma.is_invariant(y_generator(n, i)));
    }
}

TEST_CASE("variables are recovered from the y generators") {
    for (int n = 2; n <= 8; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            Polynomial rhs(n);
            for (int j = 1; j <= i; ++j) {
                Polynomial term = phi(i - j, PhiDirection::Plus).embedded(n) * y_generator(n, j);
                rhs += ((i - j) % 2 == 0) ? term : -term;
            }
            Polynomial last = phi(i + 1, PhiDirection::Plus).embedded(n);
            rhs += (i % 2 == 0) ? last : -last;
            CHECK(rhs == Polynomial::variable(n, i));
        }
    }
}

TEST_CASE("quadratic generators") {
    CHECK(u_generator(2, 1) == Polynomial::parse("x1^2 + x1 + 2*x2", 2));
    CHECK(u_generator(4, 2) == Polynomial::parse("x2^2 - x1*(x2 + 2*x3) - x2 - 3*x3 - 2*x4", 4));
    CHECK(make_affine_jordan(6).is_invariant(u_generator(6, 3)));
    CHECK_THROWS_AS(u_generator(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(u_generator(1, 1), std::invalid_argument);
}

TEST_CASE("cubic generators") {
    CHECK(v_generator(3, 1) == Polynomial::parse("x1^3 + 3*x1*x2 - x1 + 3*x3", 3));
    Polynomial v2 = v_generator(5, 2);
    Polynomial expect = Polynomial::variable(5, 0) * u_generator(5, 2) +
                        Polynomial::parse("x2*x3 - 2*x1*x3 - 3*x1*x4 - 3*x3 - 8*x4 - 5*x5", 5);
    CHECK(v2 == expect);
    CHECK(make_affine_jordan(5).is_invariant(v2));
    CHECK(Rational(3) * y_generator(3, 2) == v_generator(3, 1));
    CHECK_THROWS_AS(v_generator(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(v_generator(2, 1), std::invalid_argument);
}

TEST_CASE("top-variable coefficients of u_k and v_k") {
    for (int k = 1; k <= 6; ++k) {
        int n = 2 * k + 1;
        Polynomial u = u_generator(n, k);
        Monomial top(n);
        top[2 * k - 1] = 1;
        CHECK(u.coeff(top) == (k % 2 == 1 ? Rational(2) : Rational(-2)));
        CHECK_FALSE(u.uses_variable(2 * k));  // nothing above x_{2k}

        Polynomial v = v_generator(n, k);
        Monomial vtop(n);
        vtop[2 * k] = 1;
        CHECK(v.coeff(vtop) == (k % 2 == 1 ? Rational(1 + 2 * k) : Rational(-(1 + 2 * k))));
        for (int j = 2 * k + 1; j < n; ++j) CHECK_FALSE(v.uses_variable(j));
    }
}

TEST_CASE("quadratic-part leading coefficients") {
    for (int k = 2; k <= 6; ++k) {
        int n = 2 * k + 1;
        Polynomial uq = u_generator(n, k).graded_component(2);
        Monomial m1(n);
        m1[0] = 1;
        m1[2 * k - 2] = 1;  // z1 z_{2k-1}
        CHECK(uq.coeff(m1) == (k % 2 == 1 ? Rational(2) : Rational(-2)));

        Polynomial vq = v_generator(n, k).graded_component(2) -
                        Polynomial::variable(n, 0) * u_generator(n, k).graded_component(1);
        Monomial m2(n);
        m2[0] = 1;
        m2[2 * k - 1] = 1;  // z1 z_{2k}
        CHECK(vq.coeff(m2) == (k % 2 == 1 ? Rational(2 * k - 1) : Rational(-(2 * k - 1))));
    }
}

TEST_CASE("graded generators match both routes and the displays") {
    CHECK(graded_generator(GradedKind::P, 2, 1) == Polynomial::parse("x2^2 - x1*(x2 + 2*x3)", 3));
    CHECK(graded_generator(GradedKind::P, 4, 2) ==
          Polynomial::parse("x3^2 - x2*(x3 + 2*x4) + x1*(x3 + 3*x4 + 2*x5)", 5));
    CHECK(graded_generator(GradedKind::Q, 3, 1) ==
          Polynomial::parse("x1^3 - x2^3 + 3*x1*x2*x3 + x1^2*x2 - 3*x1^2*x4", 4));
    // the dual-route assertion runs inside graded_generator
    for (int n = 4; n <= 9; ++n) {
        for (int k = 1; k <= quadratic_count(n); ++k) graded_generator(GradedKind::P, n, k);
        for (int k = 2; k <= mu_count(n); ++k) graded_generator(GradedKind::Q, n, k);
    }
    auto gmap = make_graded_jordan(6);
    CHECK(gmap.is_invariant(graded_generator(GradedKind::P, 5, 2)));
    CHECK(gmap.is_invariant(graded_generator(GradedKind::Q, 5, 2)));
    CHECK_THROWS_AS(graded_generator(GradedKind::P, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(graded_generator(GradedKind::Q, 2, 1), std::invalid_argument);
}

TEST_CASE("theta and its shifted companion") {
    Polynomial th = theta();
    CHECK(th == Polynomial::parse(
                    "3*x1^3*x2 + 6*x1^3*x3 - 3*x1^2*x2^2 + 5*x1^2*x2 + 9*x1^2*x3 + 6*x1*x2^2"
                    " + 18*x1*x2*x3 - 8*x2^3 + 2*x1*x2 + 3*x1*x3 + 8*x2^2 + 18*x2*x3 + 9*x3^2",
                    3));
    CHECK(th.leading_form() ==
          Rational(-3) * (Polynomial::parse("x1^2", 3) *
                          Polynomial::parse("x2^2 - x1*(x2 + 2*x3)", 3)));
    Polynomial tt = theta_tilde();
    CHECK(*tt.degree() == 3);
    CHECK(tt == Polynomial::parse(
                    "-6*x1^2*x4 + 6*x1*(x2 - x1)*x3 - 2*x2^3 + x1*x2*(3*x2 - x1)"
                    " - 6*(x1 + 2*x2)*x4 + 9*x3^2 - 6*x1*x3 + 2*x2^2 - x1*x2",
                    4));
}

TEST_CASE("u2 in terms of the invariant generators") {
    // u2 = 1/4 u1^2 - 1/2 u1 - v1 - 2 y4 in four variables
    Polynomial u1 = u_generator(4, 1);
    Polynomial rhs = Rational(1, 4) * u1.pow(2) - Rational(1, 2) * u1 - v_generator(4, 1) -
                     Rational(2) * y_generator(4, 3);
    CHECK(u_generator(4, 2) == rhs);
}

TEST_CASE("special generator sets") {
    auto s1 = special_generators(1);
    CHECK(s1.members.size() == 1);
    CHECK(s1.at("x1") == Polynomial::variable(2, 0));

    auto s2 = special_generators(2);
    CHECK(s2.members.size() == 2);
    CHECK(s2.at("p1") == graded_generator(GradedKind::P, 2, 1));

    auto s3 = special_generators(3);
    CHECK(s3.members.size() == 4);
    CHECK(s3.at("q1") == q_hat(3, 1));
    CHECK(s3.at("s") ==
          Polynomial::parse("-3*x2^2*(x3^2 - x2*(x3 + 2*x4)) - 9*x1*x2*(x2 + 2*x3)*x4 + 8*x1*x3^3"
                            " - x1*x2*x3*(5*x2 + 6*x3) + 9*x1^2*x4^2 + 3*x1^2*(x2 + 6*x3)*x4"
                            " + 8*x1^2*x3^2 + 2*x1^2*x2*x3",
                            4));
    std::vector<int> degrees3;
    for (const auto& g : s3.members) degrees3.push_back(g.degree);
    CHECK(degrees3 == std::vector<int>{1, 2, 3, 4});

    auto s4 = special_generators(4);
    CHECK(s4.members.size() == 5);
    CHECK(s4.at("t") ==
          Polynomial::parse("6*x2^2*x5 - 6*x2*(x3 - x2)*x4 + 2*x3^3 - x2*x3*(3*x3 - x2)"
                            " + x1*(-6*(x2 + 2*x3)*x5 + 9*x4^2 - 6*x2*x4 + 2*x3^2 - x2*x3)",
                            5));
    std::vector<int> degrees4;
    for (const auto& g : s4.members) degrees4.push_back(g.degree);
    CHECK(degrees4 == std::vector<int>{1, 2, 3, 2, 3});

    for (int n = 1; n <= 4; ++n) {
        auto set = special_generators(n);
        auto gmap = make_graded_jordan(n + 1);
        for (const auto& g : set.members) {
            CHECK(gmap.is_invariant(g.poly));
            CHECK(*g.poly.degree() == g.degree);
            CHECK(g.poly.is_homogeneous());
        }
    }
    CHECK_THROWS_AS(special_generators(5), std::invalid_argument);
    CHECK_THROWS_AS(special_generators(0), std::invalid_argument);
}

TEST_CASE("affine generator sets follow the declared degrees") {
    for (int n : {2, 3, 5, 8}) {
        auto set = affine_generator_set(n);
        CHECK(set.members.size() == static_cast<size_t>(n - 1));
        auto sigma = make_affine_jordan(n);
        for (const auto& g : set.members) {
            CHECK(sigma.is_invariant(g.poly));
            CHECK(*g.poly.degree() == g.degree);
        }
    }
}

TEST_CASE("degree-five invariants") {
    Polynomial w2 = w_generator(5, 2);
    CHECK(make_affine_jordan(5).is_invariant(w2));
    CHECK(*w2.degree() == 5);
    Polynomial uq = u_generator(5, 2).graded_component(2);
    Polynomial vq = v_generator(5, 2).graded_component(2) -
                    Polynomial::variable(5, 0) * u_generator(5, 2).graded_component(1);
    Polynomial z1 = Polynomial::variable(5, 0), z2 = Polynomial::variable(5, 1);
    CHECK(w2.leading_form() == uq * (Rational(2) * (z1 * vq) - (z1 + Rational(2) * z2) * uq));
    CHECK_THROWS_AS(w_generator(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(w_generator(5, 1), std::invalid_argument);
}

TEST_CASE("homogenized y generators") {
    for (int n = 2; n <= 7; ++n) {
        auto gmap = make_graded_jordan(n + 1);
        for (int i = 1; i <= std::min(6, n - 1); ++i) {
            Polynomial f = f_generator(n, i);
            CHECK(f.is_homogeneous());
            CHECK(*f.degree() == i + 1);
            CHECK(gmap.is_invariant(f));

            // the displayed double-sum formula
            int nv = n + 1;
            Polynomial x1 = Polynomial::variable(nv, 0);
            Polynomial x2 = Polynomial::variable(nv, 1);
            Polynomial rhs(nv);
            for (int j = 1; j <= i; ++j) {
                Polynomial prod = Polynomial::constant(nv, Rational(1));
                Integer fact(1);
                for (int r = 0; r < i - j; ++r) {
                    prod = prod * (x2 + Rational(r) * x1);
                    fact *= (r + 1);
                }
                Polynomial term = Rational(Integer(1), fact) * (x1.pow(j) * prod) *
                                  Polynomial::variable(nv, j + 1);
                rhs += ((i - j) % 2 == 0) ? -term : term;  // sign (-1)^{i-j+1}
            }
            Polynomial tailprod = x2 - x1;
            Integer fact(1);
            for (int r = 0; r < i; ++r) {
                tailprod = tailprod * (x2 + Rational(r) * x1);
                fact *= (r + 1);
            }
            fact *= (i + 1);
            Polynomial tail = Rational(Integer(i), fact) * tailprod;
            rhs += (i % 2 == 0) ? -tail : tail;  // sign (-1)^{i+1}
            CHECK(f == rhs);
        }
    }
}
