#include <doctest.h>

#include <random>

#include "uinv/affine_map.hpp"
#include "uinv/rewrite.hpp"
#include "uinv/solver.hpp"

using namespace uinv;

namespace {

Polynomial symbol_poly(int n, std::mt19937_64& rng, int terms = 6) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> var(1, n - 1);
    std::uniform_int_distribution<int> deg(0, 3);
    Polynomial g(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m[var(rng)] += 1;
        g += Polynomial::term(m, Rational(coef(rng)));
    }
    return g;
}

}  // namespace

TEST_CASE("generators map to their own symbols") {
    RewriteResult r = rewrite_affine(u_generator(2, 1), 2);
    CHECK(r.residual_x1_degree == 0);
    CHECK(r.expression == Polynomial::variable(2, 1));
    CHECK(r.str() == "T2");

    // u1 v1 + u2 in five variables
    Polynomial f = u_generator(5, 1) * v_generator(5, 1) + u_generator(5, 2);
    RewriteResult r5 = rewrite_affine(f, 5);
    CHECK(r5.residual_x1_degree == 0);
    Polynomial expect = Polynomial::variable(5, 1) * Polynomial::variable(5, 2) +
                        Polynomial::variable(5, 3);
    CHECK(r5.expression == expect);
    CHECK(rewrite_back_substitute(r5) == f);
}

TEST_CASE("non-invariant inputs keep the residual variable") {
    RewriteResult r = rewrite_affine(Polynomial::variable(2, 1), 2);
    CHECK(r.residual_x1_degree == 2);
    // x2 = (T2 - X1^2 - X1) / 2
    Polynomial expect = Rational(1, 2) * (Polynomial::variable(2, 1) -
                                          Polynomial::variable(2, 0).pow(2) -
                                          Polynomial::variable(2, 0));
    CHECK(r.expression == expect);
    CHECK(r.str() == "-1/2*X1^2 - 1/2*X1 + 1/2*T2");
    CHECK(rewrite_back_substitute(r) == Polynomial::variable(2, 1));
}

TEST_CASE("rewrite round trips and is deterministic") {
    std::mt19937_64 rng(42);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            Polynomial g = symbol_poly(n, rng);
            Polynomial f = rewrite_back_substitute(RewriteResult{n, g, 0});
            RewriteResult back = rewrite_affine(f, n);
            CHECK(back.expression == g);
            CHECK(back.residual_x1_degree == 0);
            RewriteResult again = rewrite_affine(f, n);
            CHECK(again.expression == back.expression);
        }
    }
}

TEST_CASE("dehomogenize and its inverse") {
    Polynomial p1 = graded_generator(GradedKind::P, 2, 1);
    LaurentPolynomial l = dehomogenize(p1);
    CHECK(l.parts().size() == 1);
    CHECK(l.part(2) == u_generator(2, 1));
    CHECK(rehomogenize(l) == p1);

    LaurentPolynomial lx = dehomogenize(Polynomial::parse("x1^5", 3));
    CHECK(lx.part(5) == Polynomial::constant(2, 1));

    CHECK(dehomogenize(q_hat(3, 1)).part(3) == v_generator(3, 1));

    CHECK_THROWS_AS(dehomogenize(Polynomial::parse("x1^2 + x2", 3)), std::invalid_argument);
    LaurentPolynomial neg = LaurentPolynomial::from_part(-1, Polynomial::constant(2, 1));
    CHECK_THROWS_AS(rehomogenize(neg), std::invalid_argument);
}

TEST_CASE("laurent arithmetic") {
    Polynomial one = Polynomial::constant(2, 1);
    LaurentPolynomial a = LaurentPolynomial::from_part(-2, one);
    LaurentPolynomial b = LaurentPolynomial::from_part(2, one);
    CHECK((a * b).part(0) == one);
    CHECK(a.shifted(2).part(0) == one);
    CHECK((a - a).is_zero());
}

TEST_CASE("graded rewrite of the named generators") {
    GradedRewriteResult p2 = rewrite_graded(graded_generator(GradedKind::P, 4, 2));
    CHECK(p2.str() == "P2");

    GradedRewriteResult s = rewrite_graded(special_generators(3).at("s"));
    // X1^-2 (Q1^2 - P1^3) + 3 X1^-1 P1 Q1 + 2 P1^2
    LaurentPolynomial expect(2);
    Polynomial P1 = Polynomial::variable(2, 0), Q1 = Polynomial::variable(2, 1);
    expect.add_part(-2, Q1.pow(2) - P1.pow(3));
    expect.add_part(-1, Rational(3) * (P1 * Q1));
    expect.add_part(0, Rational(2) * P1.pow(2));
    CHECK(s.expression == expect);

    auto [back, cleared] = graded_back_substitute(s);
    CHECK(cleared == 2);
    CHECK(back == Polynomial::parse("x1^2", 4) * special_generators(3).at("s"));
}

TEST_CASE("graded rewrite round trips products of generators") {
    std::mt19937_64 rng(7);
    for (int n : {3, 4, 5}) {
        int m = quadratic_count(n), mu = mu_count(n);
        std::uniform_int_distribution<int> pick(0, m + mu - 1);
        std::uniform_int_distribution<int> xp(0, 2);
        for (int trial = 0; trial < 3; ++trial) {
            Polynomial f = Polynomial::variable(n + 1, 0).pow(xp(rng));
            for (int factors = 0; factors < 2; ++factors) {
                int g = pick(rng);
                f = f * (g < m ? graded_generator(GradedKind::P, n, g + 1) : q_hat(n, g - m + 1));
            }
            GradedRewriteResult r = rewrite_graded(f);
            auto [back, cleared] = graded_back_substitute(r);
            CHECK(back == Polynomial::variable(n + 1, 0).pow(cleared) * f);
        }
    }
    CHECK_THROWS_AS(rewrite_graded(Polynomial::variable(4, 1)), std::invalid_argument);
    CHECK_THROWS_AS(rewrite_graded(Polynomial::parse("x1 + x2^2", 4)), std::invalid_argument);
}

TEST_CASE("defining relations") {
    CHECK(verify_relation(3));
    CHECK(verify_relation(4));
    CHECK_THROWS_AS(verify_relation(5), std::invalid_argument);

    // soundness probe: perturbing s must break the identity
    GeneratorSet g = special_generators(3);
    Polynomial x1 = g.at("x1"), p1 = g.at("p1"), q1 = g.at("q1");
    Polynomial s_bad = g.at("s") + Polynomial::parse("x1^4", 4);
    Polynomial lhs = x1.pow(2) * s_bad;
    Polynomial rhs = q1.pow(2) + Rational(3) * (x1 * p1 * q1) - p1.pow(3) +
                     Rational(2) * (x1.pow(2) * p1.pow(2));
    CHECK(lhs != rhs);
}

TEST_CASE("graded bases") {
    auto b33 = graded_basis(3, 3);
    CHECK(b33.size() == 3);
    CHECK(graded_basis(3, 4).size() == 5);
    auto b22 = graded_basis(2, 2);
    REQUIRE(b22.size() == 2);
    CHECK(b22[0] == Polynomial::parse("x1^2", 3));
    CHECK(b22[1] == graded_generator(GradedKind::P, 2, 1));

    for (int n = 1; n <= 4; ++n) {
        auto gmap = make_graded_jordan(n + 1);
        for (int i = 0; i <= 6; ++i)
            CHECK(static_cast<int>(graded_basis(n, i).size()) == solve_graded(gmap, i).dimension());
    }
    CHECK_THROWS_AS(graded_basis(5, 2), std::invalid_argument);
}

TEST_CASE("generators written in the y variables") {
    CHECK(check_u_in_y(4, 2, UVKind::U));
    CHECK(check_u_in_y(5, 2, UVKind::V));
    CHECK(check_u_in_y(2, 1, UVKind::U));
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= quadratic_count(n); ++k) CHECK(check_u_in_y(n, k, UVKind::U));
        for (int k = 1; k <= mu_count(n); ++k) CHECK(check_u_in_y(n, k, UVKind::V));
    }
}

TEST_CASE("filtered degrees add across the two summand families") {
    // elements of K[u1, theta] have even top degree, those of K[u1, theta] v1 odd,
    // so the top degrees never cancel
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> e(0, 2);
    Polynomial u1 = u_generator(3, 1), th = theta(), v1 = v_generator(3, 1);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = Rational(coef(rng)) * (u1.pow(e(rng)) * th.pow(e(rng)));
        Polynomial b = Rational(coef(rng)) * (u1.pow(e(rng)) * th.pow(e(rng)));
        Polynomial sum = a + b * v1;
        if (sum.is_zero()) continue;
        int expect = -1;
        if (!a.is_zero()) expect = std::max(expect, *a.degree());
        if (!b.is_zero()) expect = std::max(expect, *b.degree() + 3);
        CHECK(*sum.degree() == expect);
    }
}

TEST_CASE("localization identity on oracle invariants") {
    for (int n = 1; n <= 3; ++n) {
        auto gmap = make_graded_jordan(n + 1);
        for (int d = 0; d <= 4; ++d)
            for (const auto& f : solve_graded(gmap, d).basis) CHECK(check_localization_identity(f));
    }
}
