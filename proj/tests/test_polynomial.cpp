#include <doctest.h>

#include "support.hpp"
#include "uinv/generators.hpp"
#include "uinv/jacobian.hpp"
#include "uinv/polynomial.hpp"

using namespace uinv;

TEST_CASE("parse: displayed generator") {
    Polynomial p = Polynomial::parse("x1^2 + x1 + 2*x2", 2);
    CHECK(p == u_generator(2, 1));
    CHECK(p.term_count() == 3);
}

TEST_CASE("parse: zero and parentheses") {
    CHECK(Polynomial::parse("0", 5).is_zero());
    Polynomial sq = Polynomial::parse("(x1+x2)^2", 2);
    Polynomial expect = Polynomial::parse("x1^2 + 2*x1*x2 + x2^2", 2);
    CHECK(sq == expect);
    CHECK(Polynomial::parse("-3/2*x1 + 1/2", 1).str() == "-3/2*x1 + 1/2");
}

TEST_CASE("parse: errors carry a position") {
    CHECK_THROWS_AS(Polynomial::parse("x1 + x7", 2), ParseError);
    try {
        Polynomial::parse("x1 + x7", 2);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(Polynomial::parse("x1 + + x2", 2), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x1^0", 2), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("(x1", 2), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x1/2", 2), ParseError);
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = testing::random_poly(4, 5, 8, rng);
        CHECK(Polynomial::parse(p.str(), 4) == p);
    }
}

TEST_CASE("ring axioms hold exactly") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial a = testing::random_poly(3, 4, 6, rng);
        Polynomial b = testing::random_poly(3, 4, 6, rng);
        Polynomial c = testing::random_poly(3, 4, 6, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("small arithmetic identities") {
    Polynomial x1 = Polynomial::variable(2, 0);
    CHECK((x1 - Polynomial::constant(2, 1)) * x1 == Polynomial::parse("x1^2 - x1", 2));
    Polynomial u1 = u_generator(2, 1);
    CHECK(u1 * Polynomial::constant(2, 1) == u1);
    // phi_{-2} assembled by hand
    Polynomial half = Rational(1, 2) * (x1 * (x1 - Polynomial::constant(2, 1)));
    CHECK(half == Polynomial::parse("1/2*x1^2 - 1/2*x1", 2));
}

TEST_CASE("arithmetic rejects mixed rings and negative powers") {
    Polynomial a(2), b(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a.pow(-1), std::invalid_argument);
}

TEST_CASE("degree of a product adds") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial a = testing::random_nonzero_poly(3, 4, 5, rng);
        Polynomial b = testing::random_nonzero_poly(3, 4, 5, rng);
        CHECK(*(a * b).degree() == *a.degree() + *b.degree());
    }
    CHECK(!Polynomial::zero(3).degree().has_value());
    CHECK(Polynomial::zero(3).degree() < std::optional<int>(-100));
}

TEST_CASE("substitute is a ring homomorphism") {
    std::vector<Polynomial> images{Polynomial::variable(2, 0),
                                   Polynomial::variable(2, 1) + Polynomial::variable(2, 0)};
    Polynomial p = Polynomial::parse("x1 + x2", 2);
    CHECK(p.substitute(images) == Polynomial::parse("2*x1 + x2", 2));

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = testing::random_poly(2, 3, 5, rng);
        Polynomial b = testing::random_poly(2, 3, 5, rng);
        CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
        CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
    }

    // invariance of u1 under the affine images
    Polynomial u1 = u_generator(2, 1);
    std::vector<Polynomial> affine{Polynomial::parse("x1 - 1", 2), Polynomial::parse("x2 + x1", 2)};
    CHECK(u1.substitute(affine) == u1);

    std::vector<Polynomial> collapse{Polynomial::zero(1), Polynomial::variable(1, 0)};
    CHECK(Polynomial::parse("x2^2", 2).substitute(collapse) == Polynomial::parse("x1^2", 1));

    CHECK_THROWS_AS(u1.substitute({Polynomial::variable(2, 0)}), std::invalid_argument);
}

TEST_CASE("graded components") {
    Polynomial u2 = u_generator(4, 2);
    CHECK(u2.graded_component(2) == Polynomial::parse("x2^2 - x1*x2 - 2*x1*x3", 4));
    CHECK(u2.graded_component(1) == Polynomial::parse("-x2 - 3*x3 - 2*x4", 4));
    CHECK(Polynomial::zero(4).graded_component(3).is_zero());

    std::mt19937_64 rng(5);
    Polynomial p = testing::random_poly(3, 5, 10, rng);
    Polynomial total(3);
    for (int d = 0; d <= 5; ++d) {
        Polynomial comp = p.graded_component(d);
        CHECK((comp.is_zero() || comp.is_homogeneous()));
        total += comp;
    }
    CHECK(total == p);
}

TEST_CASE("leading forms") {
    CHECK(u_generator(2, 1).leading_form() == Polynomial::parse("x1^2", 2));
    CHECK(v_generator(3, 1).leading_form() == Polynomial::parse("x1^3", 3));
    CHECK(u_generator(4, 2).leading_form() == Polynomial::parse("x2^2 - x1*x2 - 2*x1*x3", 4));
    CHECK_THROWS_AS(Polynomial::zero(2).leading_form(), std::invalid_argument);
}

TEST_CASE("jacobian independence") {
    CHECK(jacobian_independent({Polynomial::variable(2, 0), Polynomial::variable(2, 1)}));
    CHECK_FALSE(jacobian_independent(
        {Polynomial::parse("x1^2", 2), Polynomial::parse("x1^3", 2)}));
    // leading forms of u1 and theta in three variables
    Polynomial lu1 = Polynomial::parse("x1^2", 3);
    CHECK(jacobian_independent({lu1, theta().leading_form()}));
    // more polynomials than variables: trivially dependent and flagged
    auto rep = jacobian_rank_report(
        {Polynomial::variable(2, 0), Polynomial::variable(2, 1), Polynomial::parse("x1*x2", 2)});
    CHECK_FALSE(rep.independent);
    CHECK(rep.overcount);
    CHECK_THROWS_AS(jacobian_independent({}), std::invalid_argument);
}

TEST_CASE("jacobian is stable under invertible recombination") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial a = testing::random_nonzero_poly(3, 3, 4, rng);
        Polynomial b = testing::random_nonzero_poly(3, 3, 4, rng);
        bool before = jacobian_independent({a, b});
        // [[1,1],[0,1]] recombination
        bool after = jacobian_independent({a + b, b});
        CHECK(before == after);
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = testing::random_nonzero_poly(3, 3, 4, rng);
        Polynomial b = testing::random_nonzero_poly(3, 3, 4, rng);
        CHECK(divide_exact(a * b, b) == a);
    }
    CHECK_THROWS_AS(divide_exact(Polynomial::parse("x1 + 1", 2), Polynomial::parse("x2", 2)),
                    std::invalid_argument);
}
