#include "support/test_support.hpp"
#include "symdeg/errors.hpp"
#include "symdeg/poly_parser.hpp"

#include <doctest.h>

using namespace symdeg;
using namespace symdeg::testing;

TEST_SUITE("exact_core") {

TEST_CASE("rationals are canonical and reject zero denominators") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
    CHECK(parse_rational("-7/21") == make_rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
}

TEST_CASE("grlex orders by degree then lexicographically") {
    GrlexLess less;
    CHECK(less({0, 0, 1}, {1, 1, 0}));
    CHECK(less({0, 1, 1}, {1, 0, 1}));
    CHECK_FALSE(less({1, 0}, {1, 0}));
}

TEST_CASE("zero coefficients never survive") {
    MultiPoly p(2);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());
    const auto x = MultiPoly::variable(2, 0);
    CHECK((x - x).is_zero());
    CHECK((x * Rational(0)).is_zero());
}

TEST_CASE("derivative of a constant is zero; evaluation of zero is zero") {
    const auto c = MultiPoly::constant(3, 5);
    CHECK(differentiate(c, 1).is_zero());
    CHECK(evaluate(MultiPoly(3), PointQ{{1, 2, 3}}) == 0);
    CHECK_THROWS_AS(differentiate(c, 3), PreconditionError);
    CHECK_THROWS_AS(evaluate(c, PointQ{{1, 2}}), PreconditionError);
}

TEST_CASE("homogeneity detection") {
    const auto f = parse_poly("x0^2*x1 + x2^3", default_var_names(3));
    CHECK(homogeneous_degree(f).degree == 3u);
    CHECK_FALSE(homogeneous_degree(parse_poly("x0^2 + x1", default_var_names(2))).degree.has_value());
    const auto z = homogeneous_degree(MultiPoly(2));
    CHECK(z.is_zero);
    CHECK_FALSE(z.degree.has_value());
}

TEST_CASE("product rule on random sparse polynomials") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_poly(rng, 3, 4, 5);
        const auto q = random_poly(rng, 3, 4, 5);
        const std::size_t i = rng.index(3);
        CHECK(differentiate(p * q, i) == differentiate(p, i) * q + p * differentiate(q, i));
    }
}

TEST_CASE("mixed partials commute") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 4, 5, 8);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(differentiate(differentiate(p, i), j) == differentiate(differentiate(p, j), i));
    }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    Rng rng(13);
    for (std::uint32_t d = 1; d <= 5; ++d) {
        const auto p = random_homogeneous(rng, 4, d, 7);
        if (p.is_zero()) continue;
        MultiPoly lhs(4);
        for (std::size_t i = 0; i < 4; ++i) lhs += MultiPoly::variable(4, i) * differentiate(p, i);
        CHECK(lhs == p * Rational(d));
    }
}

TEST_CASE("divides recovers the cofactor") {
    Rng rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_nonzero_poly(rng, 3, 3, 4);
        const auto q = random_poly(rng, 3, 3, 4);
        const auto back = divides(f, q * f);
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
    const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK_FALSE(divides(x, y).has_value());
    CHECK_THROWS_AS(divides(MultiPoly(2), x), PreconditionError);
    const auto dr = divide(x * x + y, x);
    CHECK(dr.quotient == x);
    CHECK(dr.remainder == y);
}

TEST_CASE("evaluate is a ring homomorphism") {
    Rng rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_poly(rng, 3, 4, 5);
        const auto q = random_poly(rng, 3, 4, 5);
        PointQ x{{rng.rational(5), rng.rational(5), rng.rational(5)}};
        CHECK(evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x));
        CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
    }
}

TEST_CASE("linear substitution composes with evaluation") {
    Rng rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_homogeneous(rng, 3, 3, 6);
        const auto t = random_invertible(rng, 3, 4);
        const auto pt = substitute_linear(p, t);
        PointQ y{{rng.rational(4), rng.rational(4), rng.rational(4)}};
        PointQ ty;
        for (std::size_t i = 0; i < 3; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < 3; ++j) s += t(i, j) * y.coords[j];
            ty.coords.push_back(s);
        }
        CHECK(evaluate(pt, y) == evaluate(p, ty));
    }
}

TEST_CASE("parser handles the worked quartic and round-trips through to_string") {
    const std::string text = "w0^2*w3^2 - 6*w0*w1*w2*w3 + 4*w0*w2^3 + 4*w1^3*w3 - 3*w1^2*w2^2";
    const auto vars = infer_variables(text);
    CHECK(vars == std::vector<std::string>{"w0", "w1", "w2", "w3"});
    const auto f = parse_poly(text, vars);
    CHECK(f.term_count() == 5);
    CHECK(to_string(f, vars) == text);
    CHECK(parse_poly(to_string(f, vars), vars) == f);
}

TEST_CASE("parser round-trip on random polynomials") {
    Rng rng(17);
    const auto vars = default_var_names(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 4, 5, 6);
        CHECK(parse_poly(to_string(p, vars), vars) == p);
    }
}

TEST_CASE("parser accepts parentheses, unary minus and rational coefficients") {
    const auto vars = default_var_names(2);
    const auto p = parse_poly("-(x0 + 1/2*x1)^2", vars);
    const auto q = parse_poly("-x0^2 - x0*x1 - 1/4*x1^2", vars);
    CHECK(p == q);
}

TEST_CASE("parser errors carry positions") {
    const auto vars = default_var_names(2);
    try {
        parse_poly("x0 + y", vars);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("unknown variable 'y'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("x0 +* x1", vars), ParseError);
    CHECK_THROWS_AS(parse_poly("(x0", vars), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 / 0", vars), ParseError);
}

TEST_CASE("variable inference") {
    CHECK(infer_variables("x0*x3") == std::vector<std::string>{"x0", "x1", "x2", "x3"});
    CHECK(infer_variables("a*b + c") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("points parse as rational coordinates") {
    const auto p = parse_point("0, 1, -1/2");
    CHECK(p == PointQ{{0, 1, make_rational(-1, 2)}});
    CHECK_THROWS_AS(parse_point("1,,2"), PreconditionError);
}

} // TEST_SUITE
