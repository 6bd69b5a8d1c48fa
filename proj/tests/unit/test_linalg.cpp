#include "support/test_support.hpp"
#include "symdeg/errors.hpp"
#include "symdeg/poly_parser.hpp"
#include "symdeg/smith.hpp"

#include <doctest.h>

using namespace symdeg;
using namespace symdeg::testing;

TEST_SUITE("linalg_exact") {

TEST_CASE("rank of small examples") {
    CHECK(rank_rational(RatMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank_rational(RatMatrix(3, 4, Rational(0))) == 0);
    CHECK(rank_rational(rat_identity(5)) == 5);
    CHECK(rank_integer(IntMatrix{{2, 4, 6}, {1, 2, 3}, {0, 0, 1}}) == 2);
}

TEST_CASE("rank agrees with naive elimination") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_rat_matrix(rng, rng.uniform(1, 7), rng.uniform(1, 7), 6);
        CHECK(rank_rational(m) == naive_rank(m));
    }
}

TEST_CASE("rank equals the nonzero count of the SNF of an integer clearing") {
    Rng rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        const auto m = random_rat_matrix(rng, rng.uniform(1, 6), rng.uniform(1, 6), 5);
        const auto diag = smith_normal_form(integer_clearing(m)).diagonal();
        const auto nonzero = std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; });
        CHECK(rank_rational(m) == static_cast<std::size_t>(nonzero));
    }
}

TEST_CASE("determinants agree with Leibniz expansion") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng.uniform(1, 5);
        const auto m = random_rat_matrix(rng, n, n, 5);
        CHECK(determinant(m) == leibniz_det(m, Rational(0), Rational(1)));
        const auto im = random_int_matrix(rng, n, n, 9);
        CHECK(determinant(im) == leibniz_det(im, Integer(0), Integer(1)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = rng.uniform(1, 4);
        PolyMatrix m = poly_matrix(n, n, 3);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_homogeneous(rng, 3, 1, 2, 3);
        CHECK(determinant(m) == leibniz_det(m, MultiPoly(3), MultiPoly::constant(3, 1)));
    }
    CHECK_THROWS_AS(determinant(RatMatrix(2, 3, Rational(0))), PreconditionError);
}

TEST_CASE("solve and inverse") {
    Rng rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = rng.uniform(1, 6);
        const auto a = random_invertible(rng, n, 5);
        const auto inv = inverse(a);
        REQUIRE(inv.has_value());
        CHECK(a * *inv == rat_identity(n));
        std::vector<Rational> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(rng.rational(5));
        const auto x = solve(a, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) s += a(i, j) * (*x)[j];
            CHECK(s == b[i]);
        }
    }
    CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("minors stream in colex order") {
    CHECK(colex_subsets(4, 2) ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
    const auto vars = default_var_names(2);
    PolyMatrix m = poly_matrix(2, 3, 2);
    m(0, 0) = parse_poly("x0", vars);
    m(1, 1) = parse_poly("x1", vars);
    m(0, 2) = parse_poly("1", vars);
    const auto minors = minor_dets(m, 2);
    REQUIRE(minors.size() == 3);
    CHECK(minors[0].det == parse_poly("x0*x1", vars));
    CHECK(minors[0].cols == std::vector<std::size_t>{0, 1});
    CHECK(minors[1].cols == std::vector<std::size_t>{0, 2});
    CHECK(minors[2].det == parse_poly("-x1", vars));
    CHECK_THROWS_AS(minor_dets(m, 3), PreconditionError);
}

TEST_CASE("minors above the rank vanish at the point") {
    Rng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix m = poly_matrix(4, 4, 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) m(i, j) = m(j, i) = random_homogeneous(rng, 3, 2, 2, 3);
        const auto p = random_point(rng, 3, 2);
        const auto rank = rank_rational(evaluate(m, p));
        if (rank == 4) continue;
        for (const auto& minor : minor_dets(m, rank + 1)) CHECK(evaluate(minor.det, p) == 0);
    }
}

namespace {

RatMatrix antidiagonal(std::size_t r) {
    RatMatrix j(r, r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) j(i, r - 1 - i) = 1;
    return j;
}

// Builds a conformal matrix a = s * (J-orthogonal) from a product of
// elementary J-symmetric pieces.
RatMatrix random_conformal(Rng& rng, std::size_t r) {
    const auto j = antidiagonal(r);
    RatMatrix a = rat_identity(r);
    for (int k = 0; k < 3; ++k) {
        // Cayley transform of a J-skew matrix S (S^T J + J S = 0) is J-orthogonal.
        RatMatrix s(r, r, Rational(0));
        RatMatrix x(r, r, Rational(0));
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = p + 1; q < r; ++q) x(p, q) = rng.uniform(-2, 2), x(q, p) = -x(p, q);
        s = j * x; // J^{-1} = J, X skew gives J-skew S
        RatMatrix plus = rat_identity(r), minus = rat_identity(r);
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = 0; q < r; ++q) plus(p, q) += s(p, q), minus(p, q) -= s(p, q);
        const auto inv = inverse(minus);
        if (!inv) continue;
        a = a * (plus * *inv);
    }
    const Rational scale = rng.nonzero(-3, 3);
    for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) a(p, q) *= scale;
    return a;
}

} // namespace

TEST_CASE("conformal factor of scalar multiples of J-orthogonal matrices") {
    const auto c = conformal_factor(rat_identity(3), 3);
    REQUIRE(c.has_value());
    CHECK(c->tau == 1);
    CHECK_FALSE(c->component_sign.has_value());
    CHECK_FALSE(conformal_factor(RatMatrix{{1, 1}, {0, 1}}, 2).has_value());
    CHECK_THROWS_AS(conformal_factor(rat_identity(2), 3), PreconditionError);
    const auto swap = conformal_factor(RatMatrix{{0, 1}, {1, 0}}, 2);
    REQUIRE(swap.has_value());
    CHECK(swap->tau == 1);
    CHECK(swap->component_sign == -1);
}

TEST_CASE("conformal factor is multiplicative") {
    Rng rng(26);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = rng.uniform(2, 5);
        const auto a = random_conformal(rng, r);
        const auto b = random_conformal(rng, r);
        const auto ca = conformal_factor(a, r), cb = conformal_factor(b, r), cab = conformal_factor(a * b, r);
        REQUIRE(ca.has_value());
        REQUIRE(cb.has_value());
        REQUIRE(cab.has_value());
        CHECK(cab->tau == ca->tau * cb->tau);
        if (r % 2 == 0) CHECK(*cab->component_sign == *ca->component_sign * *cb->component_sign);
    }
}

} // TEST_SUITE

TEST_SUITE("smith") {

TEST_CASE("Smith form of a known matrix") {
    const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto s = smith_normal_form(m);
    CHECK(verify_smith_form(m, s));
    CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});
    CHECK(to_string(cokernel(m)) == "Z/2 + Z/6 + Z/12");
}

TEST_CASE("cokernel of multiplication by 2 is Z/2") {
    const auto g = cokernel(IntMatrix{{2}});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Integer>{2});
    CHECK(g.has_two_torsion());
    CHECK(to_string(cokernel(IntMatrix{{1}, {0}})) == "Z");
    CHECK(cokernel(IntMatrix{{1, 0}, {0, -1}}).is_trivial());
    CHECK(to_string(cokernel(IntMatrix(2, 1, Integer(0)))) == "Z^2");
}

TEST_CASE("Smith form verifies on random matrices") {
    Rng rng(27);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_int_matrix(rng, rng.uniform(1, 8), rng.uniform(1, 8), 9);
        const auto s = smith_normal_form(m);
        CHECK(verify_smith_form(m, s));
        CHECK(rank_integer(m) == rank_integer(s.D));
    }
}

TEST_CASE("group validation") {
    CHECK_THROWS(validate(FGAbelianGroup{0, {Integer(1)}}));
    CHECK_THROWS(validate(FGAbelianGroup{0, {Integer(4), Integer(2)}}));
    CHECK_NOTHROW(validate(FGAbelianGroup{1, {Integer(2), Integer(4)}}));
}

} // TEST_SUITE
