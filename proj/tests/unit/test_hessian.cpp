#include "support/test_support.hpp"
#include "symdeg/errors.hpp"
#include "symdeg/hessian.hpp"
#include "symdeg/poly_parser.hpp"

#include <doctest.h>

using namespace symdeg;
using namespace symdeg::testing;

namespace {

const std::string kQuartic = "w0^2*w3^2 - 6*w0*w1*w2*w3 + 4*w0*w2^3 + 4*w1^3*w3 - 3*w1^2*w2^2";

MultiPoly quartic() { return parse_poly(kQuartic, infer_variables(kQuartic)); }

} // namespace

TEST_SUITE("hessian_form") {

TEST_CASE("Hessian of the worked quartic matches the frozen oracle entries") {
    const auto vars = infer_variables(kQuartic);
    const auto h = build_hessian(quartic());
    CHECK(h.degree == 4);
    CHECK(h.ambient_dim == 3);
    CHECK(h.hessian(0, 0) == parse_poly("2*w3^2", vars));
    CHECK(h.hessian(0, 2) == parse_poly("-6*w1*w3 + 12*w2^2", vars));
    CHECK(h.hessian(1, 1) == parse_poly("24*w1*w3 - 6*w2^2", vars));
    CHECK(h.hessian(1, 2) == parse_poly("-6*w0*w3 - 12*w1*w2", vars));
    CHECK(h.hessian(2, 2) == parse_poly("24*w0*w2 - 6*w1^2", vars));
    CHECK(h.hessian(3, 3) == parse_poly("2*w0^2", vars));
}

TEST_CASE("determinant of the quartic's Hessian is 432 F^2") {
    const auto f = quartic();
    const auto det = determinant(build_hessian(f).hessian);
    CHECK(det == f * f * Rational(432));
    CHECK(det.term_count() == 13);
}

TEST_CASE("ranks at the coordinate points") {
    const auto h = build_hessian(quartic());
    CHECK(rank_at(h, parse_point("1,0,0,0")) == 1);
    CHECK(rank_at(h, parse_point("0,1,0,0")) == 3);
    CHECK(rank_at(h, parse_point("0,0,1,0")) == 3);
    CHECK(rank_at(h, parse_point("0,0,0,1")) == 1);
}

TEST_CASE("generic ranks of the worked quartic") {
    const auto h = build_hessian(quartic());
    const auto ambient = generic_rank_ambient(h);
    CHECK(ambient.rank == 4);
    const auto on = generic_rank_on_hypersurface(h);
    CHECK(on.certificate.rank == 3);
    REQUIRE(on.determinant_quotient.has_value());
    CHECK(*on.determinant_quotient == quartic() * Rational(432));
    REQUIRE(on.certificate.witness_remainder.has_value());
    CHECK_FALSE(on.certificate.witness_remainder->is_zero());
    CHECK_FALSE(on.suspect_not_reduced);
}

TEST_CASE("Fermat cubic has a nondegenerate Hessian along X") {
    const auto vars = default_var_names(4);
    const auto f = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", vars);
    const auto h = build_hessian(f);
    CHECK(determinant(h.hessian) == parse_poly("1296*x0*x1*x2*x3", vars));
    CHECK(generic_rank_on_hypersurface(h).certificate.rank == 4);
}

TEST_CASE("input validation") {
    const auto vars = default_var_names(3);
    CHECK_THROWS_WITH_AS(build_hessian(parse_poly("x0^2 + x1", vars)), doctest::Contains("not homogeneous"),
                         PreconditionError);
    CHECK_THROWS_AS(build_hessian(MultiPoly(3)), PreconditionError);
    CHECK_THROWS_AS(build_hessian(parse_poly("x0 + x1", vars)), PreconditionError);
    const auto h = build_hessian(parse_poly("x0*x1*x2", vars));
    CHECK_THROWS_AS(rank_at(h, parse_point("0,0,0")), PreconditionError);
    CHECK_THROWS_AS(rank_at(h, parse_point("1,0")), PreconditionError);
}

TEST_CASE("Hessian is symmetric and Euler-consistent") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint32_t d = rng.uniform(2, 5);
        const auto f = random_homogeneous(rng, 4, d, 6);
        if (f.is_zero()) continue;
        const auto h = build_hessian(f);
        CHECK(h.hessian == h.hessian.transposed());
        for (std::size_t i = 0; i < 4; ++i) {
            MultiPoly row(4);
            for (std::size_t j = 0; j < 4; ++j) row += h.hessian(i, j) * MultiPoly::variable(4, j);
            CHECK(row == differentiate(f, i) * Rational(d - 1));
        }
    }
}

TEST_CASE("rank is invariant under rescaling the point") {
    Rng rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_homogeneous(rng, 4, rng.uniform(2, 4), 5);
        if (f.is_zero()) continue;
        const auto h = build_hessian(f);
        const auto p = random_point(rng, 4, 3);
        PointQ scaled = p;
        const Rational lambda = make_rational(rng.nonzero(-5, 5), rng.uniform(1, 5));
        for (auto& c : scaled.coords) c *= lambda;
        CHECK(rank_at(h, scaled) == rank_at(h, p));
    }
}

TEST_CASE("rank is invariant under a linear change of coordinates") {
    Rng rng(33);
    for (int trial = 0; trial < 15; ++trial) {
        const auto f = random_homogeneous(rng, 4, 3, 6);
        if (f.is_zero()) continue;
        const auto t = random_invertible(rng, 4, 3);
        const auto tinv = *inverse(t);
        const auto p = random_point(rng, 4, 3);
        PointQ q;
        for (std::size_t i = 0; i < 4; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += tinv(i, j) * p.coords[j];
            q.coords.push_back(s);
        }
        CHECK(rank_at(build_hessian(substitute_linear(f, t)), q) == rank_at(build_hessian(f), p));
    }
}

TEST_CASE("generic rank bounds and certified minors") {
    Rng rng(34);
    for (int trial = 0; trial < 8; ++trial) {
        auto c = random_form_through_points(rng, 4, 3, 3, 6);
        if (!c) continue;
        const auto h = build_hessian(c->f);
        const auto ambient = generic_rank_ambient(h, {static_cast<std::uint64_t>(trial), 4});
        const auto on = generic_rank_on_hypersurface(h, {static_cast<std::uint64_t>(trial), 4});
        CHECK(on.certificate.rank <= ambient.rank);
        CHECK(ambient.rank <= 4);
        if (on.certificate.rank >= 4) continue;
        const auto minors = minor_dets(h.hessian, on.certificate.rank + 1);
        for (const auto& p : c->points)
            for (const auto& m : minors) CHECK(evaluate(m.det, p) == 0);
    }
}

TEST_CASE("non-reduced input is flagged") {
    const auto vars = default_var_names(3);
    const auto f = parse_poly("x0^2*x1 + x1^2*x2 + x2^3", vars);
    CHECK(likely_reduced(f));
    CHECK_FALSE(likely_reduced(f * f));
    CHECK(generic_rank_on_hypersurface(build_hessian(f * f)).suspect_not_reduced);
}

TEST_CASE("stratification buckets the coordinate points") {
    const auto h = build_hessian(quartic());
    const auto s = stratify(h, {parse_point("1,0,0,0"), parse_point("0,1,0,0"), parse_point("0,0,1,0"),
                                parse_point("0,0,0,1")});
    REQUIRE(s.buckets.size() == 2);
    CHECK(s.buckets.at(1).size() == 2);
    CHECK(s.buckets.at(3).size() == 2);
}

TEST_CASE("equivariance under the diagonal torus of the quartic") {
    // g = diag(1, t, t^2, t^3) scales F by t^6, so F(gx) = c(g^{-1}) F(x) with c(g^{-1}) = t^6.
    const auto h = build_hessian(quartic());
    const Rational t = 2;
    RatMatrix g(4, 4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) g(i, i) = pow(t, static_cast<std::uint32_t>(i));
    Rng rng(35);
    std::vector<EquivarianceSample> samples;
    for (int k = 0; k < 5; ++k) samples.push_back({random_point(rng, 4, 3), random_point(rng, 4, 3), random_point(rng, 4, 3)});
    CHECK(equivariance_check(h, g, pow(t, 6), samples).all_passed());
    CHECK_THROWS_AS(equivariance_check(h, g, pow(t, 5), samples), PreconditionError);
    CHECK_THROWS_AS(equivariance_check(h, RatMatrix(4, 4, Rational(0)), 1, samples), PreconditionError);
}

TEST_CASE("sampler is reproducible") {
    PointSampler a(7), b(7);
    CHECK(a.next(4) == b.next(4));
}

} // TEST_SUITE
