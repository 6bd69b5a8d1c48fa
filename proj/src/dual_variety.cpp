#include "symdeg/dual_variety.hpp"

#include "symdeg/errors.hpp"

namespace symdeg {

std::size_t dual_dimension(const MultiPoly& f, const GenericRankOptions& opts) {
    const auto info = homogeneous_degree(f);
    if (info.is_zero || !info.degree) throw PreconditionError("polynomial is not homogeneous");
    if (*info.degree < 3) throw PreconditionError("dual dimension needs degree >= 3");
    const auto rank = generic_rank_on_hypersurface(build_hessian(f), opts).certificate.rank;
    if (rank < 2)
        throw InternalError("generic Hessian rank on the hypersurface is " + std::to_string(rank) +
                            ", below 2; input is not a reduced irreducible hypersurface");
    return rank - 2;
}

namespace {

MultiPoly strip_y0(const Exponents& e, const Rational& c) {
    Exponents tail = e;
    tail[0] = 0;
    return MultiPoly::monomial(c, std::move(tail));
}

Exponents unit(std::size_t n, std::size_t i) {
    Exponents e(n, 0);
    e[i] = 1;
    return e;
}

// Replaces variable i of p by images[i] (all images share a ring).
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    const std::size_t n = images.front().num_vars();
    MultiPoly out(n);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(n, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * images[i].pow(e[i]);
        out += term;
    }
    return out;
}

MultiPoly homogeneous_part(const MultiPoly& p, std::uint32_t degree) {
    MultiPoly out(p.num_vars());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == degree) out.add_term(e, c);
    return out;
}

} // namespace

AdaptedForm adapt_coordinates(const MultiPoly& f, const PointQ& p) {
    const auto info = homogeneous_degree(f);
    if (info.is_zero || !info.degree) throw PreconditionError("polynomial is not homogeneous");
    const std::uint32_t d = *info.degree;
    if (d < 2) throw PreconditionError("degree must be at least 2");
    const std::size_t n = f.num_vars();
    if (n < 2) throw PreconditionError("need at least two variables");
    if (p.size() != n) throw PreconditionError("point dimension does not match the polynomial");
    if (p.is_zero()) throw PreconditionError("the zero vector is not a projective point");
    if (evaluate(f, p) != 0) throw PreconditionError("point is not on the hypersurface");

    std::vector<Rational> grad(n);
    for (std::size_t i = 0; i < n; ++i) grad[i] = evaluate(differentiate(f, i), p);
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
        if (grad[i] != 0) pivot = i;
    if (pivot == n) throw PreconditionError("point is singular on the hypersurface (gradient vanishes)");

    // p lies in ker df_p (Euler); drop the kernel vector e_i - (g_i/g_pivot) e_pivot
    // for the first i != pivot with p_i != 0, so the rest complements p.
    std::size_t dropped = n;
    for (std::size_t i = 0; i < n && dropped == n; ++i)
        if (i != pivot && p.coords[i] != 0) dropped = i;
    if (dropped == n) throw InternalError("point outside the kernel of its own differential");

    const std::size_t N = n - 1;
    RatMatrix T(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) T(i, 0) = p.coords[i];
    std::size_t col = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot || i == dropped) continue;
        T(i, col) = 1;
        T(pivot, col) = -grad[i] / grad[pivot];
        ++col;
    }
    T(pivot, N) = 1;

    AdaptedForm af;
    af.transform = T;
    af.degree = d;
    const MultiPoly fT = substitute_linear(f, T);
    Exponents lead(n, 0);
    lead[0] = d - 1;
    lead[N] = 1;
    af.scale = fT.coefficient(lead);
    if (af.scale != grad[pivot]) throw InternalError("adapted leading coefficient differs from df_p(T e_N)");
    af.f_adapted = fT * (1 / af.scale);

    af.g = MultiPoly(n);
    af.L = MultiPoly(n);
    af.higher = MultiPoly(n);
    af.h.assign(d + 1, MultiPoly(n));
    for (const auto& [e, c] : af.f_adapted.terms()) {
        const std::uint32_t order = d - e[0];
        switch (order) {
        case 0:
            throw InternalError("adapted form has a Y0^d term although f(p) = 0");
        case 1:
            if (e[N] != 1 || c != 1)
                throw InternalError("adapted form has a linear term other than Y0^(d-1) YN");
            break;
        case 2:
            if (e[N] == 0) {
                af.g += strip_y0(e, c);
            } else {
                Exponents l = e;
                l[0] = 0;
                --l[N];
                af.L.add_term(l, c);
            }
            break;
        default:
            af.h[order] += strip_y0(e, c);
            af.higher.add_term(e, c);
        }
    }
    verify_adapted_form(af);
    return af;
}

void verify_adapted_form(const AdaptedForm& af) {
    const std::size_t n = af.num_vars();
    const std::size_t N = n - 1;
    const std::uint32_t d = af.degree;
    PointQ e0;
    e0.coords.assign(n, Rational(0));
    e0.coords[0] = 1;

    if (evaluate(af.f_adapted, e0) != 0) throw InternalError("f_adapted(e0) != 0");
    for (std::size_t i = 0; i < n; ++i) {
        const Rational di = evaluate(differentiate(af.f_adapted, i), e0);
        if (i < N && di != 0) throw InternalError("tangent direction " + std::to_string(i) + " not in ker df");
        if (i == N && di != 1) throw InternalError("normalised transversal derivative is not 1");
    }
    if (determinant(af.transform) == 0) throw InternalError("adapted transform is singular");

    for (const auto& [e, c] : af.g.terms())
        if (total_degree(e) != 2 || e[0] != 0 || e[N] != 0) throw InternalError("g is not a quadric in Y1..Y{N-1}");
    for (const auto& [e, c] : af.L.terms())
        if (total_degree(e) != 1 || e[0] != 0) throw InternalError("L is not linear in Y1..YN");

    const MultiPoly y0 = MultiPoly::variable(n, 0);
    const MultiPoly yN = MultiPoly::variable(n, N);
    MultiPoly rebuilt = y0.pow(d - 1) * yN + y0.pow(d - 2) * (af.g + yN * af.L);
    for (std::uint32_t i = 3; i < af.h.size(); ++i) rebuilt += y0.pow(d - i) * af.h[i];
    if (rebuilt != af.f_adapted) throw InternalError("normal form does not reconstruct f_adapted");
    MultiPoly higher(n);
    for (std::uint32_t i = 3; i < af.h.size(); ++i) higher += y0.pow(d - i) * af.h[i];
    if (higher != af.higher) throw InternalError("higher-order part disagrees with h_i");
}

BlockDecomposition block_decompose(const AdaptedForm& af) {
    const std::size_t n = af.num_vars();
    const std::size_t N = n - 1;
    const std::size_t m = N - 1;
    const PointQ origin{std::vector<Rational>(n, Rational(0))};

    BlockDecomposition bd;
    bd.A = RatMatrix(m, m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            bd.A(i, j) = evaluate(differentiate(differentiate(af.g, i + 1), j + 1), origin);
    bd.B.resize(m);
    for (std::size_t i = 0; i < m; ++i) bd.B[i] = af.L.coefficient(unit(n, i + 1));
    bd.l_N = af.L.coefficient(unit(n, N));

    bd.assembled = RatMatrix(n, n, Rational(0));
    bd.assembled(0, N) = bd.assembled(N, 0) = Rational(af.degree - 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) bd.assembled(i + 1, j + 1) = bd.A(i, j);
        bd.assembled(i + 1, N) = bd.assembled(N, i + 1) = bd.B[i];
    }
    bd.assembled(N, N) = 2 * bd.l_N;

    PointQ e0 = origin;
    e0.coords[0] = 1;
    if (evaluate(build_hessian(af.f_adapted).hessian, e0) != bd.assembled)
        throw InternalError("block matrix differs from the Hessian of f_adapted at e0");
    if (rank_rational(bd.assembled) != 2 + rank_rational(bd.A))
        throw InternalError("rank of the block matrix is not 2 + rank A");
    return bd;
}

RatMatrix second_order_implicit(const AdaptedForm& af) {
    const std::size_t n = af.num_vars();
    const std::size_t N = n - 1;
    const std::size_t m = N - 1;
    if (m == 0) return RatMatrix(0, 0);

    // Ring of z_1..z_m; the affine chart Y0 = 1, Y_i = z_i, YN = x_N(z).
    auto substituted = [&](const MultiPoly& xN) {
        std::vector<MultiPoly> images;
        images.push_back(MultiPoly::constant(m, 1));
        for (std::size_t i = 0; i < m; ++i) images.push_back(MultiPoly::variable(m, i));
        images.push_back(xN);
        return compose(af.f_adapted, images);
    };

    const MultiPoly base = substituted(MultiPoly(m));
    for (const auto& [e, c] : base.terms())
        if (total_degree(e) < 2) throw InternalError("f_adapted(1, z, 0) has terms of order < 2");
    const MultiPoly base2 = homogeneous_part(base, 2);

    // Unknowns u_ij (i <= j) with x_N = sum u_ij z_i z_j. The order-2 part of
    // f(1, z, x_N(z)) is affine in u; column (i,j) is its response to z_i z_j.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) pairs.emplace_back(i, j);
    const std::size_t k = pairs.size();

    RatMatrix system(k, k, Rational(0));
    std::vector<Rational> rhs(k);
    auto monomial_of = [&](std::size_t i, std::size_t j) {
        Exponents e(m, 0);
        ++e[i];
        ++e[j];
        return e;
    };
    for (std::size_t col = 0; col < k; ++col) {
        const auto [i, j] = pairs[col];
        const MultiPoly response =
            homogeneous_part(substituted(MultiPoly::monomial(1, monomial_of(i, j))), 2) - base2;
        for (std::size_t row = 0; row < k; ++row) {
            const auto [a, b] = pairs[row];
            system(row, col) = response.coefficient(monomial_of(a, b));
        }
    }
    for (std::size_t row = 0; row < k; ++row) {
        const auto [a, b] = pairs[row];
        rhs[row] = -base2.coefficient(monomial_of(a, b));
    }
    const auto u = solve(system, rhs);
    if (!u) throw InternalError("implicit function nondegeneracy failure: order-2 system is singular");

    RatMatrix q(m, m, Rational(0));
    for (std::size_t idx = 0; idx < k; ++idx) {
        const auto [i, j] = pairs[idx];
        if (i == j) {
            q(i, i) = (*u)[idx];
        } else {
            q(i, j) = q(j, i) = (*u)[idx] / 2;
        }
    }

    const auto bd = block_decompose(af);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (q(i, j) != -bd.A(i, j) / 2) throw InternalError("implicit quadratic part differs from -A/2");
    return q;
}

RankRelationReport rank_relation_check(const MultiPoly& f, const PointQ& p) {
    const auto info = homogeneous_degree(f);
    if (info.is_zero || !info.degree) throw PreconditionError("polynomial is not homogeneous");
    if (*info.degree < 3) throw PreconditionError("rank relation needs degree >= 3");

    RankRelationReport report;
    report.rank_Q = rank_at(build_hessian(f), p);
    const auto af = adapt_coordinates(f, p);
    const auto bd = block_decompose(af);
    report.rank_A = rank_rational(bd.A);
    report.holds = report.rank_Q == 2 + report.rank_A;
    report.transform = af.transform;
    return report;
}

} // namespace symdeg
