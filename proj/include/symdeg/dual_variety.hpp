#pragma once

#include "symdeg/hessian.hpp"
#include "symdeg/linalg.hpp"
#include "symdeg/multipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symdeg {

/// dim X* for the hypersurface X = {f = 0}: generic Hessian rank on X minus 2.
/// f must be homogeneous of degree >= 3 and is assumed irreducible.
/// Throws PreconditionError for degree < 3, InternalError when the generic
/// rank on X is below 2.
std::size_t dual_dimension(const MultiPoly& f, const GenericRankOptions& opts = {});

/// f in coordinates Y = T^{-1} X adapted to a smooth point p of X:
///
///   f o T / c = Y0^(d-1) YN + Y0^(d-2) (g(Y1..Y{N-1}) + YN L(Y1..YN))
///               + sum_{i>=3} Y0^(d-i) h_i(Y1..YN)
///
/// with p = T e0 and T e1..T e{N-1} spanning the kernel of df_p.
struct AdaptedForm {
    RatMatrix transform;   // T, columns: p, kernel complement, transversal
    MultiPoly f_adapted;   // f o T / c, so the Y0^(d-1) YN coefficient is 1
    std::uint32_t degree = 0;
    Rational scale;        // c, the raw Y0^(d-1) YN coefficient of f o T
    MultiPoly g;           // quadratic in Y1..Y{N-1}
    MultiPoly L;           // linear in Y1..YN
    std::vector<MultiPoly> h; // h[i] for i >= 3 (h[0..2] unused and zero)
    MultiPoly higher;      // sum_{i>=3} Y0^(d-i) h_i

    std::size_t num_vars() const { return f_adapted.num_vars(); }
};

/// Throws PreconditionError when p is not on X or is a singular point.
AdaptedForm adapt_coordinates(const MultiPoly& f, const PointQ& p);

/// Re-checks the structural identities of an adapted form; throws
/// InternalError with a description of the first violation.
void verify_adapted_form(const AdaptedForm& af);

struct BlockDecomposition {
    RatMatrix A;          // Hessian of g, (N-1) x (N-1)
    std::vector<Rational> B; // l_1..l_{N-1}
    Rational l_N;
    RatMatrix assembled;  // [[0, 0, d-1], [0, A, B^T], [d-1, B, 2 l_N]]
};

/// Builds the blocks from g and L and checks that the assembled matrix is
/// the Hessian of f_adapted at e0, entrywise (InternalError otherwise).
BlockDecomposition block_decompose(const AdaptedForm& af);

/// Quadratic Taylor coefficients q of the implicit solution
/// x_N(z) = sum q_ij z_i z_j + ... of f_adapted(1, z, x_N) = 0, found by
/// solving the order-2 linear system. Asserts q == -A/2.
RatMatrix second_order_implicit(const AdaptedForm& af);

struct RankRelationReport {
    std::size_t rank_Q = 0;
    std::size_t rank_A = 0;
    bool holds = false;
    RatMatrix transform;
};

/// rank of the Hessian of f at p against 2 + rank A from the adapted blocks.
RankRelationReport rank_relation_check(const MultiPoly& f, const PointQ& p);

} // namespace symdeg
