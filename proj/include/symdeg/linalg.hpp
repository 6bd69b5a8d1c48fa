#pragma once

#include "symdeg/matrix.hpp"
#include "symdeg/multipoly.hpp"
#include "symdeg/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace symdeg {

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<MultiPoly>;

RatMatrix rat_identity(std::size_t n);
IntMatrix int_identity(std::size_t n);
PolyMatrix poly_matrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

/// Entrywise evaluation of a polynomial matrix at a point.
RatMatrix evaluate(const PolyMatrix& m, const PointQ& pt);

/// Rank over Q. Rows are scaled to integers, then reduced by Bareiss
/// fraction-free elimination; the pivot in each column is the first
/// nonzero entry at or below the current row.
std::size_t rank_rational(const RatMatrix& m);

/// Rank of an integer matrix by the same fraction-free elimination.
std::size_t rank_integer(const IntMatrix& m);

/// Exact determinant; throws PreconditionError for non-square input.
Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Determinant of a square polynomial matrix by Laplace expansion over
/// column subsets (memoised), so no polynomial division is needed.
MultiPoly determinant(const PolyMatrix& m);

/// Solves a x = b for square invertible a; absent when a is singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

/// Inverse of a square matrix; absent when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

struct Minor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    MultiPoly det;
};

/// Visitor return value: true to keep streaming, false to stop.
using MinorVisitor = std::function<bool(const Minor&)>;

/// Streams every k x k minor of m. Row sets run in colexicographic order
/// and, for each row set, column sets in colexicographic order.
/// Throws PreconditionError when k > min(rows, cols). k == 0 yields the
/// single empty minor with determinant 1.
void for_each_minor(const PolyMatrix& m, std::size_t k, const MinorVisitor& visit);

/// All k x k minors, materialised in streaming order.
std::vector<Minor> minor_dets(const PolyMatrix& m, std::size_t k);

/// k-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k);

struct ConformalFactor {
    Rational tau;
    /// det(a) / tau^(r/2); only defined for even r.
    std::optional<int> component_sign;
};

/// For a with a^T J a = tau J (J the anti-diagonal Gram matrix of the
/// standard split form, (e_i, e_{r+1-j}) = delta_ij) returns tau and, for
/// even r, the component sign. Verifies det(a)^2 == tau^r.
/// Absent when a is not conformal or tau == 0. Throws for non-square a
/// or a size different from r.
std::optional<ConformalFactor> conformal_factor(const RatMatrix& a, std::size_t r);

} // namespace symdeg
