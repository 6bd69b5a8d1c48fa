#pragma once

#include "symdeg/linalg.hpp"
#include "symdeg/quadric_homology.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symdeg {

/// d <= N - r for a constant-rank-r form on a rank N bundle. Requires 0 < r <= N.
long main_bound(long N, long r);

enum class Relation { eq, ne, le, lt, ge, gt };

std::string to_string(Relation rel);
std::optional<Relation> parse_relation(const std::string& text);
bool holds(long lhs, Relation rel, long rhs);

struct BoundStep {
    std::string statement;
    long lhs = 0;
    Relation relation = Relation::eq;
    long rhs = 0;
    bool ok = false;
};

struct BoundReport {
    long N = 0, r = 0, d = 0, n = 0;
    std::vector<BoundStep> steps;
    std::string verdict;

    bool consistent() const;
};

/// Replays the homological proof of d <= N - r on the given Betti model:
///   1. H_j(P(W) \ Q) = 0 above N + d - 1 (affine complement),
///   2. j^* not surjective in degree 2n + 2d (dimension gap or 2-torsion),
///   3. hence 2n + 2d - 1 <= N + d - 1,
///   4. (odd r) torsion-free top degree excludes equality.
/// A failing step yields the verdict that X_{r-1} must be nonempty.
/// Throws PreconditionError for 0 >= r, r > N, d < 0 or a Betti vector of
/// the wrong dimension.
BoundReport replay_main_theorem(long N, long r, long d, const BettiVector& betti);

/// Verdict text used when every step holds.
inline constexpr const char* kConsistentVerdict = "d <= N-r consistent";

/// "contradiction located at step k: hypotheses contradict: X_{r-1} must be nonempty"
std::string contradiction_verdict(std::size_t step, long r);

struct CorollaryThreshold {
    std::int64_t threshold = 0;      // C(N-r+1, 2)
    std::int64_t telescoped_sum = 0; // sum_{s=r+1}^{N} (N - s + 1)
    bool identity_holds = false;
};

/// Requires 0 <= r < N.
CorollaryThreshold corollary_threshold(std::int64_t N, std::int64_t r);

/// Projective dimension of the locus of symmetric N x N matrices of rank <= r.
/// Requires 1 <= r <= N.
std::int64_t sym_stratum_dim(std::int64_t N, std::int64_t r);

std::int64_t binomial2(std::int64_t m);

/// v v^T, a rank-1 symmetric matrix; throws PreconditionError for v == 0.
RatMatrix veronese_witness(const PointQ& v);

} // namespace symdeg
