#pragma once

#include "symdeg/linalg.hpp"
#include "symdeg/multipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace symdeg {

/// The quadratic form x -> (d^2 F / dX_i dX_j)(x) of a homogeneous F.
struct HessianForm {
    MultiPoly f;
    PolyMatrix hessian;         // (N+1) x (N+1), entries of degree d-2 or zero
    std::uint32_t degree = 0;   // d
    std::size_t ambient_dim = 0; // N, so f lives on P^N

    std::size_t size() const { return hessian.rows(); }
};

/// Throws PreconditionError for zero, inhomogeneous or degree < 2 input.
HessianForm build_hessian(const MultiPoly& f);

/// Rank of the Hessian at a lift of p. Throws PreconditionError at p == 0.
std::size_t rank_at(const HessianForm& h, const PointQ& p);

/// Seeded sampler for generic-rank screening: integer coordinates drawn
/// uniformly from [-bound, bound].
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed, std::int64_t bound = 10000) : rng_(seed), dist_(-bound, bound) {}
    PointQ next(std::size_t n);

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<std::int64_t> dist_;
};

struct GenericRankOptions {
    std::uint64_t seed = 0;
    std::size_t sample_budget = 4;
};

struct GenericRankCertificate {
    std::size_t rank = 0;
    /// A k x k minor that is a nonzero polynomial (ambient) or is not
    /// divisible by f (on the hypersurface); k = rank.
    Minor witness;
    /// Remainder of witness.det divided by f (hypersurface case only).
    std::optional<MultiPoly> witness_remainder;
    /// Number of (k+1) x (k+1) minors checked to vanish (ambient) or to be
    /// divisible by f (hypersurface).
    std::size_t larger_minors_checked = 0;
    /// Rank guessed from random evaluations before certification.
    std::size_t sampled_rank = 0;
};

/// Largest k with a nonzero k x k minor of the Hessian.
GenericRankCertificate generic_rank_ambient(const HessianForm& h, const GenericRankOptions& opts = {});

struct HypersurfaceRank {
    GenericRankCertificate certificate;
    /// det(Hessian) / f, when the full determinant was examined and found divisible.
    std::optional<MultiPoly> determinant_quotient;
    /// Set when a random line meets {f = 0} with a repeated root, i.e. f
    /// is very likely not reduced and the answer describes the wrong variety.
    bool suspect_not_reduced = false;
};

/// Largest k with a k x k minor not divisible by f. Irreducibility of f
/// is a caller-asserted precondition and is not checked.
HypersurfaceRank generic_rank_on_hypersurface(const HessianForm& h, const GenericRankOptions& opts = {});

/// Randomised reducedness screen: restricts f to a seeded random line and
/// tests the univariate restriction for a repeated factor.
bool likely_reduced(const MultiPoly& f, std::uint64_t seed = 0);

struct RankStratification {
    std::map<std::size_t, std::vector<PointQ>> buckets;
};

RankStratification stratify(const HessianForm& h, const std::vector<PointQ>& points);

struct EquivarianceSample {
    PointQ x, v, w;
};

struct EquivarianceReport {
    std::vector<bool> passed;
    bool all_passed() const;
};

/// Checks Q_{gx}(v,w) == c(g^-1) Q_x(g^-1 v, g^-1 w) at each sample.
/// Verifies first that F(g x) == c(g^-1) F(x) as polynomials, i.e. that
/// F is a weight vector for g under (g.F)(x) = F(g^-1 x).
/// Throws PreconditionError for singular g or when F is not a weight vector.
EquivarianceReport equivariance_check(const HessianForm& h, const RatMatrix& g,
                                      const Rational& c_of_g_inv,
                                      const std::vector<EquivarianceSample>& samples);

/// v^T M w
Rational bilinear(const RatMatrix& m, const PointQ& v, const PointQ& w);

} // namespace symdeg
