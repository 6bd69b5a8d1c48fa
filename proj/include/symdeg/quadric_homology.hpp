#pragma once

#include "symdeg/linalg.hpp"
#include "symdeg/smith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symdeg {

enum class Parity { even, odd };

/// Integral cohomology of the smooth quadric Q0 of isotropic lines in C^r,
/// r = 2n or 2n+1. Free, concentrated in even degrees, with Z-basis
/// {1, h, ..., h^(n-1), e, he, ..., h^(n-1)e}.
struct QuadricFiberData {
    std::size_t r = 0;
    std::size_t n = 0;
    Parity parity = Parity::even;
    std::size_t dim = 0; // complex dimension r - 2
    /// basis_labels[i] lists the basis elements of H^{2i}(Q0).
    std::vector<std::vector<std::string>> basis_labels;
    /// "h^(n-1) = e + f", "h*e = h*f" (even) or "h^n = 2e" (odd).
    std::vector<std::string> relations;
};

/// Throws PreconditionError for r < 2.
QuadricFiberData quadric_fiber_data(std::size_t r);

/// rank H^{2i}(Q0) for the quadric in C^r; zero outside 0 <= i <= r - 2.
std::size_t quadric_betti(std::size_t r, std::size_t i);

/// Rational Betti numbers b_0..b_{2d} of a d-dimensional base X.
class BettiVector {
public:
    /// Length must be odd (2d + 1) and b[2d] >= 1.
    explicit BettiVector(std::vector<std::size_t> b);

    /// [0, ..., 0, 1] of length 2d + 1.
    static BettiVector top_class_only(std::size_t d);

    std::size_t dim() const { return (b_.size() - 1) / 2; }
    /// b_i, zero outside 0..2d (negative indices included).
    std::size_t at(long i) const;
    const std::vector<std::size_t>& values() const { return b_; }

private:
    std::vector<std::size_t> b_;
};

/// Middle-degree Gysin map j_x^*: H_{2n}(P^{r-1}) -> H_{2n-2}(Q_x) on a fiber.
struct FiberGysin {
    std::size_t r = 0;
    std::size_t n = 0;
    std::string relation;
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    IntMatrix matrix;                  // target_rank x source_rank
    FGAbelianGroup cokernel;
    /// Index of the image (odd r): the torsion order of the cokernel.
    std::optional<Integer> image_index;
    bool rank_deficient = false;       // even r: source rank < target rank
};

/// Throws PreconditionError for r < 3.
FiberGysin fiber_gysin_index(std::size_t r);

/// dim H_k(Q; Q) for a quadric bundle of rank r over a base with Betti numbers b.
std::size_t lh_quadric_dim(const BettiVector& b, std::size_t r, long k);

/// dim H_k(P(V); Q) for a projective bundle with fiber P^m.
std::size_t lh_projective_dim(const BettiVector& b, std::size_t m, long k);

struct NonsurjectivityCertificate {
    std::size_t r = 0, n = 0, d = 0;
    std::size_t dim_source = 0; // H_{2d+2n}(P(V))
    std::size_t dim_target = 0; // H_{2d+2n-2}(Q)
    bool surjection_impossible = false;
};

/// Even r only; odd r throws PreconditionError (use torsion_certificate).
/// b must have dimension d.
NonsurjectivityCertificate nonsurjectivity_certificate(const BettiVector& b, std::size_t r, std::size_t d);

/// Components of a class under the Leray-Hirsch isomorphism: coords[i] is
/// the coordinate vector of the d_i component, i = 0..2n-1 (i < n: p_*(h^i cap a),
/// i >= n: p_*(h^(i-n) e cap a)).
struct PhiCoordinates {
    std::vector<std::vector<Integer>> coords;
};

/// Checks that slot lengths match b at total homological degree k for an
/// odd-rank (r = 2n + 1) quadric bundle; throws PreconditionError otherwise.
void validate_phi_coordinates(const PhiCoordinates& a, std::size_t n, const BettiVector& b, long k);

struct PhiTorsionReplay {
    /// pi_*(beta_q cap b) for q = 1..2n, stored at index q - 1.
    PhiCoordinates b;
    /// Phi(2 j^* b), slot by slot.
    PhiCoordinates image;
    bool check = false;
};

/// Chooses b with pi_*(beta_q cap b) = p_*(h^(q-1) cap a) for q <= n and
/// 2 p_*(h^(q-1) cap a) for q > n, applies the coefficient rule
/// Phi(2 j^* b) = 4 (slots q <= n) and 2 (slots q > n), and compares with 4a.
PhiTorsionReplay phi_torsion_replay(const PhiCoordinates& a, std::size_t n);

struct TorsionCertificate {
    std::size_t r = 0, n = 0, d = 0;
    FiberGysin bottom;                 // j_x^*, multiplication by 2
    SmithForm bottom_snf;
    IntMatrix left_vertical;           // H_{2n+2d}(P(V)) -> H_{2n}(P(V_x))
    IntMatrix right_vertical;          // H_{2n+2d-2}(Q) -> H_{2n-2}(Q_x)
    bool verticals_surjective = false;
    bool phi_check = false;            // 4a in Im j^* for the basis classes a
    FGAbelianGroup quotient_image;     // image of H/Im j^* in the fiber cokernel
    std::size_t element_order = 0;     // order of the exhibited class
    std::string statement;
};

/// Odd r only; even r throws PreconditionError.
TorsionCertificate torsion_certificate(const BettiVector& b, std::size_t r, std::size_t d);

} // namespace symdeg
