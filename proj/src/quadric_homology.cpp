#include "symdeg/quadric_homology.hpp"

#include "symdeg/errors.hpp"

#include <algorithm>

namespace symdeg {

namespace {

std::string power_label(std::size_t i) {
    if (i == 0) return "1";
    if (i == 1) return "h";
    return "h^" + std::to_string(i);
}

std::string times_e(std::size_t i) {
    if (i == 0) return "e";
    return power_label(i) + "*e";
}

} // namespace

QuadricFiberData quadric_fiber_data(std::size_t r) {
    if (r < 2) throw PreconditionError("quadric needs r >= 2");
    QuadricFiberData q;
    q.r = r;
    q.n = r / 2;
    q.parity = r % 2 == 0 ? Parity::even : Parity::odd;
    q.dim = r - 2;
    q.basis_labels.assign(q.dim + 1, {});
    // e lives in H^{2(r-n-1)}.
    const std::size_t e_degree = r - q.n - 1;
    for (std::size_t i = 0; i < q.n; ++i) q.basis_labels[i].push_back(power_label(i));
    for (std::size_t i = 0; i < q.n; ++i) q.basis_labels[e_degree + i].push_back(times_e(i));
    if (q.parity == Parity::even) {
        q.relations = {power_label(q.n - 1) + " = e + f", "h*e = h*f"};
    } else {
        q.relations = {power_label(q.n) + " = 2e"};
    }
    return q;
}

std::size_t quadric_betti(std::size_t r, std::size_t i) {
    if (r < 2) throw PreconditionError("quadric needs r >= 2");
    const std::size_t n = r / 2;
    if (r % 2 == 0) {
        if (i > 2 * (n - 1)) return 0;
        return i == n - 1 ? 2 : 1;
    }
    return i <= 2 * n - 1 ? 1 : 0;
}

BettiVector::BettiVector(std::vector<std::size_t> b) : b_(std::move(b)) {
    if (b_.size() % 2 == 0) throw PreconditionError("Betti vector must have odd length 2d + 1");
    if (b_.back() < 1) throw PreconditionError("top Betti number b_{2d} must be at least 1");
}

BettiVector BettiVector::top_class_only(std::size_t d) {
    std::vector<std::size_t> b(2 * d + 1, 0);
    b.back() = 1;
    return BettiVector(std::move(b));
}

std::size_t BettiVector::at(long i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= b_.size()) return 0;
    return b_[static_cast<std::size_t>(i)];
}

FiberGysin fiber_gysin_index(std::size_t r) {
    if (r < 3) throw PreconditionError("fiber Gysin index needs r >= 3");
    const auto fiber = quadric_fiber_data(r);
    FiberGysin out;
    out.r = r;
    out.n = fiber.n;
    out.relation = fiber.relations.front();
    // H_{2n}(P^{r-1}) is generated by H^{r-1-n} cap [P]; its image is
    // h^{r-1-n} cap [Q_x], written in the basis of H^{2(r-1-n)}(Q_x).
    out.source_rank = 1;
    out.target_rank = quadric_betti(r, fiber.n - 1);
    out.matrix = IntMatrix(out.target_rank, 1, Integer(0));
    if (fiber.parity == Parity::odd) {
        out.matrix(0, 0) = 2; // h^n = 2e
    } else {
        out.matrix(0, 0) = 1; // h^{n-1} is itself a basis element next to e
        out.rank_deficient = true;
    }
    out.cokernel = cokernel(out.matrix);
    if (fiber.parity == Parity::odd) {
        if (out.cokernel.free_rank != 0 || out.cokernel.torsion.size() != 1)
            throw InternalError("odd fiber Gysin cokernel is not cyclic torsion");
        out.image_index = out.cokernel.torsion.front();
    }
    return out;
}

std::size_t lh_quadric_dim(const BettiVector& b, std::size_t r, long k) {
    std::size_t total = 0;
    for (std::size_t i = 0; i + 2 <= r; ++i) total += quadric_betti(r, i) * b.at(k - 2 * static_cast<long>(i));
    return total;
}

std::size_t lh_projective_dim(const BettiVector& b, std::size_t m, long k) {
    std::size_t total = 0;
    for (std::size_t i = 0; i <= m; ++i) total += b.at(k - 2 * static_cast<long>(i));
    return total;
}

NonsurjectivityCertificate nonsurjectivity_certificate(const BettiVector& b, std::size_t r, std::size_t d) {
    if (r % 2 != 0) throw PreconditionError("odd rank: use the torsion certificate");
    if (r < 2) throw PreconditionError("rank must be at least 2");
    if (b.dim() != d) throw PreconditionError("Betti vector does not have dimension d");
    NonsurjectivityCertificate c;
    c.r = r;
    c.n = r / 2;
    c.d = d;
    const long top = 2 * static_cast<long>(d + c.n);
    c.dim_source = lh_projective_dim(b, r - 1, top);
    c.dim_target = lh_quadric_dim(b, r, top - 2);
    c.surjection_impossible = c.dim_source < c.dim_target;
    return c;
}

void validate_phi_coordinates(const PhiCoordinates& a, std::size_t n, const BettiVector& b, long k) {
    if (a.coords.size() != 2 * n)
        throw PreconditionError("expected " + std::to_string(2 * n) + " Leray-Hirsch slots");
    const long nn = static_cast<long>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        if (a.coords[i].size() != b.at(k - 2 * li) || a.coords[n + i].size() != b.at(k - 2 * nn - 2 * li))
            throw PreconditionError("slot length does not match the Betti model");
    }
}

PhiTorsionReplay phi_torsion_replay(const PhiCoordinates& a, std::size_t n) {
    if (n == 0) throw PreconditionError("n must be at least 1");
    if (a.coords.size() != 2 * n)
        throw PreconditionError("expected " + std::to_string(2 * n) + " Leray-Hirsch slots");
    PhiTorsionReplay out;
    out.b.coords.resize(2 * n);
    out.image.coords.resize(2 * n);
    out.check = true;
    for (std::size_t q = 1; q <= 2 * n; ++q) {
        const auto& slot = a.coords[q - 1];
        const Integer choice = q <= n ? 1 : 2;   // b's coordinates
        const Integer gysin = q <= n ? 4 : 2;    // Phi(2 j^* b) coefficient
        auto& bq = out.b.coords[q - 1];
        auto& img = out.image.coords[q - 1];
        for (const auto& x : slot) {
            bq.push_back(choice * x);
            img.push_back(gysin * bq.back());
            if (img.back() != 4 * x) out.check = false;
        }
    }
    return out;
}

namespace {

// Gysin restriction to a smooth fiber: the fundamental class of X (first
// basis vector of H_{2d}(X)) tensored with the fiber class of the target
// degree maps to that fiber class; everything else maps to zero.
IntMatrix fiber_restriction(const BettiVector& b, const std::vector<std::size_t>& fiber_ranks, long k,
                            std::size_t target_fiber_degree) {
    const long top = 2 * static_cast<long>(b.dim());
    std::size_t cols = 0;
    for (std::size_t j = 0; j < fiber_ranks.size(); ++j)
        cols += fiber_ranks[j] * b.at(k - 2 * static_cast<long>(j));
    IntMatrix m(fiber_ranks[target_fiber_degree], cols, Integer(0));
    std::size_t offset = 0;
    for (std::size_t j = 0; j < fiber_ranks.size(); ++j) {
        const std::size_t block = b.at(k - 2 * static_cast<long>(j));
        for (std::size_t f = 0; f < fiber_ranks[j]; ++f) {
            if (j == target_fiber_degree && k - 2 * static_cast<long>(j) == top && block > 0)
                m(f, offset) = 1;
            offset += block;
        }
    }
    return m;
}

} // namespace

TorsionCertificate torsion_certificate(const BettiVector& b, std::size_t r, std::size_t d) {
    if (r % 2 == 0) throw PreconditionError("even rank: use the nonsurjectivity certificate");
    if (r < 3) throw PreconditionError("rank must be at least 3");
    if (b.dim() != d) throw PreconditionError("Betti vector does not have dimension d");

    TorsionCertificate c;
    c.r = r;
    c.n = (r - 1) / 2;
    c.d = d;
    const long k_source = 2 * static_cast<long>(c.n + d);
    const long k_target = k_source - 2;

    c.bottom = fiber_gysin_index(r);
    c.bottom_snf = smith_normal_form(c.bottom.matrix);

    std::vector<std::size_t> projective_ranks(r, 1); // P^{2n}: degrees 0..2n
    std::vector<std::size_t> quadric_ranks;
    for (std::size_t j = 0; j + 2 <= r; ++j) quadric_ranks.push_back(quadric_betti(r, j));
    c.left_vertical = fiber_restriction(b, projective_ranks, k_source, c.n);
    c.right_vertical = fiber_restriction(b, quadric_ranks, k_target, c.n - 1);
    c.verticals_surjective = cokernel(c.left_vertical).is_trivial() && cokernel(c.right_vertical).is_trivial();

    // 4a in Im j^* for every basis class a of H_{2n+2d-2}(Q).
    PhiCoordinates shape;
    const long nn = static_cast<long>(c.n);
    shape.coords.resize(2 * c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
        const long li = static_cast<long>(i);
        shape.coords[i].assign(b.at(k_target - 2 * li), Integer(0));
        shape.coords[c.n + i].assign(b.at(k_target - 2 * nn - 2 * li), Integer(0));
    }
    validate_phi_coordinates(shape, c.n, b, k_target);
    c.phi_check = true;
    for (std::size_t slot = 0; slot < shape.coords.size(); ++slot) {
        for (std::size_t pos = 0; pos < shape.coords[slot].size(); ++pos) {
            PhiCoordinates a = shape;
            a.coords[slot][pos] = 1;
            c.phi_check = c.phi_check && phi_torsion_replay(a, c.n).check;
        }
    }

    // Surjective verticals make coker(j^*) surject onto coker(j_x^*).
    c.quotient_image = c.bottom.cokernel;
    c.element_order = 0;
    if (c.verticals_surjective && c.quotient_image.free_rank == 0 && c.quotient_image.torsion.size() == 1)
        c.element_order = c.quotient_image.torsion.front().get_ui();
    if (c.element_order != 2 || !c.phi_check)
        throw InternalError("torsion certificate did not close");
    c.statement = "H_" + std::to_string(k_target) + "(Q)/Im j* has nonzero 2-torsion";
    return c;
}

} // namespace symdeg
