#include "symdeg/linalg.hpp"

#include "symdeg/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace symdeg {

RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n, Rational(1), Rational(0)); }
IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n, Integer(1), Integer(0)); }

PolyMatrix poly_matrix(std::size_t rows, std::size_t cols, std::size_t num_vars) {
    return PolyMatrix(rows, cols, MultiPoly(num_vars));
}

RatMatrix evaluate(const PolyMatrix& m, const PointQ& pt) {
    RatMatrix out(m.rows(), m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = evaluate(m(i, j), pt);
    return out;
}

namespace {

// Scales each row by the lcm of its denominators. Returns the integer
// matrix and the product of the scale factors.
std::pair<IntMatrix, Integer> clear_denominators(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols(), Integer(0));
    Integer total = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        total *= l;
    }
    return {std::move(out), total};
}

struct BareissResult {
    std::size_t rank = 0;
    int sign = 1;
    Integer last_pivot = 1;
};

// In-place fraction-free elimination. Entries below each pivot are cleared;
// every division is exact because the entries stay minors of the input.
BareissResult bareiss(IntMatrix& a) {
    BareissResult res;
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            a.swap_rows(p, r);
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                tmp = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

} // namespace

std::size_t rank_integer(const IntMatrix& m) {
    IntMatrix work = m;
    return bareiss(work).rank;
}

std::size_t rank_rational(const RatMatrix& m) {
    auto [work, scale] = clear_denominators(m);
    return bareiss(work).rank;
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix work = m;
    const auto res = bareiss(work);
    if (res.rank < m.rows()) return 0;
    return res.sign * res.last_pivot;
}

Rational determinant(const RatMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    auto [work, scale] = clear_denominators(m);
    return make_rational(determinant(work), scale);
}

MultiPoly determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t num_vars = n == 0 ? 0 : m(0, 0).num_vars();
    if (n > 24) throw PreconditionError("symbolic determinant limited to 24x24");
    if (n == 0) return MultiPoly::constant(num_vars, 1);

    // dp maps a set of used columns (after popcount rows) to the signed sum
    // over partial permutations.
    std::unordered_map<std::uint32_t, MultiPoly> layer{{0u, MultiPoly::constant(num_vars, 1)}};
    for (std::size_t row = 0; row < n; ++row) {
        std::unordered_map<std::uint32_t, MultiPoly> next;
        for (const auto& [mask, acc] : layer) {
            if (acc.is_zero()) continue;
            for (std::size_t col = 0; col < n; ++col) {
                const std::uint32_t bit = 1u << col;
                if (mask & bit) continue;
                const auto& entry = m(row, col);
                if (entry.is_zero()) continue;
                const int inversions = std::popcount(mask & ~((bit << 1) - 1u));
                MultiPoly term = acc * entry;
                if (inversions % 2) term = -term;
                auto [it, inserted] = next.try_emplace(mask | bit, std::move(term));
                if (!inserted) it->second += term;
            }
        }
        layer = std::move(next);
    }
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    auto it = layer.find(full);
    return it == layer.end() ? MultiPoly(num_vars) : it->second;
}

namespace {

// Gauss-Jordan on [a | rhs]; returns false when a is singular.
bool gauss_jordan(RatMatrix& a, RatMatrix& rhs) {
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return false;
        a.swap_rows(p, c);
        rhs.swap_rows(p, c);
        const Rational inv = 1 / a(c, c);
        for (std::size_t j = 0; j < n; ++j) a(c, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(c, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(c, j);
        }
    }
    return true;
}

} // namespace

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
    if (!a.is_square() || a.rows() != b.size())
        throw PreconditionError("solve: system dimensions do not match");
    RatMatrix work = a;
    RatMatrix rhs(b.size(), 1, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    if (!gauss_jordan(work, rhs)) return std::nullopt;
    std::vector<Rational> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (!a.is_square()) throw PreconditionError("inverse of a non-square matrix");
    RatMatrix work = a;
    RatMatrix inv = rat_identity(a.rows());
    if (!gauss_jordan(work, inv)) return std::nullopt;
    return inv;
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    for (;;) {
        out.push_back(s);
        // Colex successor: bump the lowest position that can move up.
        std::size_t i = 0;
        while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
        if (i == k) break;
        ++s[i];
        for (std::size_t j = 0; j < i; ++j) s[j] = j;
    }
    return out;
}

void for_each_minor(const PolyMatrix& m, std::size_t k, const MinorVisitor& visit) {
    if (k > std::min(m.rows(), m.cols()))
        throw PreconditionError("minor size " + std::to_string(k) + " exceeds matrix dimensions");
    const std::size_t num_vars = (m.rows() == 0 || m.cols() == 0) ? 0 : m(0, 0).num_vars();
    const auto row_sets = colex_subsets(m.rows(), k);
    const auto col_sets = colex_subsets(m.cols(), k);
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            PolyMatrix sub = poly_matrix(k, k, num_vars);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
            MultiPoly det = k == 0 ? MultiPoly::constant(num_vars, 1) : determinant(sub);
            if (!visit(Minor{rows, cols, std::move(det)})) return;
        }
    }
}

std::vector<Minor> minor_dets(const PolyMatrix& m, std::size_t k) {
    std::vector<Minor> out;
    for_each_minor(m, k, [&](const Minor& minor) {
        out.push_back(minor);
        return true;
    });
    return out;
}

std::optional<ConformalFactor> conformal_factor(const RatMatrix& a, std::size_t r) {
    if (!a.is_square()) throw PreconditionError("conformal factor of a non-square matrix");
    if (a.rows() != r || r == 0)
        throw PreconditionError("conformal factor: matrix size must equal r >= 1");
    RatMatrix gram(r, r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) gram(i, r - 1 - i) = 1;
    const RatMatrix pulled = a.transposed() * gram * a;
    const Rational tau = pulled(0, r - 1);
    if (tau == 0) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (pulled(i, j) != tau * gram(i, j)) return std::nullopt;

    const Rational det = determinant(a);
    if (det * det != pow(tau, static_cast<std::uint32_t>(r)))
        throw InternalError("conformal matrix violates (det A)^2 = tau^r");

    ConformalFactor out{tau, std::nullopt};
    if (r % 2 == 0) {
        const Rational ratio = det / pow(tau, static_cast<std::uint32_t>(r / 2));
        if (ratio != 1 && ratio != -1) throw InternalError("component sign is not +-1");
        out.component_sign = ratio > 0 ? 1 : -1;
    }
    return out;
}

} // namespace symdeg
