#pragma once

// Seeded generators and naive oracles shared by the unit and acceptance tests.
// The oracles deliberately avoid the library's own elimination code.

#include "symdeg/linalg.hpp"
#include "symdeg/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace symdeg::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    long nonzero(long lo, long hi) {
        for (;;)
            if (long v = uniform(lo, hi); v != 0) return v;
    }
    Rational rational(long bound) { return make_rational(uniform(-bound, bound), uniform(1, bound)); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline Exponents random_exponents(Rng& rng, std::size_t nvars, std::uint32_t degree) {
    Exponents e(nvars, 0);
    for (std::uint32_t k = 0; k < degree; ++k) ++e[rng.index(nvars)];
    return e;
}

inline MultiPoly random_homogeneous(Rng& rng, std::size_t nvars, std::uint32_t degree, std::size_t terms,
                                    long coeff_bound = 9) {
    MultiPoly p(nvars);
    for (std::size_t t = 0; t < terms; ++t)
        p.add_term(random_exponents(rng, nvars, degree), Rational(rng.nonzero(-coeff_bound, coeff_bound)));
    return p;
}

inline MultiPoly random_poly(Rng& rng, std::size_t nvars, std::uint32_t max_degree, std::size_t terms) {
    MultiPoly p(nvars);
    for (std::size_t t = 0; t < terms; ++t)
        p.add_term(random_exponents(rng, nvars, static_cast<std::uint32_t>(rng.uniform(0, max_degree))),
                   rng.rational(7));
    return p;
}

inline MultiPoly random_nonzero_poly(Rng& rng, std::size_t nvars, std::uint32_t max_degree, std::size_t terms) {
    for (;;)
        if (auto p = random_poly(rng, nvars, max_degree, terms); !p.is_zero()) return p;
}

inline PointQ random_point(Rng& rng, std::size_t n, long bound) {
    for (;;) {
        PointQ p;
        for (std::size_t i = 0; i < n; ++i) p.coords.push_back(Rational(rng.uniform(-bound, bound)));
        if (!p.is_zero()) return p;
    }
}

inline RatMatrix random_rat_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    RatMatrix m(rows, cols, Rational(0));
    // Sparse-ish and low-rank cases matter as much as generic ones.
    const long zero_bias = rng.uniform(0, 3);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.uniform(0, 3) >= zero_bias) m(i, j) = rng.rational(bound);
    if (rows > 1 && rng.uniform(0, 2) == 0) {
        // Force a dependent row.
        const std::size_t a = rng.index(rows), b = rng.index(rows);
        const Rational s = rng.rational(3);
        for (std::size_t j = 0; j < cols; ++j) m(a, j) = s * m(b, j);
    }
    return m;
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols, Integer(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
    return m;
}

inline RatMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
    for (;;) {
        RatMatrix m(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-bound, bound);
        if (inverse(m)) return m;
    }
}

// Textbook Gaussian elimination over Q with the first nonzero pivot.
inline std::size_t naive_rank(RatMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, rank);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, c) == 0) continue;
            const Rational factor = m(i, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <typename T>
T leibniz_det(const Matrix<T>& m, const T& zero, const T& one) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        T term = one;
        for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
        if (inversions % 2) total = total - term;
        else total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Clears denominators row by row.
inline IntMatrix integer_clearing(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Integer(m(i, j).get_den()));
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j) * l);
    }
    return out;
}

struct CurveWithPoints {
    MultiPoly f;
    std::vector<PointQ> points;
};

// A random homogeneous form of the given degree vanishing at `count` random
// integer points: random background terms, then multiples of x_i^d for
// i < count are solved for so that every point lies on the hypersurface.
inline std::optional<CurveWithPoints> random_form_through_points(Rng& rng, std::size_t nvars, std::uint32_t degree,
                                                                 std::size_t count, std::size_t background_terms) {
    if (count > nvars) return std::nullopt;
    CurveWithPoints out;
    for (std::size_t i = 0; i < count; ++i) out.points.push_back(random_point(rng, nvars, 3));
    MultiPoly background = random_homogeneous(rng, nvars, degree, background_terms, 5);
    RatMatrix a(count, count, Rational(0));
    std::vector<Rational> rhs(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) a(i, j) = pow(out.points[i].coords[j], degree);
        rhs[i] = -evaluate(background, out.points[i]);
    }
    const auto sol = solve(a, rhs);
    if (!sol) return std::nullopt;
    out.f = background;
    for (std::size_t j = 0; j < count; ++j) {
        Exponents e(nvars, 0);
        e[j] = degree;
        out.f.add_term(e, (*sol)[j]);
    }
    return out;
}

inline std::vector<Rational> gradient_at(const MultiPoly& f, const PointQ& p) {
    std::vector<Rational> g;
    for (std::size_t i = 0; i < f.num_vars(); ++i) g.push_back(evaluate(differentiate(f, i), p));
    return g;
}

inline bool is_smooth_point(const MultiPoly& f, const PointQ& p) {
    if (evaluate(f, p) != 0) return false;
    const auto g = gradient_at(f, p);
    return std::any_of(g.begin(), g.end(), [](const Rational& x) { return x != 0; });
}

} // namespace symdeg::testing
