#include "symdeg/smith.hpp"

#include "symdeg/errors.hpp"

#include <sstream>

namespace symdeg {

bool FGAbelianGroup::has_two_torsion() const {
    for (const auto& d : torsion)
        if (mpz_even_p(d.get_mpz_t())) return true;
    return false;
}

void validate(const FGAbelianGroup& g) {
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (g.torsion[i] < 2) throw PreconditionError("torsion coefficient below 2");
        if (i > 0 && !mpz_divisible_p(g.torsion[i].get_mpz_t(), g.torsion[i - 1].get_mpz_t()))
            throw PreconditionError("torsion coefficients do not form a divisibility chain");
    }
}

std::string to_string(const FGAbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (g.free_rank > 0) {
        out << "Z";
        if (g.free_rank > 1) out << '^' << g.free_rank;
        first = false;
    }
    for (const auto& d : g.torsion) {
        if (!first) out << " + ";
        out << "Z/" << d.get_str();
        first = false;
    }
    return out.str();
}

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
}

namespace {

// Row/column operations applied to the working matrix and mirrored into
// the unimodular accumulators (rows act on U from the left, columns on V
// from the right).
struct SmithWork {
    IntMatrix A, U, V;

    void swap_rows(std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        U.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        A.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = -A(r, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
    }
    // row_dst += f * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < A.cols(); ++j) A(dst, j) += f * A(src, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < A.rows(); ++i) A(i, dst) += f * A(i, src);
        for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) += f * V(i, src);
    }

    // Rows (t, i) <- [[s, x], [-b/g, a/g]] (rows t, i), with a = A(t,c), b = A(i,c).
    void gcd_rows(std::size_t t, std::size_t i, std::size_t c) {
        Integer g, s, x;
        const Integer a = A(t, c), b = A(i, c);
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const Integer p = -b / g, q = a / g;
        combine_rows(A, t, i, s, x, p, q);
        combine_rows(U, t, i, s, x, p, q);
    }
    void gcd_cols(std::size_t t, std::size_t j, std::size_t r) {
        Integer g, s, x;
        const Integer a = A(r, t), b = A(r, j);
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), x.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const Integer p = -b / g, q = a / g;
        combine_cols(A, t, j, s, x, p, q);
        combine_cols(V, t, j, s, x, p, q);
    }

    static void combine_rows(IntMatrix& M, std::size_t t, std::size_t i, const Integer& s,
                             const Integer& x, const Integer& p, const Integer& q) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const Integer u = M(t, j), v = M(i, j);
            M(t, j) = s * u + x * v;
            M(i, j) = p * u + q * v;
        }
    }
    static void combine_cols(IntMatrix& M, std::size_t t, std::size_t j, const Integer& s,
                             const Integer& x, const Integer& p, const Integer& q) {
        for (std::size_t i = 0; i < M.rows(); ++i) {
            const Integer u = M(i, t), v = M(i, j);
            M(i, t) = s * u + x * v;
            M(i, j) = p * u + q * v;
        }
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithWork w{m, int_identity(m.rows()), int_identity(m.cols())};
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (w.A(i, j) == 0) continue;
                if (!found || abs(w.A(i, j)) < abs(w.A(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.A(i, t) == 0) continue;
                if (mpz_divisible_p(w.A(i, t).get_mpz_t(), w.A(t, t).get_mpz_t())) {
                    w.add_row(i, t, -(w.A(i, t) / w.A(t, t)));
                } else {
                    w.gcd_rows(t, i, t);
                    changed = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.A(t, j) == 0) continue;
                if (mpz_divisible_p(w.A(t, j).get_mpz_t(), w.A(t, t).get_mpz_t())) {
                    w.add_col(j, t, -(w.A(t, j) / w.A(t, t)));
                } else {
                    w.gcd_cols(t, j, t);
                    changed = true;
                }
            }
            if (changed) continue;

            // Row t and column t are clear; enforce pivot | rest of block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
                    if (!mpz_divisible_p(w.A(i, j).get_mpz_t(), w.A(t, t).get_mpz_t())) {
                        w.add_row(t, i, 1);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (w.A(t, t) < 0) w.negate_row(t);
    }
    return SmithForm{std::move(w.U), std::move(w.A), std::move(w.V)};
}

bool verify_smith_form(const IntMatrix& m, const SmithForm& s) {
    if (s.U.rows() != m.rows() || !s.U.is_square()) return false;
    if (s.V.rows() != m.cols() || !s.V.is_square()) return false;
    if (s.U * m * s.V != s.D) return false;
    if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return false;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D(i, j) != 0) return false;
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (i + 1 < diag.size()) {
            // d_i | d_{i+1}; zero divides only zero
            if (diag[i] == 0) {
                if (diag[i + 1] != 0) return false;
            } else if (!mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t())) {
                return false;
            }
        }
    }
    return true;
}

FGAbelianGroup cokernel(const IntMatrix& m) {
    const auto snf = smith_normal_form(m);
    FGAbelianGroup g;
    std::size_t nonzero = 0;
    for (const auto& d : snf.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d >= 2) g.torsion.push_back(d);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

} // namespace symdeg
