#pragma once

#include "symdeg/matrix.hpp"
#include "symdeg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace symdeg {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lex with x0 > x1 > ...
/// This is the single global monomial order of the library.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint32_t total_degree(const Exponents& e);

/// A point of affine space over Q, also used as a lift of a projective point.
struct PointQ {
    std::vector<Rational> coords;

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;
    bool operator==(const PointQ&) const = default;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept in a map ordered by GrlexLess and never hold a zero
/// coefficient, so two polynomials are equal iff their term maps are equal.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c);
    static MultiPoly variable(std::size_t num_vars, std::size_t index);
    static MultiPoly monomial(const Rational& c, Exponents e);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the monomial with exponents e (zero if absent).
    Rational coefficient(const Exponents& e) const;

    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const Rational& c);

    /// Leading term under the global order. Requires !is_zero().
    const TermMap::value_type& leading_term() const;

    /// Largest total degree of any term; 0 for the zero polynomial.
    std::uint32_t max_degree() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& other) const = default;

    MultiPoly pow(std::uint32_t exponent) const;

private:
    void check_compatible(const MultiPoly& other) const;

    std::size_t num_vars_;
    TermMap terms_;
};

/// Formal partial derivative with respect to variable var_index.
MultiPoly differentiate(const MultiPoly& p, std::size_t var_index);

/// Exact value at pt; throws PreconditionError on a dimension mismatch.
Rational evaluate(const MultiPoly& p, const PointQ& pt);
Rational evaluate(const MultiPoly& p, std::span<const Rational> coords);

struct DegreeInfo {
    std::optional<std::uint32_t> degree;
    bool is_zero = false;
};

/// d when every term has total degree d; absent for 0 (with is_zero set)
/// and for inhomogeneous input.
DegreeInfo homogeneous_degree(const MultiPoly& p);

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

/// Multivariate long division of m by the single divisor f under grlex.
DivisionResult divide(const MultiPoly& m, const MultiPoly& f);

/// q with m == q * f, or absent. Throws PreconditionError when f == 0.
std::optional<MultiPoly> divides(const MultiPoly& f, const MultiPoly& m);

/// Linear substitution x_i -> sum_j transform(i, j) * y_j, i.e. p o T.
/// transform has num_vars rows; the result lives in transform.cols() variables.
MultiPoly substitute_linear(const MultiPoly& p, const Matrix<Rational>& transform);

/// Default variable names x0..x{n-1}.
std::vector<std::string> default_var_names(std::size_t n);

/// Canonical text: terms in descending grlex order, coefficients "num/den".
std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars);
std::string to_string(const MultiPoly& p);

} // namespace symdeg
