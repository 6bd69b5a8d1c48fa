#include "symdeg/multipoly.hpp"

#include "symdeg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symdeg {

std::uint32_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    // x0 > x1 > ...: the larger monomial has the larger first differing exponent.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool PointQ::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw PreconditionError("variable index out of range");
    Exponents e(num_vars, 0);
    e[index] = 1;
    MultiPoly p(num_vars);
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents e) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != num_vars_)
        throw PreconditionError("exponent vector length " + std::to_string(e.size()) +
                                " does not match " + std::to_string(num_vars_) + " variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return *terms_.rbegin();
}

std::uint32_t MultiPoly::max_degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (num_vars_ != other.num_vars_)
        throw PreconditionError("polynomials over " + std::to_string(num_vars_) + " and " +
                                std::to_string(other.num_vars_) + " variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.num_vars_);
    Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t exponent) const {
    MultiPoly result = constant(num_vars_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

MultiPoly differentiate(const MultiPoly& p, std::size_t var_index) {
    if (var_index >= p.num_vars())
        throw PreconditionError("derivative index " + std::to_string(var_index) +
                                " out of range for " + std::to_string(p.num_vars()) + " variables");
    MultiPoly d(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var_index] == 0) continue;
        Exponents de = e;
        --de[var_index];
        d.add_term(de, c * e[var_index]);
    }
    return d;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> coords) {
    if (coords.size() != p.num_vars())
        throw PreconditionError("point has " + std::to_string(coords.size()) +
                                " coordinates, polynomial has " + std::to_string(p.num_vars()) +
                                " variables");
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
            if (e[i] != 0) term *= pow(coords[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

Rational evaluate(const MultiPoly& p, const PointQ& pt) {
    return evaluate(p, std::span<const Rational>(pt.coords));
}

DegreeInfo homogeneous_degree(const MultiPoly& p) {
    DegreeInfo info;
    if (p.is_zero()) {
        info.is_zero = true;
        return info;
    }
    const auto d = total_degree(p.terms().begin()->first);
    if (d != p.max_degree()) return info;
    info.degree = d;
    return info;
}

namespace {

bool monomial_divides(const Exponents& divisor, const Exponents& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (divisor[i] > e[i]) return false;
    return true;
}

} // namespace

DivisionResult divide(const MultiPoly& m, const MultiPoly& f) {
    if (f.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (m.num_vars() != f.num_vars())
        throw PreconditionError("division of polynomials over different variable counts");

    const auto& [lead_exp, lead_coeff] = f.leading_term();
    DivisionResult out{MultiPoly(m.num_vars()), MultiPoly(m.num_vars())};
    MultiPoly rest = m;
    Exponents shift(m.num_vars());
    while (!rest.is_zero()) {
        const auto [e, c] = rest.leading_term();
        if (monomial_divides(lead_exp, e)) {
            for (std::size_t i = 0; i < e.size(); ++i) shift[i] = e[i] - lead_exp[i];
            const Rational factor = c / lead_coeff;
            out.quotient.add_term(shift, factor);
            for (const auto& [fe, fc] : f.terms()) {
                Exponents prod(fe.size());
                for (std::size_t i = 0; i < fe.size(); ++i) prod[i] = fe[i] + shift[i];
                rest.add_term(prod, -factor * fc);
            }
        } else {
            out.remainder.add_term(e, c);
            rest.add_term(e, -c);
        }
    }
    return out;
}

std::optional<MultiPoly> divides(const MultiPoly& f, const MultiPoly& m) {
    auto result = divide(m, f);
    if (!result.remainder.is_zero()) return std::nullopt;
    return std::move(result.quotient);
}

MultiPoly substitute_linear(const MultiPoly& p, const Matrix<Rational>& transform) {
    if (transform.rows() != p.num_vars())
        throw PreconditionError("substitution matrix has " + std::to_string(transform.rows()) +
                                " rows, polynomial has " + std::to_string(p.num_vars()) +
                                " variables");
    const std::size_t new_vars = transform.cols();
    std::vector<MultiPoly> images;
    images.reserve(p.num_vars());
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
        MultiPoly lin(new_vars);
        for (std::size_t j = 0; j < new_vars; ++j) {
            Exponents e(new_vars, 0);
            e[j] = 1;
            lin.add_term(e, transform(i, j));
        }
        images.push_back(std::move(lin));
    }
    // powers[i][k] = images[i]^k, filled lazily.
    std::vector<std::vector<MultiPoly>> powers(p.num_vars());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(new_vars, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    MultiPoly result(new_vars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(new_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term = term * power_of(i, e[i]);
        }
        result += term;
    }
    return result;
}

std::vector<std::string> default_var_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.num_vars())
        throw PreconditionError("variable name count does not match polynomial");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        bool wrote = false;
        const bool constant_term = total_degree(e) == 0;
        if (magnitude != 1 || constant_term) {
            out << to_string(magnitude);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << '*';
            out << vars[i];
            if (e[i] > 1) out << '^' << e[i];
            wrote = true;
        }
    }
    return out.str();
}

std::string to_string(const MultiPoly& p) {
    return to_string(p, default_var_names(p.num_vars()));
}

} // namespace symdeg
