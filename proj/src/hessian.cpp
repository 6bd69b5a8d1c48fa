#include "symdeg/hessian.hpp"

#include "symdeg/errors.hpp"

#include <algorithm>

namespace symdeg {

HessianForm build_hessian(const MultiPoly& f) {
    const auto info = homogeneous_degree(f);
    if (info.is_zero) throw PreconditionError("polynomial is zero");
    if (!info.degree) throw PreconditionError("polynomial is not homogeneous");
    if (*info.degree < 2) throw PreconditionError("degree must be at least 2");
    if (f.num_vars() == 0) throw PreconditionError("polynomial has no variables");

    const std::size_t n = f.num_vars();
    HessianForm h{f, poly_matrix(n, n, n), *info.degree, n - 1};
    for (std::size_t i = 0; i < n; ++i) {
        const MultiPoly di = differentiate(f, i);
        for (std::size_t j = i; j < n; ++j) {
            h.hessian(i, j) = differentiate(di, j);
            if (j != i) h.hessian(j, i) = h.hessian(i, j);
        }
    }
    return h;
}

std::size_t rank_at(const HessianForm& h, const PointQ& p) {
    if (p.size() != h.size())
        throw PreconditionError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                                std::to_string(h.size()));
    if (p.is_zero()) throw PreconditionError("the zero vector is not a projective point");
    return rank_rational(evaluate(h.hessian, p));
}

PointQ PointSampler::next(std::size_t n) {
    PointQ p;
    p.coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) p.coords.emplace_back(Integer(static_cast<long>(dist_(rng_))));
    return p;
}

namespace {

std::optional<Minor> first_minor_where(const PolyMatrix& m, std::size_t k,
                                       const std::function<bool(const Minor&)>& pred) {
    std::optional<Minor> hit;
    for_each_minor(m, k, [&](const Minor& minor) {
        if (!pred(minor)) return true;
        hit = minor;
        return false;
    });
    return hit;
}

} // namespace

GenericRankCertificate generic_rank_ambient(const HessianForm& h, const GenericRankOptions& opts) {
    GenericRankCertificate cert;
    PointSampler sampler(opts.seed);
    for (std::size_t s = 0; s < opts.sample_budget; ++s) {
        const PointQ p = sampler.next(h.size());
        if (p.is_zero()) continue;
        cert.sampled_rank = std::max(cert.sampled_rank, rank_at(h, p));
    }

    auto nonzero = [](const Minor& m) { return !m.det.is_zero(); };
    std::size_t k = cert.sampled_rank;
    auto witness = first_minor_where(h.hessian, k, nonzero);
    if (!witness) throw InternalError("no nonzero minor of the sampled rank");

    // Sampling only bounds the rank from below; climb until every larger minor vanishes.
    for (;;) {
        if (k == h.size()) break;
        std::size_t checked = 0;
        std::optional<Minor> larger;
        for_each_minor(h.hessian, k + 1, [&](const Minor& m) {
            if (!m.det.is_zero()) {
                larger = m;
                return false;
            }
            ++checked;
            return true;
        });
        if (!larger) {
            cert.larger_minors_checked = checked;
            break;
        }
        ++k;
        witness = std::move(larger);
    }
    cert.rank = k;
    cert.witness = std::move(*witness);
    return cert;
}

HypersurfaceRank generic_rank_on_hypersurface(const HessianForm& h, const GenericRankOptions& opts) {
    HypersurfaceRank out;
    out.suspect_not_reduced = !likely_reduced(h.f, opts.seed);

    const auto ambient = generic_rank_ambient(h, opts);
    std::size_t larger_checked = ambient.larger_minors_checked;
    out.certificate.sampled_rank = ambient.sampled_rank;

    for (std::size_t k = ambient.rank + 1; k-- > 0;) {
        std::size_t divisible = 0;
        std::optional<Minor> witness;
        std::optional<MultiPoly> remainder;
        for_each_minor(h.hessian, k, [&](const Minor& m) {
            auto division = divide(m.det, h.f);
            if (!division.remainder.is_zero()) {
                witness = m;
                remainder = std::move(division.remainder);
                return false;
            }
            if (k == h.size()) out.determinant_quotient = std::move(division.quotient);
            ++divisible;
            return true;
        });
        if (witness) {
            out.certificate.rank = k;
            out.certificate.witness = std::move(*witness);
            out.certificate.witness_remainder = std::move(remainder);
            out.certificate.larger_minors_checked = larger_checked;
            return out;
        }
        larger_checked = divisible;
    }
    // k == 0 gives the constant minor 1, which a polynomial of degree >= 2 never divides.
    throw InternalError("every minor, including the empty one, is divisible by f");
}

namespace {

using UniPoly = std::vector<Rational>; // coefficient of t^i at index i

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

std::size_t uni_gcd_degree(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

} // namespace

bool likely_reduced(const MultiPoly& f, std::uint64_t seed) {
    const auto deg = homogeneous_degree(f);
    if (!deg.degree || *deg.degree == 0) return true;
    const std::uint32_t d = *deg.degree;
    PointSampler sampler(seed ^ 0x9e3779b97f4a7c15ULL, 100);
    constexpr int attempts = 3;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        const PointQ base = sampler.next(f.num_vars());
        const PointQ dir = sampler.next(f.num_vars());
        // x = s * base + t * dir gives a binary form of degree d.
        RatMatrix line(f.num_vars(), 2, Rational(0));
        for (std::size_t i = 0; i < f.num_vars(); ++i) {
            line(i, 0) = base.coords[i];
            line(i, 1) = dir.coords[i];
        }
        const MultiPoly binary = substitute_linear(f, line);
        if (binary.is_zero()) continue;
        UniPoly u(d + 1, Rational(0));
        for (const auto& [e, c] : binary.terms()) u[e[1]] = c;
        // A root at infinity of multiplicity >= 2 is also a repeated factor.
        UniPoly trimmed = u;
        trim(trimmed);
        if (trimmed.size() + 1 < u.size()) continue;
        UniPoly du;
        for (std::size_t i = 1; i < trimmed.size(); ++i) du.push_back(trimmed[i] * static_cast<unsigned long>(i));
        if (uni_gcd_degree(trimmed, du) == 0) return true;
    }
    return false;
}

RankStratification stratify(const HessianForm& h, const std::vector<PointQ>& points) {
    RankStratification s;
    for (const auto& p : points) s.buckets[rank_at(h, p)].push_back(p);
    return s;
}

bool EquivarianceReport::all_passed() const {
    return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
}

Rational bilinear(const RatMatrix& m, const PointQ& v, const PointQ& w) {
    if (v.size() != m.rows() || w.size() != m.cols())
        throw PreconditionError("vector length does not match the form");
    Rational sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v.coords[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) sum += v.coords[i] * m(i, j) * w.coords[j];
    }
    return sum;
}

namespace {

PointQ apply(const RatMatrix& g, const PointQ& x) {
    if (x.size() != g.cols()) throw PreconditionError("vector length does not match the group element");
    PointQ y;
    y.coords.assign(g.rows(), Rational(0));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) y.coords[i] += g(i, j) * x.coords[j];
    return y;
}

} // namespace

EquivarianceReport equivariance_check(const HessianForm& h, const RatMatrix& g,
                                      const Rational& c_of_g_inv,
                                      const std::vector<EquivarianceSample>& samples) {
    if (!g.is_square() || g.rows() != h.size())
        throw PreconditionError("group element must be " + std::to_string(h.size()) + "x" +
                                std::to_string(h.size()));
    const auto g_inv = inverse(g);
    if (!g_inv) throw PreconditionError("group element is singular");
    if (substitute_linear(h.f, g) != c_of_g_inv * h.f)
        throw PreconditionError("F is not a weight vector for g with the given character value");

    EquivarianceReport report;
    for (const auto& s : samples) {
        const Rational lhs = bilinear(evaluate(h.hessian, apply(g, s.x)), s.v, s.w);
        const Rational rhs =
            c_of_g_inv * bilinear(evaluate(h.hessian, s.x), apply(*g_inv, s.v), apply(*g_inv, s.w));
        report.passed.push_back(lhs == rhs);
    }
    return report;
}

} // namespace symdeg
