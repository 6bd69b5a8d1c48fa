#include "symdeg/bounds.hpp"

#include "symdeg/errors.hpp"

namespace symdeg {

long main_bound(long N, long r) {
    if (r <= 0 || r > N) throw PreconditionError("main bound needs 0 < r <= N");
    return N - r;
}

std::string to_string(Relation rel) {
    switch (rel) {
    case Relation::eq: return "==";
    case Relation::ne: return "!=";
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    }
    return "?";
}

std::optional<Relation> parse_relation(const std::string& text) {
    for (auto rel : {Relation::eq, Relation::ne, Relation::le, Relation::lt, Relation::ge, Relation::gt})
        if (to_string(rel) == text) return rel;
    return std::nullopt;
}

bool holds(long lhs, Relation rel, long rhs) {
    switch (rel) {
    case Relation::eq: return lhs == rhs;
    case Relation::ne: return lhs != rhs;
    case Relation::le: return lhs <= rhs;
    case Relation::lt: return lhs < rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::gt: return lhs > rhs;
    }
    return false;
}

bool BoundReport::consistent() const { return verdict == kConsistentVerdict; }

std::string contradiction_verdict(std::size_t step, long r) {
    return "contradiction located at step " + std::to_string(step) + ": hypotheses contradict: X_" +
           std::to_string(r - 1) + " must be nonempty";
}

namespace {

BoundStep make_step(std::string statement, long lhs, Relation rel, long rhs) {
    return BoundStep{std::move(statement), lhs, rel, rhs, holds(lhs, rel, rhs)};
}

} // namespace

BoundReport replay_main_theorem(long N, long r, long d, const BettiVector& betti) {
    if (r <= 0 || r > N) throw PreconditionError("replay needs 0 < r <= N");
    if (d < 0) throw PreconditionError("dimension d must be nonnegative");
    if (static_cast<long>(betti.dim()) != d) throw PreconditionError("Betti vector does not have dimension d");

    BoundReport rep;
    rep.N = N;
    rep.r = r;
    rep.d = d;
    rep.n = r / 2;
    const long n = rep.n;
    const long vanishing = N + d - 1;

    // P(V) has fiber P^{N-1} over a d-dimensional base.
    rep.steps.push_back(make_step("H_j(P(W)\\Q) = 0 for j > N+d-1: CW dimension of the affine complement equals dim P(V)",
                                  (N - 1) + d, Relation::eq, vanishing));

    if (r % 2 == 0) {
        const auto cert = nonsurjectivity_certificate(betti, static_cast<std::size_t>(r), static_cast<std::size_t>(d));
        rep.steps.push_back(make_step("j* : H_{2n+2d}(P(V)) -> H_{2n+2d-2}(Q) not surjective: dim target > dim source",
                                      static_cast<long>(cert.dim_target), Relation::gt,
                                      static_cast<long>(cert.dim_source)));
    } else if (r == 1) {
        // n = 0: Q is empty, P(W)\Q = P(W) is X itself, and the fundamental
        // class replaces the Gysin argument in degree 2d.
        rep.steps.push_back(make_step("r = 1: Q is empty and P(W)\\Q = X carries its fundamental class, b_{2d} >= 1",
                                      static_cast<long>(betti.at(2 * d)), Relation::ge, 1));
        rep.steps.push_back(make_step("H_{2d}(P(W)\\Q) != 0 forces 2d <= N+d-1", 2 * d, Relation::le, vanishing));
    } else {
        const auto cert = torsion_certificate(betti, static_cast<std::size_t>(r), static_cast<std::size_t>(d));
        rep.steps.push_back(make_step("j* : H_{2n+2d}(P(V)) -> H_{2n+2d-2}(Q) not surjective: fiber image index 2 gives 2-torsion in the cokernel",
                                      static_cast<long>(cert.element_order), Relation::gt, 1));
    }

    if (r != 1) {
        rep.steps.push_back(make_step("H_{2n+2d-1}(P(W)\\Q) != 0 forces 2n+2d-1 <= N+d-1",
                                      2 * n + 2 * d - 1, Relation::le, vanishing));
    }
    if (r % 2 == 1 && r != 1) {
        rep.steps.push_back(make_step("H_{N+d-1}(P(W)\\Q) is torsion-free, so 2n+2d-1 != N+d-1",
                                      2 * n + 2 * d - 1, Relation::ne, vanishing));
    }

    rep.verdict = kConsistentVerdict;
    for (std::size_t i = 0; i < rep.steps.size(); ++i) {
        if (!rep.steps[i].ok) {
            rep.verdict = contradiction_verdict(i + 1, r);
            break;
        }
    }
    return rep;
}

std::int64_t binomial2(std::int64_t m) { return m * (m - 1) / 2; }

CorollaryThreshold corollary_threshold(std::int64_t N, std::int64_t r) {
    if (r < 0 || r >= N) throw PreconditionError("corollary threshold needs 0 <= r < N");
    CorollaryThreshold c;
    c.threshold = binomial2(N - r + 1);
    for (std::int64_t s = r + 1; s <= N; ++s) c.telescoped_sum += N - s + 1;
    c.identity_holds = c.threshold == c.telescoped_sum;
    return c;
}

std::int64_t sym_stratum_dim(std::int64_t N, std::int64_t r) {
    if (r < 1 || r > N) throw PreconditionError("stratum dimension needs 1 <= r <= N");
    return binomial2(N + 1) - binomial2(N - r + 1) - 1;
}

RatMatrix veronese_witness(const PointQ& v) {
    if (v.size() == 0 || v.is_zero()) throw PreconditionError("Veronese witness needs v != 0");
    RatMatrix m(v.size(), v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v.coords[i] * v.coords[j];
    return m;
}

} // namespace symdeg
