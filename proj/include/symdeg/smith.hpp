#pragma once

#include "symdeg/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace symdeg {

/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool has_two_torsion() const;
    bool operator==(const FGAbelianGroup&) const = default;
};

/// Throws PreconditionError if the invariants are broken.
void validate(const FGAbelianGroup& g);

/// "0", "Z", "Z/2", "Z^2 + Z/2 + Z/6", ...
std::string to_string(const FGAbelianGroup& g);

struct SmithForm {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix D; // diagonal, d1 | d2 | ..., di >= 0
    IntMatrix V; // cols x cols, unimodular

    std::vector<Integer> diagonal() const;
};

/// U * m * V == D. Classical elimination with gcd steps on rows and
/// columns; U and V accumulate every operation applied.
SmithForm smith_normal_form(const IntMatrix& m);

/// Checks U*m*V == D, |det U| == |det V| == 1, D diagonal with a
/// nonnegative divisibility chain.
bool verify_smith_form(const IntMatrix& m, const SmithForm& s);

/// Cokernel of m : Z^cols -> Z^rows.
FGAbelianGroup cokernel(const IntMatrix& m);

} // namespace symdeg
