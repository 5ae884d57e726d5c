#pragma once

#include <optional>
#include <vector>

#include "hyperlat/matrix.hpp"

namespace hyperlat {

// Exact determinant, fraction-free (Bareiss).
Int det(const IntMatrix& m);

struct HnfResult {
    IntMatrix h;
    IntMatrix u;  // unimodular, h = u * m
};

// Column-style Hermite normal form via row transforms: H = U*M with H lower
// triangular on the pivot structure, pivots positive, entries below a pivot
// reduced into [0, pivot). Canonical and deterministic.
HnfResult hnf(const IntMatrix& m);

// Row-style HNF (pivots from the top), used internally and by the solvers.
HnfResult hnf_row(const IntMatrix& m);

struct LdlResult {
    RatMatrix l;            // unit lower triangular
    std::vector<Rat> d;     // diagonal
    IntMatrix transform;    // unimodular T with T^t * G * T = L * diag(d) * L^t
    bool is_permutation;    // transform is a pure permutation matrix
};

// Exact rational LDL^t of a symmetric nondegenerate matrix. Pivoting is by
// symmetric permutation when some remaining diagonal entry is nonzero, and
// falls back to a unimodular congruence (column addition) when the remaining
// diagonal is all zero but the block is not. Throws on degenerate input.
LdlResult ldl(const IntMatrix& g);

struct DiophantineSolution {
    IntVec particular;
    std::vector<IntVec> basis;  // integer kernel basis of x -> a.x
};

// Full integer solution set of a.x = c; empty optional when gcd(a) does not
// divide c.
std::optional<DiophantineSolution> solve_linear_diophantine(const IntVec& a, const Int& c);

// Exact rational inverse; throws on singular input.
RatMatrix rat_inverse(const IntMatrix& m);

// Solve m * x = rhs over the rationals (m square nonsingular).
RatMatrix rat_solve(const IntMatrix& m, const IntMatrix& rhs);

}  // namespace hyperlat
