#pragma once

#include "hyperlat/lattice.hpp"

namespace hyperlat {

struct ModMatrix {
    Int modulus;
    IntMatrix entries;  // reduced into [0, modulus)
    bool invertible;    // gcd(det, modulus) == 1
};

ModMatrix reduce_mod(const IntMatrix& m, const Int& n);

inline constexpr long kDefaultOrderCap = 1000000;

// Minimal k >= 1 with m^k congruent to the identity mod n.
long order_mod(const IntMatrix& m, const Int& n, long cap = kDefaultOrderCap);

// True iff f maps the sublattice into itself (basis^-1 * f * basis integral).
bool descends_to(const Embedding& e, const Isometry& f);

// The restriction basis^-1 * f * basis as a validated isometry of sub_gram.
Isometry restrict_isometry(const Embedding& e, const Isometry& f);

struct StabilizingPower {
    long m;
    Isometry h;  // restriction of f^m to the sublattice
};

// Minimal m >= 1 such that f^m descends; bounded by order_mod(f, index),
// since any isometry congruent to the identity mod the index preserves every
// sublattice between index*L and L.
StabilizingPower stabilizing_power(const Embedding& e, const Isometry& f, long cap = kDefaultOrderCap);

}  // namespace hyperlat
