#pragma once

#include <vector>

#include "hyperlat/lattice.hpp"

namespace hyperlat {

// A (-2)-vector; reflecting in it preserves the form and the lattice.
struct Root {
    std::string owner;
    IntVec coords;
};

Root make_root(const Lattice& l, const IntVec& coords);

// Reflections applied left to right.
struct WeylWord {
    std::vector<Root> roots;
};

// v + (v . delta) delta. Fixes the wall delta-perp, flips delta.
LatticeVector reflect(const Lattice& l, const Root& delta, const LatticeVector& v);

LatticeVector apply_word(const Lattice& l, const WeylWord& word, const LatticeVector& v);

// All roots delta with delta . v = c, for v of positive norm in a hyperbolic
// lattice (the orthogonal complement of v is negative definite, so the set is
// finite). Sorted lexicographically by coordinates.
std::vector<Root> roots_with_pairing(const Lattice& l, const LatticeVector& v, const Int& c);

// Roots whose wall strictly separates v from w: delta . v < 0 < delta . w.
// Requires v, w of positive norm on the same side of the cone.
std::vector<Root> separating_roots(const Lattice& l, const LatticeVector& v, const LatticeVector& w);

inline constexpr long kDefaultWalkCap = 10000;

struct WalkResult {
    WeylWord word;      // reflections applied to v, in order
    LatticeVector end;  // image of v, in the closed chamber of w
};

// Reflect v across separating walls until none remain. Each step picks the
// separating root minimizing |delta . v|, ties broken by lexicographically
// smallest coordinates. Terminates because delta . w drops by a positive
// integer each step while staying bounded below.
WalkResult chamber_walk(const Lattice& l, const LatticeVector& v, const LatticeVector& w,
                        long cap = kDefaultWalkCap);

bool same_chamber(const Lattice& l, const LatticeVector& v, const LatticeVector& w);

}  // namespace hyperlat
