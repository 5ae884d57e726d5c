#pragma once

// Independent reference implementations used to cross-check library results.
// Everything here recomputes values from first principles: permutation
// expansions, brute-force box searches, grid bisection, and certified
// floating-point root isolation with exact rational containment disks. None
// of it shares algorithms with the library.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlat/lattice.hpp"
#include "hyperlat/matrix.hpp"
#include "hyperlat/polynomial.hpp"

namespace oracles {

using hyperlat::Int;
using hyperlat::IntMatrix;
using hyperlat::IntVec;
using hyperlat::Rat;

// Polynomials as ascending coefficient vectors, no trailing zeros.
using Coeffs = std::vector<Int>;

Coeffs trim(Coeffs c);
Coeffs poly_mul(const Coeffs& a, const Coeffs& b);
// Exact quotient by a monic divisor; nullopt when the remainder is nonzero.
std::optional<Coeffs> poly_div_monic(const Coeffs& p, const Coeffs& d);
Int poly_eval(const Coeffs& p, const Int& x);
bool palindrome(const Coeffs& p);

inline hyperlat::IntPolynomial to_poly(const Coeffs& c) { return hyperlat::IntPolynomial(c); }
inline Coeffs from_poly(const hyperlat::IntPolynomial& p) { return p.coeffs(); }

unsigned long phi(unsigned long n);
const Coeffs& cyclotomic(unsigned long n);

// Gram pairing a^t G b computed directly.
Int pair_g(const IntMatrix& g, const IntVec& a, const IntVec& b);

// Leibniz permutation expansion; intended for n <= 6.
Int det_perm(const IntMatrix& m);
// det(xI - M) expanded over permutations with linear polynomial entries.
Coeffs charpoly_perm(const IntMatrix& m);

// Every distinct canonical column-style HNF reachable as U*M with U entries
// in [-3, 3] and det(U) = +-1. Input must be 2x2 nonsingular; a correct
// implementation makes the result a single matrix.
std::vector<IntMatrix> hnf_brute_2x2(const IntMatrix& m);

// Certified Salem recognition: Weierstrass simultaneous iteration plus exact
// rational containment disks (Smith's bound), unit-circle membership via the
// reciprocal pairing argument and inversion-image disks. Throws when
// certification cannot be completed; returns the verdict otherwise.
bool is_salem_certified(const Coeffs& p);

// Distinct real roots in (a, b] by sign changes on a step-1/8 grid plus
// exact grid hits. Requires the (squarefree) input's real roots pairwise
// more than 1/4 apart and a, b aligned to the grid. Whole real line when
// the bounds are omitted.
long real_roots_bisect(const Coeffs& p, const Rat& a, const Rat& b);
long real_roots_bisect_all(const Coeffs& p);

// All x with |x_i| <= radius, x.Gx = -2, x.Gv = c, in lexicographic order.
std::vector<IntVec> roots_box(const hyperlat::Lattice& l, const IntVec& v, const Int& c,
                              long radius);
// All x with |x_i| <= radius, x.Gx = -2, x.Gv < 0 < x.Gw, in lexicographic order.
std::vector<IntVec> separating_box(const hyperlat::Lattice& l, const IntVec& v, const IntVec& w,
                                   long radius);

// First isometry of a rank-4 gram matrix whose characteristic polynomial is
// a Salem quartic, scanning candidate columns depth-first in ascending
// lexicographic order over entries {-2..2}. The quartic test is exact:
// palindromic, p(1) < 0, p(-1) > 0, no quadratic cyclotomic divisor.
struct SearchHit {
    IntMatrix matrix;
    long examined = 0;  // complete candidates tested, including the hit
};
std::optional<SearchHit> small_salem_search(const IntMatrix& g);

// Fixture helpers (HYPERLAT_FIXTURES env overrides the compiled-in dir).
std::string fixture_path(const std::string& name);
nlohmann::json load_fixture(const std::string& name);
hyperlat::Lattice fixture_lattice(const std::string& name);

}  // namespace oracles
