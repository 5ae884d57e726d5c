#pragma once

#include <string>
#include <utility>

#include "hyperlat/exact_core.hpp"
#include "hyperlat/matrix.hpp"

namespace hyperlat {

struct Lattice {
    std::string label;
    IntMatrix gram;

    std::size_t rank() const { return gram.rows(); }
};

// Validates symmetry and nondegeneracy.
Lattice make_lattice(const std::string& label, const IntMatrix& gram);

struct LatticeVector {
    std::string owner;
    IntVec coords;
};

struct Isometry {
    std::string owner;
    IntMatrix matrix;
};

struct Embedding {
    Lattice ambient;
    IntMatrix basis;     // columns = sublattice basis in ambient coordinates
    IntMatrix sub_gram;  // basis^t * gram * basis
    Int index;           // |det basis|

    std::string sub_label() const { return ambient.label + "/sub"; }
    Lattice sub_lattice() const { return Lattice{sub_label(), sub_gram}; }
};

Int inner(const Lattice& l, const LatticeVector& v, const LatticeVector& w);

// Exact (n_plus, n_minus) eigenvalue signs of the Gram matrix, via Sturm
// counts weighted by squarefree multiplicity.
std::pair<long, long> signature(const Lattice& l);

bool is_even(const Lattice& l);

bool is_hyperbolic(const Lattice& l);  // signature (1, rank-1)

Isometry verify_isometry(const Lattice& l, const IntMatrix& m);

Embedding make_embedding(const Lattice& l, const IntMatrix& basis);

// Valid exactly in signature (1, n): v, w with positive norm lie in the same
// component of {x : x.x > 0} iff v.w > 0.
bool same_positive_cone(const Lattice& l, const LatticeVector& v, const LatticeVector& w);

LatticeVector apply(const Lattice& l, const Isometry& f, const LatticeVector& v);
// Matrix product f*g (g acts first).
Isometry compose(const Lattice& l, const Isometry& f, const Isometry& g);
Isometry isometry_inverse(const Lattice& l, const Isometry& f);
Isometry isometry_power(const Lattice& l, const Isometry& f, unsigned long k);

}  // namespace hyperlat
