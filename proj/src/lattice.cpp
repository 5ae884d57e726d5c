#include "hyperlat/lattice.hpp"

#include <sstream>

#include "hyperlat/polynomial.hpp"

namespace hyperlat {

Lattice make_lattice(const std::string& label, const IntMatrix& gram) {
    if (!gram.is_square()) throw input_error("NonSquare", "Gram matrix must be square");
    if (gram.rows() == 0) throw input_error("EmptyLattice", "rank must be positive");
    if (!gram.is_symmetric()) throw input_error("NotSymmetric", "Gram matrix must be symmetric");
    if (det(gram) == 0) throw input_error("DegenerateForm", "Gram matrix must be nondegenerate");
    return Lattice{label, gram};
}

namespace {

void check_owner(const Lattice& l, const LatticeVector& v, const char* what) {
    if (v.owner != l.label) {
        std::ostringstream msg;
        msg << what << ": vector owned by '" << v.owner << "' used with lattice '" << l.label << "'";
        throw input_error("OwnerMismatch", msg.str());
    }
    if (v.coords.size() != l.rank()) throw input_error("BadShape", "vector length differs from lattice rank");
}

}  // namespace

Int inner(const Lattice& l, const LatticeVector& v, const LatticeVector& w) {
    check_owner(l, v, "inner");
    check_owner(l, w, "inner");
    return dot(v.coords, l.gram * w.coords);
}

std::pair<long, long> signature(const Lattice& l) {
    IntPolynomial chi = charpoly(l.gram);
    long plus = 0, minus = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(chi)) {
        plus += mult * sturm_count(factor, SturmBound::at(Rat(0)), SturmBound::plus_inf());
        minus += mult * sturm_count(factor, SturmBound::minus_inf(), SturmBound::at(Rat(0)));
    }
    if (plus + minus != static_cast<long>(l.rank()))
        throw math_error("SignatureCount", "eigenvalue sign counts do not add up to the rank");
    return {plus, minus};
}

bool is_even(const Lattice& l) {
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.gram.at(i, i) % 2 != 0) return false;
    return true;
}

bool is_hyperbolic(const Lattice& l) {
    auto [p, m] = signature(l);
    return p == 1 && m == static_cast<long>(l.rank()) - 1;
}

Isometry verify_isometry(const Lattice& l, const IntMatrix& m) {
    if (!m.is_square() || m.rows() != l.rank())
        throw input_error("BadShape", "isometry matrix must match the lattice rank");
    IntMatrix prod = m.transpose() * l.gram * m;
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j)
            if (prod.at(i, j) != l.gram.at(i, j)) {
                std::ostringstream msg;
                msg << "form not preserved, first violation at (" << i << "," << j << "): got "
                    << prod.at(i, j).get_str() << ", expected " << l.gram.at(i, j).get_str();
                throw input_error("NotAnIsometry", msg.str());
            }
    Int d = det(m);
    if (d != 1 && d != -1) throw input_error("NotAnIsometry", "determinant is not a unit");
    return Isometry{l.label, m};
}

Embedding make_embedding(const Lattice& l, const IntMatrix& basis) {
    if (!basis.is_square() || basis.rows() != l.rank())
        throw input_error("BadShape", "embedding basis must match the lattice rank");
    Int d = det(basis);
    if (d == 0) throw input_error("SingularBasis", "embedding basis must be nonsingular");
    IntMatrix sub = basis.transpose() * l.gram * basis;
    return Embedding{l, basis, sub, abs(d)};
}

bool same_positive_cone(const Lattice& l, const LatticeVector& v, const LatticeVector& w) {
    check_owner(l, v, "same_positive_cone");
    check_owner(l, w, "same_positive_cone");
    if (!is_hyperbolic(l))
        throw input_error("NotHyperbolic", "positive-cone test needs signature (1, n)");
    if (inner(l, v, v) <= 0 || inner(l, w, w) <= 0)
        throw input_error("NotInteriorVector", "positive-cone test needs vectors of positive norm");
    return inner(l, v, w) > 0;
}

LatticeVector apply(const Lattice& l, const Isometry& f, const LatticeVector& v) {
    check_owner(l, v, "apply");
    if (f.owner != l.label) throw input_error("OwnerMismatch", "isometry owned by a different lattice");
    return LatticeVector{l.label, f.matrix * v.coords};
}

Isometry compose(const Lattice& l, const Isometry& f, const Isometry& g) {
    if (f.owner != l.label || g.owner != l.label)
        throw input_error("OwnerMismatch", "composition needs isometries of the same lattice");
    return verify_isometry(l, f.matrix * g.matrix);
}

Isometry isometry_inverse(const Lattice& l, const Isometry& f) {
    if (f.owner != l.label) throw input_error("OwnerMismatch", "isometry owned by a different lattice");
    IntMatrix inv;
    if (!rat_inverse(f.matrix).to_int(inv))
        throw math_error("NotInvertible", "isometry inverse is not integral");
    return verify_isometry(l, inv);
}

Isometry isometry_power(const Lattice& l, const Isometry& f, unsigned long k) {
    if (f.owner != l.label) throw input_error("OwnerMismatch", "isometry owned by a different lattice");
    return Isometry{l.label, f.matrix.pow(k)};
}

}  // namespace hyperlat
