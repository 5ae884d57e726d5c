#include "hyperlat/quotient.hpp"

#include "hyperlat/errors.hpp"
#include "hyperlat/exact_core.hpp"

namespace hyperlat {

namespace {

IntMatrix reduce_entries(const IntMatrix& m, const Int& n) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_fdiv_r(out.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), n.get_mpz_t());
        }
    }
    return out;
}

}  // namespace

ModMatrix reduce_mod(const IntMatrix& m, const Int& n) {
    if (n < 2) {
        throw input_error("BadModulus", "modulus must be at least 2, got " + n.get_str());
    }
    if (m.rows() != m.cols()) {
        throw input_error("NonSquare", "matrix reduction needs a square matrix");
    }
    ModMatrix out{n, reduce_entries(m, n), false};
    Int g;
    Int d = det(out.entries);
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    out.invertible = (g == 1);
    return out;
}

long order_mod(const IntMatrix& m, const Int& n, long cap) {
    ModMatrix base = reduce_mod(m, n);
    if (!base.invertible) {
        throw input_error("NotInvertibleMod",
                          "matrix determinant shares a factor with modulus " + n.get_str());
    }
    const IntMatrix id = IntMatrix::identity(m.rows());
    IntMatrix p = base.entries;
    for (long k = 1; k <= cap; ++k) {
        if (p == id) {
            return k;
        }
        p = reduce_entries(p * base.entries, n);
    }
    throw cap_error("CapExceeded",
                    "no power up to " + std::to_string(cap) + " is the identity mod " + n.get_str());
}

bool descends_to(const Embedding& e, const Isometry& f) {
    if (f.owner != e.ambient.label) {
        throw input_error("OwnerMismatch",
                          "isometry acts on '" + f.owner + "', embedding sits in '" +
                              e.ambient.label + "'");
    }
    RatMatrix x = rat_solve(e.basis, f.matrix * e.basis);
    IntMatrix ignored(x.rows(), x.cols());
    return x.to_int(ignored);
}

Isometry restrict_isometry(const Embedding& e, const Isometry& f) {
    if (f.owner != e.ambient.label) {
        throw input_error("OwnerMismatch",
                          "isometry acts on '" + f.owner + "', embedding sits in '" +
                              e.ambient.label + "'");
    }
    RatMatrix x = rat_solve(e.basis, f.matrix * e.basis);
    IntMatrix m(x.rows(), x.cols());
    if (!x.to_int(m)) {
        throw input_error("DoesNotDescend",
                          "isometry does not map the sublattice into itself");
    }
    return verify_isometry(e.sub_lattice(), m);
}

StabilizingPower stabilizing_power(const Embedding& e, const Isometry& f, long cap) {
    if (e.index == 1) {
        // Unimodular basis change: everything descends immediately.
        return {1, restrict_isometry(e, f)};
    }
    const long bound = order_mod(f.matrix, e.index, cap);
    Isometry fk = f;
    for (long m = 1; m <= bound; ++m) {
        if (descends_to(e, fk)) {
            return {m, restrict_isometry(e, fk)};
        }
        fk = compose(e.ambient, fk, f);
    }
    // f^bound is the identity mod the index, so it fixes the quotient
    // group and must descend; reaching this line means a defect above.
    throw math_error("StabilizerMissed",
                     "no power up to the quotient order " + std::to_string(bound) + " descends");
}

}  // namespace hyperlat
