#include "hyperlat/weyl.hpp"

#include <algorithm>
#include <functional>

#include "hyperlat/errors.hpp"
#include "hyperlat/exact_core.hpp"

namespace hyperlat {

namespace {

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int isqrt_floor(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// t <= sqrt(q) for q >= 0, exactly.
bool le_sqrt(const Rat& t, const Rat& q) {
    if (t <= 0) {
        return true;
    }
    return t * t <= q;
}

// Rational estimate of sqrt(q) with error < 2, good enough to seed the
// exact adjustment loops below.
Rat sqrt_estimate(const Rat& q) {
    Int nd = q.get_num() * q.get_den();
    return Rat(isqrt_floor(nd), q.get_den());
}

// Largest integer z with z <= alpha + sqrt(q).
Int floor_add_sqrt(const Rat& alpha, const Rat& q) {
    Int z = rat_floor(alpha + sqrt_estimate(q));
    while (le_sqrt(Rat(z + 1) - alpha, q)) {
        z += 1;
    }
    while (!le_sqrt(Rat(z) - alpha, q)) {
        z -= 1;
    }
    return z;
}

// Smallest integer z with z >= alpha - sqrt(q).
Int ceil_sub_sqrt(const Rat& alpha, const Rat& q) {
    Int z = rat_ceil(alpha - sqrt_estimate(q));
    while (le_sqrt(alpha - Rat(z - 1), q)) {
        z -= 1;
    }
    while (!le_sqrt(alpha - Rat(z), q)) {
        z += 1;
    }
    return z;
}

IntMatrix columns_matrix(std::size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix k(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            k.at(i, j) = cols[j][i];
        }
    }
    return k;
}

IntVec add_vec(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

// All integer points x0 + K*t on the quadric x^T G x = target, where the
// form restricted to the span of K's columns is negative definite. Solved
// by completing the square against an exact LDL^T of -(K^T G K) and
// backtracking over the last coordinate first, with exact floor/ceil of the
// square-root interval bounds at every level.
std::vector<IntVec> enumerate_on_affine(const IntMatrix& g, const IntVec& x0, const IntMatrix& k,
                                        const Int& target) {
    std::vector<IntVec> out;
    const std::size_t kdim = k.cols();
    if (kdim == 0) {
        Int norm = dot(g * x0, x0);
        if (norm == target) {
            out.push_back(x0);
        }
        return out;
    }

    IntMatrix apos = k.transpose() * g * k;
    for (std::size_t i = 0; i < apos.rows(); ++i) {
        for (std::size_t j = 0; j < apos.cols(); ++j) {
            apos.at(i, j) = -apos.at(i, j);
        }
    }
    LdlResult f = ldl(apos);
    for (const Rat& di : f.d) {
        if (!(di > 0)) {
            throw math_error("NotNegativeDefinite",
                             "form is not negative definite on the enumeration subspace");
        }
    }
    if (!(f.transform == IntMatrix::identity(kdim))) {
        // Positive definite input never needs pivot repair.
        throw math_error("UnexpectedPivoting", "definite form required pivot repair");
    }

    // b_i = (K^T G x0)_i; the quadric becomes (t - t*)^T A (t - t*) = budget
    // with A = -K^T G K and t* = A^-1 b.
    IntVec gx0 = g * x0;
    IntMatrix b(kdim, 1);
    for (std::size_t i = 0; i < kdim; ++i) {
        Int s = 0;
        for (std::size_t r = 0; r < k.rows(); ++r) {
            s += k.at(r, i) * gx0[r];
        }
        b.at(i, 0) = s;
    }
    RatMatrix tstar = rat_solve(apos, IntMatrix(b));
    Rat budget = Rat(dot(gx0, x0)) - Rat(target);
    for (std::size_t i = 0; i < kdim; ++i) {
        budget += Rat(b.at(i, 0)) * tstar.at(i, 0);
    }
    if (budget < 0) {
        return out;
    }

    std::vector<Int> t(kdim);
    std::vector<Rat> u(kdim);  // t_i - t*_i once chosen
    const RatMatrix& l = f.l;

    std::function<void(std::size_t, const Rat&)> descend = [&](std::size_t level, const Rat& rem) {
        const std::size_t i = level - 1;
        // y_i = (t_i - t*_i) + sum_{j>i} L_ji (t_j - t*_j)
        Rat s(0);
        for (std::size_t j = i + 1; j < kdim; ++j) {
            s += l.at(j, i) * u[j];
        }
        Rat alpha = tstar.at(i, 0) - s;
        Rat qi = rem / f.d[i];
        Int lo = ceil_sub_sqrt(alpha, qi);
        Int hi = floor_add_sqrt(alpha, qi);
        for (Int ti = lo; ti <= hi; ++ti) {
            Rat yi = Rat(ti) - alpha;
            Rat next = rem - f.d[i] * yi * yi;
            if (next < 0) {
                continue;
            }
            t[i] = ti;
            u[i] = Rat(ti) - tstar.at(i, 0);
            if (i == 0) {
                if (next == 0) {
                    out.push_back(add_vec(x0, k * t));
                }
            } else {
                descend(i, next);
            }
        }
    };
    descend(kdim, budget);
    return out;
}

void check_positive_norm(const Lattice& l, const LatticeVector& v, const char* role) {
    if (!is_hyperbolic(l)) {
        throw input_error("NotHyperbolic",
                          "chamber geometry needs signature (1, n-1) on '" + l.label + "'");
    }
    if (!(inner(l, v, v) > 0)) {
        throw input_error("NotInteriorVector",
                          std::string(role) + " vector must have positive norm");
    }
}

std::vector<Root> sorted_roots(const Lattice& l, std::vector<IntVec> vecs) {
    std::sort(vecs.begin(), vecs.end());
    std::vector<Root> out;
    out.reserve(vecs.size());
    for (auto& c : vecs) {
        out.push_back(Root{l.label, std::move(c)});
    }
    return out;
}

}  // namespace

Root make_root(const Lattice& l, const IntVec& coords) {
    if (coords.size() != l.rank()) {
        throw input_error("BadShape", "root coordinate count does not match rank");
    }
    LatticeVector v{l.label, coords};
    if (inner(l, v, v) != -2) {
        throw input_error("NotARoot", "root must have self-pairing -2");
    }
    return Root{l.label, coords};
}

LatticeVector reflect(const Lattice& l, const Root& delta, const LatticeVector& v) {
    if (delta.owner != l.label || v.owner != l.label) {
        throw input_error("OwnerMismatch", "reflection arguments must live in '" + l.label + "'");
    }
    LatticeVector d{delta.owner, delta.coords};
    Int pairing = inner(l, v, d);
    IntVec out(v.coords.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = v.coords[i] + pairing * delta.coords[i];
    }
    return LatticeVector{l.label, out};
}

LatticeVector apply_word(const Lattice& l, const WeylWord& word, const LatticeVector& v) {
    LatticeVector cur = v;
    for (const Root& r : word.roots) {
        cur = reflect(l, r, cur);
    }
    return cur;
}

std::vector<Root> roots_with_pairing(const Lattice& l, const LatticeVector& v, const Int& c) {
    check_positive_norm(l, v, "pairing");
    IntVec gv = l.gram * v.coords;
    auto sol = solve_linear_diophantine(gv, c);
    if (!sol) {
        return {};
    }
    IntMatrix k = columns_matrix(l.rank(), sol->basis);
    return sorted_roots(l, enumerate_on_affine(l.gram, sol->particular, k, Int(-2)));
}

std::vector<Root> separating_roots(const Lattice& l, const LatticeVector& v,
                                   const LatticeVector& w) {
    check_positive_norm(l, v, "source");
    check_positive_norm(l, w, "target");
    if (!same_positive_cone(l, v, w)) {
        throw input_error("ConeMismatch", "vectors lie in opposite halves of the positive cone");
    }
    const Int p = inner(l, v, v);
    const Int q = inner(l, w, w);
    const Int s = inner(l, v, w);
    const Int bound = 2 * (s * s - p * q);
    std::vector<IntVec> found;
    if (bound <= 0) {
        // Reversed Cauchy-Schwarz: equality only for proportional vectors,
        // which no wall can separate.
        return sorted_roots(l, std::move(found));
    }

    IntVec gv = l.gram * v.coords;
    IntVec gw = l.gram * w.coords;
    // delta . v = a < 0 < b = delta . w, with the Gram-determinant bound
    // q a^2 - 2 s a b + p b^2 <= bound limiting both ranges (each of the
    // three terms on the left is positive).
    for (Int a = -1; q * a * a <= bound; a -= 1) {
        for (Int b = 1; p * b * b <= bound; b += 1) {
            if (q * a * a - 2 * s * a * b + p * b * b > bound) {
                continue;
            }
            auto sol1 = solve_linear_diophantine(gv, a);
            if (!sol1) {
                continue;
            }
            IntMatrix k1 = columns_matrix(l.rank(), sol1->basis);
            // Impose delta . w = b on the affine solution set of the first
            // pairing: a linear condition on the free parameters.
            IntVec a2(k1.cols());
            bool nonzero = false;
            for (std::size_t j = 0; j < k1.cols(); ++j) {
                Int sum = 0;
                for (std::size_t i = 0; i < k1.rows(); ++i) {
                    sum += gw[i] * k1.at(i, j);
                }
                a2[j] = sum;
                nonzero = nonzero || sum != 0;
            }
            if (!nonzero) {
                // Only proportional vectors make the second pairing constant
                // on the first one's solution set, and those exited above.
                throw math_error("SeparatingDegenerate",
                                 "independent interior vectors gave dependent pairings");
            }
            Int c2 = b - dot(gw, sol1->particular);
            auto sol2 = solve_linear_diophantine(a2, c2);
            if (!sol2) {
                continue;
            }
            IntVec x0 = add_vec(sol1->particular, k1 * sol2->particular);
            IntMatrix k2 = columns_matrix(k1.cols(), sol2->basis);
            IntMatrix kk = k1 * k2;
            for (auto& cand : enumerate_on_affine(l.gram, x0, kk, Int(-2))) {
                found.push_back(std::move(cand));
            }
        }
    }
    return sorted_roots(l, std::move(found));
}

WalkResult chamber_walk(const Lattice& l, const LatticeVector& v, const LatticeVector& w,
                        long cap) {
    check_positive_norm(l, v, "source");
    check_positive_norm(l, w, "target");
    if (!same_positive_cone(l, v, w)) {
        throw input_error("ConeMismatch", "vectors lie in opposite halves of the positive cone");
    }
    WalkResult res{WeylWord{}, v};
    for (;;) {
        std::vector<Root> sep = separating_roots(l, res.end, w);
        if (sep.empty()) {
            return res;
        }
        if (static_cast<long>(res.word.roots.size()) >= cap) {
            throw math_error("WalkDiverged",
                             "separating walls remain after " + std::to_string(cap) + " steps");
        }
        // Nearest wall first: smallest |delta . v'|, then lexicographically
        // smallest coordinates (the list is already sorted, so the first
        // root attaining the minimum wins).
        const Root* best = &sep.front();
        Int best_abs = abs(inner(l, LatticeVector{l.label, sep.front().coords}, res.end));
        for (std::size_t i = 1; i < sep.size(); ++i) {
            Int cur = abs(inner(l, LatticeVector{l.label, sep[i].coords}, res.end));
            if (cur < best_abs) {
                best = &sep[i];
                best_abs = cur;
            }
        }
        res.end = reflect(l, *best, res.end);
        res.word.roots.push_back(*best);
    }
}

bool same_chamber(const Lattice& l, const LatticeVector& v, const LatticeVector& w) {
    // delta separates v from w iff -delta separates w from v, so checking
    // one direction covers both.
    return separating_roots(l, v, w).empty();
}

}  // namespace hyperlat
